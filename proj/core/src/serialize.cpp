#include "vfe/serialize.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace vfe::io {

namespace {

using nlohmann::json;

std::ofstream open_out(const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
    return in;
}

std::vector<double> parse_csv_row(const std::string& line) {
    std::vector<double> row;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string::npos) comma = line.size();
        double v = 0.0;
        const auto* first = line.data() + pos;
        const auto* last = line.data() + comma;
        const auto res = std::from_chars(first, last, v);
        if (res.ec != std::errc{}) throw std::runtime_error("bad CSV number: " + line);
        row.push_back(v);
        pos = comma + 1;
        if (comma == line.size()) break;
    }
    return row;
}

json vec3_to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

Vec3 vec3_from_json(const json& j) { return {j.at(0), j.at(1), j.at(2)}; }

}  // namespace

std::string format_full(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

void write_polygon_csv(const SkewPolygon& poly, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "k,s_k,X1,X2,X3,T1,T2,T3,virtual_flag\n";
    const int n = poly.segments();
    for (int k = 0; k < n; ++k) {
        const Vec3 v = poly.vertex(k);
        const Vec3& t = poly.tangents[k];
        out << k << ',' << format_full(k * poly.side_length) << ',' << format_full(v.x) << ','
            << format_full(v.y) << ',' << format_full(v.z) << ',' << format_full(t.x) << ','
            << format_full(t.y) << ',' << format_full(t.z) << ',' << int(poly.virtual_corner[k])
            << '\n';
    }
}

void write_polygon_json(const SkewPolygon& poly, const std::filesystem::path& path) {
    json j;
    j["format"] = "vfe-polygon-1";
    j["M"] = poly.time.sides;
    j["p"] = poly.time.p;
    j["q"] = poly.time.q;
    j["rho"] = poly.rho;
    j["psi_hat0"] = poly.psi_hat0;
    j["side_length"] = poly.side_length;
    j["vertical_offset"] = poly.vertical_offset;
    j["vertices"] = json::array();
    for (const auto& v : poly.vertices) j["vertices"].push_back(vec3_to_json(v));
    j["tangents"] = json::array();
    for (const auto& t : poly.tangents) j["tangents"].push_back(vec3_to_json(t));
    j["virtual"] = json::array();
    for (const auto f : poly.virtual_corner) j["virtual"].push_back(f != 0);

    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

SkewPolygon read_polygon_json(const std::filesystem::path& path) {
    auto in = open_in(path);
    json j;
    in >> j;
    if (j.value("format", "") != "vfe-polygon-1")
        throw std::runtime_error("not a polygon file: " + path.string());

    SkewPolygon poly;
    poly.time = RationalTime::make(j.at("M"), j.at("p"), j.at("q"));
    poly.rho = j.at("rho");
    poly.psi_hat0 = j.at("psi_hat0");
    poly.side_length = j.at("side_length");
    poly.vertical_offset = j.at("vertical_offset");
    for (const auto& v : j.at("vertices")) poly.vertices.push_back(vec3_from_json(v));
    for (const auto& t : j.at("tangents")) poly.tangents.push_back(vec3_from_json(t));
    for (const auto& f : j.at("virtual")) poly.virtual_corner.push_back(f.get<bool>() ? 1 : 0);
    if (poly.vertices.size() != poly.tangents.size() + 1)
        throw std::runtime_error("polygon file is inconsistent: " + path.string());
    return poly;
}

void write_trajectory_csv(const Trajectory& traj, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "t,X1,X2,X3,h\n";
    for (const auto& s : traj.samples) {
        out << format_full(s.t) << ',' << format_full(s.corner.x) << ',' << format_full(s.corner.y)
            << ',' << format_full(s.corner.z) << ',' << format_full(s.height) << '\n';
    }
}

std::vector<TrajectorySample> read_trajectory_csv(const std::filesystem::path& path) {
    auto in = open_in(path);
    std::string line;
    std::getline(in, line);  // header
    std::vector<TrajectorySample> samples;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto row = parse_csv_row(line);
        if (row.size() != 5) throw std::runtime_error("bad trajectory row: " + line);
        samples.push_back({row[0], {row[1], row[2], row[3]}, row[4]});
    }
    return samples;
}

void write_state_csv(const SpectralState& state, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "# vfe-state sides=" << state.sides << " time=" << format_full(state.time) << '\n';
    out << "j,s_j,X1,X2,X3,T1,T2,T3\n";
    const int n = state.sides * state.nodes_per_side();
    for (int j = 0; j < state.nodes_per_side(); ++j) {
        const double s = 2.0 * std::numbers::pi * j / n;
        const Vec3& x = state.position[j];
        const Vec3& t = state.tangent[j];
        out << j << ',' << format_full(s) << ',' << format_full(x.x) << ',' << format_full(x.y)
            << ',' << format_full(x.z) << ',' << format_full(t.x) << ',' << format_full(t.y) << ','
            << format_full(t.z) << '\n';
    }
}

SpectralState read_state_csv(const std::filesystem::path& path) {
    auto in = open_in(path);
    std::string line;
    std::getline(in, line);
    SpectralState state;
    if (std::sscanf(line.c_str(), "# vfe-state sides=%d time=%lf", &state.sides, &state.time) != 2)
        throw std::runtime_error("not a state file: " + path.string());
    std::getline(in, line);  // column header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto row = parse_csv_row(line);
        if (row.size() != 8) throw std::runtime_error("bad state row: " + line);
        state.position.push_back({row[2], row[3], row[4]});
        state.tangent.push_back({row[5], row[6], row[7]});
    }
    return state;
}

void write_time_samples_csv(const std::vector<TimeSample>& samples, const std::string& value_name,
                            const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "t," << value_name << "_re," << value_name << "_im\n";
    for (const auto& s : samples)
        out << format_full(s.t) << ',' << format_full(s.value.real()) << ','
            << format_full(s.value.imag()) << '\n';
}

std::string file_checksum(const std::filesystem::path& path) {
    auto in = open_in(path);
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    char buf[4096];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            hash ^= static_cast<unsigned char>(buf[i]);
            hash *= 0x100000001b3ULL;
        }
        if (!in) break;
    }
    std::ostringstream oss;
    oss << "fnv1a:" << std::hex << hash;
    return oss.str();
}

void write_run_manifest(const GridSpec& spec, const std::vector<std::int64_t>& dump_steps,
                        const std::vector<std::filesystem::path>& files, double wall_seconds,
                        const std::filesystem::path& path) {
    json j;
    j["format"] = "vfe-run-manifest-1";
    j["spec"] = {{"sides", spec.sides},
                 {"nodes_per_side", spec.nodes_per_side},
                 {"steps", spec.steps},
                 {"t_final", spec.t_final()}};
    j["dump_steps"] = dump_steps;
    j["wall_seconds"] = wall_seconds;
    j["files"] = json::object();
    for (const auto& f : files) j["files"][f.filename().string()] = file_checksum(f);
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

RunManifest read_run_manifest(const std::filesystem::path& path) {
    auto in = open_in(path);
    json j;
    in >> j;
    if (j.value("format", "") != "vfe-run-manifest-1")
        throw std::runtime_error("not a run manifest: " + path.string());
    RunManifest m;
    m.spec.sides = j.at("spec").at("sides");
    m.spec.nodes_per_side = j.at("spec").at("nodes_per_side");
    m.spec.steps = j.at("spec").at("steps");
    m.dump_steps = j.at("dump_steps").get<std::vector<std::int64_t>>();
    for (const auto& [name, checksum] : j.at("files").items()) m.files.push_back(name);
    return m;
}

Trajectory read_run(const std::filesystem::path& dir) {
    const RunManifest manifest = read_run_manifest(dir / "manifest.json");
    Trajectory traj;
    traj.spec = manifest.spec;
    traj.samples = read_trajectory_csv(dir / "trajectory.csv");
    for (const auto step : manifest.dump_steps) {
        const auto file = dir / ("state_" + std::to_string(step) + ".csv");
        if (std::filesystem::exists(file)) traj.dumps.push_back(read_state_csv(file));
    }
    return traj;
}

}  // namespace vfe::io
