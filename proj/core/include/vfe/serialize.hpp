#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "vfe/algebraic.hpp"
#include "vfe/analysis.hpp"
#include "vfe/spectral.hpp"

namespace vfe::io {

/// Shortest decimal form that round-trips an IEEE double (17 significant digits).
std::string format_full(double value);

void write_polygon_csv(const SkewPolygon& poly, const std::filesystem::path& path);
void write_polygon_json(const SkewPolygon& poly, const std::filesystem::path& path);
SkewPolygon read_polygon_json(const std::filesystem::path& path);

void write_trajectory_csv(const Trajectory& traj, const std::filesystem::path& path);
std::vector<TrajectorySample> read_trajectory_csv(const std::filesystem::path& path);

void write_state_csv(const SpectralState& state, const std::filesystem::path& path);
SpectralState read_state_csv(const std::filesystem::path& path);

void write_time_samples_csv(const std::vector<TimeSample>& samples, const std::string& value_name,
                            const std::filesystem::path& path);

/// FNV-1a 64 of the file bytes, as "fnv1a:<hex>".
std::string file_checksum(const std::filesystem::path& path);

/// Run manifest: grid spec, dump step indices, emitted files with
/// checksums, wall time.
void write_run_manifest(const GridSpec& spec, const std::vector<std::int64_t>& dump_steps,
                        const std::vector<std::filesystem::path>& files, double wall_seconds,
                        const std::filesystem::path& path);

struct RunManifest {
    GridSpec spec;
    std::vector<std::int64_t> dump_steps;
    std::vector<std::string> files;
};
RunManifest read_run_manifest(const std::filesystem::path& path);

/// Loads a simulate output directory (manifest + trajectory + state dumps).
Trajectory read_run(const std::filesystem::path& dir);

}  // namespace vfe::io
