#include "vfe/gauss_sums.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace vfe::gauss {

namespace {

using std::int64_t;
using cplx = std::complex<double>;

constexpr double two_pi = 2.0 * std::numbers::pi;

int64_t mod_pos(__int128 v, int64_t m) {
    auto r = static_cast<int64_t>(v % m);
    return r < 0 ? r + m : r;
}

// exp(2*pi*i * num/den) with exact integer phase reduction
cplx unit_phase(int64_t num, int64_t den) {
    return std::polar(1.0, two_pi * static_cast<double>(num) / static_cast<double>(den));
}

}  // namespace

int64_t gcd(int64_t a, int64_t b) {
    a = std::abs(a);
    b = std::abs(b);
    while (b != 0) {
        const int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::complex<double> sum_direct(const GaussArgs& args) {
    if (args.c < 1) throw std::invalid_argument("gauss: c must be >= 1");
    cplx acc = 0.0;
    for (int64_t l = 0; l < args.c; ++l) {
        const __int128 e = static_cast<__int128>(args.a) * l * l + static_cast<__int128>(args.b) * l;
        acc += unit_phase(mod_pos(e, args.c), args.c);
    }
    return acc;
}

int jacobi_symbol(int64_t a, int64_t n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("jacobi_symbol: n must be positive and odd");
    a %= n;
    if (a < 0) a += n;
    int t = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const int64_t r = n % 8;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

std::int64_t mod_inverse(int64_t a, int64_t c) {
    if (c < 1) throw std::invalid_argument("mod_inverse: modulus must be >= 1");
    if (c == 1) return 0;
    a %= c;
    if (a < 0) a += c;
    // extended Euclid on (a, c)
    int64_t old_r = a, r = c;
    int64_t old_s = 1, s = 0;
    while (r != 0) {
        const int64_t q = old_r / r;
        int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1)
        throw std::invalid_argument("mod_inverse: no inverse, gcd(" + std::to_string(a) + ", " +
                                    std::to_string(c) + ") = " + std::to_string(old_r));
    return mod_pos(old_s, c);
}

namespace {

// c odd, gcd(a, c) = 1, a and b already reduced mod c
cplx closed_odd(int64_t a, int64_t b, int64_t c) {
    if (c == 1) return 1.0;
    const int64_t phi = mod_inverse(mod_pos(static_cast<__int128>(4) * a, c), c);
    const cplx phase = unit_phase(-mod_pos(static_cast<__int128>(phi) * b % c * b, c), c);
    const double base = jacobi_symbol(a, c) * std::sqrt(static_cast<double>(c));
    return (c % 4 == 1) ? phase * base : phase * cplx(0.0, base);
}

// c = 2^r >= 2, a odd, a and b already reduced mod c
cplx closed_pow2(int64_t a, int64_t b, int64_t c) {
    if (c == 2) return (b % 2 == 1) ? cplx(2.0, 0.0) : cplx(0.0, 0.0);
    if (b % 2 == 1) return 0.0;
    const int64_t phi = mod_inverse(a, c);
    // exp(-pi*i*phi*b^2/(2c)) = exp(2*pi*i * (-phi*b^2) / (4c))
    const cplx phase = unit_phase(-mod_pos(static_cast<__int128>(phi) * b % (4 * c) * b, 4 * c), 4 * c);
    const int jac = jacobi_symbol(c, a);
    static constexpr cplx i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const cplx ia = i_pow[a % 4];
    return phase * (static_cast<double>(jac) * (1.0 + ia)) * std::sqrt(static_cast<double>(c));
}

}  // namespace

std::complex<double> sum_closed(const GaussArgs& args) {
    const int64_t c = args.c;
    if (c < 1) throw std::invalid_argument("gauss: c must be >= 1");
    if (c == 1) return 1.0;
    const int64_t a = mod_pos(args.a, c);
    const int64_t b = mod_pos(args.b, c);
    if (gcd(a, c) != 1)
        throw std::invalid_argument("gauss: closed form requires gcd(a, c) = 1");

    int64_t odd = c;
    int64_t pow2 = 1;
    while (odd % 2 == 0) {
        odd /= 2;
        pow2 *= 2;
    }
    if (pow2 == 1) return closed_odd(a, b, c);
    if (odd == 1) return closed_pow2(a, b, c);
    // G(a, b, pow2*odd) = G(a*pow2, b, odd) * G(a*odd, b, pow2)
    const cplx g_odd = closed_odd(mod_pos(static_cast<__int128>(a) * pow2, odd), b % odd, odd);
    const cplx g_two = closed_pow2(mod_pos(static_cast<__int128>(a) * odd, pow2), b % pow2, pow2);
    return g_odd * g_two;
}

double magnitude(const GaussArgs& args) {
    const int64_t c = args.c;
    if (c < 1) throw std::invalid_argument("gauss: c must be >= 1");
    if (gcd(mod_pos(args.a, c), c) != 1)
        throw std::invalid_argument("gauss: magnitude law requires gcd(a, c) = 1");
    if (c % 2 == 1) return std::sqrt(static_cast<double>(c));
    const int64_t b = mod_pos(args.b, c);
    return ((c / 2) % 2 == b % 2) ? std::sqrt(2.0 * static_cast<double>(c)) : 0.0;
}

}  // namespace vfe::gauss
