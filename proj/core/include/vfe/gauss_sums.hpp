#pragma once

#include <complex>
#include <cstdint>

namespace vfe::gauss {

/// Arguments of the generalized quadratic Gauss sum
///   G(a, b, c) = sum_{l=0}^{c-1} exp(2*pi*i*(a*l^2 + b*l)/c).
/// The closed-form evaluation additionally requires gcd(a, c) = 1.
struct GaussArgs {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 1;  // >= 1
};

/// Literal summation of the defining sum. The oracle against which the
/// closed form is checked; accepts any a, b (gcd restriction not needed).
std::complex<double> sum_direct(const GaussArgs& args);

/// Jacobi symbol (a/n) for odd n >= 1; returns 0 iff gcd(a, n) > 1.
/// Throws std::invalid_argument for even or nonpositive n.
int jacobi_symbol(std::int64_t a, std::int64_t n);

/// Inverse of a modulo c, in [0, c). Throws std::invalid_argument when
/// gcd(a, c) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t c);

/// Closed-form evaluation via the multiplicative splitting c = 2^r * c',
/// completing the square in the odd part and the power-of-two base cases.
/// Requires gcd(a, c) = 1; a is reduced mod c first, so negative a is fine.
std::complex<double> sum_closed(const GaussArgs& args);

/// |G(a, b, c)| for gcd(a, c) = 1: sqrt(c) for odd c; for even c it is
/// sqrt(2c) when c/2 and b have equal parity and 0 otherwise.
double magnitude(const GaussArgs& args);

std::int64_t gcd(std::int64_t a, std::int64_t b);

}  // namespace vfe::gauss
