#pragma once

#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "nilcount/int_types.hpp"
#include "nilcount/symbolic.hpp"

namespace nilcount {

// 50 significant decimal digits; the working precision for all constant
// evaluation and quadrature.
using real50 = boost::multiprecision::cpp_bin_float_50;

constexpr unsigned kMaxEvalDigits = 50;

// Euler-Mascheroni constant by the Brent-McMillan Bessel-ratio iteration;
// full working precision.
const real50& euler_gamma();

// zeta(k) for integer k in [2, 64] by Euler-Maclaurin summation with exact
// Bernoulli numbers.
const real50& zeta_value(u32 k);

// Substitute gamma and zeta(k) into the symbolic constant. digits beyond the
// working precision cannot be honored.
real50 eval_numeric(const SymbolicConstant& c, unsigned digits = kMaxEvalDigits);

real50 rational_to_real(const Rational& q);

// %g-style with the given significant digits; deterministic.
std::string format_real(const real50& v, int sig_digits);

} // namespace nilcount
