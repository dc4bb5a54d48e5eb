#pragma once

#include <functional>

#include "nilcount/numeric.hpp"

namespace nilcount {

// Adaptive tanh-sinh integration of f over the finite interval [a, b];
// endpoint singularities of integrable type are handled by the node
// clustering. Throws on failure to reach the requested absolute error.
real50 integrate(const std::function<real50(const real50&)>& f, const real50& a,
                 const real50& b, const real50& abs_err = real50("1e-30"));

// Gamma^{(k)}(s) = integral_0^inf t^{s-1} e^{-t} log^k t dt, s in {1, 2},
// k <= 12. Split at t = 1 (integrable log singularity at 0); the tail is
// mapped onto [0, 1) by t = 1 + u/(1 - u). Absolute error <= 1e-12.
real50 gamma_derivative_quadrature(unsigned k, unsigned s);

} // namespace nilcount
