#include "nilcount/quadrature.hpp"

#include <sstream>
#include <stdexcept>

#include <boost/math/quadrature/tanh_sinh.hpp>

namespace nilcount {

real50 integrate(const std::function<real50(const real50&)>& f, const real50& a,
                 const real50& b, const real50& abs_err) {
    boost::math::quadrature::tanh_sinh<real50> integrator;
    real50 error = 0, l1 = 0;
    real50 result = integrator.integrate(f, a, b, real50("1e-35"), &error, &l1);
    if (!(error * l1 <= abs_err) && !(error <= abs_err)) {
        std::ostringstream os;
        os << "quadrature did not converge: estimated error " << error << " over [" << a
           << ", " << b << "]";
        throw std::runtime_error(os.str());
    }
    return result;
}

real50 gamma_derivative_quadrature(unsigned k, unsigned s) {
    if (k > 12)
        throw std::invalid_argument("gamma_derivative_quadrature: k must be <= 12");
    if (s != 1 && s != 2)
        throw std::invalid_argument("gamma_derivative_quadrature: s must be 1 or 2");

    auto logk = [k](const real50& t) -> real50 {
        if (k == 0) return 1;
        return pow(log(t), static_cast<int>(k));
    };
    auto head = [&](const real50& t) -> real50 {
        if (t <= 0) return 0;
        real50 v = exp(-t) * logk(t);
        if (s == 2) v *= t;
        return v;
    };
    auto tail = [&](const real50& u) -> real50 {
        real50 om = 1 - u;
        if (om < real50("1e-40")) return 0; // e^{-t} has long since underflowed
        real50 t = 1 + u / om;
        real50 v = exp(-t) * logk(t) / (om * om);
        if (s == 2) v *= t;
        return v;
    };
    return integrate(head, real50(0), real50(1), real50("1e-14")) +
           integrate(tail, real50(0), real50(1), real50("1e-14"));
}

} // namespace nilcount
