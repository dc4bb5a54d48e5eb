#include "nilcount/series.hpp"

#include <sstream>
#include <stdexcept>

#include "nilcount/numeric.hpp"

namespace nilcount {

FormalSeries FormalSeries::one(unsigned order) {
    FormalSeries s(order);
    s[0] = SymbolicConstant(1);
    return s;
}

FormalSeries series_mul(const FormalSeries& a, const FormalSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series_mul: order mismatch");
    FormalSeries r(a.order());
    for (unsigned k = 0; k <= a.order(); ++k) {
        SymbolicConstant c;
        for (unsigned i = 0; i <= k; ++i) c += a[i] * b[k - i];
        r[k] = c;
    }
    return r;
}

FormalSeries series_exp(const FormalSeries& s) {
    if (!s[0].is_zero())
        throw std::domain_error("series_exp: constant term must be zero");
    unsigned n = s.order();
    FormalSeries e(n);
    e[0] = SymbolicConstant(1);
    for (unsigned k = 1; k <= n; ++k) {
        SymbolicConstant acc;
        for (unsigned j = 1; j <= k; ++j)
            acc += (s[j] * e[k - j]) * Rational(static_cast<long>(j));
        e[k] = acc * Rational(1, static_cast<long>(k));
    }
    return e;
}

FormalSeries loggamma_at_1(unsigned order) {
    FormalSeries s(order);
    if (order >= 1) s[1] = -SymbolicConstant::gamma();
    for (unsigned k = 2; k <= order; ++k) {
        Rational sign = (k % 2 == 0) ? 1 : -1;
        s[k] = SymbolicConstant::zeta(k) * (sign / Rational(static_cast<long>(k)));
    }
    return s;
}

FormalSeries gamma_coeffs_at_1(unsigned order) {
    return series_exp(loggamma_at_1(order));
}

FormalSeries gamma_coeffs_at_2(unsigned order) {
    // Gamma(2+w) = (1+w) Gamma(1+w)
    FormalSeries c = gamma_coeffs_at_1(order);
    FormalSeries d(order);
    for (unsigned k = 0; k <= order; ++k) {
        d[k] = c[k];
        if (k >= 1) d[k] += c[k - 1];
    }
    return d;
}

namespace {

Rational factorial(unsigned n) {
    Rational f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= static_cast<long>(i);
    return f;
}

} // namespace

FormalSeries c_coeffs(unsigned order) {
    FormalSeries C = gamma_coeffs_at_1(order);
    FormalSeries s(order);
    for (unsigned k = 1; k <= order; ++k) s[k] = C[k] * factorial(k - 1);
    return series_exp(s);
}

namespace {

FormalSeries convolve_with_fact(const FormalSeries& c, const FormalSeries& g) {
    FormalSeries r(c.order());
    for (unsigned k = 0; k <= c.order(); ++k) {
        SymbolicConstant acc;
        for (unsigned j = 0; j <= k; ++j) acc += (c[k - j] * g[j]) * factorial(j);
        r[k] = acc;
    }
    return r;
}

} // namespace

FormalSeries b_coeffs(unsigned order) {
    return convolve_with_fact(c_coeffs(order), gamma_coeffs_at_1(order));
}

FormalSeries d_coeffs(unsigned order) {
    return convolve_with_fact(c_coeffs(order), gamma_coeffs_at_2(order));
}

SymbolicConstant d2_alternative_closed_form() {
    SymbolicConstant v = SymbolicConstant::gamma() * Rational(-12);
    v += SymbolicConstant::gamma() * SymbolicConstant::gamma() * Rational(15);
    v += SymbolicConstant::pi_squared();
    return v * Rational(1, 6);
}

std::string coeffs_to_csv(const FormalSeries& s, const std::string& family, unsigned digits) {
    std::ostringstream os;
    os << "k,family,symbolic,numeric\n";
    for (unsigned k = 0; k <= s.order(); ++k) {
        os << k << ',' << family << ',' << s[k].to_string() << ','
           << format_real(eval_numeric(s[k]), static_cast<int>(digits)) << '\n';
        if (family == "d" && k == 2) {
            SymbolicConstant alt = d2_alternative_closed_form();
            os << "# note: a circulating closed form for d_2, "
               << alt.to_string() << " = " << format_real(eval_numeric(alt), static_cast<int>(digits))
               << ", disagrees with the defining recurrence; the quadrature identity"
               << " sum_{i+j=2} c_i Gamma^(j)(2) confirms the value above\n";
        }
    }
    return os.str();
}

} // namespace nilcount
