#pragma once

#include <string>
#include <vector>

#include "nilcount/symbolic.hpp"

namespace nilcount {

constexpr unsigned kMaxSeriesOrder = 12;

// Truncated power series with SymbolicConstant coefficients, degree 0..order.
class FormalSeries {
public:
    explicit FormalSeries(unsigned order) : coeffs_(order + 1) {}
    unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    SymbolicConstant& operator[](size_t k) { return coeffs_.at(k); }
    const SymbolicConstant& operator[](size_t k) const { return coeffs_.at(k); }
    bool operator==(const FormalSeries&) const = default;

    static FormalSeries one(unsigned order);

private:
    std::vector<SymbolicConstant> coeffs_;
};

// Cauchy product truncated at the common order.
FormalSeries series_mul(const FormalSeries& a, const FormalSeries& b);

// Formal exponential of a series with zero constant term, via
// e_0 = 1, n e_n = sum_{j=1..n} j s_j e_{n-j}.
FormalSeries series_exp(const FormalSeries& s);

// log Gamma(1+w) = -gamma w + sum_{k>=2} (-1)^k zeta(k) w^k / k.
FormalSeries loggamma_at_1(unsigned order);

// C_k: Taylor coefficients of Gamma(1+w) at w = 0; k! C_k = Gamma^{(k)}(1).
FormalSeries gamma_coeffs_at_1(unsigned order);

// D_k: Taylor coefficients of Gamma(2+w); D_k = C_k + C_{k-1}.
FormalSeries gamma_coeffs_at_2(unsigned order);

// c_k: exp( sum_{k>=1} (k-1)! C_k z^k ).
FormalSeries c_coeffs(unsigned order);

// b_k = sum_{i+j=k} j! c_i C_j.
FormalSeries b_coeffs(unsigned order);

// d_k = sum_{i+j=k} j! c_i D_j.
FormalSeries d_coeffs(unsigned order);

// The closed form circulating for d_2 that disagrees with the defining
// recurrence: (1/6)(-12 gamma + 15 gamma^2 + pi^2). The quadrature identity
// sum_{i+j=2} c_i Gamma^{(j)}(2) singles out the recurrence value; this one
// is kept for the documented cross-check.
SymbolicConstant d2_alternative_closed_form();

// Coefficient table rows: k,family,symbolic,numeric
std::string coeffs_to_csv(const FormalSeries& s, const std::string& family, unsigned digits);

} // namespace nilcount
