#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nilcount/int_types.hpp"

namespace nilcount {

using Rational = mpq_class;

// Monomial in the generators gamma, zeta(2), zeta(3), ...
// exps[0] is the gamma exponent; exps[i] for i >= 1 is the exponent of
// zeta(i+1). Trailing zeros are trimmed so equality is structural.
struct Monomial {
    std::vector<u32> exps;

    static Monomial one() { return {}; }
    static Monomial gamma(u32 e = 1);
    static Monomial zeta(u32 k, u32 e = 1); // k >= 2

    Monomial operator*(const Monomial& o) const;
    u32 gamma_exp() const { return exps.empty() ? 0 : exps[0]; }
    u32 zeta_exp(u32 k) const; // k >= 2
    bool is_one() const { return exps.empty(); }
    // Each gamma contributes 1, each zeta(k) contributes k.
    u64 weight() const;

    auto operator<=>(const Monomial&) const = default;
};

// Exact rational linear combination of monomials. Zero coefficients are
// never stored, so operator== is structural equality.
class SymbolicConstant {
public:
    SymbolicConstant() = default;
    SymbolicConstant(long v);
    SymbolicConstant(const Rational& v);
    static SymbolicConstant gamma();
    static SymbolicConstant zeta(u32 k);
    static SymbolicConstant pi_squared(); // 6*zeta(2)

    SymbolicConstant& operator+=(const SymbolicConstant& o);
    SymbolicConstant& operator-=(const SymbolicConstant& o);
    SymbolicConstant operator+(const SymbolicConstant& o) const;
    SymbolicConstant operator-(const SymbolicConstant& o) const;
    SymbolicConstant operator-() const;
    SymbolicConstant operator*(const SymbolicConstant& o) const;
    SymbolicConstant operator*(const Rational& q) const;

    bool operator==(const SymbolicConstant&) const = default;
    bool is_zero() const { return terms_.empty(); }

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    // Canonical string: terms sorted by (weight, descending gamma power,
    // zeta exponents); zeta(2)^e is rendered as pi^(2e)/6^e to match the
    // conventional closed forms. No commas, CSV-safe.
    std::string to_string() const;

private:
    void add_term(const Monomial& m, const Rational& q);
    std::map<Monomial, Rational> terms_;
};

} // namespace nilcount
