#include "nilcount/symbolic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nilcount {

namespace {

void trim(std::vector<u32>& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

} // namespace

Monomial Monomial::gamma(u32 e) {
    Monomial m;
    if (e) m.exps = {e};
    return m;
}

Monomial Monomial::zeta(u32 k, u32 e) {
    if (k < 2) throw std::invalid_argument("zeta index must be >= 2");
    Monomial m;
    if (e) {
        m.exps.assign(k, 0); // slots 0..k-1; zeta(k) lives at index k-1
        m.exps[k - 1] = e;
    }
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.exps.resize(std::max(exps.size(), o.exps.size()), 0);
    for (size_t i = 0; i < exps.size(); ++i) r.exps[i] += exps[i];
    for (size_t i = 0; i < o.exps.size(); ++i) r.exps[i] += o.exps[i];
    trim(r.exps);
    return r;
}

u32 Monomial::zeta_exp(u32 k) const {
    if (k < 2) throw std::invalid_argument("zeta index must be >= 2");
    return k - 1 < exps.size() ? exps[k - 1] : 0;
}

u64 Monomial::weight() const {
    u64 w = 0;
    for (size_t i = 0; i < exps.size(); ++i)
        w += static_cast<u64>(exps[i]) * (i == 0 ? 1 : i + 1);
    return w;
}

SymbolicConstant::SymbolicConstant(long v) {
    if (v != 0) terms_[Monomial::one()] = Rational(v);
}

SymbolicConstant::SymbolicConstant(const Rational& v) {
    if (v != 0) {
        Rational q = v;
        q.canonicalize(); // callers may pass unreduced fractions
        terms_[Monomial::one()] = q;
    }
}

SymbolicConstant SymbolicConstant::gamma() {
    SymbolicConstant c;
    c.terms_[Monomial::gamma()] = 1;
    return c;
}

SymbolicConstant SymbolicConstant::zeta(u32 k) {
    SymbolicConstant c;
    c.terms_[Monomial::zeta(k)] = 1;
    return c;
}

SymbolicConstant SymbolicConstant::pi_squared() {
    SymbolicConstant c;
    c.terms_[Monomial::zeta(2)] = 6;
    return c;
}

void SymbolicConstant::add_term(const Monomial& m, const Rational& q) {
    if (q == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, q);
    } else {
        it->second += q;
        if (it->second == 0) terms_.erase(it);
    }
}

SymbolicConstant& SymbolicConstant::operator+=(const SymbolicConstant& o) {
    for (const auto& [m, q] : o.terms_) add_term(m, q);
    return *this;
}

SymbolicConstant& SymbolicConstant::operator-=(const SymbolicConstant& o) {
    for (const auto& [m, q] : o.terms_) add_term(m, -q);
    return *this;
}

SymbolicConstant SymbolicConstant::operator+(const SymbolicConstant& o) const {
    SymbolicConstant r = *this;
    r += o;
    return r;
}

SymbolicConstant SymbolicConstant::operator-(const SymbolicConstant& o) const {
    SymbolicConstant r = *this;
    r -= o;
    return r;
}

SymbolicConstant SymbolicConstant::operator-() const {
    SymbolicConstant r;
    for (const auto& [m, q] : terms_) r.terms_[m] = -q;
    return r;
}

SymbolicConstant SymbolicConstant::operator*(const SymbolicConstant& o) const {
    SymbolicConstant r;
    for (const auto& [m1, q1] : terms_)
        for (const auto& [m2, q2] : o.terms_) r.add_term(m1 * m2, q1 * q2);
    return r;
}

SymbolicConstant SymbolicConstant::operator*(const Rational& q) const {
    SymbolicConstant r;
    if (q == 0) return r;
    Rational qc = q;
    qc.canonicalize();
    for (const auto& [m, c] : terms_) r.terms_[m] = c * qc;
    return r;
}

std::string SymbolicConstant::to_string() const {
    if (terms_.empty()) return "0";

    std::vector<std::pair<Monomial, Rational>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        u64 wa = a.first.weight(), wb = b.first.weight();
        if (wa != wb) return wa < wb;
        u32 ga = a.first.gamma_exp(), gb = b.first.gamma_exp();
        if (ga != gb) return ga > gb;
        return a.first.exps < b.first.exps;
    });

    std::ostringstream os;
    bool first = true;
    for (const auto& [m, q] : ts) {
        // zeta(2)^e displays as (pi^2/6)^e
        u32 e2 = m.zeta_exp(2);
        Rational coeff = q;
        for (u32 i = 0; i < e2; ++i) coeff /= 6;

        std::vector<std::string> factors;
        if (u32 g = m.gamma_exp()) {
            factors.push_back(g == 1 ? "gamma" : "gamma^" + std::to_string(g));
        }
        if (e2) {
            factors.push_back("pi^" + std::to_string(2 * e2));
        }
        for (size_t i = 2; i < m.exps.size(); ++i) {
            if (u32 e = m.exps[i]) {
                std::string z = "zeta(" + std::to_string(i + 1) + ")";
                if (e > 1) z += "^" + std::to_string(e);
                factors.push_back(z);
            }
        }

        bool neg = coeff < 0;
        Rational mag = neg ? Rational(-coeff) : coeff;
        if (first) {
            if (neg) os << '-';
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string magstr = mag.get_str();
        if (factors.empty()) {
            os << magstr;
        } else {
            std::string joined;
            for (size_t i = 0; i < factors.size(); ++i) {
                if (i) joined += '*';
                joined += factors[i];
            }
            if (mag == 1)
                os << joined;
            else
                os << magstr << '*' << joined;
        }
    }
    return os.str();
}

} // namespace nilcount
