#include "nilcount/numeric.hpp"

#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace nilcount {

namespace {

// B_0, B_1, B_2, ... exact, via the defining recurrence
// B_m = -1/(m+1) * sum_{k<m} C(m+1,k) B_k.
const std::vector<Rational>& bernoulli_numbers(size_t count) {
    static std::vector<Rational> cache;
    static std::mutex mu;
    std::lock_guard lk(mu);
    while (cache.size() < count) {
        size_t m = cache.size();
        if (m == 0) {
            cache.emplace_back(1);
            continue;
        }
        Rational s = 0;
        Rational binom = 1; // C(m+1, k)
        for (size_t k = 0; k < m; ++k) {
            if (k > 0) binom = binom * Rational(static_cast<long>(m + 2 - k)) / Rational(static_cast<long>(k));
            s += binom * cache[k];
        }
        cache.push_back(-s / Rational(static_cast<long>(m + 1)));
    }
    return cache;
}

real50 compute_gamma() {
    // gamma = U/V - results carried to ~e^{-4n}; n = 40 leaves ~1e-69 error.
    // A_k = B_k (H_k - ln n), B_k = n^{2k} / (k!)^2.
    const long n = 40;
    real50 ln_n = log(real50(n));
    real50 n2 = real50(n) * n;
    real50 A = -ln_n, B = 1, U = A, V = 1;
    for (long k = 1; k < 1000; ++k) {
        B = B * n2 / (real50(k) * k);
        A = (A * n2 / k + B) / k;
        U += A;
        V += B;
        if (k > 2 * n && fabs(A) < fabs(U) * real50(1e-70) && B < fabs(V) * real50(1e-70))
            break;
    }
    return U / V;
}

real50 compute_zeta(u32 s) {
    // Euler-Maclaurin: direct sum to N-1, then the tail
    //   N^{1-s}/(s-1) + N^{-s}/2 + sum_j B_{2j}/(2j)! (s)_{2j-1} N^{-s-2j+1}.
    const u32 N = 40;
    real50 sum = 0;
    for (u32 n = 1; n < N; ++n) sum += pow(real50(n), -static_cast<int>(s));
    real50 Nr(N);
    sum += pow(Nr, 1 - static_cast<int>(s)) / (static_cast<int>(s) - 1);
    sum += pow(Nr, -static_cast<int>(s)) / 2;

    const auto& bern = bernoulli_numbers(2 * 40 + 2);
    Rational rising = s; // (s)_{2j-1} = s (s+1) ... (s+2j-2)
    Rational fact = 1;   // (2j)!
    real50 Npow = pow(Nr, -static_cast<int>(s) - 1); // N^{-s-2j+1} at j=1
    for (u32 j = 1; j <= 40; ++j) {
        fact *= Rational(2 * j - 1) * Rational(2 * j);
        real50 term = rational_to_real(bern[2 * j] * rising / fact) * Npow;
        sum += term;
        if (fabs(term) < real50(1e-65)) break;
        rising *= Rational(s + 2 * j - 1) * Rational(s + 2 * j);
        Npow /= Nr * Nr;
    }
    return sum;
}

} // namespace

const real50& euler_gamma() {
    static const real50 g = compute_gamma();
    return g;
}

const real50& zeta_value(u32 k) {
    if (k < 2 || k > 64)
        throw std::invalid_argument("zeta_value: k must be in [2, 64]");
    static std::map<u32, real50> cache;
    static std::mutex mu;
    std::lock_guard lk(mu);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, compute_zeta(k)).first;
    return it->second;
}

real50 rational_to_real(const Rational& q) {
    return real50(q.get_num().get_str()) / real50(q.get_den().get_str());
}

real50 eval_numeric(const SymbolicConstant& c, unsigned digits) {
    if (digits > kMaxEvalDigits)
        throw resource_error("eval_numeric: precision beyond configured maximum");
    real50 v = 0;
    for (const auto& [m, q] : c.terms()) {
        real50 t = rational_to_real(q);
        if (u32 g = m.gamma_exp()) t *= pow(euler_gamma(), static_cast<int>(g));
        for (size_t i = 1; i < m.exps.size(); ++i) {
            if (u32 e = m.exps[i])
                t *= pow(zeta_value(static_cast<u32>(i + 1)), static_cast<int>(e));
        }
        v += t;
    }
    return v;
}

std::string format_real(const real50& v, int sig_digits) {
    std::ostringstream os;
    os << std::setprecision(sig_digits) << v;
    return os.str();
}

} // namespace nilcount
