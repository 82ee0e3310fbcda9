#include "metakzb/numbers.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace metakzb {

namespace {
std::mutex bern_mutex;
std::vector<Rational> bern_cache;  // bern_cache[k] = B_k
}  // namespace

const Rational& bernoulli(int k) {
    if (k < 0) throw std::invalid_argument("bernoulli: negative index");
    std::lock_guard<std::mutex> lock(bern_mutex);
    if (bern_cache.empty()) bern_cache.emplace_back(1);
    // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, which pins B_m given B_0..B_{m-1}.
    while ((int)bern_cache.size() <= k) {
        int m = (int)bern_cache.size();
        Rational acc(0);
        for (int j = 0; j < m; ++j) {
            acc += Rational(binomial_int(m + 1, j)) * bern_cache[j];
        }
        Rational bm = -acc / Rational(m + 1);
        bm.canonicalize();
        bern_cache.push_back(bm);
    }
    return bern_cache[k];
}

Int factorial_int(int n) {
    if (n < 0) throw std::invalid_argument("factorial_int: negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), (unsigned long)n);
    return r;
}

Int binomial_int(int n, int k) {
    if (k < 0 || k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return r;
}

Rational rat_factorial(int n) { return Rational(factorial_int(n)); }

Rational rat_inv_factorial(int n) {
    Rational r(Int(1), factorial_int(n));
    r.canonicalize();
    return r;
}

Rational rat_pow(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    bool neg = e < 0;
    unsigned long ue = neg ? (unsigned long)(-e) : (unsigned long)e;
    if (neg && q == 0) throw std::domain_error("rat_pow: zero to a negative power");
    Rational base = neg ? Rational(q.get_den(), q.get_num()) : q;
    base.canonicalize();
    Rational acc(1);
    while (ue) {
        if (ue & 1) acc *= base;
        base *= base;
        ue >>= 1;
    }
    acc.canonicalize();
    return acc;
}

Int divisor_power_sum(long m, int e) {
    if (m < 1) throw std::invalid_argument("divisor_power_sum: m must be positive");
    Int acc(0);
    for (long d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        Int dp;
        mpz_ui_pow_ui(dp.get_mpz_t(), (unsigned long)d, (unsigned long)e);
        acc += dp;
        long cd = m / d;
        if (cd != d) {
            mpz_ui_pow_ui(dp.get_mpz_t(), (unsigned long)cd, (unsigned long)e);
            acc += dp;
        }
    }
    return acc;
}

}  // namespace metakzb
