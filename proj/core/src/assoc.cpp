#include "metakzb/assoc.hpp"

#include <stdexcept>

namespace metakzb {

NcSeries phi_series(const NcSeries& first, const NcSeries& second) {
    if (first.trunc() != second.trunc())
        throw std::invalid_argument("phi_series: truncation mismatch");
    const int N = first.trunc();
    NcSeries r(N);
    NcSeries adn = second;
    for (int n = 2; n <= N - 1; ++n) {
        adn = bracket(first, adn);
        NcSeries term = adn;
        term.scale(-sym_zeta(n));
        r += term;
    }
    return r;
}

DepthOneAssociator phi_depth1(int N) {
    if (N < 3) throw std::invalid_argument("phi_depth1: need N >= 3");
    return {phi_series(iota(Gen::x0, N), iota(Gen::x1, N))};
}

MetabElem a_inf_free(int N) {
    if (N < 3) throw std::invalid_argument("a_inf_free: need N >= 3");
    NcSeries i0 = iota(Gen::x0, N);
    NcSeries i1 = iota(Gen::x1, N);
    NcSeries phi = phi_series(i0, i1);
    NcSeries half = i1;
    half.scale(sym_twopii(1, Rational(1, 2)));
    NcSeries full = i0;
    full.scale(sym_twopii(1));
    NcSeries prod = mul(exp_series(half), exp_series(phi));
    prod = mul(prod, exp_series(full));
    prod = mul(prod, exp_series(-phi));
    return project(log_series(prod));
}

MetabElem b_inf_free(int N) {
    if (N < 3) throw std::invalid_argument("b_inf_free: need N >= 3");
    NcSeries i0 = iota(Gen::x0, N);
    NcSeries i1 = iota(Gen::x1, N);
    NcSeries iinf = iota(Gen::xinf, N);
    NcSeries prod = mul(exp_series(phi_series(iinf, i1)),
                        exp_series(NcSeries::letter('a', N)));
    prod = mul(prod, exp_series(-phi_series(i0, i1)));
    return project(log_series(prod));
}

MetabElem a_inf_closed(int N) {
    if (N < 2) throw std::invalid_argument("a_inf_closed: need N >= 2");
    MetabElem r(N - 2);
    r.beta = sym_twopii(1);
    for (int k = 2; k <= N - 1; k += 2)
        r.add_depth1(k - 1, 0,
                     sym_twopii(k, bernoulli(k) * rat_inv_factorial(k)));
    r.add_depth1(0, 1, sym_twopii(2, Rational(-1, 4)));
    for (int n = 3; n <= N - 2; n += 2)
        r.add_depth1(0, n, sym_zeta(n) * sym_twopii(1));
    return r;
}

MetabElem b_inf_closed(int N) {
    if (N < 2) throw std::invalid_argument("b_inf_closed: need N >= 2");
    MetabElem r(N - 2);
    r.alpha = SymCoeff(1);
    for (int n = 2; n <= N - 1; n += 2)
        r.add_depth1(0, n - 1,
                     sym_twopii(n, -bernoulli(n) * rat_inv_factorial(n)));
    for (int p = 2; p <= N - 1; p += 2)
        for (int q = 2; p + q <= N - 1; q += 2)
            r.add_depth1(p, q - 1,
                         sym_twopii(p + q, -bernoulli(p) * rat_inv_factorial(p) *
                                               bernoulli(q) *
                                               rat_inv_factorial(q)));
    for (int n = 3; n <= N - 2; n += 2)
        r.add_depth1(1, n - 1, sym_zeta(n) * sym_twopii(1));
    return r;
}

}  // namespace metakzb
