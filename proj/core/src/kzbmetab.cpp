#include "metakzb/kzbmetab.hpp"

#include <stdexcept>

#include "metakzb/assoc.hpp"

namespace metakzb {

GOperator build_g(int N) {
    if (N < 3) throw std::invalid_argument("build_g: need N >= 3");
    GOperator g;
    g.trunc = N;
    for (int n = 0; n <= N - 2; ++n) {
        GTerm t;
        t.coeff = rewrite_iter_eis(IterEisSymbol(n, 0)) *
                  sym_twopii(n, n % 2 == 0 ? Rational(1) : Rational(-1));
        t.word.assign(n, 0);
        g.terms.push_back(std::move(t));
    }
    for (int two_k = 2; two_k <= N - 1; two_k += 2) {
        for (int n = 0; n <= two_k - 1; ++n) {
            IterEisSymbol s(n, 0);
            s.push_back(two_k);
            GTerm t;
            t.coeff = rewrite_iter_eis(s) *
                      sym_twopii(n + 1,
                                 n % 2 == 0 ? Rational(-1) : Rational(1));
            t.word.assign(n, 0);
            t.word.push_back(two_k);
            g.terms.push_back(std::move(t));
        }
        for (int n = 1; n <= two_k - 1; ++n) {
            IterEisSymbol s(n - 1, 0);
            s.push_back(two_k);
            s.push_back(0);
            GTerm t;
            t.coeff = rewrite_iter_eis(s) *
                      sym_twopii(n + 1,
                                 n % 2 == 0 ? Rational(-1) : Rational(1));
            t.word.assign(n - 1, 0);
            t.word.push_back(two_k);
            t.word.push_back(0);
            g.terms.push_back(std::move(t));
        }
    }
    return g;
}

MetabElem apply_g(const GOperator& g, const MetabElem& x) {
    MetabElem r(x.trunc);
    for (const auto& t : g.terms) {
        MetabElem y = x;
        for (auto it = t.word.rbegin(); it != t.word.rend(); ++it)
            y = eps_metab(*it, y);
        if (y.is_zero()) continue;
        y.scale(t.coeff);
        r += y;
    }
    return r;
}

namespace {

BiPoly eichler_sum_impl(int N, bool subtract_const) {
    BiPoly s;
    for (int two_k = 2; two_k <= N - 1; two_k += 2) {
        Rational pref = Rational(2) * rat_inv_factorial(two_k - 2);
        for (int n = 0; n <= two_k - 2; ++n) {
            SymCoeff symbol = sym_ei(n, two_k);
            if (subtract_const) {
                Rational a0 = -bernoulli(two_k) / Rational(2 * two_k);
                symbol += sym_tau_pow(n + 1, a0 / Rational(n + 1));
            }
            Rational c = pref * Rational(binomial_int(two_k - 2, n));
            s.add(two_k - 2 - n, n, symbol * sym_twopii(two_k - 1, c));
        }
    }
    return s;
}

BiPoly w_poly() {
    BiPoly w;
    w.add(1, 0, SymCoeff(1));
    w.add(0, 1, sym_tau_pow(1));
    return w;
}

}  // namespace

BiPoly eichler_sum(int N) { return eichler_sum_impl(N, false); }

BiPoly eichler_sum_sub(int N) { return eichler_sum_impl(N, true); }

MetabElem g_closed(char gen, int N) {
    if (N < 3) throw std::invalid_argument("g_closed: need N >= 3");
    MetabElem r(N - 2);
    BiPoly s = eichler_sum(N);
    if (gen == 'a') {
        r.alpha = SymCoeff(1);
        r.beta = sym_twopii(1) * sym_tau_pow(1);
        BiPoly ws = w_poly() * s;
        ws.scale(sym_twopii(1, Rational(-1)));
        r.depth1 = ws.truncated(r.trunc);
    } else {
        r.beta = SymCoeff(1);
        r.depth1 = s.shifted(0, 1, SymCoeff(-1)).truncated(r.trunc);
    }
    return r;
}

MetabElem tau_series_closed(Side side, int N) {
    if (N < 3) throw std::invalid_argument("tau_series_closed: need N >= 3");
    MetabElem r(N - 2);
    BiPoly s = eichler_sum(N);
    if (side == Side::A) {
        r.beta = sym_twopii(1);
        r.depth1 = exp_shear(a_inf_closed(N).depth1) +
                   s.shifted(0, 1, sym_twopii(1, Rational(-1)));
    } else {
        r.alpha = SymCoeff(1);
        r.beta = sym_twopii(1) * sym_tau_pow(1);
        BiPoly ws = w_poly() * s;
        ws.scale(sym_twopii(1, Rational(-1)));
        r.depth1 = exp_shear(b_inf_closed(N).depth1) + ws;
    }
    r.depth1 = r.depth1.truncated(r.trunc);
    return r;
}

MetabElem tau_series_operator(Side side, int N) {
    if (N < 3) throw std::invalid_argument("tau_series_operator: need N >= 3");
    GOperator g = build_g(N);
    MetabElem base =
        side == Side::A ? a_inf_closed(N) : b_inf_closed(N);
    return apply_g(g, base);
}

MetabElem tau_series_simplified_a(int N) {
    if (N < 3)
        throw std::invalid_argument("tau_series_simplified_a: need N >= 3");
    MetabElem r(N - 2);
    r.beta = sym_twopii(1);
    r.depth1 = (a_inf_closed(N).depth1 +
                eichler_sum_sub(N).shifted(0, 1, sym_twopii(1, Rational(-1))))
                   .truncated(r.trunc);
    return r;
}

}  // namespace metakzb
