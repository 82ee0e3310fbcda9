#pragma once

// Deterministic generators for the randomized suites.  Coefficients are kept
// small so exact arithmetic stays cheap even over hundreds of cases.

#include <random>

#include "metakzb/metab.hpp"
#include "metakzb/ncseries.hpp"
#include "metakzb/symring.hpp"

namespace metakzb::testrand {

struct Rng {
    std::mt19937 gen;

    explicit Rng(unsigned seed) : gen(seed) {}

    int uniform(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(gen);
    }

    Rational small_rat() {
        int num = uniform(-6, 6);
        if (num == 0) num = 1;
        int den = uniform(1, 5);
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    // Nonzero rational, sometimes dressed with tau or 2*pi*i powers so the
    // symbolic layer is exercised too.
    SymCoeff small_coeff(bool symbols = true) {
        SymCoeff c(SymMonomial{}, small_rat());
        if (symbols && uniform(0, 3) == 0)
            c = c * sym_tau_pow(uniform(1, 2));
        if (symbols && uniform(0, 3) == 0)
            c = c * sym_twopii(uniform(-1, 2));
        return c;
    }

    Word random_word(int len) {
        Word w = 0;
        for (int i = 0; i < len; ++i)
            if (uniform(0, 1)) w |= Word(1) << i;
        return w;
    }

    NcSeries random_series(int trunc, int nterms, bool allow_const) {
        NcSeries s(trunc);
        for (int t = 0; t < nterms; ++t) {
            int len = uniform(allow_const ? 0 : 1, trunc);
            s.add(len, random_word(len), small_coeff());
        }
        return s;
    }

    // Linear combination of nested bracket monomials in the letters.
    NcSeries random_lie(int trunc, int nterms = 3) {
        NcSeries out(trunc);
        for (int t = 0; t < nterms; ++t) {
            NcSeries term = random_bracket_tree(trunc, uniform(0, 3));
            if (term.is_zero()) continue;
            term.scale_rat(small_rat());
            out += term;
        }
        return out;
    }

    MetabElem random_metab(int trunc, int nterms = 4) {
        MetabElem e(trunc);
        e.alpha = small_coeff();
        e.beta = small_coeff();
        for (int t = 0; t < nterms; ++t)
            e.add_depth1(uniform(0, trunc / 2), uniform(0, trunc / 2),
                         small_coeff());
        return e;
    }

  private:
    NcSeries random_bracket_tree(int trunc, int depth) {
        if (depth == 0)
            return NcSeries::letter(uniform(0, 1) ? 'a' : 'b', trunc);
        NcSeries l = random_bracket_tree(trunc, depth - 1);
        NcSeries r = random_bracket_tree(trunc, uniform(0, depth - 1));
        return bracket(l, r);
    }
};

}  // namespace metakzb::testrand
