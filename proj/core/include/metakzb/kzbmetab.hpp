#pragma once

#include <vector>

#include "metakzb/metab.hpp"
#include "metakzb/modular.hpp"

namespace metakzb {

// One summand of the monodromy operator: a coefficient times a composition
// of derivations; indices are listed outermost first and applied from the
// right end of the word.
struct GTerm {
    SymCoeff coeff;
    std::vector<int> word;
};

// g(tau) on the metabelian quotient: identity plus the two derivation
// families with an Eisenstein index, all coefficients pre-rewritten into
// tau and I[n,2k] symbols.
struct GOperator {
    int trunc = 0;
    std::vector<GTerm> terms;
};

GOperator build_g(int N);
MetabElem apply_g(const GOperator& g, const MetabElem& x);

// S(N) = sum_{2 <= 2k <= N-1} (2/(2k-2)!) (2pi i)^(2k-1)
//        sum_n binom(2k-2,n) I[n,2k] u^(2k-2-n) v^n.
BiPoly eichler_sum(int N);
// Same sum with I[n,2k] replaced by I[n,2k] + a0(2k) tau^(n+1)/(n+1), the
// constant-term-subtracted integral along the ray to i-infinity.
BiPoly eichler_sum_sub(int N);

// Closed forms of g applied to a bare generator: for a the series
// a + 2pi i tau b - 2pi i W S with W = u + tau v; for b the series b - v S
// as the operator yields it (a printed variant differs by a uniform 2pi i,
// compared in the verification suite, never silently adopted).
MetabElem g_closed(char gen, int N);

enum class Side { A, B };

// tau-dependent series, closed route: 2pi i b + shear(A1) - 2pi i v S for
// side A; a + 2pi i tau b + shear(B1) - 2pi i W S for side B.
MetabElem tau_series_closed(Side side, int N);
// Same series via the operator: g applied to the constant-term series.
MetabElem tau_series_operator(Side side, int N);
// Side A rewritten through the subtracted integrals: 2pi i b + A1
// - 2pi i v S0, no shear factor; equal to the closed route identically.
MetabElem tau_series_simplified_a(int N);

}  // namespace metakzb
