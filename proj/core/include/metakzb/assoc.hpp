#pragma once

#include "metakzb/metab.hpp"
#include "metakzb/ncseries.hpp"

namespace metakzb {

// Depth-one part of the Drinfeld associator's logarithm with substituted
// arguments: -sum_{n=2}^{N-1} zeta(n) ad^(n-1)(first)(second).
struct DepthOneAssociator {
    NcSeries series;
};

NcSeries phi_series(const NcSeries& first, const NcSeries& second);
DepthOneAssociator phi_depth1(int N);

// log of e^{pi i iota(x1)} Phi e^{2 pi i iota(x0)} Phi^{-1}, projected.
// Replacing log Phi by its depth-one part is harmless here: the depth >= 2
// part of phi lies in the ideal D^1, so every product term containing it
// lands in D^2 and dies under the projection.
MetabElem a_inf_free(int N);
// log of Phi(iota(xinf), iota(x1)) e^a Phi(iota(x0), iota(x1))^{-1}, projected.
MetabElem b_inf_free(int N);

// 2*pi*i*b plus the depth-one polynomial built from c(x) = 1/(e^x - 1)
// + 1/2 - 1/x = sum_{k>=2} B_k/k! x^(k-1) and odd zeta values.
MetabElem a_inf_closed(int N);
// a plus the depth-one polynomial -2*pi*i*(c(2*pi*i*V) + U c(U) c(2*pi*i*V))
// + sum_{odd n>=3} zeta(n) U V^(n-1).
MetabElem b_inf_closed(int N);

}  // namespace metakzb
