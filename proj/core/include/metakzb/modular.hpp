#pragma once

#include <ostream>
#include <vector>

#include "metakzb/numbers.hpp"
#include "metakzb/symring.hpp"

namespace metakzb {

// Hecke-normalized Eisenstein series: a0 + sum_m sigma_{2k-1}(m) q^m,
// a0 = -B_{2k}/4k for weight 2k >= 2 and the constant -1 at weight 0.
struct EisensteinSeries {
    int weight = 0;
    Rational a0;
    std::vector<Int> q_coeffs;
};

EisensteinSeries eisenstein_q(int two_k, int M);
Complex eis_value(const EisensteinSeries& g, const Complex& z);

// Index word of an iterated Eisenstein integral, e.g. {0,0,4} or {4,0}.
using IterEisSymbol = std::vector<int>;

// Closed form for the three index shapes {0}^n, ({0}^n,2k), ({0}^(n-1),2k,0):
// tau^n/n!, I[n,2k]/n!, (tau*I[n-1,2k] - I[n,2k])/(n-1)!.
SymCoeff rewrite_iter_eis(const IterEisSymbol& s);

// I_n(G_2k; tau) by termwise integration of the q-expansion: the mode
// sigma_{2k-1}(m) q^m contributes -n!/(2 pi i)^(n+1) * sigma_{2k-1}(m)
// q^m/m^(n+1), and the constant term contributes -a0 tau^(n+1)/(n+1).
Complex eichler_In_numeric(int n, int two_k, const NumContext& ctx);

// Same integral by composite Gauss-Legendre quadrature along the vertical
// ray z = tau + it; independent of the termwise route.
Complex eichler_In_quadrature(int n, int two_k, const NumContext& ctx);

// tau*I_{n-1} - I_n by a single quadrature with the z-weighted integrand
// (G - a0)(tau - z)^(n-1) z.
Complex eichler_eqn3_quadrature(int n, int two_k, const NumContext& ctx);

// Shuffle identity G({0}^(n-1),2k,0) = G(0) G({0}^(n-1),2k) - n G({0}^n,2k),
// rewritten to I-symbols and evaluated at ctx.tau.
bool shuffle_check(int n, int two_k, const NumContext& ctx);

// Values I[n,2k] for 0 <= n <= n_max, 2 <= 2k <= two_k_max.
EiTable make_ei_table(int n_max, int two_k_max, const NumContext& ctx);

void emit_eichler_csv(std::ostream& os, const std::vector<Complex>& taus,
                      int n_max, int two_k_max, int M);

// Nodes and weights on [-1, 1], computed by Newton iteration at working
// precision.
void gauss_legendre(int n, std::vector<Real>& nodes, std::vector<Real>& weights);

}  // namespace metakzb
