#pragma once

#include <string>
#include <vector>

#include "metakzb/metab.hpp"

namespace metakzb {

// Extended period polynomial of an even-weight Eisenstein series, in X, Y.
// Homogeneous of degree 2k-2 with the Laurent endpoints X^-1, Y^-1 allowed.
struct PeriodPolynomial {
    int weight = 0;
    BiPoly coeffs;
};

// omega_plus (X^(2k-2) - Y^(2k-2)) + omega_minus P_minus with
// omega_minus = -(2k-2)!/2, omega_plus = zeta(2k-1)(2pi i)^(1-2k) omega_minus
// and P_minus the Bernoulli sum over X^n Y^(2k-2-n), n = -1..2k-1.
PeriodPolynomial period_poly_direct(int two_k);

// The same polynomial extracted from the constant-term series: divide the
// depth-one tables by V resp. U, restrict to degree 2k-2, split by parity of
// the X-exponent and recombine. Requires N >= 2k+1 so the top Bernoulli
// term of the first table is present.
PeriodPolynomial period_poly_via_assoc(int two_k, int N);

// Laurent expansion of the special value at the cusp:
// -sum_{n>=2} zeta(n)(2pi i)^-n Y^(n-1)
// + (1/(e^X - 1))(1/(e^Y - 1) - 1/Y), to total degree D.
BiPoly xi_star_infinity(int D);

// Exact division by u + tau v; throws when a remainder is left.
BiPoly divide_by_w(const BiPoly& p);

struct Cor56Report {
    bool pass = false;
    bool depth0_clean = false;       // a-coefficient of g(a) - a vanishes
    bool beta_matches = false;       // b-coefficient is exactly 2 pi i tau
    bool division_exact = false;     // depth-one part divisible by u + tau v
    bool sectors_symbolic_equal = false;  // operator sum equals binomial sum
    bool laurent_match = false;      // -tau/(X(X - tau Y)) sector, per sample
    bool odd_sector_identity = false;  // odd part of the cusp value
    double worst_rel_error = 0.0;
    std::string worst_label;
    std::vector<std::string> notes;
};

// Numeric comparison of (g(a) - a)/(-(2pi i)^2 W), with 2 pi i b replaced
// by 1/u, against the difference of cusp values built from the weight-2j
// integrals; sampled at fixed (W, V) pairs, degrees up to D, pass at 1e-8.
Cor56Report corollary56_check(const NumContext& ctx, int D);

std::string period_poly_to_latex(const PeriodPolynomial& p);

}  // namespace metakzb
