#pragma once

#include <map>
#include <string>
#include <utility>

#include "metakzb/ncseries.hpp"
#include "metakzb/symring.hpp"

namespace metakzb {

// Bivariate polynomial with symbolic coefficients. Exponents may be negative
// (Laurent terms); consumers that need plain polynomials enforce that on add.
class BiPoly {
  public:
    using Key = std::pair<int, int>;

    const std::map<Key, SymCoeff>& terms() const { return terms_; }
    void add(int ue, int ve, const SymCoeff& c);
    SymCoeff coeff(int ue, int ve) const;
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator-() const;
    BiPoly& scale(const SymCoeff& c);

    // Multiplication by a monomial c * u^ue * v^ve.
    BiPoly shifted(int ue, int ve, const SymCoeff& c) const;
    BiPoly operator*(const BiPoly& o) const;
    // Partial derivative in the first variable.
    BiPoly d_du() const;
    // Drop terms with ue + ve > max_total (used for truncation by weight).
    BiPoly truncated(int max_total) const;
    // Keep only terms with ue + ve == total.
    BiPoly homogeneous_part(int total) const;
    // Swap the two variables.
    BiPoly swapped() const;

    Complex eval(const Complex& u, const Complex& v, const NumContext& ctx,
                 const EiTable* ei = nullptr) const;

    std::string to_string(const char* uname = "u", const char* vname = "v") const;

  private:
    std::map<Key, SymCoeff> terms_;
};

BiPoly bipoly_monomial(int ue, int ve, const SymCoeff& c);

// Element of the metabelian quotient: alpha*a + beta*b + depth-one part.
// The depth-one part is a polynomial in u, v where u^k v^l stands for
// ad(a)^k ad(b)^l([a,b]) divided by (2*pi*i)^k; total degree is capped at
// trunc, so a weight-N series projects to trunc = N - 2.
struct MetabElem {
    int trunc = 0;
    SymCoeff alpha;
    SymCoeff beta;
    BiPoly depth1;

    explicit MetabElem(int trunc_ = 0) : trunc(trunc_) {}

    void add_depth1(int ue, int ve, const SymCoeff& c);
    bool is_zero() const;
    bool operator==(const MetabElem& o) const;

    MetabElem& operator+=(const MetabElem& o);
    MetabElem& operator-=(const MetabElem& o);
    MetabElem operator+(const MetabElem& o) const;
    MetabElem operator-(const MetabElem& o) const;
    MetabElem operator-() const;
    MetabElem& scale(const SymCoeff& c);

    std::string to_string() const;
};

MetabElem metab_letter(char c, int trunc);

// Lie bracket in the quotient. a and b commute onto [a,b] = u^0 v^0; the
// abelian ideal is acted on by multiplication with 2*pi*i*u resp. v.
MetabElem bracket_metab(const MetabElem& x, const MetabElem& y);

// Quotient map on a series whose components of weight >= 2 are Lie elements.
// Uses the left-normed bracketing: a homogeneous Lie element L of weight w
// equals 1/w times the bracketing applied wordwise.
MetabElem project(const NcSeries& x);

// Image of the derivation eps_{2k} on the quotient. eps_0 sends a to -b and
// acts on the ideal as -v d/du in external coordinates; eps_{2k} with k >= 1
// sends a, b into the ideal and kills it.
MetabElem eps_metab(int two_k, const MetabElem& x);

// exp(tau * v d/du) applied to a depth-one polynomial, tau kept symbolic:
// u^k v^l maps to sum_m binom(k,m) tau^m u^(k-m) v^(l+m).
BiPoly exp_shear(const BiPoly& p);

// Change of first variable between U and u = U/(2*pi*i): to_internal
// multiplies the coefficient of U^p by (2*pi*i)^p, the inverse divides.
BiPoly u_convention(const BiPoly& p, bool to_internal);

// Even zeta values eliminated coefficientwise in favor of powers of 2*pi*i.
BiPoly euler_rewrite(const BiPoly& p);
MetabElem euler_rewrite(const MetabElem& e);

}  // namespace metakzb
