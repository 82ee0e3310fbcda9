#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>

#include "metakzb/numbers.hpp"
#include "metakzb/numeric.hpp"

namespace metakzb {

// Monomial tau^e0 (2*pi*i)^e1 prod_n zeta(n)^en prod I[n,2k]^e in the coefficient
// ring.  tau and zeta exponents are >= 0, the (2*pi*i) exponent may be negative.
// Maps never hold zero exponents.
struct SymMonomial {
    int tau_exp = 0;
    int twopii_exp = 0;
    std::map<int, int> zeta_exps;
    std::map<std::pair<int, int>, int> ei_exps;  // key (n, 2k)

    bool is_unit() const {
        return tau_exp == 0 && twopii_exp == 0 && zeta_exps.empty() && ei_exps.empty();
    }
    friend auto operator<=>(const SymMonomial&, const SymMonomial&) = default;
    friend bool operator==(const SymMonomial&, const SymMonomial&) = default;

    SymMonomial operator*(const SymMonomial& o) const;
};

SymMonomial mono_tau(int e);
SymMonomial mono_twopii(int e);
SymMonomial mono_zeta(int n, int e = 1);
SymMonomial mono_ei(int n, int two_k, int e = 1);

// Finite sum of monomials with nonzero rational coefficients; exact ring arithmetic.
struct SymCoeff {
    std::map<SymMonomial, Rational> terms;

    SymCoeff() = default;
    SymCoeff(long v) { if (v != 0) terms.emplace(SymMonomial{}, Rational(v)); }
    explicit SymCoeff(const Rational& v) { if (v != 0) terms.emplace(SymMonomial{}, v); }
    SymCoeff(const SymMonomial& m, const Rational& v) { if (v != 0) terms.emplace(m, v); }

    bool is_zero() const { return terms.empty(); }

    SymCoeff& operator+=(const SymCoeff& o);
    SymCoeff& operator-=(const SymCoeff& o);
    SymCoeff operator+(const SymCoeff& o) const;
    SymCoeff operator-(const SymCoeff& o) const;
    SymCoeff operator-() const;
    SymCoeff operator*(const SymCoeff& o) const;
    SymCoeff& operator*=(const SymCoeff& o);
    SymCoeff& mul_rat(const Rational& r);
    void add_term(const SymMonomial& m, const Rational& v);

    friend bool operator==(const SymCoeff&, const SymCoeff&) = default;

    // The rational coefficient of the given monomial (zero when absent).
    Rational coeff(const SymMonomial& m) const;

    std::string to_string() const;
};

SymCoeff sym_rat(long num, long den = 1);
SymCoeff sym_twopii(int e, const Rational& r = Rational(1));
SymCoeff sym_tau_pow(int e, const Rational& r = Rational(1));
SymCoeff sym_zeta(int n);
SymCoeff sym_ei(int n, int two_k);

// Replaces every even zeta value by its (2*pi*i)-rational expression,
// zeta(2m) = -B_{2m} (2*pi*i)^{2m} / (2 (2m)!).  Idempotent; odd zeta and
// I[n,2k] symbols pass through untouched.
SymCoeff euler_rewrite(const SymCoeff& c);

// Numeric evaluation context for the upper half plane.
struct NumContext {
    Complex tau;
    int q_cutoff = 64;
    int precision = kDefaultPrecision;  // requested significant digits
    double quad_tol = 1e-9;

    // Honors the METAB_KZB_PRECISION environment variable, capped at kFloatDigits.
    static NumContext make(const Complex& tau);
};

using EiKey = std::pair<int, int>;           // (n, 2k)
using EiTable = std::map<EiKey, Complex>;

// Evaluates the coefficient with tau and zeta taken numerically and I[n,2k]
// symbols resolved through `ei`.  An I symbol with no table entry is an error
// naming the missing symbol.
Complex eval_sym(const SymCoeff& c, const NumContext& ctx, const EiTable* ei = nullptr);

}  // namespace metakzb
