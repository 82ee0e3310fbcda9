#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "metakzb/metab.hpp"
#include "support/test_rand.hpp"

using namespace metakzb;

namespace {

Word wd(const char* s) {
    Word w = 0;
    for (int i = 0; s[i]; ++i)
        if (s[i] == 'b') w |= Word(1) << i;
    return w;
}

MetabElem ideal_monomial(int ue, int ve, int trunc) {
    MetabElem e(trunc);
    e.add_depth1(ue, ve, SymCoeff(1));
    return e;
}

}  // namespace

TEST_CASE("letters and the basic bracket") {
    MetabElem a = metab_letter('a', 6);
    MetabElem b = metab_letter('b', 6);
    CHECK(a.alpha == SymCoeff(1));
    CHECK(a.beta.is_zero());
    CHECK(b.beta == SymCoeff(1));

    MetabElem ab = bracket_metab(a, b);
    CHECK(ab.alpha.is_zero());
    CHECK(ab.beta.is_zero());
    CHECK(ab.depth1.coeff(0, 0) == SymCoeff(1));

    // [a, [a,b]] multiplies by 2*pi*i*u, [b, [a,b]] by v
    MetabElem aab = bracket_metab(a, ab);
    CHECK(aab.depth1.coeff(1, 0) == sym_twopii(1));
    MetabElem bab = bracket_metab(b, ab);
    CHECK(bab.depth1.coeff(0, 1) == SymCoeff(1));

    // the ideal is abelian
    CHECK(bracket_metab(ab, aab).is_zero());
    CHECK(bracket_metab(ab, ab).is_zero());

    CHECK(bracket_metab(b, a).depth1.coeff(0, 0) == SymCoeff(-1));
}

TEST_CASE("projection of the free algebra") {
    // aab - 2 aba + baa is ad^2(a)(b); its class is 2*pi*i*u
    NcSeries s(3);
    s.add(3, wd("aab"), SymCoeff(1));
    s.add(3, wd("aba"), SymCoeff(-2));
    s.add(3, wd("baa"), SymCoeff(1));
    MetabElem p = project(s);
    CHECK(p.alpha.is_zero());
    CHECK(p.beta.is_zero());
    CHECK(p.depth1.coeff(1, 0) == sym_twopii(1));
    CHECK(p.depth1.terms().size() == 1);

    NcSeries b1(3);
    b1.add(1, wd("b"), sym_tau_pow(1));
    MetabElem pb = project(b1);
    CHECK(pb.beta == sym_tau_pow(1));
    CHECK(pb.depth1.is_zero());

    NcSeries ab(4);
    ab.add(2, wd("ab"), SymCoeff(1));
    ab.add(2, wd("ba"), SymCoeff(-1));
    MetabElem pab = project(ab);
    CHECK(pab.depth1.coeff(0, 0) == SymCoeff(1));
}

TEST_CASE("projection respects free brackets") {
    testrand::Rng rng(521);
    for (int i = 0; i < 30; ++i) {
        NcSeries x = rng.random_lie(8, 2);
        NcSeries y = rng.random_lie(8, 2);
        MetabElem lhs = project(bracket(x, y));
        MetabElem rhs = bracket_metab(project(x), project(y));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("quotient derivations") {
    int T = 8;
    MetabElem a = metab_letter('a', T);
    MetabElem b = metab_letter('b', T);

    MetabElem e0a = eps_metab(0, a);
    CHECK(e0a.alpha.is_zero());
    CHECK(e0a.beta == SymCoeff(-1));
    CHECK(e0a.depth1.is_zero());
    CHECK(eps_metab(0, b).is_zero());

    // eps_0 on the ideal: u^2 -> -2 (2 pi i)^-1 u v
    MetabElem u2 = ideal_monomial(2, 0, T);
    MetabElem e0u2 = eps_metab(0, u2);
    CHECK(e0u2.depth1.coeff(1, 1) == sym_twopii(-1, Rational(-2)));
    CHECK(e0u2.depth1.terms().size() == 1);
    // v-only monomials are killed
    CHECK(eps_metab(0, ideal_monomial(0, 3, T)).is_zero());

    // eps_2: a -> 2 (2 pi i) u, b -> 2 v
    MetabElem e2a = eps_metab(2, a);
    CHECK(e2a.depth1.coeff(1, 0) == sym_twopii(1, Rational(2)));
    MetabElem e2b = eps_metab(2, b);
    CHECK(e2b.depth1.coeff(0, 1) == SymCoeff(2));

    // eps_4: a -> (2/2!) (2 pi i)^3 u^3, b -> (2/2!) (2 pi i)^2 u^2 v
    MetabElem e4a = eps_metab(4, a);
    CHECK(e4a.depth1.coeff(3, 0) == sym_twopii(3));
    MetabElem e4b = eps_metab(4, b);
    CHECK(e4b.depth1.coeff(2, 1) == sym_twopii(2));

    // the higher derivations kill the ideal
    CHECK(eps_metab(2, ideal_monomial(1, 1, T)).is_zero());
    CHECK(eps_metab(6, ideal_monomial(2, 0, T)).is_zero());
}

TEST_CASE("derivations commute with the projection") {
    testrand::Rng rng(522);
    for (int i = 0; i < 30; ++i) {
        int two_k = 2 * rng.uniform(0, 2);
        NcSeries l = rng.random_lie(8, 2);
        MetabElem lhs = project(epsilon_free(two_k, l));
        MetabElem rhs = eps_metab(two_k, project(l));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("property: jacobi identity in the quotient") {
    testrand::Rng rng(523);
    for (int i = 0; i < 100; ++i) {
        MetabElem x = rng.random_metab(8);
        MetabElem y = rng.random_metab(8);
        MetabElem z = rng.random_metab(8);
        MetabElem j = bracket_metab(x, bracket_metab(y, z)) +
                      bracket_metab(y, bracket_metab(z, x)) +
                      bracket_metab(z, bracket_metab(x, y));
        CHECK(j.is_zero());
    }
}

TEST_CASE("shear operator") {
    BiPoly p = bipoly_monomial(2, 0, SymCoeff(1));
    BiPoly sh = exp_shear(p);
    CHECK(sh.coeff(2, 0) == SymCoeff(1));
    CHECK(sh.coeff(1, 1) == sym_tau_pow(1, Rational(2)));
    CHECK(sh.coeff(0, 2) == sym_tau_pow(2));
    CHECK(sh.terms().size() == 3);

    // matches the exponential of the eps_0 action term by term
    testrand::Rng rng(524);
    for (int i = 0; i < 30; ++i) {
        MetabElem e(10);
        for (int t = 0; t < 4; ++t)
            e.add_depth1(rng.uniform(0, 4), rng.uniform(0, 3), rng.small_coeff());
        BiPoly direct = exp_shear(e.depth1);

        // exp(-2 pi i tau eps_0) restricted to the ideal
        BiPoly acc = e.depth1;
        MetabElem pow = e;
        Rational fact(1);
        for (int m = 1; m <= 6; ++m) {
            pow = eps_metab(0, pow);
            fact /= m;
            if (pow.is_zero()) break;
            BiPoly term = pow.depth1;
            term.scale(sym_twopii(m, rat_pow(Rational(-1), m) * fact) *
                       sym_tau_pow(m));
            acc += term;
        }
        CHECK(acc == direct);
    }
}

TEST_CASE("variable convention change") {
    BiPoly p;
    p.add(2, 1, SymCoeff(5));
    p.add(0, 3, sym_tau_pow(1));
    BiPoly internal = u_convention(p, true);
    CHECK(internal.coeff(2, 1) == sym_twopii(2, Rational(5)));
    CHECK(internal.coeff(0, 3) == sym_tau_pow(1));
    CHECK(u_convention(internal, false) == p);
}

TEST_CASE("depth-one bookkeeping") {
    MetabElem e(4);
    CHECK_THROWS_AS(e.add_depth1(-1, 0, SymCoeff(1)), std::invalid_argument);
    e.add_depth1(3, 2, SymCoeff(1));  // beyond trunc, dropped
    CHECK(e.depth1.is_zero());
    e.add_depth1(2, 2, SymCoeff(1));
    CHECK(e.depth1.coeff(2, 2) == SymCoeff(1));

    MetabElem f = e;
    f.scale(sym_rat(3));
    CHECK(f.depth1.coeff(2, 2) == SymCoeff(3));
    CHECK((f - e - e - e).is_zero());
}

TEST_CASE("bipoly algebra") {
    BiPoly p = bipoly_monomial(1, 0, SymCoeff(1)) +
               bipoly_monomial(0, 1, sym_tau_pow(1));
    BiPoly sq = p * p;
    CHECK(sq.coeff(2, 0) == SymCoeff(1));
    CHECK(sq.coeff(1, 1) == sym_tau_pow(1, Rational(2)));
    CHECK(sq.coeff(0, 2) == sym_tau_pow(2));

    CHECK(sq.d_du().coeff(1, 0) == SymCoeff(2));
    CHECK(sq.truncated(1).terms().empty());
    CHECK(sq.homogeneous_part(2) == sq);
    CHECK(sq.swapped().coeff(0, 2) == SymCoeff(1));

    NumContext ctx = NumContext::make(Complex(Real(0), Real(1)));
    Complex val = sq.eval(Complex(Real(2)), Complex(Real(0)), ctx);
    CHECK(abs(val - Complex(Real(4))) < 1e-40);
}
