#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "metakzb/assoc.hpp"

using namespace metakzb;

namespace {

Word wd(const char* s) {
    Word w = 0;
    for (int i = 0; s[i]; ++i)
        if (s[i] == 'b') w |= Word(1) << i;
    return w;
}

}  // namespace

TEST_CASE("depth-one logarithm at the first nontrivial weight") {
    // weight 3 keeps only -zeta(2) [b, [a, b]] = -zeta(2)(2 bab - bba - abb)
    DepthOneAssociator phi = phi_depth1(3);
    CHECK(phi.series.coeff(3, wd("bab")) == SymCoeff(sym_zeta(2)) * sym_rat(-2));
    CHECK(phi.series.coeff(3, wd("bba")) == sym_zeta(2));
    CHECK(phi.series.coeff(3, wd("abb")) == sym_zeta(2));
    CHECK(phi.series.weight(2).empty());
}

TEST_CASE("depth-one logarithm is a lie series") {
    CHECK(lie_check(phi_depth1(7).series));
}

TEST_CASE("projected logarithm collects single zeta values") {
    MetabElem p = project(phi_depth1(7).series);
    CHECK(p.alpha.is_zero());
    CHECK(p.beta.is_zero());
    for (int n = 2; n <= 6; ++n)
        CHECK(p.depth1.coeff(0, n - 1) == -SymCoeff(sym_zeta(n)));
    // nothing off the v-axis
    for (const auto& [k, c] : p.depth1.terms()) CHECK(k.first == 0);
}

TEST_CASE("substituted arguments") {
    NcSeries f = phi_series(iota(Gen::x0, 4), iota(Gen::x1, 4));
    // weight 3 part: -zeta(2) [b, [a,b]]
    CHECK(f.coeff(3, wd("bab")) == SymCoeff(sym_zeta(2)) * sym_rat(-2));
    // weight 4 includes -zeta(3) ad(b)^2([a,b]) plus corrections from the
    // bracket part of the first argument
    CHECK_FALSE(f.weight(4).empty());
}

TEST_CASE("constant series, depth zero") {
    MetabElem a_free = a_inf_free(4);
    CHECK(a_free.alpha.is_zero());
    CHECK(a_free.beta == sym_twopii(1));
    MetabElem b_free = b_inf_free(4);
    CHECK(b_free.alpha == SymCoeff(1));
    CHECK(b_free.beta.is_zero());

    CHECK(a_inf_closed(2).beta == sym_twopii(1));
    CHECK(a_inf_closed(2).depth1.is_zero());
    CHECK(b_inf_closed(2).alpha == SymCoeff(1));
    CHECK(b_inf_closed(2).depth1.is_zero());
}

TEST_CASE("closed form of the first series") {
    MetabElem a = a_inf_closed(8);
    // odd zeta line: coefficient of v^n is 2 pi i zeta(n)
    CHECK(a.depth1.coeff(0, 3) == sym_twopii(1) * SymCoeff(sym_zeta(3)));
    CHECK(a.depth1.coeff(0, 5) == sym_twopii(1) * SymCoeff(sym_zeta(5)));
    // distinguished v term: -(2 pi i)^2/4
    CHECK(a.depth1.coeff(0, 1) == sym_twopii(2, Rational(-1, 4)));
    // no even-zeta entries appear on the v axis
    CHECK(a.depth1.coeff(0, 2).is_zero());
    CHECK(a.depth1.coeff(0, 4).is_zero());
    // bernoulli line in the internal variable: (B_k/k!)(2 pi i)^k u^(k-1)
    CHECK(a.depth1.coeff(1, 0) == sym_twopii(2, Rational(1, 12)));
    CHECK(a.depth1.coeff(3, 0) == sym_twopii(4, Rational(-1, 720)));
    CHECK(a.depth1.coeff(2, 0).is_zero());
    // external convention restores the printed U coefficient 2 pi i/12
    BiPoly ext = u_convention(a.depth1, false);
    CHECK(ext.coeff(1, 0) == sym_twopii(1, Rational(1, 12)));
}

TEST_CASE("closed form of the second series") {
    MetabElem b = b_inf_closed(8);
    CHECK(b.alpha == SymCoeff(1));
    // pure v line: -(B_n/n!)(2 pi i)^n at v^(n-1), even n
    CHECK(b.depth1.coeff(0, 1) == sym_twopii(2, Rational(-1, 12)));
    CHECK(b.depth1.coeff(0, 3) == sym_twopii(4, Rational(1, 720)));
    CHECK(b.depth1.coeff(0, 2).is_zero());
    // odd zeta line sits at u v^(n-1)
    CHECK(b.depth1.coeff(1, 2) == sym_twopii(1) * SymCoeff(sym_zeta(3)));
    CHECK(b.depth1.coeff(1, 4) == sym_twopii(1) * SymCoeff(sym_zeta(5)));
    // double bernoulli sector: p = q = 2 lands on u^2 v
    CHECK(b.depth1.coeff(2, 1) == sym_twopii(4, Rational(-1, 144)));
    // p = 2, q = 4 and p = 4, q = 2 land on u^2 v^3 and u^4 v
    CHECK(b.depth1.coeff(2, 3) == sym_twopii(6, Rational(1, 8640)));
    CHECK(b.depth1.coeff(4, 1) == sym_twopii(6, Rational(1, 8640)));
}

TEST_CASE("free route equals closed route at small weight") {
    for (int N : {3, 4, 5, 6, 7}) {
        MetabElem a_free = euler_rewrite(a_inf_free(N));
        MetabElem a_closed = euler_rewrite(a_inf_closed(N));
        CHECK(a_free == a_closed);

        MetabElem b_free = euler_rewrite(b_inf_free(N));
        MetabElem b_closed = euler_rewrite(b_inf_closed(N));
        CHECK(b_free == b_closed);
    }
}
