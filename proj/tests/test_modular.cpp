#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "metakzb/modular.hpp"
#include "support/test_rand.hpp"

using namespace metakzb;

namespace {

NumContext ctx_at(double re, double im) {
    return NumContext::make(Complex(Real(re), Real(im)));
}

double rel_err(const Complex& got, const Complex& want) {
    Real scale = abs(want);
    if (scale < 1e-30) scale = 1;
    return static_cast<double>(abs(got - want) / scale);
}

}  // namespace

TEST_CASE("q-expansions") {
    EisensteinSeries g4 = eisenstein_q(4, 2);
    CHECK(g4.a0 == Rational(1, 240));
    REQUIRE(g4.q_coeffs.size() == 2);
    CHECK(g4.q_coeffs[0] == 1);
    CHECK(g4.q_coeffs[1] == 9);

    EisensteinSeries g2 = eisenstein_q(2, 1);
    CHECK(g2.a0 == Rational(-1, 24));
    CHECK(g2.q_coeffs[0] == 1);

    EisensteinSeries g6 = eisenstein_q(6, 4);
    CHECK(g6.a0 == Rational(-1, 504));
    CHECK(g6.q_coeffs[3] == 1 + 32 + 1024);

    EisensteinSeries g0 = eisenstein_q(0, 5);
    CHECK(g0.a0 == Rational(-1));
    CHECK(g0.q_coeffs.empty());

    CHECK_THROWS_AS(eisenstein_q(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(eisenstein_q(4, 0), std::invalid_argument);
}

TEST_CASE("divisor sums stay exact at large weight") {
    // sigma_11(64) = sum of 2^(11 j), j = 0..6, too big for 64-bit arithmetic
    Int expect = 0;
    for (int j = 0; j <= 6; ++j) {
        Int p = 1;
        p <<= 11 * j;
        expect += p;
    }
    EisensteinSeries g12 = eisenstein_q(12, 64);
    CHECK(g12.q_coeffs[63] == expect);
}

TEST_CASE("weight-0 value is the constant -1") {
    EisensteinSeries g0 = eisenstein_q(0, 8);
    Complex v = eis_value(g0, Complex(Real(0.3), Real(0.9)));
    CHECK(abs(v - Complex(Real(-1))) < 1e-45);
}

TEST_CASE("modular transformation of the weight-4 series") {
    EisensteinSeries g4 = eisenstein_q(4, 80);
    Complex tau(Real(0), Real(2));
    Complex inv = Complex(Real(-1)) / tau;  // i/2
    Complex lhs = eis_value(g4, inv);
    Complex rhs = cpow(tau, 4) * eis_value(g4, tau);
    CHECK(rel_err(lhs, rhs) < 1e-30);

    // periodicity
    Complex t2(Real(0.3), Real(1.1));
    CHECK(rel_err(eis_value(g4, t2 + Complex(Real(1))), eis_value(g4, t2)) <
          1e-40);
}

TEST_CASE("index words rewrite to the three closed shapes") {
    CHECK(rewrite_iter_eis({}) == SymCoeff(1));
    CHECK(rewrite_iter_eis({0}) == sym_tau_pow(1));
    CHECK(rewrite_iter_eis({0, 0}) == sym_tau_pow(2, Rational(1, 2)));
    CHECK(rewrite_iter_eis({4}) == sym_ei(0, 4));
    CHECK(rewrite_iter_eis({0, 4}) == sym_ei(1, 4));
    CHECK(rewrite_iter_eis({0, 0, 6}) == SymCoeff(sym_ei(2, 6)) * sym_rat(1, 2));

    SymCoeff forty = rewrite_iter_eis({4, 0});
    CHECK(forty == sym_tau_pow(1) * sym_ei(0, 4) - sym_ei(1, 4));
    SymCoeff mid = rewrite_iter_eis({0, 4, 0});
    CHECK(mid == sym_tau_pow(1) * sym_ei(1, 4) - sym_ei(2, 4));

    CHECK_THROWS_AS(rewrite_iter_eis({4, 4}), std::invalid_argument);
    CHECK_THROWS_AS(rewrite_iter_eis({4, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(rewrite_iter_eis({3}), std::invalid_argument);
}

TEST_CASE("gauss-legendre rule integrates polynomials") {
    std::vector<Real> nodes, weights;
    gauss_legendre(20, nodes, weights);
    REQUIRE(nodes.size() == 20);
    auto integrate_pow = [&](int k) {
        Real s = 0;
        for (size_t i = 0; i < nodes.size(); ++i) {
            Real p = 1;
            for (int j = 0; j < k; ++j) p *= nodes[i];
            s += weights[i] * p;
        }
        return s;
    };
    CHECK(abs(integrate_pow(0) - 2) < 1e-44);
    CHECK(abs(integrate_pow(2) - Real(2) / 3) < 1e-44);
    CHECK(abs(integrate_pow(7)) < 1e-44);
    CHECK(abs(integrate_pow(38) - Real(2) / 39) < 1e-40);
}

TEST_CASE("termwise integrals match quadrature") {
    for (auto [re, im] : {std::pair{0.0, 1.0}, std::pair{0.3, 1.2}}) {
        NumContext ctx = ctx_at(re, im);
        for (int two_k : {2, 4, 8, 12})
            for (int n : {0, 1, 3, 6}) {
                Complex termwise = eichler_In_numeric(n, two_k, ctx);
                Complex quad = eichler_In_quadrature(n, two_k, ctx);
                CHECK(rel_err(termwise, quad) < 1e-9);
            }
    }
}

TEST_CASE("weighted path integral matches the two-term combination") {
    for (auto [re, im] : {std::pair{0.0, 1.0}, std::pair{0.3, 1.2}}) {
        NumContext ctx = ctx_at(re, im);
        for (int two_k : {4, 6})
            for (int n : {1, 2, 3}) {
                Complex combo = ctx.tau * eichler_In_numeric(n - 1, two_k, ctx) -
                                eichler_In_numeric(n, two_k, ctx);
                Complex path = eichler_eqn3_quadrature(n, two_k, ctx);
                CHECK(rel_err(combo, path) < 1e-8);
            }
    }
}

TEST_CASE("derivative relation between neighboring integrals") {
    // d/dtau I_n = n I_{n-1}; checked with a central difference
    NumContext ctx = ctx_at(0.1, 1.3);
    double h = 1e-6;
    for (int n : {1, 2, 4}) {
        NumContext up = ctx_at(0.1 + h, 1.3);
        NumContext dn = ctx_at(0.1 - h, 1.3);
        Complex num_deriv = (eichler_In_numeric(n, 6, up) -
                             eichler_In_numeric(n, 6, dn)) /
                            Complex(Real(2 * h));
        Complex expect = Complex(Real(n)) * eichler_In_numeric(n - 1, 6, ctx);
        CHECK(rel_err(num_deriv, expect) < 1e-7);
    }
}

TEST_CASE("cutoff guards") {
    // low imaginary part: |q| too close to 1 for the tail bound
    NumContext low = ctx_at(0.0, 0.05);
    CHECK_THROWS_WITH_AS(eichler_In_numeric(0, 4, low),
                         doctest::Contains("decrease"), std::runtime_error);

    // tiny cutoff: tail bound exceeds the tolerance budget
    NumContext tiny = ctx_at(0.0, 0.4);
    tiny.q_cutoff = 2;
    tiny.quad_tol = 1e-12;
    CHECK_THROWS_WITH_AS(eichler_In_numeric(0, 12, tiny),
                         doctest::Contains("increase"), std::runtime_error);
}

TEST_CASE("table construction covers the requested grid") {
    NumContext ctx = ctx_at(0.0, 1.0);
    EiTable t = make_ei_table(3, 6, ctx);
    CHECK(t.size() == 4 * 3);
    CHECK(t.count({0, 2}) == 1);
    CHECK(t.count({3, 6}) == 1);
    CHECK(rel_err(t.at({2, 4}), eichler_In_numeric(2, 4, ctx)) < 1e-40);
}

TEST_CASE("csv export shape") {
    std::ostringstream os;
    emit_eichler_csv(os, {Complex(Real(0.3), Real(1.2))}, 4, 12, 64);
    std::istringstream is(os.str());
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line == "tau_re,tau_im,n,2k,re,im");
    int rows = 0;
    while (std::getline(is, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 6 * 5);
}

TEST_CASE("shuffle identity at fixed points") {
    for (auto [re, im] : {std::pair{0.0, 1.0}, std::pair{0.3, 1.2}}) {
        NumContext ctx = ctx_at(re, im);
        CHECK(shuffle_check(1, 4, ctx));
        CHECK(shuffle_check(2, 6, ctx));
        CHECK(shuffle_check(3, 8, ctx));
        CHECK(shuffle_check(1, 2, ctx));
    }
}

TEST_CASE("property: shuffle identity at random points") {
    testrand::Rng rng(611);
    const int two_ks[] = {4, 6, 8};
    for (int i = 0; i < 100; ++i) {
        double re = rng.uniform(-50, 50) / 100.0;
        double im = 0.8 + rng.uniform(0, 170) / 100.0;
        NumContext ctx = ctx_at(re, im);
        int n = rng.uniform(1, 4);
        int two_k = two_ks[rng.uniform(0, 2)];
        CHECK(shuffle_check(n, two_k, ctx));
    }
}
