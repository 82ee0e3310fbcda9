#include "metakzb/modular.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <stdexcept>

namespace metakzb {

EisensteinSeries eisenstein_q(int two_k, int M) {
    if (two_k < 0 || two_k % 2 != 0)
        throw std::invalid_argument("eisenstein_q: weight must be even and >= 0");
    EisensteinSeries g;
    g.weight = two_k;
    if (two_k == 0) {
        g.a0 = Rational(-1);
        return g;
    }
    if (M < 1) throw std::invalid_argument("eisenstein_q: M must be >= 1");
    g.a0 = -bernoulli(two_k) / Rational(2 * two_k);
    g.q_coeffs.reserve(M);
    for (int m = 1; m <= M; ++m)
        g.q_coeffs.push_back(divisor_power_sum(m, two_k - 1));
    return g;
}

Complex eis_value(const EisensteinSeries& g, const Complex& z) {
    Complex q = exp(two_pi_i() * z);
    std::vector<Complex> terms;
    terms.reserve(g.q_coeffs.size());
    Complex qm = 1;
    for (const auto& c : g.q_coeffs) {
        qm *= q;
        terms.push_back(int_to_real(c) * qm);
    }
    Complex s = 0;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) s += *it;
    return s + rat_to_real(g.a0);
}

SymCoeff rewrite_iter_eis(const IterEisSymbol& s) {
    const int n = int(s.size());
    int nonzero = -1;
    for (int i = 0; i < n; ++i) {
        if (s[i] == 0) continue;
        if (s[i] < 0 || s[i] % 2 != 0)
            throw std::invalid_argument("rewrite_iter_eis: indices must be even");
        if (nonzero >= 0)
            throw std::invalid_argument("rewrite_iter_eis: unsupported shape");
        nonzero = i;
    }
    if (nonzero < 0) return sym_tau_pow(n, rat_inv_factorial(n));
    const int two_k = s[nonzero];
    if (nonzero == n - 1) {
        SymCoeff c = sym_ei(n - 1, two_k);
        c.mul_rat(rat_inv_factorial(n - 1));
        return c;
    }
    if (nonzero == n - 2) {
        const int m = n - 1;
        SymCoeff c = sym_ei(m - 1, two_k) * sym_tau_pow(1) - sym_ei(m, two_k);
        c.mul_rat(rat_inv_factorial(m - 1));
        return c;
    }
    throw std::invalid_argument("rewrite_iter_eis: unsupported shape");
}

namespace {

Real abs_q(const Complex& tau) {
    Real two_pi = 2 * pi_real();
    return exp(-two_pi * tau.imag());
}

void check_tail(int n, int two_k, int M, const Complex& tau, double tol) {
    Real x = abs_q(tau);
    if (x >= Real("0.5"))
        throw std::runtime_error(
            "eichler: Im tau too small for the q-expansion; decrease |q|");
    Real bound = pow(Real(M + 1), two_k - n - 1 > 0 ? two_k - n - 1 : 0) *
                 pow(x, M + 1) / (1 - 2 * x);
    bound *= rat_to_real(rat_factorial(n)) / pow(2 * pi_real(), n + 1);
    if (bound > Real(tol) * Real("1e-3"))
        throw std::runtime_error(
            "eichler: q-cutoff too small for requested tolerance; increase M");
}

}  // namespace

Complex eichler_In_numeric(int n, int two_k, const NumContext& ctx) {
    if (n < 0 || two_k < 2 || two_k % 2 != 0)
        throw std::invalid_argument("eichler_In_numeric: bad indices");
    check_tail(n, two_k, ctx.q_cutoff, ctx.tau, ctx.quad_tol);
    EisensteinSeries g = eisenstein_q(two_k, ctx.q_cutoff);
    Complex q = exp(two_pi_i() * ctx.tau);
    std::vector<Complex> terms;
    terms.reserve(g.q_coeffs.size());
    Complex qm = 1;
    for (int m = 1; m <= int(g.q_coeffs.size()); ++m) {
        qm *= q;
        terms.push_back(int_to_real(g.q_coeffs[m - 1]) * qm /
                        pow(Real(m), n + 1));
    }
    Complex s = 0;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) s += *it;
    Complex pref = -rat_to_real(rat_factorial(n)) / cpow(two_pi_i(), n + 1);
    Complex a0_part =
        rat_to_real(g.a0) * cpow(ctx.tau, n + 1) / Real(n + 1);
    return pref * s - a0_part;
}

void gauss_legendre(int n, std::vector<Real>& nodes, std::vector<Real>& weights) {
    nodes.assign(n, Real(0));
    weights.assign(n, Real(0));
    const Real eps("1e-45");
    for (int i = 0; i < n; ++i) {
        Real x(std::cos(M_PI * (i + 0.75) / (n + 0.5)));
        Real pp(0);
        for (int iter = 0; iter < 100; ++iter) {
            Real p0(1), p1(x);
            for (int k = 2; k <= n; ++k) {
                Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1);
            Real dx = p1 / pp;
            x -= dx;
            if (abs(dx) < eps) break;
        }
        nodes[i] = x;
        weights[i] = 2 / ((1 - x * x) * pp * pp);
    }
}

namespace {

struct GlRule {
    std::vector<Real> nodes, weights;
    GlRule() { gauss_legendre(20, nodes, weights); }
};

Complex quad_ray(const std::function<Complex(const Real&)>& f) {
    static const double cuts[] = {0, 0.5, 1, 2, 4, 8, 12};
    static const GlRule rule;
    const auto& xs = rule.nodes;
    const auto& ws = rule.weights;
    Complex total = 0;
    for (size_t s = 0; s + 1 < sizeof(cuts) / sizeof(cuts[0]); ++s) {
        Real a(cuts[s]), b(cuts[s + 1]);
        Real half = (b - a) / 2, mid = (a + b) / 2;
        Complex acc = 0;
        for (size_t i = 0; i < xs.size(); ++i)
            acc += ws[i] * f(mid + half * xs[i]);
        total += acc * half;
    }
    return total;
}

}  // namespace

Complex eichler_In_quadrature(int n, int two_k, const NumContext& ctx) {
    if (n < 0 || two_k < 2 || two_k % 2 != 0)
        throw std::invalid_argument("eichler_In_quadrature: bad indices");
    EisensteinSeries g = eisenstein_q(two_k, ctx.q_cutoff);
    Real a0 = rat_to_real(g.a0);
    Complex i_unit(Real(0), Real(1));
    Complex integral = quad_ray([&](const Real& t) {
        Complex z = ctx.tau + i_unit * t;
        Complex tz(Real(0), -t);
        return (eis_value(g, z) - a0) * cpow(tz, n) * i_unit;
    });
    return integral - a0 * cpow(ctx.tau, n + 1) / Real(n + 1);
}

Complex eichler_eqn3_quadrature(int n, int two_k, const NumContext& ctx) {
    if (n < 1 || two_k < 2 || two_k % 2 != 0)
        throw std::invalid_argument("eichler_eqn3_quadrature: bad indices");
    EisensteinSeries g = eisenstein_q(two_k, ctx.q_cutoff);
    Real a0 = rat_to_real(g.a0);
    Complex i_unit(Real(0), Real(1));
    Complex integral = quad_ray([&](const Real& t) {
        Complex z = ctx.tau + i_unit * t;
        Complex tz(Real(0), -t);
        return (eis_value(g, z) - a0) * cpow(tz, n - 1) * z * i_unit;
    });
    return integral -
           a0 * cpow(ctx.tau, n + 1) / Real(n) / Real(n + 1);
}

bool shuffle_check(int n, int two_k, const NumContext& ctx) {
    if (n < 1 || two_k < 2)
        throw std::invalid_argument("shuffle_check: bad indices");
    IterEisSymbol lhs_sym(n - 1, 0);
    lhs_sym.push_back(two_k);
    lhs_sym.push_back(0);
    IterEisSymbol mid_sym(n - 1, 0);
    mid_sym.push_back(two_k);
    IterEisSymbol long_sym(n, 0);
    long_sym.push_back(two_k);
    SymCoeff lhs = rewrite_iter_eis(lhs_sym);
    SymCoeff rhs = rewrite_iter_eis({0}) * rewrite_iter_eis(mid_sym);
    SymCoeff sub = rewrite_iter_eis(long_sym);
    sub.mul_rat(Rational(n));
    rhs -= sub;
    EiTable table;
    table[{n - 1, two_k}] = eichler_In_numeric(n - 1, two_k, ctx);
    table[{n, two_k}] = eichler_In_numeric(n, two_k, ctx);
    Complex l = eval_sym(lhs, ctx, &table);
    Complex r = eval_sym(rhs, ctx, &table);
    Real scale = abs(l);
    if (scale < 1) scale = 1;
    return abs(l - r) <= Real(ctx.quad_tol) * scale;
}

EiTable make_ei_table(int n_max, int two_k_max, const NumContext& ctx) {
    EiTable table;
    for (int two_k = 2; two_k <= two_k_max; two_k += 2)
        for (int n = 0; n <= n_max; ++n)
            table[{n, two_k}] = eichler_In_numeric(n, two_k, ctx);
    return table;
}

void emit_eichler_csv(std::ostream& os, const std::vector<Complex>& taus,
                      int n_max, int two_k_max, int M) {
    os << "tau_re,tau_im,n,2k,re,im\n";
    os << std::setprecision(20);
    for (const auto& tau : taus) {
        NumContext ctx = NumContext::make(tau);
        ctx.q_cutoff = M;
        for (int two_k = 2; two_k <= two_k_max; two_k += 2)
            for (int n = 0; n <= n_max; ++n) {
                Complex v = eichler_In_numeric(n, two_k, ctx);
                os << tau.real() << "," << tau.imag() << "," << n << ","
                   << two_k << "," << v.real() << "," << v.imag() << "\n";
            }
    }
}

}  // namespace metakzb
