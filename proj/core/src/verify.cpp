#include "metakzb/verify.hpp"

#include <sstream>

#include "metakzb/assoc.hpp"
#include "metakzb/kzbmetab.hpp"
#include "metakzb/metab.hpp"
#include "metakzb/modular.hpp"
#include "metakzb/periods.hpp"

namespace metakzb {

namespace {

std::string bipoly_mismatch(const BiPoly& x, const BiPoly& y) {
    for (const auto& [k, c] : x.terms())
        if (!(y.coeff(k.first, k.second) == c)) {
            std::ostringstream os;
            os << "u^" << k.first << " v^" << k.second;
            return os.str();
        }
    for (const auto& [k, c] : y.terms())
        if (x.coeff(k.first, k.second).is_zero()) {
            std::ostringstream os;
            os << "u^" << k.first << " v^" << k.second;
            return os.str();
        }
    return {};
}

std::string metab_mismatch(const MetabElem& x, const MetabElem& y) {
    if (!(x.alpha == y.alpha)) return "a";
    if (!(x.beta == y.beta)) return "b";
    return bipoly_mismatch(x.depth1, y.depth1);
}

IdentityResult compare_metab(const std::string& name, const MetabElem& x,
                             const MetabElem& y) {
    IdentityResult r;
    r.name = name;
    r.detail = metab_mismatch(x, y);
    r.pass = r.detail.empty();
    return r;
}

IdentityResult compare_bipoly(const std::string& name, const BiPoly& x,
                              const BiPoly& y) {
    IdentityResult r;
    r.name = name;
    r.detail = bipoly_mismatch(x, y);
    r.pass = r.detail.empty();
    return r;
}

}  // namespace

std::vector<IdentityResult> run_verify(const VerifyOptions& opts) {
    std::vector<IdentityResult> out;
    const int N = opts.N;

    MetabElem a_free = a_inf_free(N);
    MetabElem b_free = b_inf_free(N);
    MetabElem a_closed = a_inf_closed(N);
    MetabElem b_closed = b_inf_closed(N);
    out.push_back(compare_metab("arith_A_free_vs_closed", euler_rewrite(a_free),
                                euler_rewrite(a_closed)));
    out.push_back(compare_metab("arith_B_free_vs_closed", euler_rewrite(b_free),
                                euler_rewrite(b_closed)));

    MetabElem op_a = tau_series_operator(Side::A, N);
    MetabElem op_b = tau_series_operator(Side::B, N);
    MetabElem cl_a = tau_series_closed(Side::A, N);
    MetabElem cl_b = tau_series_closed(Side::B, N);
    if (opts.inject_sign_flip) cl_a.depth1.scale(SymCoeff(-1));
    out.push_back(compare_metab("main_A_operator_vs_closed", op_a, cl_a));
    out.push_back(compare_metab("main_B_operator_vs_closed", op_b, cl_b));

    GOperator g = build_g(N);
    MetabElem ga = apply_g(g, metab_letter('a', N - 2));
    MetabElem gb = apply_g(g, metab_letter('b', N - 2));
    out.push_back(
        compare_metab("geom_a_operator_vs_closed", ga, g_closed('a', N)));
    {
        IdentityResult r =
            compare_metab("geom_b_operator_vs_closed", gb, g_closed('b', N));
        out.push_back(r);
        MetabElem printed(N - 2);
        printed.beta = sym_twopii(1);
        printed.depth1 = eichler_sum(N)
                             .shifted(0, 1, sym_twopii(1, Rational(-1)))
                             .truncated(N - 2);
        MetabElem scaled = gb;
        scaled.scale(sym_twopii(1));
        IdentityResult f = compare_metab("geom_b_operator_vs_printed_factor",
                                         scaled, printed);
        if (f.pass)
            f.detail =
                "printed form equals 2 pi i times the operator result, "
                "uniformly over all monomials";
        out.push_back(f);
    }

    out.push_back(compare_metab("tangential_simplification_A",
                                tau_series_simplified_a(N),
                                tau_series_closed(Side::A, N)));

    for (int two_k = 4; two_k <= 12; two_k += 2) {
        std::ostringstream name;
        name << "period_poly_2k" << two_k;
        int n_local = two_k + 1 > N ? two_k + 1 : N;
        out.push_back(compare_bipoly(
            name.str(), period_poly_via_assoc(two_k, n_local).coeffs,
            period_poly_direct(two_k).coeffs));
    }

    {
        IdentityResult r;
        r.name = "depth_zero_A";
        r.pass = op_a.alpha.is_zero() && op_a.beta == sym_twopii(1) &&
                 cl_a.alpha.is_zero() && cl_a.beta == sym_twopii(1);
        if (!r.pass) r.detail = "depth-0 part is not 2 pi i b";
        out.push_back(r);
        IdentityResult s;
        s.name = "depth_zero_B";
        SymCoeff expected_beta = sym_twopii(1) * sym_tau_pow(1);
        s.pass = op_b.alpha == SymCoeff(1) && op_b.beta == expected_beta &&
                 cl_b.alpha == SymCoeff(1) && cl_b.beta == expected_beta;
        if (!s.pass) s.detail = "depth-0 part is not a + 2 pi i tau b";
        out.push_back(s);
    }

    if (opts.numeric) {
        NumContext ctx = NumContext::make(opts.tau);
        ctx.q_cutoff = opts.q_cutoff;
        ctx.quad_tol = opts.tol;

        {
            IdentityResult r;
            r.name = "eichler_termwise_vs_quadrature";
            r.pass = true;
            for (int two_k : {4, 8, 12}) {
                for (int n : {0, 2, 5}) {
                    Complex t = eichler_In_numeric(n, two_k, ctx);
                    Complex q = eichler_In_quadrature(n, two_k, ctx);
                    Real scale = abs(t);
                    if (scale < 1) scale = 1;
                    if (abs(t - q) > Real("1e-9") * scale) {
                        r.pass = false;
                        std::ostringstream os;
                        os << "I[" << n << "," << two_k << "]";
                        r.detail = os.str();
                    }
                }
            }
            out.push_back(r);
        }
        {
            IdentityResult r;
            r.name = "eichler_weighted_path_consistency";
            r.pass = true;
            for (int two_k : {4, 6}) {
                for (int n : {1, 2, 3}) {
                    Complex lhs = ctx.tau * eichler_In_numeric(n - 1, two_k, ctx) -
                                  eichler_In_numeric(n, two_k, ctx);
                    Complex rhs = eichler_eqn3_quadrature(n, two_k, ctx);
                    Real scale = abs(lhs);
                    if (scale < 1) scale = 1;
                    if (abs(lhs - rhs) > Real("1e-8") * scale) {
                        r.pass = false;
                        std::ostringstream os;
                        os << "n=" << n << ", 2k=" << two_k;
                        r.detail = os.str();
                    }
                }
            }
            out.push_back(r);
        }
        {
            IdentityResult r;
            r.name = "iter_eis_shuffle";
            r.pass = shuffle_check(1, 4, ctx) && shuffle_check(2, 6, ctx) &&
                     shuffle_check(3, 8, ctx) && shuffle_check(1, 2, ctx);
            if (!r.pass) r.detail = "shuffle identity failed at ctx.tau";
            out.push_back(r);
        }
        {
            Cor56Report rep = corollary56_check(ctx, 10);
            IdentityResult r;
            r.name = "polylog_special_value";
            r.pass = rep.pass;
            std::ostringstream os;
            os << "worst relative error " << rep.worst_rel_error << " at "
               << rep.worst_label;
            r.detail = os.str();
            out.push_back(r);
        }
    }

    return out;
}

bool all_pass(const std::vector<IdentityResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

Json verify_report_json(const std::vector<IdentityResult>& results) {
    Json arr = Json::array();
    for (const auto& r : results) {
        Json j;
        j["identity"] = r.name;
        j["status"] = r.pass ? "pass" : "fail";
        if (!r.detail.empty()) {
            if (r.pass)
                j["note"] = r.detail;
            else
                j["first_discrepant_monomial"] = r.detail;
        }
        arr.push_back(std::move(j));
    }
    return arr;
}

}  // namespace metakzb
