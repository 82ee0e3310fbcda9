// Command line front end: series construction, identity verification,
// Eichler integral tables, period polynomials, and the polylogarithm
// boundary check.  Exit codes: 0 pass, 1 verification failure, 2 bad input.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "metakzb/assoc.hpp"
#include "metakzb/json_io.hpp"
#include "metakzb/kzbmetab.hpp"
#include "metakzb/modular.hpp"
#include "metakzb/periods.hpp"
#include "metakzb/verify.hpp"

namespace {

using namespace metakzb;

Complex parse_tau(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("tau must be given as re,im");
    try {
        Real re(s.substr(0, comma));
        Real im(s.substr(comma + 1));
        return Complex(re, im);
    } catch (const std::exception&) {
        throw std::invalid_argument("could not parse tau '" + s + "'");
    }
}

Complex parse_tau_upper(const std::string& s) {
    Complex tau = parse_tau(s);
    if (!(tau.imag() > 0))
        throw std::invalid_argument("tau must lie in the upper half plane");
    return tau;
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream os(path);
    if (!os) throw std::invalid_argument("cannot open output file '" + path + "'");
    os << text;
    if (!text.empty() && text.back() != '\n') os << '\n';
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

std::string complex_str(const Complex& z, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << z.real() << "," << z.imag();
    return os.str();
}

std::string rational_tex(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return "\\frac{" + r.get_num().get_str() + "}{" + r.get_den().get_str() + "}";
}

void append_pow_tex(std::string& out, const std::string& base, int e) {
    if (e == 0) return;
    out += base;
    if (e != 1) out += "^{" + std::to_string(e) + "}";
    out += " ";
}

std::string sym_to_latex(const SymCoeff& c) {
    if (c.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, v] : c.terms) {
        Rational av = v < 0 ? Rational(-v) : v;
        if (first) {
            if (v < 0) out += "-";
        } else {
            out += v < 0 ? " - " : " + ";
        }
        first = false;
        std::string body;
        if (av != 1 || m.is_unit()) body += rational_tex(av) + " ";
        append_pow_tex(body, "\\tau", m.tau_exp);
        append_pow_tex(body, "(2\\pi i)", m.twopii_exp);
        for (const auto& [n, e] : m.zeta_exps)
            append_pow_tex(body, "\\zeta(" + std::to_string(n) + ")", e);
        for (const auto& [k, e] : m.ei_exps)
            append_pow_tex(body,
                           "I_{" + std::to_string(k.first) + "}(G_{" +
                               std::to_string(k.second) + "})",
                           e);
        while (!body.empty() && body.back() == ' ') body.pop_back();
        out += body;
    }
    return out;
}

// The series subcommand keeps coefficients in the internal variable
// u = U/(2*pi*i); every renderer labels it.

std::string series_text(const MetabElem& e) {
    std::ostringstream os;
    os << "depth-one variable u = U/(2*pi*i)\n";
    os << "a: " << e.alpha.to_string() << "\n";
    os << "b: " << e.beta.to_string() << "\n";
    for (const auto& [k, c] : e.depth1.terms())
        os << "u^" << k.first << " v^" << k.second << ": " << c.to_string() << "\n";
    return os.str();
}

std::string series_csv(const MetabElem& e) {
    std::ostringstream os;
    os << "part,u,v,coeff\n";
    os << "a,," << "," << csv_quote(e.alpha.to_string()) << "\n";
    os << "b,," << "," << csv_quote(e.beta.to_string()) << "\n";
    for (const auto& [k, c] : e.depth1.terms())
        os << "depth1," << k.first << "," << k.second << ","
           << csv_quote(c.to_string()) << "\n";
    return os.str();
}

std::string series_latex(const MetabElem& e) {
    std::ostringstream os;
    os << "\\left(" << sym_to_latex(e.alpha) << "\\right) a + \\left("
       << sym_to_latex(e.beta) << "\\right) b";
    for (const auto& [k, c] : e.depth1.terms()) {
        os << " + \\left(" << sym_to_latex(c) << "\\right)";
        std::string mono;
        append_pow_tex(mono, "\\bar{U}", k.first);
        append_pow_tex(mono, "V", k.second);
        while (!mono.empty() && mono.back() == ' ') mono.pop_back();
        if (!mono.empty()) os << " " << mono;
    }
    return os.str();
}

std::string series_numeric_text(const MetabElem& e, const NumContext& ctx,
                                const EiTable* ei) {
    std::ostringstream os;
    os << "depth-one variable u = U/(2*pi*i)\n";
    os << "a: " << complex_str(eval_sym(e.alpha, ctx, ei), ctx.precision) << "\n";
    os << "b: " << complex_str(eval_sym(e.beta, ctx, ei), ctx.precision) << "\n";
    for (const auto& [k, c] : e.depth1.terms())
        os << "u^" << k.first << " v^" << k.second << ": "
           << complex_str(eval_sym(c, ctx, ei), ctx.precision) << "\n";
    return os.str();
}

std::string series_numeric_csv(const MetabElem& e, const NumContext& ctx,
                               const EiTable* ei) {
    std::ostringstream os;
    os << "part,u,v,re,im\n" << std::setprecision(ctx.precision);
    Complex al = eval_sym(e.alpha, ctx, ei);
    Complex be = eval_sym(e.beta, ctx, ei);
    os << "a,,," << al.real() << "," << al.imag() << "\n";
    os << "b,,," << be.real() << "," << be.imag() << "\n";
    for (const auto& [k, c] : e.depth1.terms()) {
        Complex z = eval_sym(c, ctx, ei);
        os << "depth1," << k.first << "," << k.second << "," << z.real() << ","
           << z.imag() << "\n";
    }
    return os.str();
}

Json series_numeric_json(const MetabElem& e, const NumContext& ctx,
                         const EiTable* ei) {
    auto num = [&](const SymCoeff& c) {
        Complex z = eval_sym(c, ctx, ei);
        return Json{{"re", static_cast<double>(z.real())},
                    {"im", static_cast<double>(z.imag())}};
    };
    Json d1 = Json::array();
    for (const auto& [k, c] : e.depth1.terms()) {
        Json row = num(c);
        row["u"] = k.first;
        row["v"] = k.second;
        d1.push_back(row);
    }
    return Json{{"convention", "ubar"},
                {"trunc", e.trunc},
                {"alpha", num(e.alpha)},
                {"beta", num(e.beta)},
                {"depth1", d1}};
}

struct SeriesConfig {
    std::string side;
    int N = 12;
    bool numeric = false;
    std::string tau;
    int q_cutoff = 64;
    double tolerance = 1e-9;
    std::string format = "text";
    std::string output;
};

int cmd_series(const SeriesConfig& cfg) {
    MetabElem e(0);
    bool needs_ei = false;
    if (cfg.side == "Ainf") {
        e = a_inf_closed(cfg.N);
    } else if (cfg.side == "Binf") {
        e = b_inf_closed(cfg.N);
    } else {
        e = tau_series_closed(cfg.side == "Atau" ? Side::A : Side::B, cfg.N);
        needs_ei = true;
    }

    if (!cfg.numeric) {
        if (cfg.format == "json") {
            write_out(cfg.output, metab_to_json(e).dump(2));
        } else if (cfg.format == "csv") {
            write_out(cfg.output, series_csv(e));
        } else if (cfg.format == "latex") {
            write_out(cfg.output, series_latex(e));
        } else {
            write_out(cfg.output, series_text(e));
        }
        return 0;
    }

    if (cfg.tau.empty())
        throw std::invalid_argument("--numeric requires --tau re,im");
    NumContext ctx = NumContext::make(parse_tau_upper(cfg.tau));
    ctx.q_cutoff = cfg.q_cutoff;
    ctx.quad_tol = cfg.tolerance;
    EiTable ei;
    if (needs_ei)
        ei = make_ei_table(std::max(0, cfg.N - 3), std::max(2, cfg.N - 1), ctx);
    const EiTable* eip = needs_ei ? &ei : nullptr;

    if (cfg.format == "json") {
        write_out(cfg.output, series_numeric_json(e, ctx, eip).dump(2));
    } else if (cfg.format == "csv") {
        write_out(cfg.output, series_numeric_csv(e, ctx, eip));
    } else {
        write_out(cfg.output, series_numeric_text(e, ctx, eip));
    }
    return 0;
}

struct VerifyConfig {
    int N = 12;
    std::string tau;
    int q_cutoff = 64;
    double tolerance = 1e-9;
    std::string format = "text";
    std::string output;
    bool inject_sign_flip = false;
};

int cmd_verify(const VerifyConfig& cfg) {
    if (cfg.N < 3) throw std::invalid_argument("verify needs N >= 3");
    VerifyOptions opts;
    opts.N = cfg.N;
    opts.q_cutoff = cfg.q_cutoff;
    opts.tol = cfg.tolerance;
    opts.inject_sign_flip = cfg.inject_sign_flip;
    if (!cfg.tau.empty()) {
        opts.numeric = true;
        opts.tau = parse_tau_upper(cfg.tau);
    }
    auto results = run_verify(opts);
    if (cfg.format == "json") {
        write_out(cfg.output, verify_report_json(results).dump(2));
    } else {
        std::ostringstream os;
        for (const auto& r : results) {
            os << (r.pass ? "PASS " : "FAIL ") << r.name;
            if (!r.detail.empty()) os << ": " << r.detail;
            os << "\n";
        }
        os << (all_pass(results) ? "all identities pass" : "FAILURES present")
           << "\n";
        write_out(cfg.output, os.str());
    }
    return all_pass(results) ? 0 : 1;
}

struct EvalConfig {
    std::string tau;
    std::string table = "eichler";
    int n_max = 6;
    int two_k_max = 12;
    int q_cutoff = 64;
    std::string format = "csv";
    std::string output;
};

int cmd_eval(const EvalConfig& cfg) {
    Complex tau = parse_tau_upper(cfg.tau);
    if (cfg.n_max < 0 || cfg.two_k_max < 2 || cfg.two_k_max % 2 != 0)
        throw std::invalid_argument("need -n >= 0 and even -k >= 2");
    if (cfg.format == "csv") {
        std::ostringstream os;
        emit_eichler_csv(os, {tau}, cfg.n_max, cfg.two_k_max, cfg.q_cutoff);
        write_out(cfg.output, os.str());
        return 0;
    }
    NumContext ctx = NumContext::make(tau);
    ctx.q_cutoff = cfg.q_cutoff;
    EiTable table = make_ei_table(cfg.n_max, cfg.two_k_max, ctx);
    Json rows = Json::array();
    for (const auto& [key, z] : table)
        rows.push_back(Json{{"n", key.first},
                            {"2k", key.second},
                            {"re", static_cast<double>(z.real())},
                            {"im", static_cast<double>(z.imag())}});
    Json out{{"tau_re", static_cast<double>(tau.real())},
             {"tau_im", static_cast<double>(tau.imag())},
             {"q_cutoff", cfg.q_cutoff},
             {"values", rows}};
    write_out(cfg.output, out.dump(2));
    return 0;
}

struct PeriodsConfig {
    int weight = 0;
    std::string format = "text";
    std::string output;
};

int cmd_periods(const PeriodsConfig& cfg) {
    if (cfg.weight < 4 || cfg.weight % 2 != 0)
        throw std::invalid_argument("--weight must be an even integer >= 4");
    PeriodPolynomial p = period_poly_direct(cfg.weight);
    if (cfg.format == "json") {
        Json terms = Json::array();
        for (const auto& [k, c] : p.coeffs.terms())
            terms.push_back(
                Json{{"x", k.first}, {"y", k.second}, {"coeff", sym_to_json(c)}});
        write_out(cfg.output, Json{{"weight", p.weight}, {"terms", terms}}.dump(2));
    } else if (cfg.format == "latex") {
        write_out(cfg.output, period_poly_to_latex(p));
    } else {
        std::ostringstream os;
        os << "r_{G_" << cfg.weight << "} = " << p.coeffs.to_string("X", "Y")
           << "\n";
        write_out(cfg.output, os.str());
    }
    return 0;
}

struct PolylogConfig {
    std::string tau;
    int degree = 10;
    int q_cutoff = 64;
    std::string format = "text";
    std::string output;
};

int cmd_polylog(const PolylogConfig& cfg) {
    if (cfg.degree < 2) throw std::invalid_argument("--degree must be >= 2");
    NumContext ctx = NumContext::make(parse_tau_upper(cfg.tau));
    ctx.q_cutoff = cfg.q_cutoff;
    Cor56Report rep = corollary56_check(ctx, cfg.degree);
    if (cfg.format == "json") {
        Json out{{"pass", rep.pass},
                 {"depth0_clean", rep.depth0_clean},
                 {"beta_matches", rep.beta_matches},
                 {"division_exact", rep.division_exact},
                 {"sectors_symbolic_equal", rep.sectors_symbolic_equal},
                 {"laurent_match", rep.laurent_match},
                 {"odd_sector_identity", rep.odd_sector_identity},
                 {"worst_rel_error", rep.worst_rel_error},
                 {"worst_label", rep.worst_label},
                 {"notes", rep.notes}};
        write_out(cfg.output, out.dump(2));
    } else {
        std::ostringstream os;
        auto line = [&](const char* label, bool ok) {
            os << label << ": " << (ok ? "yes" : "NO") << "\n";
        };
        line("depth-0 term cancels", rep.depth0_clean);
        line("b-coefficient is 2*pi*i*tau", rep.beta_matches);
        line("division by u + tau*v exact", rep.division_exact);
        line("operator sum equals binomial sum", rep.sectors_symbolic_equal);
        line("Laurent sector matches", rep.laurent_match);
        line("odd sector identity", rep.odd_sector_identity);
        os << "worst relative error: " << std::setprecision(3)
           << rep.worst_rel_error;
        if (!rep.worst_label.empty()) os << " (" << rep.worst_label << ")";
        os << "\n";
        for (const auto& n : rep.notes) os << "note: " << n << "\n";
        os << (rep.pass ? "PASS" : "FAIL") << " at tolerance 1e-8\n";
        write_out(cfg.output, os.str());
    }
    return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"meta-abelian elliptic associator toolkit"};
    app.require_subcommand(1);

    SeriesConfig sc;
    auto* series = app.add_subcommand("series", "print a meta-abelian series");
    series->add_option("side", sc.side, "Ainf|Binf|Atau|Btau")
        ->required()
        ->check(CLI::IsMember({"Ainf", "Binf", "Atau", "Btau"}));
    series->add_option("-N,--trunc", sc.N, "weight truncation")
        ->check(CLI::Range(2, 30));
    series->add_flag("--numeric", sc.numeric, "evaluate coefficients at tau");
    series->add_option("--tau", sc.tau, "tau as re,im");
    series->add_option("-M,--q-cutoff", sc.q_cutoff, "q-expansion cutoff");
    series->add_option("--tolerance", sc.tolerance, "numeric tolerance");
    series->add_option("--format", sc.format, "text|json|csv|latex")
        ->check(CLI::IsMember({"text", "json", "csv", "latex"}));
    series->add_option("-o,--output", sc.output, "write to file");

    VerifyConfig vc;
    auto* verify = app.add_subcommand("verify", "run the identity battery");
    verify->add_option("-N,--trunc", vc.N, "weight truncation")
        ->check(CLI::Range(3, 30));
    verify->add_option("--tau", vc.tau, "tau as re,im; enables numeric checks");
    verify->add_option("-M,--q-cutoff", vc.q_cutoff, "q-expansion cutoff");
    verify->add_option("--tolerance", vc.tolerance, "numeric tolerance");
    verify->add_option("--format", vc.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("-o,--output", vc.output, "write to file");
    verify->add_flag("--inject-sign-flip", vc.inject_sign_flip)->group("");

    EvalConfig ec;
    auto* eval = app.add_subcommand("eval", "tabulate Eichler integrals");
    eval->add_option("--tau", ec.tau, "tau as re,im")->required();
    eval->add_option("--table", ec.table, "table name")
        ->check(CLI::IsMember({"eichler"}));
    eval->add_option("-n", ec.n_max, "largest integration order n");
    eval->add_option("-k", ec.two_k_max, "largest Eisenstein weight 2k");
    eval->add_option("-M,--q-cutoff", ec.q_cutoff, "q-expansion cutoff");
    eval->add_option("--format", ec.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    eval->add_option("-o,--output", ec.output, "write to file");

    PeriodsConfig pc;
    auto* periods = app.add_subcommand("periods", "print a period polynomial");
    periods->add_option("--weight", pc.weight, "even weight >= 4")->required();
    periods->add_option("--format", pc.format, "text|json|latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    periods->add_option("-o,--output", pc.output, "write to file");

    PolylogConfig lc;
    auto* polylog =
        app.add_subcommand("polylog", "boundary comparison of both routes");
    polylog->add_option("--tau", lc.tau, "tau as re,im")->required();
    polylog->add_option("-D,--degree", lc.degree, "largest depth-one degree");
    polylog->add_option("-M,--q-cutoff", lc.q_cutoff, "q-expansion cutoff");
    polylog->add_option("--format", lc.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    polylog->add_option("-o,--output", lc.output, "write to file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (series->parsed()) return cmd_series(sc);
        if (verify->parsed()) return cmd_verify(vc);
        if (eval->parsed()) return cmd_eval(ec);
        if (periods->parsed()) return cmd_periods(pc);
        if (polylog->parsed()) return cmd_polylog(lc);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
