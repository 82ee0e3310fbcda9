#include "metakzb/symring.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace metakzb {

SymMonomial SymMonomial::operator*(const SymMonomial& o) const {
    SymMonomial r;
    r.tau_exp = tau_exp + o.tau_exp;
    r.twopii_exp = twopii_exp + o.twopii_exp;
    r.zeta_exps = zeta_exps;
    for (const auto& [n, e] : o.zeta_exps) {
        int& slot = r.zeta_exps[n];
        slot += e;
        if (slot == 0) r.zeta_exps.erase(n);
    }
    r.ei_exps = ei_exps;
    for (const auto& [k, e] : o.ei_exps) {
        int& slot = r.ei_exps[k];
        slot += e;
        if (slot == 0) r.ei_exps.erase(k);
    }
    return r;
}

SymMonomial mono_tau(int e) { SymMonomial m; m.tau_exp = e; return m; }
SymMonomial mono_twopii(int e) { SymMonomial m; m.twopii_exp = e; return m; }
SymMonomial mono_zeta(int n, int e) {
    SymMonomial m;
    if (e != 0) m.zeta_exps[n] = e;
    return m;
}
SymMonomial mono_ei(int n, int two_k, int e) {
    SymMonomial m;
    if (e != 0) m.ei_exps[{n, two_k}] = e;
    return m;
}

void SymCoeff::add_term(const SymMonomial& m, const Rational& v) {
    if (v == 0) return;
    auto [it, inserted] = terms.emplace(m, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) terms.erase(it);
    }
}

SymCoeff& SymCoeff::operator+=(const SymCoeff& o) {
    for (const auto& [m, v] : o.terms) add_term(m, v);
    return *this;
}

SymCoeff& SymCoeff::operator-=(const SymCoeff& o) {
    for (const auto& [m, v] : o.terms) add_term(m, -v);
    return *this;
}

SymCoeff SymCoeff::operator+(const SymCoeff& o) const { SymCoeff r = *this; r += o; return r; }
SymCoeff SymCoeff::operator-(const SymCoeff& o) const { SymCoeff r = *this; r -= o; return r; }

SymCoeff SymCoeff::operator-() const {
    SymCoeff r = *this;
    for (auto& [m, v] : r.terms) v = -v;
    return r;
}

SymCoeff SymCoeff::operator*(const SymCoeff& o) const {
    SymCoeff r;
    for (const auto& [m1, v1] : terms)
        for (const auto& [m2, v2] : o.terms) r.add_term(m1 * m2, v1 * v2);
    return r;
}

SymCoeff& SymCoeff::operator*=(const SymCoeff& o) { *this = *this * o; return *this; }

SymCoeff& SymCoeff::mul_rat(const Rational& r) {
    if (r == 0) { terms.clear(); return *this; }
    for (auto& [m, v] : terms) v *= r;
    return *this;
}

Rational SymCoeff::coeff(const SymMonomial& m) const {
    auto it = terms.find(m);
    return it == terms.end() ? Rational(0) : it->second;
}

std::string SymCoeff::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, v] : terms) {
        Rational av = v < 0 ? Rational(-v) : v;
        if (first) {
            if (v < 0) os << "-";
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (av != 1) {
            os << av.get_str();
            wrote = true;
        }
        auto sep = [&] { if (wrote) os << "*"; wrote = true; };
        if (m.tau_exp != 0) {
            sep();
            os << "tau";
            if (m.tau_exp != 1) os << "^" << m.tau_exp;
        }
        if (m.twopii_exp != 0) {
            sep();
            os << "(2*pi*i)";
            if (m.twopii_exp != 1) os << "^" << m.twopii_exp;
        }
        for (const auto& [n, e] : m.zeta_exps) {
            sep();
            os << "zeta(" << n << ")";
            if (e != 1) os << "^" << e;
        }
        for (const auto& [k, e] : m.ei_exps) {
            sep();
            os << "I[" << k.first << "," << k.second << "]";
            if (e != 1) os << "^" << e;
        }
        if (!wrote) os << "1";
    }
    return os.str();
}

SymCoeff sym_rat(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return SymCoeff(r);
}

SymCoeff sym_twopii(int e, const Rational& r) { return SymCoeff(mono_twopii(e), r); }
SymCoeff sym_tau_pow(int e, const Rational& r) { return SymCoeff(mono_tau(e), r); }
SymCoeff sym_zeta(int n) { return SymCoeff(mono_zeta(n), Rational(1)); }
SymCoeff sym_ei(int n, int two_k) { return SymCoeff(mono_ei(n, two_k), Rational(1)); }

SymCoeff euler_rewrite(const SymCoeff& c) {
    SymCoeff out;
    for (const auto& [m, v] : c.terms) {
        SymMonomial nm = m;
        Rational nv = v;
        for (auto it = nm.zeta_exps.begin(); it != nm.zeta_exps.end();) {
            int n = it->first;
            int e = it->second;
            if (n % 2 == 0) {
                // zeta(n) = -B_n (2*pi*i)^n / (2 n!) for even n >= 2.
                Rational val = -bernoulli(n) / (Rational(2) * rat_factorial(n));
                val.canonicalize();
                nv *= rat_pow(val, e);
                nm.twopii_exp += n * e;
                it = nm.zeta_exps.erase(it);
            } else {
                ++it;
            }
        }
        out.add_term(nm, nv);
    }
    return out;
}

NumContext NumContext::make(const Complex& tau) {
    NumContext ctx;
    ctx.tau = tau;
    if (const char* env = std::getenv("METAB_KZB_PRECISION")) {
        int p = std::atoi(env);
        if (p > 0) ctx.precision = p < kFloatDigits ? p : kFloatDigits;
    }
    return ctx;
}

Complex eval_sym(const SymCoeff& c, const NumContext& ctx, const EiTable* ei) {
    Complex total(0);
    Complex tpi = two_pi_i();
    for (const auto& [m, v] : c.terms) {
        Complex t(rat_to_real(v));
        if (m.tau_exp != 0) t *= cpow(ctx.tau, m.tau_exp);
        if (m.twopii_exp != 0) t *= cpow(tpi, m.twopii_exp);
        for (const auto& [n, e] : m.zeta_exps) t *= cpow(Complex(zeta_real(n)), e);
        for (const auto& [k, e] : m.ei_exps) {
            if (ei == nullptr) {
                throw std::invalid_argument("eval_sym: no table for symbol I[" +
                                            std::to_string(k.first) + "," +
                                            std::to_string(k.second) + "]");
            }
            auto it = ei->find(k);
            if (it == ei->end()) {
                throw std::invalid_argument("eval_sym: missing value for symbol I[" +
                                            std::to_string(k.first) + "," +
                                            std::to_string(k.second) + "]");
            }
            t *= cpow(it->second, e);
        }
        total += t;
    }
    return total;
}

}  // namespace metakzb
