#include "metakzb/metab.hpp"

#include <cstdint>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace metakzb {

void BiPoly::add(int ue, int ve, const SymCoeff& c) {
    if (c.is_zero()) return;
    Key k{ue, ve};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymCoeff BiPoly::coeff(int ue, int ve) const {
    auto it = terms_.find({ue, ve});
    return it == terms_.end() ? SymCoeff{} : it->second;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
    return *this;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r = *this;
    r += o;
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    BiPoly r = *this;
    r -= o;
    return r;
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

BiPoly& BiPoly::scale(const SymCoeff& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v = v * c;
    return *this;
}

BiPoly BiPoly::shifted(int ue, int ve, const SymCoeff& c) const {
    BiPoly r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.add(k.first + ue, k.second + ve, v * c);
    return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r;
    for (const auto& [k, v] : terms_)
        for (const auto& [k2, v2] : o.terms_)
            r.add(k.first + k2.first, k.second + k2.second, v * v2);
    return r;
}

BiPoly BiPoly::d_du() const {
    BiPoly r;
    for (const auto& [k, v] : terms_) {
        if (k.first == 0) continue;
        SymCoeff c = v;
        c.mul_rat(Rational(k.first));
        r.add(k.first - 1, k.second, c);
    }
    return r;
}

BiPoly BiPoly::truncated(int max_total) const {
    BiPoly r;
    for (const auto& [k, v] : terms_)
        if (k.first + k.second <= max_total) r.add(k.first, k.second, v);
    return r;
}

BiPoly BiPoly::homogeneous_part(int total) const {
    BiPoly r;
    for (const auto& [k, v] : terms_)
        if (k.first + k.second == total) r.add(k.first, k.second, v);
    return r;
}

BiPoly BiPoly::swapped() const {
    BiPoly r;
    for (const auto& [k, v] : terms_) r.add(k.second, k.first, v);
    return r;
}

Complex BiPoly::eval(const Complex& u, const Complex& v, const NumContext& ctx,
                     const EiTable* ei) const {
    Complex s = 0;
    for (const auto& [k, c] : terms_)
        s += eval_sym(c, ctx, ei) * cpow(u, k.first) * cpow(v, k.second);
    return s;
}

std::string BiPoly::to_string(const char* uname, const char* vname) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (k.first != 0) os << "*" << uname << "^" << k.first;
        if (k.second != 0) os << "*" << vname << "^" << k.second;
    }
    return os.str();
}

BiPoly bipoly_monomial(int ue, int ve, const SymCoeff& c) {
    BiPoly r;
    r.add(ue, ve, c);
    return r;
}

void MetabElem::add_depth1(int ue, int ve, const SymCoeff& c) {
    if (ue < 0 || ve < 0)
        throw std::invalid_argument("MetabElem: negative exponent");
    if (ue + ve > trunc) return;
    depth1.add(ue, ve, c);
}

bool MetabElem::is_zero() const {
    return alpha.is_zero() && beta.is_zero() && depth1.is_zero();
}

bool MetabElem::operator==(const MetabElem& o) const {
    return alpha == o.alpha && beta == o.beta && depth1 == o.depth1;
}

MetabElem& MetabElem::operator+=(const MetabElem& o) {
    alpha += o.alpha;
    beta += o.beta;
    depth1 += o.depth1;
    return *this;
}

MetabElem& MetabElem::operator-=(const MetabElem& o) {
    alpha -= o.alpha;
    beta -= o.beta;
    depth1 -= o.depth1;
    return *this;
}

MetabElem MetabElem::operator+(const MetabElem& o) const {
    MetabElem r = *this;
    r += o;
    return r;
}

MetabElem MetabElem::operator-(const MetabElem& o) const {
    MetabElem r = *this;
    r -= o;
    return r;
}

MetabElem MetabElem::operator-() const {
    MetabElem r = *this;
    r.alpha = -r.alpha;
    r.beta = -r.beta;
    r.depth1 = -r.depth1;
    return r;
}

MetabElem& MetabElem::scale(const SymCoeff& c) {
    alpha = alpha * c;
    beta = beta * c;
    depth1.scale(c);
    return *this;
}

std::string MetabElem::to_string() const {
    std::ostringstream os;
    os << "(" << alpha.to_string() << ")*a + (" << beta.to_string() << ")*b + "
       << depth1.to_string();
    return os.str();
}

MetabElem metab_letter(char c, int trunc) {
    MetabElem r(trunc);
    if (c == 'a')
        r.alpha = SymCoeff(1);
    else
        r.beta = SymCoeff(1);
    return r;
}

MetabElem bracket_metab(const MetabElem& x, const MetabElem& y) {
    if (x.trunc != y.trunc)
        throw std::invalid_argument("bracket_metab: truncation mismatch");
    MetabElem r(x.trunc);
    SymCoeff c00 = x.alpha * y.beta - x.beta * y.alpha;
    if (!c00.is_zero()) r.add_depth1(0, 0, c00);
    auto act = [&](const SymCoeff& al, const SymCoeff& be, const BiPoly& p,
                   const Rational& sign) {
        SymCoeff cu = al * sym_twopii(1);
        cu.mul_rat(sign);
        SymCoeff cv = be;
        cv.mul_rat(sign);
        BiPoly moved = p.shifted(1, 0, cu) + p.shifted(0, 1, cv);
        r.depth1 += moved.truncated(r.trunc);
    };
    act(x.alpha, x.beta, y.depth1, Rational(1));
    act(y.alpha, y.beta, x.depth1, Rational(-1));
    return r;
}

namespace {

// Metabelian image of the left-normed bracketing of one word, computed by a
// left fold with bracket_metab. Homogeneous: a weight-w word yields total
// degree w - 2, so no truncation is lost at trunc = w - 2.
const BiPoly& bracketing_image(Word word, int w) {
    static std::unordered_map<std::uint64_t, BiPoly> cache;
    static std::mutex mu;
    std::uint64_t key = (std::uint64_t(w) << 32) | word;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    int trunc = w - 2;
    MetabElem state = metab_letter(word_letter(word, 0) ? 'b' : 'a', trunc);
    for (int p = 1; p < w; ++p) {
        MetabElem letter = metab_letter(word_letter(word, p) ? 'b' : 'a', trunc);
        state = bracket_metab(state, letter);
    }
    return cache.emplace(key, std::move(state.depth1)).first->second;
}

}  // namespace

MetabElem project(const NcSeries& x) {
    if (!x.weight(0).empty())
        throw std::invalid_argument("project: nonzero constant term");
    int trunc = x.trunc() >= 2 ? x.trunc() - 2 : 0;
    MetabElem r(trunc);
    r.alpha = x.coeff(1, 0u);
    r.beta = x.coeff(1, 1u);
    for (int w = 2; w <= x.trunc(); ++w) {
        Rational inv_w = Rational(1) / w;
        for (const auto& [word, c] : x.weight(w)) {
            SymCoeff scaled = c;
            scaled.mul_rat(inv_w);
            for (const auto& [k, v] : bracketing_image(word, w).terms())
                r.add_depth1(k.first, k.second, v * scaled);
        }
    }
    return r;
}

MetabElem eps_metab(int two_k, const MetabElem& x) {
    if (two_k < 0 || two_k % 2 != 0)
        throw std::invalid_argument("eps_metab: index must be even and >= 0");
    MetabElem r(x.trunc);
    if (two_k == 0) {
        r.beta = -x.alpha;
        r.depth1 = x.depth1.d_du().shifted(0, 1, sym_twopii(-1, Rational(-1)));
        return r;
    }
    Rational pref = Rational(2) * rat_inv_factorial(two_k - 2);
    if (!x.alpha.is_zero())
        r.add_depth1(two_k - 1, 0, x.alpha * sym_twopii(two_k - 1, pref));
    if (!x.beta.is_zero())
        r.add_depth1(two_k - 2, 1, x.beta * sym_twopii(two_k - 2, pref));
    return r;
}

BiPoly u_convention(const BiPoly& p, bool to_internal) {
    BiPoly r;
    for (const auto& [k, c] : p.terms())
        r.add(k.first, k.second,
              c * sym_twopii(to_internal ? k.first : -k.first));
    return r;
}

BiPoly euler_rewrite(const BiPoly& p) {
    BiPoly r;
    for (const auto& [k, c] : p.terms())
        r.add(k.first, k.second, euler_rewrite(c));
    return r;
}

MetabElem euler_rewrite(const MetabElem& e) {
    MetabElem r(e.trunc);
    r.alpha = euler_rewrite(e.alpha);
    r.beta = euler_rewrite(e.beta);
    r.depth1 = euler_rewrite(e.depth1);
    return r;
}

BiPoly exp_shear(const BiPoly& p) {
    BiPoly r;
    for (const auto& [k, c] : p.terms()) {
        if (k.first < 0)
            throw std::invalid_argument("exp_shear: negative exponent");
        for (int m = 0; m <= k.first; ++m) {
            Rational binom(binomial_int(k.first, m));
            r.add(k.first - m, k.second + m, c * sym_tau_pow(m, binom));
        }
    }
    return r;
}

}  // namespace metakzb
