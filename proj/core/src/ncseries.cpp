#include "metakzb/ncseries.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace metakzb {

std::string word_to_string(Word w, int len) {
    std::string s;
    s.reserve(len);
    for (int i = 0; i < len; ++i) s.push_back(word_letter(w, i) ? 'b' : 'a');
    return s;
}

NcSeries::NcSeries(int trunc) : trunc_(trunc), comp_(trunc + 1) {
    if (trunc < 0 || trunc > kMaxWeight)
        throw std::invalid_argument("NcSeries: truncation out of range");
}

void NcSeries::add(int w, Word word, const SymCoeff& v) {
    if (w < 0 || w > trunc_) return;
    if (v.is_zero()) return;
    auto& m = comp_[w];
    auto it = m.find(word);
    if (it == m.end()) {
        m.emplace(word, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) m.erase(it);
    }
}

SymCoeff NcSeries::coeff(int w, Word word) const {
    if (w < 0 || w > trunc_) return SymCoeff{};
    auto it = comp_[w].find(word);
    return it == comp_[w].end() ? SymCoeff{} : it->second;
}

bool NcSeries::is_zero() const {
    for (const auto& m : comp_)
        if (!m.empty()) return false;
    return true;
}

int NcSeries::top_weight() const {
    for (int w = trunc_; w >= 0; --w)
        if (!comp_[w].empty()) return w;
    return -1;
}

int NcSeries::min_weight() const {
    for (int w = 0; w <= trunc_; ++w)
        if (!comp_[w].empty()) return w;
    return trunc_ + 1;
}

void NcSeries::check_compatible(const NcSeries& o) const {
    if (trunc_ != o.trunc_)
        throw std::invalid_argument("NcSeries: truncation mismatch");
}

NcSeries& NcSeries::operator+=(const NcSeries& o) {
    check_compatible(o);
    for (int w = 0; w <= trunc_; ++w)
        for (const auto& [word, c] : o.comp_[w]) add(w, word, c);
    return *this;
}

NcSeries& NcSeries::operator-=(const NcSeries& o) {
    check_compatible(o);
    for (int w = 0; w <= trunc_; ++w)
        for (const auto& [word, c] : o.comp_[w]) add(w, word, -c);
    return *this;
}

NcSeries NcSeries::operator+(const NcSeries& o) const {
    NcSeries r = *this;
    r += o;
    return r;
}

NcSeries NcSeries::operator-(const NcSeries& o) const {
    NcSeries r = *this;
    r -= o;
    return r;
}

NcSeries NcSeries::operator-() const {
    NcSeries r = *this;
    for (auto& m : r.comp_)
        for (auto& [word, c] : m) c = -c;
    return r;
}

NcSeries& NcSeries::scale(const SymCoeff& c) {
    if (c.is_zero()) {
        for (auto& m : comp_) m.clear();
        return *this;
    }
    for (auto& m : comp_)
        for (auto& [word, v] : m) v = v * c;
    return *this;
}

NcSeries& NcSeries::scale_rat(const Rational& r) {
    return scale(SymCoeff(r));
}

std::string NcSeries::to_string() const {
    std::ostringstream os;
    bool any = false;
    for (int w = 0; w <= trunc_; ++w) {
        for (const auto& [word, c] : comp_[w]) {
            if (any) os << "\n";
            any = true;
            os << (w == 0 ? std::string("1") : word_to_string(word, w)) << ": "
               << c.to_string();
        }
    }
    if (!any) os << "0";
    return os.str();
}

NcSeries NcSeries::zero(int trunc) { return NcSeries(trunc); }

NcSeries NcSeries::one(int trunc) {
    NcSeries r(trunc);
    r.add(0, 0, SymCoeff(1));
    return r;
}

NcSeries NcSeries::letter(char c, int trunc) {
    NcSeries r(trunc);
    r.add(1, c == 'b' ? 1u : 0u, SymCoeff(1));
    return r;
}

NcSeries mul(const NcSeries& x, const NcSeries& y) {
    if (x.trunc() != y.trunc())
        throw std::invalid_argument("NcSeries: truncation mismatch");
    const int N = x.trunc();
    NcSeries r(N);
    for (int w1 = 0; w1 <= N; ++w1) {
        const auto& m1 = x.weight(w1);
        if (m1.empty()) continue;
        for (int w2 = 0; w1 + w2 <= N; ++w2) {
            const auto& m2 = y.weight(w2);
            if (m2.empty()) continue;
            for (const auto& [u, cu] : m1)
                for (const auto& [v, cv] : m2)
                    r.add(w1 + w2, word_concat(u, w1, v), cu * cv);
        }
    }
    return r;
}

NcSeries bracket(const NcSeries& x, const NcSeries& y) {
    return mul(x, y) - mul(y, x);
}

NcSeries ad_pow(const NcSeries& x, int k, const NcSeries& y) {
    NcSeries r = y;
    for (int i = 0; i < k; ++i) r = bracket(x, r);
    return r;
}

NcSeries exp_series(const NcSeries& x) {
    if (!x.weight(0).empty())
        throw std::invalid_argument("exp_series: nonzero constant term");
    const int N = x.trunc();
    NcSeries r = NcSeries::one(N);
    const int m = x.min_weight();
    if (m > N) return r;
    NcSeries pow = x;
    Rational inv_fact(1);
    for (int n = 1; n * m <= N; ++n) {
        inv_fact /= n;
        NcSeries term = pow;
        term.scale_rat(inv_fact);
        r += term;
        if ((n + 1) * m <= N) pow = mul(pow, x);
    }
    return r;
}

NcSeries log_series(const NcSeries& x) {
    if (!(x.coeff(0, 0) == SymCoeff(1)))
        throw std::invalid_argument("log_series: constant term is not 1");
    const int N = x.trunc();
    NcSeries y = x;
    y.add(0, 0, SymCoeff(-1));
    NcSeries r(N);
    const int m = y.min_weight();
    if (m > N) return r;
    NcSeries pow = y;
    Rational sign(1);
    for (int n = 1; n * m <= N; ++n) {
        NcSeries term = pow;
        term.scale_rat(sign / n);
        r += term;
        sign = -sign;
        if ((n + 1) * m <= N) pow = mul(pow, y);
    }
    return r;
}

NcSeries iota(Gen g, int trunc) {
    NcSeries a = NcSeries::letter('a', trunc);
    NcSeries b = NcSeries::letter('b', trunc);
    switch (g) {
        case Gen::x1:
            return bracket(a, b);
        case Gen::x0: {
            NcSeries r(trunc);
            NcSeries adk = b;
            for (int k = 0; k + 1 <= trunc; ++k) {
                NcSeries term = adk;
                term.scale_rat(bernoulli(k) * rat_inv_factorial(k));
                r += term;
                adk = bracket(a, adk);
            }
            return r;
        }
        case Gen::xinf:
            return -(iota(Gen::x0, trunc) + iota(Gen::x1, trunc));
    }
    throw std::logic_error("iota: bad generator");
}

namespace {

// Images of the letters under eps_{2k}; weight 1 maps to weight 2k+1.
std::pair<NcSeries, NcSeries> epsilon_letter_images(int two_k, int trunc) {
    NcSeries a = NcSeries::letter('a', trunc);
    NcSeries b = NcSeries::letter('b', trunc);
    if (two_k == 0) return {-b, NcSeries::zero(trunc)};
    const int k = two_k / 2;
    Rational pref = Rational(2) * rat_inv_factorial(two_k - 2);
    NcSeries img_a = ad_pow(a, two_k, b);
    img_a.scale_rat(pref);
    NcSeries img_b(trunc);
    for (int j = 0; j < k; ++j) {
        NcSeries term = bracket(ad_pow(a, j, b), ad_pow(a, two_k - 1 - j, b));
        term.scale_rat(j % 2 == 0 ? pref : -pref);
        img_b += term;
    }
    return {img_a, img_b};
}

}  // namespace

NcSeries epsilon_free(int two_k, const NcSeries& x) {
    if (two_k < 0 || two_k % 2 != 0)
        throw std::invalid_argument("epsilon_free: index must be even and >= 0");
    const int N = x.trunc();
    auto [img_a, img_b] = epsilon_letter_images(two_k, N);
    const int img_len = two_k == 0 ? 1 : two_k + 1;
    NcSeries r(N);
    for (int w = 1; w <= N; ++w) {
        const int out_w = w - 1 + img_len;
        if (out_w > N) break;
        for (const auto& [word, c] : x.weight(w)) {
            for (int i = 0; i < w; ++i) {
                const auto& img =
                    word_letter(word, i) ? img_b.weight(img_len) : img_a.weight(img_len);
                if (img.empty()) continue;
                Word prefix = word & ((Word(1) << i) - 1);
                Word suffix = word >> (i + 1);
                for (const auto& [iw, ic] : img) {
                    Word out = prefix | (iw << i) | (suffix << (i + img_len));
                    r.add(out_w, out, c * ic);
                }
            }
        }
    }
    return r;
}

namespace {

std::map<Word, long long> left_normed_bracketing(Word word, int len) {
    std::map<Word, long long> state;
    state[word & 1u] = 1;
    int cur = 1;
    for (int p = 1; p < len; ++p) {
        Word lw = word_letter(word, p);
        std::map<Word, long long> next;
        for (const auto& [u, c] : state) {
            next[u | (lw << cur)] += c;
            next[lw | (u << 1)] -= c;
        }
        state = std::move(next);
        ++cur;
    }
    return state;
}

}  // namespace

NcSeries dynkin_map(const NcSeries& x) {
    NcSeries r(x.trunc());
    for (int w = 1; w <= x.trunc(); ++w) {
        for (const auto& [word, c] : x.weight(w)) {
            auto lnb = left_normed_bracketing(word, w);
            for (const auto& [ow, k] : lnb) {
                if (k == 0) continue;
                SymCoeff t = c;
                t.mul_rat(Rational(static_cast<long>(k)));
                r.add(w, ow, t);
            }
        }
    }
    return r;
}

bool lie_check(const NcSeries& x) {
    if (!x.weight(0).empty()) return false;
    NcSeries lhs = dynkin_map(x);
    for (int w = 1; w <= x.trunc(); ++w) {
        const auto& want = x.weight(w);
        const auto& got = lhs.weight(w);
        std::map<Word, SymCoeff> scaled;
        for (const auto& [word, c] : want) {
            SymCoeff t = c;
            t.mul_rat(Rational(w));
            scaled.emplace(word, t);
        }
        if (scaled.size() != got.size()) return false;
        for (const auto& [word, c] : scaled) {
            auto it = got.find(word);
            if (it == got.end() || !(it->second == c)) return false;
        }
    }
    return true;
}

std::pair<SymCoeff, SymCoeff> shuffle_pair(const NcSeries& x, Word u, int ulen,
                                           Word v, int vlen) {
    SymCoeff lhs;
    std::function<void(int, int, Word, int)> rec = [&](int i, int j, Word acc,
                                                       int len) {
        if (i == ulen && j == vlen) {
            lhs += x.coeff(len, acc);
            return;
        }
        if (i < ulen)
            rec(i + 1, j, acc | (Word(word_letter(u, i)) << len), len + 1);
        if (j < vlen)
            rec(i, j + 1, acc | (Word(word_letter(v, j)) << len), len + 1);
    };
    rec(0, 0, 0, 0);
    SymCoeff rhs = x.coeff(ulen, u) * x.coeff(vlen, v);
    return {lhs, rhs};
}

}  // namespace metakzb
