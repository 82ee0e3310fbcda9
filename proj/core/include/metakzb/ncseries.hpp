#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "metakzb/symring.hpp"

namespace metakzb {

// Truncated power series in two noncommuting letters a, b.
// A word of weight w is packed into the low w bits of a Word, bit i holding
// the letter at position i (0 = a, 1 = b), position 0 leftmost.
using Word = std::uint32_t;

constexpr int kMaxWeight = 30;

inline Word word_concat(Word u, int ulen, Word v) { return u | (v << ulen); }
inline int word_letter(Word w, int pos) { return (w >> pos) & 1u; }
std::string word_to_string(Word w, int len);

class NcSeries {
  public:
    explicit NcSeries(int trunc);

    int trunc() const { return trunc_; }
    const std::map<Word, SymCoeff>& weight(int w) const { return comp_[w]; }

    void add(int w, Word word, const SymCoeff& v);
    SymCoeff coeff(int w, Word word) const;
    bool is_zero() const;
    // Largest w with a nonzero component, or -1.
    int top_weight() const;
    // Smallest w with a nonzero component, or trunc+1.
    int min_weight() const;

    NcSeries& operator+=(const NcSeries& o);
    NcSeries& operator-=(const NcSeries& o);
    NcSeries operator+(const NcSeries& o) const;
    NcSeries operator-(const NcSeries& o) const;
    NcSeries operator-() const;
    NcSeries& scale(const SymCoeff& c);
    NcSeries& scale_rat(const Rational& r);

    std::string to_string() const;

    static NcSeries zero(int trunc);
    static NcSeries one(int trunc);
    static NcSeries letter(char c, int trunc);

  private:
    int trunc_;
    std::vector<std::map<Word, SymCoeff>> comp_;

    void check_compatible(const NcSeries& o) const;
};

inline bool operator==(const NcSeries& x, const NcSeries& y) {
    if (x.trunc() != y.trunc()) return false;
    return (x - y).is_zero();
}
inline bool operator!=(const NcSeries& x, const NcSeries& y) { return !(x == y); }

NcSeries mul(const NcSeries& x, const NcSeries& y);
NcSeries bracket(const NcSeries& x, const NcSeries& y);
// ad^k(x)(y)
NcSeries ad_pow(const NcSeries& x, int k, const NcSeries& y);

// exp requires zero constant term, log requires constant term 1.
NcSeries exp_series(const NcSeries& x);
NcSeries log_series(const NcSeries& x);

enum class Gen { x0, x1, xinf };

// x0 -> sum_{k<=N-1} B_k/k! ad^k(a)(b), x1 -> [a,b], xinf -> -x0-x1.
NcSeries iota(Gen g, int trunc);

// Derivation with eps_{2k}(a) = -b (k=0) or (2/(2k-2)!) ad^{2k}(a)(b), and
// eps_{2k}(b) = (2/(2k-2)!) sum_{0<=j<k} (-1)^j [ad^j(a)(b), ad^{2k-1-j}(a)(b)].
// Extended letterwise over every word, so it acts as a derivation on the
// whole tensor algebra, not only on Lie elements.
NcSeries epsilon_free(int two_k, const NcSeries& x);

// Dynkin criterion: every homogeneous component L_w satisfies l(L_w) = w L_w,
// where l is the left-normed bracketing, and the weight-0 part vanishes.
bool lie_check(const NcSeries& x);

// Left-normed bracketing of each word, summed with the series coefficients.
NcSeries dynkin_map(const NcSeries& x);

// Shuffle coefficient test for group-likeness at one word pair:
// sum over shuffles of (u,v) of coeff(w) must equal coeff(u)*coeff(v).
// Returns {lhs, rhs}.
std::pair<SymCoeff, SymCoeff> shuffle_pair(const NcSeries& x, Word u, int ulen,
                                           Word v, int vlen);

}  // namespace metakzb
