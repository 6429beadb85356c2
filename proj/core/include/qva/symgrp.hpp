#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qva {

using GenWord = std::vector<int>;  // generator indices s_{i_1} ... s_{i_l}, 1-based

/// Permutation of {1..k}. Words multiply left to right: the word (i_1,...,i_l)
/// evaluates to s_{i_1} * s_{i_2} * ... * s_{i_l} with (a*b)(x) = a(b(x)).
class Perm {
public:
    Perm() = default;
    static Perm identity(int k);
    static Perm transposition(int k, int i);  // s_i

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[x - 1]; }
    Perm operator*(const Perm& o) const;
    Perm inverse() const;
    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return !(*this == o); }
    bool operator<(const Perm& o) const { return img_ < o.img_; }
    bool isIdentity() const;

    int length() const;  // number of inversions
    std::string toString() const;

private:
    std::vector<int> img_;  // img_[x-1] = p(x)
};

Perm evalWord(int k, const GenWord& w);
bool isReducedWord(int k, const GenWord& w);

/// Left inversion set: pairs (a,b), a < b, with p^{-1}(a) > p^{-1}(b).
std::set<std::pair<int, int>> inversionSet(const Perm& p);

/// Weak right Bruhat order via inversion-set inclusion.
bool leqWeak(const Perm& a, const Perm& b);

/// Least common multiple (join) in the weak right order, found by breadth
/// first search over upper covers starting from a.
Perm join(const Perm& a, const Perm& b);

/// All reduced words, sorted lexicographically. Guards k <= 9.
std::vector<GenWord> reducedWords(const Perm& p);

/// Number of reduced words without enumerating them (Lindstrom-style DP is
/// overkill here; this counts by descent recursion with memoization).
long long reducedWordCount(const Perm& p);

/// Fixed choice of reduced presentation per permutation. The default picks
/// the lexicographically minimal word. Given a generating set S it follows
/// the P / P^c policy: elements of P^c (nothing in S below them) keep the
/// minimal word; elements of P take the lexicographically maximal word among
/// those prefixed by the chosen word of some sigma in S.
class ChosenWords {
public:
    explicit ChosenWords(int k);
    ChosenWords(int k, const std::vector<Perm>& S);

    int degree() const { return k_; }
    const GenWord& word(const Perm& p) const;
    bool inP(const Perm& p) const;
    const std::vector<Perm>& generators() const { return S_; }

private:
    int k_;
    std::vector<Perm> S_;
    mutable std::map<Perm, GenWord> cache_;
    mutable std::map<Perm, GenWord> lexMaxCache_;
    const GenWord& lexMaxWord(const Perm& p) const;
};

GenWord lexMinWord(const Perm& p);

std::string wordToString(const GenWord& w);

}  // namespace qva
