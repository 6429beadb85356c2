#include "qva/symgrp.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace qva {

Perm Perm::identity(int k) {
    Perm p;
    p.img_.resize(k);
    for (int i = 0; i < k; ++i) p.img_[i] = i + 1;
    return p;
}

Perm Perm::transposition(int k, int i) {
    if (i < 1 || i >= k) throw std::out_of_range("transposition index out of range");
    Perm p = identity(k);
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
}

Perm Perm::operator*(const Perm& o) const {
    Perm r;
    r.img_.resize(img_.size());
    for (size_t x = 0; x < img_.size(); ++x) r.img_[x] = img_[o.img_[x] - 1];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (size_t x = 0; x < img_.size(); ++x) r.img_[img_[x] - 1] = static_cast<int>(x) + 1;
    return r;
}

bool Perm::isIdentity() const {
    for (size_t x = 0; x < img_.size(); ++x)
        if (img_[x] != static_cast<int>(x) + 1) return false;
    return true;
}

int Perm::length() const {
    int l = 0;
    for (size_t a = 0; a < img_.size(); ++a)
        for (size_t b = a + 1; b < img_.size(); ++b)
            if (img_[a] > img_[b]) ++l;
    return l;
}

std::string Perm::toString() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < img_.size(); ++i) {
        if (i) out << " ";
        out << img_[i];
    }
    out << "]";
    return out.str();
}

Perm evalWord(int k, const GenWord& w) {
    Perm p = Perm::identity(k);
    for (int i : w) p = p * Perm::transposition(k, i);
    return p;
}

bool isReducedWord(int k, const GenWord& w) {
    return evalWord(k, w).length() == static_cast<int>(w.size());
}

std::set<std::pair<int, int>> inversionSet(const Perm& p) {
    std::set<std::pair<int, int>> inv;
    Perm pi = p.inverse();
    int k = p.degree();
    for (int a = 1; a <= k; ++a)
        for (int b = a + 1; b <= k; ++b)
            if (pi(a) > pi(b)) inv.insert({a, b});
    return inv;
}

bool leqWeak(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("weak order across degrees");
    auto ia = inversionSet(a), ib = inversionSet(b);
    return std::includes(ib.begin(), ib.end(), ia.begin(), ia.end());
}

// Right descents: p(i) > p(i+1), i.e. l(p s_i) = l(p) - 1.
static std::vector<int> rightDescents(const Perm& p) {
    std::vector<int> d;
    for (int i = 1; i < p.degree(); ++i)
        if (p(i) > p(i + 1)) d.push_back(i);
    return d;
}

// Right ascents: l(p s_i) = l(p) + 1.
static std::vector<int> rightAscents(const Perm& p) {
    std::vector<int> a;
    for (int i = 1; i < p.degree(); ++i)
        if (p(i) < p(i + 1)) a.push_back(i);
    return a;
}

Perm join(const Perm& a, const Perm& b) {
    if (leqWeak(b, a)) return a;
    if (leqWeak(a, b)) return b;
    auto ib = inversionSet(b);
    // breadth first over upper covers of a; the first element lying above b
    // has minimal length among common upper bounds, hence is the join
    std::set<Perm> level{a};
    int k = a.degree();
    for (int len = a.length(); len <= k * (k - 1) / 2; ++len) {
        std::set<Perm> next;
        std::vector<Perm> hits;
        for (const Perm& p : level) {
            for (int i : rightAscents(p)) {
                Perm up = p * Perm::transposition(k, i);
                if (next.insert(up).second) {
                    auto iu = inversionSet(up);
                    if (std::includes(iu.begin(), iu.end(), ib.begin(), ib.end()))
                        hits.push_back(up);
                }
            }
        }
        if (!hits.empty()) {
            for (const Perm& h : hits)
                if (!(h == hits.front()))
                    throw std::logic_error("join is not unique; lattice property violated");
            return hits.front();
        }
        level = std::move(next);
    }
    throw std::logic_error("join not found");
}

static void collectReducedWords(const Perm& p, GenWord& tail, std::vector<GenWord>& out) {
    if (p.isIdentity()) {
        GenWord w(tail.rbegin(), tail.rend());
        out.push_back(w);
        return;
    }
    for (int i : rightDescents(p)) {
        tail.push_back(i);
        collectReducedWords(p * Perm::transposition(p.degree(), i), tail, out);
        tail.pop_back();
    }
}

std::vector<GenWord> reducedWords(const Perm& p) {
    if (p.degree() > 9) throw std::domain_error("reduced word enumeration capped at S_9");
    std::vector<GenWord> out;
    GenWord tail;
    collectReducedWords(p, tail, out);
    std::sort(out.begin(), out.end());
    return out;
}

long long reducedWordCount(const Perm& p) {
    static thread_local std::map<Perm, long long> memo;
    if (p.isIdentity()) return 1;
    auto it = memo.find(p);
    if (it != memo.end()) return it->second;
    long long n = 0;
    for (int i : rightDescents(p)) n += reducedWordCount(p * Perm::transposition(p.degree(), i));
    memo[p] = n;
    return n;
}

// Left descents: i with l(s_i p) < l(p), i.e. p^{-1}(i) > p^{-1}(i+1).
static std::vector<int> leftDescents(const Perm& p) {
    std::vector<int> d;
    Perm pi = p.inverse();
    for (int i = 1; i < p.degree(); ++i)
        if (pi(i) > pi(i + 1)) d.push_back(i);
    return d;
}

GenWord lexMinWord(const Perm& p) {
    GenWord w;
    Perm cur = p;
    int k = p.degree();
    while (!cur.isIdentity()) {
        int d = leftDescents(cur).front();
        w.push_back(d);
        cur = Perm::transposition(k, d) * cur;
    }
    return w;
}

static GenWord lexMaxWordOf(const Perm& p) {
    GenWord w;
    Perm cur = p;
    int k = p.degree();
    while (!cur.isIdentity()) {
        int d = leftDescents(cur).back();
        w.push_back(d);
        cur = Perm::transposition(k, d) * cur;
    }
    return w;
}

ChosenWords::ChosenWords(int k) : k_(k) {}

ChosenWords::ChosenWords(int k, const std::vector<Perm>& S) : k_(k), S_(S) {
    for (const Perm& s : S_)
        if (s.degree() != k) throw std::invalid_argument("generator degree mismatch");
}

bool ChosenWords::inP(const Perm& p) const {
    for (const Perm& s : S_)
        if (leqWeak(s, p)) return true;
    return false;
}

const GenWord& ChosenWords::lexMaxWord(const Perm& p) const {
    auto it = lexMaxCache_.find(p);
    if (it != lexMaxCache_.end()) return it->second;
    return lexMaxCache_.emplace(p, lexMaxWordOf(p)).first->second;
}

const GenWord& ChosenWords::word(const Perm& p) const {
    auto it = cache_.find(p);
    if (it != cache_.end()) return it->second;

    GenWord w;
    if (!inP(p)) {
        w = lexMinWord(p);
    } else {
        // lexicographically maximal reduced word prefixed by the chosen word
        // of some sigma in S below p; the tail after the prefix is then free,
        // so its lex-max word is used
        bool have = false;
        // process S by length so chosen words of S elements are available
        std::vector<Perm> gens = S_;
        std::sort(gens.begin(), gens.end(),
                  [](const Perm& a, const Perm& b) { return a.length() < b.length(); });
        for (const Perm& s : gens) {
            if (!leqWeak(s, p)) continue;
            GenWord candidate = (s == p) ? lexMaxWord(p) : word(s);
            if (!(s == p)) {
                Perm rest = s.inverse() * p;
                const GenWord& tail = lexMaxWord(rest);
                candidate.insert(candidate.end(), tail.begin(), tail.end());
            }
            if (!isReducedWord(k_, candidate))
                throw std::logic_error("chosen-word candidate not reduced");
            if (!have || candidate > w) {
                w = candidate;
                have = true;
            }
        }
        if (!have) throw std::logic_error("P member without qualifying word");
    }
    return cache_.emplace(p, std::move(w)).first->second;
}

std::string wordToString(const GenWord& w) {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out << ",";
        out << w[i];
    }
    out << ")";
    return out.str();
}

}  // namespace qva
