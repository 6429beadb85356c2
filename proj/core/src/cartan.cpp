#include "qva/cartan.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qva {

// ---------------------------------------------------------------------------
// Weight

Weight Weight::simpleRoot(int rank, int i) {
    Weight w(rank);
    w.coords.at(i) = 1;
    return w;
}

int Weight::height() const {
    int h = 0;
    for (int c : coords) h += c;
    return h;
}

Weight Weight::operator+(const Weight& o) const {
    Weight r = *this;
    for (size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
}

Weight Weight::operator-(const Weight& o) const {
    Weight r = *this;
    for (size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
    return r;
}

bool Weight::dominatedBy(const Weight& o) const {
    for (size_t i = 0; i < coords.size(); ++i)
        if (coords[i] > o.coords[i]) return false;
    return true;
}

bool Weight::nonnegative() const {
    for (int c : coords)
        if (c < 0) return false;
    return true;
}

std::string Weight::toString() const {
    std::ostringstream out;
    out << "(";
    for (size_t i = 1; i < coords.size(); ++i) {
        if (i > 1) out << ",";
        out << coords[i];
    }
    out << ")";
    return out.str();
}

// ---------------------------------------------------------------------------
// CartanData

int CartanData::idx(int i) const {
    if (i < 0 || i > rank || (i == 0 && !affine))
        throw std::out_of_range("vertex " + std::to_string(i) + " not in " + name);
    return i;
}

void CartanData::allocate() {
    c_.assign(rank + 1, std::vector<int>(rank + 1, 0));
    m_.assign(rank + 1, std::vector<int>(rank + 1, 0));
    d_.assign(rank + 1, 1);
    for (int i = 0; i <= rank; ++i) c_[i][i] = 2;
}

std::vector<int> CartanData::vertices() const {
    std::vector<int> v;
    for (int i = 1; i <= rank; ++i) v.push_back(i);
    return v;
}

std::vector<int> CartanData::verticesAll() const {
    std::vector<int> v;
    if (affine) v.push_back(0);
    for (int i = 1; i <= rank; ++i) v.push_back(i);
    return v;
}

CartanData CartanData::finitePart() const {
    CartanData r = *this;
    r.affine = false;
    if (r.name.size() > 3 && r.name.substr(r.name.size() - 3) == "hat")
        r.name = r.name.substr(0, r.name.size() - 3);
    return r;
}

struct CartanBuilder {
    CartanData cd;
    CartanBuilder(std::string name, int rank, bool affine) {
        cd.name = std::move(name);
        cd.rank = rank;
        cd.affine = affine;
        cd.allocate();
    }
    // one directed edge i -> j per call; Cartan entries for the simply laced
    // case follow from the edge count
    CartanBuilder& edge(int i, int j) {
        cd.m_[i][j] += 1;
        cd.c_[i][j] -= 1;
        cd.c_[j][i] -= 1;
        return *this;
    }
    CartanBuilder& entry(int i, int j, int cij) {
        cd.c_[i][j] = cij;
        return *this;
    }
    CartanBuilder& sym(int i, int di) {
        cd.d_[i] = di;
        return *this;
    }
};

CartanData CartanData::presetA(int n) {
    if (n < 1) throw std::domain_error("type A needs rank >= 1");
    CartanBuilder b("a" + std::to_string(n), n, false);
    for (int i = 1; i < n; ++i) b.edge(i, i + 1);
    return b.cd;
}

CartanData CartanData::presetAhat(int n) {
    if (n < 1) throw std::domain_error("affine type A needs rank >= 1");
    CartanBuilder b(n == 1 ? "sl2hat" : "a" + std::to_string(n) + "hat", n, true);
    for (int i = 1; i < n; ++i) b.edge(i, i + 1);
    if (n == 1) {
        b.edge(0, 1).edge(0, 1);  // two edges 0 -> 1
    } else {
        b.edge(0, n).edge(0, 1);
    }
    return b.cd;
}

CartanData CartanData::presetD4() {
    CartanBuilder b("d4", 4, false);
    // vertex 2 is central
    b.edge(1, 2).edge(2, 3).edge(2, 4);
    return b.cd;
}

CartanData CartanData::presetD4hat() {
    CartanBuilder b("d4hat", 4, true);
    b.edge(1, 2).edge(2, 3).edge(2, 4);
    b.edge(0, 2);  // extending vertex attaches to the centre
    return b.cd;
}

CartanData CartanData::presetA1xA1() {
    // two vertices, no bond: the sl2 x sl2 datum of the surjection example
    CartanBuilder b("a1xa1", 2, false);
    return b.cd;
}

CartanData CartanData::presetC2() {
    // vertex 1 short, vertex 2 long: C12 = -2, C21 = -1, d = (1,2)
    CartanBuilder b("c2", 2, false);
    b.entry(1, 2, -2).entry(2, 1, -1).sym(1, 1).sym(2, 2);
    b.cd.m_[1][2] = 1;  // orientation carried but unused for C2
    return b.cd;
}

CartanData CartanData::presetC2hat() {
    // alpha_0 is long and attaches to the short root: C01 = -1, C10 = -2
    CartanBuilder b("c2hat", 2, true);
    b.entry(1, 2, -2).entry(2, 1, -1).sym(1, 1).sym(2, 2);
    b.entry(0, 1, -1).entry(1, 0, -2).sym(0, 2);
    b.cd.m_[1][2] = 1;
    b.cd.m_[0][1] = 1;
    return b.cd;
}

CartanData CartanData::fromName(const std::string& tag) {
    std::string t = tag;
    std::transform(t.begin(), t.end(), t.begin(), ::tolower);
    bool hat = false;
    if (t.size() > 3 && t.substr(t.size() - 3) == "hat") {
        hat = true;
        t = t.substr(0, t.size() - 3);
    }
    if (t == "sl2") return hat ? presetAhat(1) : presetA(1);
    if (t == "a1xa1") return presetA1xA1();
    if (t == "d4") return hat ? presetD4hat() : presetD4();
    if (t == "c2") return hat ? presetC2hat() : presetC2();
    if (t.size() >= 2 && t[0] == 'a') {
        int n = std::stoi(t.substr(1));
        return hat ? presetAhat(n) : presetA(n);
    }
    throw std::invalid_argument("unknown Cartan preset '" + tag + "'");
}

long long pairing(const CartanData& cd, const Weight& a, const Weight& b) {
    if (a.coords.size() != b.coords.size() ||
        a.coords.size() != static_cast<size_t>(cd.rank) + 1)
        throw std::invalid_argument("pairing over mismatched label sets");
    long long acc = 0;
    for (int i : cd.verticesAll())
        for (int j : cd.verticesAll())
            acc += static_cast<long long>(a[i]) * b[j] * cd.pairingGen(i, j);
    return acc;
}

// ---------------------------------------------------------------------------
// Words and weights

Weight weightOfWord(const CartanData& cd, const LetterWord& w) {
    Weight a(cd.rank);
    for (uint8_t l : w) a[l] += 1;
    return a;
}

std::vector<LetterWord> wordsOfWeight(const Weight& alpha) {
    LetterWord base;
    for (size_t i = 1; i < alpha.coords.size(); ++i)
        for (int k = 0; k < alpha.coords[i]; ++k) base.push_back(static_cast<uint8_t>(i));
    std::vector<LetterWord> out;
    std::sort(base.begin(), base.end());
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

std::vector<Weight> positiveRoots(const CartanData& cd) {
    if (cd.affine) throw std::domain_error("positive roots of affine datum are infinite");
    // Close the simple roots under the simple reflections and keep the
    // positive ones. Terminates for the finite-type presets used here.
    std::set<std::vector<int>> seen;
    std::vector<Weight> frontier;
    for (int i = 1; i <= cd.rank; ++i) {
        Weight a = Weight::simpleRoot(cd.rank, i);
        seen.insert(a.coords);
        frontier.push_back(a);
    }
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const Weight& r : frontier) {
            for (int i = 1; i <= cd.rank; ++i) {
                long long num = 0;
                for (int j = 1; j <= cd.rank; ++j)
                    num += static_cast<long long>(r[j]) * cd.cartan(i, j);
                Weight s = r;
                s[i] -= static_cast<int>(num);
                if (!s.nonnegative() || s.height() == 0) continue;
                if (seen.insert(s.coords).second) next.push_back(s);
            }
        }
        frontier = std::move(next);
        if (seen.size() > 4096) throw std::runtime_error("root system did not close");
    }
    std::vector<Weight> out;
    for (const auto& c : seen) {
        Weight w;
        w.coords = c;
        out.push_back(w);
    }
    std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) {
        if (a.height() != b.height()) return a.height() < b.height();
        return a.coords < b.coords;
    });
    return out;
}

Weight highestRoot(const CartanData& cd) {
    auto roots = positiveRoots(cd);
    return roots.back();
}

long long kostantCount(const CartanData& cd, const Weight& alpha) {
    auto roots = positiveRoots(cd);
    // count multisets of positive roots summing to alpha by DP over roots
    std::map<std::vector<int>, long long> table;
    table[Weight(cd.rank).coords] = 1;
    for (const Weight& r : roots) {
        std::map<std::vector<int>, long long> next;
        for (const auto& [w, cnt] : table) {
            Weight base;
            base.coords = w;
            for (Weight acc = base; acc.dominatedBy(alpha); acc = acc + r) next[acc.coords] += cnt;
        }
        table = std::move(next);
    }
    auto it = table.find(alpha.coords);
    return it == table.end() ? 0 : it->second;
}

std::string wordToString(const LetterWord& w) {
    if (w.empty()) return "1";
    std::ostringstream out;
    for (uint8_t l : w) out << "E" << static_cast<int>(l);
    return out.str();
}

}  // namespace qva
