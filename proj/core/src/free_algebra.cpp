#include "qva/free_algebra.hpp"

#include <sstream>

namespace qva {

FreeElement FreeElement::word(LetterWord w, QScalar c) {
    FreeElement e;
    if (!c.isZero()) e.terms_.emplace(std::move(w), std::move(c));
    return e;
}

QScalar FreeElement::coeff(const LetterWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? QScalar() : it->second;
}

void FreeElement::add(const LetterWord& w, const QScalar& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

FreeElement& FreeElement::operator+=(const FreeElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

FreeElement FreeElement::operator+(const FreeElement& o) const {
    FreeElement r = *this;
    r += o;
    return r;
}

FreeElement FreeElement::operator-(const FreeElement& o) const {
    FreeElement r = *this;
    r -= o;
    return r;
}

FreeElement FreeElement::operator-() const {
    FreeElement r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

FreeElement FreeElement::operator*(const FreeElement& o) const {
    FreeElement r;
    for (const auto& [w1, c1] : terms_) {
        for (const auto& [w2, c2] : o.terms_) {
            LetterWord w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add(w, c1 * c2);
        }
    }
    return r;
}

FreeElement FreeElement::operator*(const QScalar& c) const {
    FreeElement r;
    if (c.isZero()) return r;
    for (const auto& [w, coeff] : terms_) r.terms_.emplace(w, coeff * c);
    return r;
}

FreeElement FreeElement::timesGenerator(int i) const {
    FreeElement r;
    for (const auto& [w, c] : terms_) {
        LetterWord nw = w;
        nw.push_back(static_cast<uint8_t>(i));
        r.terms_.emplace(std::move(nw), c);
    }
    return r;
}

FreeElement FreeElement::barCoeffs() const {
    FreeElement r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, c.bar());
    return r;
}

std::optional<Weight> FreeElement::homogeneousWeight(const CartanData& cd) const {
    std::optional<Weight> wt;
    for (const auto& [w, c] : terms_) {
        Weight cur = weightOfWord(cd, w);
        if (!wt)
            wt = cur;
        else if (!(*wt == cur))
            return std::nullopt;
    }
    return wt;
}

std::string FreeElement::toString() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.toString() << ")*" << wordToString(w);
    }
    return out.str();
}

}  // namespace qva
