#pragma once

#include "qva/cartan.hpp"
#include "qva/qscalar.hpp"

#include <map>
#include <optional>
#include <string>

namespace qva {

/// Linear combination of words in the generators E_i with QScalar
/// coefficients. Zero coefficients are never stored.
class FreeElement {
public:
    FreeElement() = default;
    static FreeElement unit() { return word(LetterWord{}); }
    static FreeElement word(LetterWord w, QScalar c = QScalar(1));
    static FreeElement generator(int i) { return word(LetterWord{static_cast<uint8_t>(i)}); }

    bool isZero() const { return terms_.empty(); }
    size_t termCount() const { return terms_.size(); }
    const std::map<LetterWord, QScalar>& terms() const { return terms_; }
    QScalar coeff(const LetterWord& w) const;

    FreeElement operator+(const FreeElement& o) const;
    FreeElement operator-(const FreeElement& o) const;
    FreeElement operator-() const;
    FreeElement operator*(const FreeElement& o) const;  // concatenation product
    FreeElement operator*(const QScalar& c) const;
    FreeElement& operator+=(const FreeElement& o);
    FreeElement& operator-=(const FreeElement& o);
    bool operator==(const FreeElement& o) const { return terms_ == o.terms_; }

    /// Appends E_i on the right of every word.
    FreeElement timesGenerator(int i) const;

    /// Applies the bar involution to every coefficient, words unchanged.
    FreeElement barCoeffs() const;

    void add(const LetterWord& w, const QScalar& c);

    /// Weight of a homogeneous element; nullopt for 0 or inhomogeneous.
    std::optional<Weight> homogeneousWeight(const CartanData& cd) const;

    std::string toString() const;

private:
    std::map<LetterWord, QScalar> terms_;
};

}  // namespace qva
