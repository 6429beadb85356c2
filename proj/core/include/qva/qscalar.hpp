#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace qva {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense integer-coefficient polynomial in the formal variable q.
/// Invariant: the coefficient vector is empty (the zero polynomial) or its
/// last entry is nonzero.
class Poly {
public:
    Poly() = default;
    Poly(long v);
    Poly(Int v);
    static Poly monomial(Int coeff, int exp);

    bool isZero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Int coeff(int i) const;
    const Int& leading() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    /// Exact division; throws std::domain_error if the division has a
    /// remainder or the divisor is zero.
    Poly divExact(const Poly& d) const;

    Int content() const;
    Poly primitivePart() const;
    static Poly gcd(Poly a, Poly b);

    /// q^deg * p(1/q): the coefficient list reversed.
    Poly reversed() const;
    /// p(q^k) for k >= 1.
    Poly substPower(int k) const;
    Rat eval(const Rat& q0) const;

    std::string toString() const;
    static Poly parse(const std::string& s);

private:
    std::vector<Int> c_;
    void trim();
    friend class QScalar;
};

/// Exact rational function in q with integer coefficients, the ground field
/// for every computation here. Canonical form: gcd(num, den) = 1 via
/// content-and-primitive-part gcd, and den has positive leading coefficient.
class QScalar {
public:
    QScalar() : num_(), den_(1) {}
    QScalar(long v) : num_(v), den_(1) {}
    QScalar(Int v) : num_(std::move(v)), den_(1) {}
    QScalar(Poly p) : num_(std::move(p)), den_(1) {}
    QScalar(Poly num, Poly den);

    static QScalar q();
    static QScalar qPower(int e);  // q^e, e may be negative

    bool isZero() const { return num_.isZero(); }
    bool isOne() const;
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    QScalar operator-() const;
    QScalar operator+(const QScalar& o) const;
    QScalar operator-(const QScalar& o) const;
    QScalar operator*(const QScalar& o) const;
    /// Throws std::domain_error on division by zero.
    QScalar operator/(const QScalar& o) const;
    QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
    QScalar& operator-=(const QScalar& o) { return *this = *this - o; }
    QScalar& operator*=(const QScalar& o) { return *this = *this * o; }
    QScalar& operator/=(const QScalar& o) { return *this = *this / o; }

    bool operator==(const QScalar& o) const;
    bool operator!=(const QScalar& o) const { return !(*this == o); }
    /// Total order for use as a map key (lexicographic on coefficients).
    bool operator<(const QScalar& o) const;

    /// The bar involution q -> q^{-1}, re-canonicalized.
    QScalar bar() const;
    /// Substitute q -> q^k for k >= 1 (used for q_i = q^{d_i}).
    QScalar substPower(int k) const;
    /// Evaluate at a rational point; throws if the denominator vanishes.
    Rat specialize(const Rat& q0) const;

    /// Serializes as "p" or "p/r" with sparse c*q^e term lists.
    std::string toString() const;
    static QScalar parse(const std::string& s);

private:
    Poly num_, den_;
    void canonicalize();
};

QScalar quantumInt(int n);
QScalar quantumFactorial(int n);
/// Throws std::domain_error if k > n or either is negative.
QScalar quantumBinom(int n, int k);

}  // namespace qva
