#include "qva/qscalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qva {

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(long v) {
    if (v != 0) c_.push_back(Int(v));
}

Poly::Poly(Int v) {
    if (v != 0) c_.push_back(std::move(v));
}

Poly Poly::monomial(Int coeff, int exp) {
    Poly p;
    if (coeff == 0) return p;
    p.c_.assign(exp + 1, Int(0));
    p.c_[exp] = std::move(coeff);
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Int(0);
    return c_[i];
}

const Int& Poly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    if (isZero() || o.isZero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

Poly Poly::divExact(const Poly& d) const {
    if (d.isZero()) throw std::domain_error("polynomial division by zero");
    if (isZero()) return Poly();
    Poly rem = *this;
    Poly quo;
    quo.c_.assign(c_.size(), Int(0));
    while (!rem.isZero() && rem.degree() >= d.degree()) {
        Int lead = rem.leading();
        if (lead % d.leading() != 0) throw std::domain_error("inexact polynomial division");
        Int f = lead / d.leading();
        int shift = rem.degree() - d.degree();
        quo.c_[shift] += f;
        for (size_t j = 0; j < d.c_.size(); ++j) rem.c_[j + shift] -= f * d.c_[j];
        rem.trim();
    }
    if (!rem.isZero()) throw std::domain_error("inexact polynomial division");
    quo.trim();
    return quo;
}

Int Poly::content() const {
    Int g(0);
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;  // 0 for the zero polynomial
}

Poly Poly::primitivePart() const {
    if (isZero()) return Poly();
    Int g = content();
    if (leading() < 0) g = -g;
    Poly r = *this;
    for (auto& x : r.c_) x /= g;
    return r;
}

// Pseudo-remainder of a by b: each elimination step premultiplies by lc(b)
// so the arithmetic stays in Z[q].
static Poly pseudoRem(Poly a, const Poly& b) {
    int db = b.degree();
    while (!a.isZero() && a.degree() >= db) {
        Int f = a.leading();
        int shift = a.degree() - db;
        a = a * Poly(b.leading()) - b * Poly::monomial(f, shift);
    }
    return a;
}

Poly Poly::gcd(Poly a, Poly b) {
    if (a.isZero()) {
        if (b.isZero()) return Poly();
        return b.primitivePart() * Poly(abs(b.content()));
    }
    if (b.isZero()) return a.primitivePart() * Poly(abs(a.content()));
    Int ca = abs(a.content()), cb = abs(b.content());
    Int cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    a = a.primitivePart();
    b = b.primitivePart();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.isZero()) {
        Poly r = pseudoRem(a, b).primitivePart();
        a = b;
        b = r;
    }
    return a.primitivePart() * Poly(cg);
}

Poly Poly::reversed() const {
    Poly r = *this;
    std::reverse(r.c_.begin(), r.c_.end());
    r.trim();
    return r;
}

Poly Poly::substPower(int k) const {
    if (k < 1) throw std::domain_error("substPower needs k >= 1");
    Poly r;
    if (isZero()) return r;
    r.c_.assign(static_cast<size_t>(degree()) * k + 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
    r.trim();
    return r;
}

Rat Poly::eval(const Rat& q0) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q0 + Rat(*it);
    return acc;
}

std::string Poly::toString() const {
    if (isZero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int e = degree(); e >= 0; --e) {
        const Int c = coeff(e);
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? "-" : "+");
        }
        if (a != 1 || e == 0) out << a.get_str();
        if (e > 0) {
            if (a != 1) out << "*";
            out << "q";
            if (e > 1) out << "^" << e;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// QScalar

void QScalar::canonicalize() {
    if (den_.isZero()) throw std::domain_error("zero denominator");
    if (num_.isZero()) {
        den_ = Poly(1);
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    num_ = num_.divExact(g);
    den_ = den_.divExact(g);
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QScalar::QScalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

QScalar QScalar::q() { return QScalar(Poly::monomial(1, 1)); }

QScalar QScalar::qPower(int e) {
    if (e >= 0) return QScalar(Poly::monomial(1, e));
    return QScalar(Poly(1), Poly::monomial(1, -e));
}

bool QScalar::isOne() const { return den_ == Poly(1) && num_ == Poly(1); }

QScalar QScalar::operator-() const {
    QScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

QScalar QScalar::operator+(const QScalar& o) const {
    return QScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QScalar QScalar::operator-(const QScalar& o) const {
    return QScalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

QScalar QScalar::operator*(const QScalar& o) const {
    if (isZero() || o.isZero()) return QScalar();
    // Cross-cancel before multiplying to keep intermediates small.
    Poly g1 = Poly::gcd(num_, o.den_);
    Poly g2 = Poly::gcd(o.num_, den_);
    QScalar r;
    r.num_ = num_.divExact(g1) * o.num_.divExact(g2);
    r.den_ = den_.divExact(g2) * o.den_.divExact(g1);
    if (r.den_.leading() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

QScalar QScalar::operator/(const QScalar& o) const {
    if (o.isZero()) throw std::domain_error("division by zero QScalar");
    QScalar inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    if (inv.den_.leading() < 0) {
        inv.num_ = -inv.num_;
        inv.den_ = -inv.den_;
    }
    return *this * inv;
}

bool QScalar::operator==(const QScalar& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

bool QScalar::operator<(const QScalar& o) const {
    auto cmpPoly = [](const Poly& a, const Poly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        for (int i = a.degree(); i >= 0; --i) {
            int c = cmp(a.coeff(i), b.coeff(i));
            if (c != 0) return c;
        }
        return 0;
    };
    int c = cmpPoly(num_, o.num_);
    if (c != 0) return c < 0;
    return cmpPoly(den_, o.den_) < 0;
}

QScalar QScalar::bar() const {
    if (isZero()) return QScalar();
    int dn = num_.degree(), dd = den_.degree();
    Poly n = num_.reversed(), d = den_.reversed();
    if (dd >= dn)
        n = n * Poly::monomial(1, dd - dn);
    else
        d = d * Poly::monomial(1, dn - dd);
    return QScalar(std::move(n), std::move(d));
}

QScalar QScalar::substPower(int k) const {
    return QScalar(num_.substPower(k), den_.substPower(k));
}

Rat QScalar::specialize(const Rat& q0) const {
    Rat d = den_.eval(q0);
    if (d == 0) throw std::domain_error("denominator vanishes at specialization point");
    Rat r = num_.eval(q0) / d;
    r.canonicalize();
    return r;
}

std::string QScalar::toString() const {
    if (den_ == Poly(1)) return num_.toString();
    std::string d = den_.toString();
    bool needParens = num_.degree() > 0;
    std::string n = needParens ? "(" + num_.toString() + ")" : num_.toString();
    return n + "/(" + d + ")";
}

// ---------------------------------------------------------------------------
// Parsing: integers, q, ^, *, /, +, -, parentheses. Exponents may be negative.

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& str) : s(str) {}

    void skipWs() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skipWs();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skipWs();
        return pos < s.size() ? s[pos] : '\0';
    }

    QScalar parseExpr() {
        QScalar acc = parseTerm();
        for (;;) {
            if (eat('+'))
                acc += parseTerm();
            else if (eat('-'))
                acc -= parseTerm();
            else
                return acc;
        }
    }

    QScalar parseTerm() {
        QScalar acc = parseFactor();
        for (;;) {
            if (eat('*'))
                acc *= parseFactor();
            else if (eat('/'))
                acc /= parseFactor();
            else {
                // implicit multiplication such as "2q^3" or "q(1+q)"
                char c = peek();
                if (c == 'q' || c == '(') {
                    acc *= parseFactor();
                } else {
                    return acc;
                }
            }
        }
    }

    QScalar parseFactor() {
        if (eat('-')) return -parseFactor();
        if (eat('+')) return parseFactor();
        QScalar base = parseAtom();
        if (eat('^')) {
            bool neg = eat('-');
            long e = parseInt();
            if (neg) e = -e;
            return power(base, e);
        }
        return base;
    }

    QScalar parseAtom() {
        skipWs();
        if (eat('(')) {
            QScalar r = parseExpr();
            if (!eat(')')) throw std::invalid_argument("unbalanced parenthesis in scalar");
            return r;
        }
        if (peek() == 'q') {
            ++pos;
            return QScalar::q();
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) return QScalar(Int(parseInt()));
        throw std::invalid_argument("cannot parse scalar at '" + s.substr(pos) + "'");
    }

    long parseInt() {
        skipWs();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("expected integer in scalar");
        return std::stol(s.substr(start, pos - start));
    }

    static QScalar power(const QScalar& b, long e) {
        if (e == 0) return QScalar(1);
        QScalar base = e > 0 ? b : QScalar(1) / b;
        long n = e > 0 ? e : -e;
        QScalar acc(1);
        for (long i = 0; i < n; ++i) acc *= base;
        return acc;
    }
};

}  // namespace

QScalar QScalar::parse(const std::string& s) {
    Parser p(s);
    QScalar r = p.parseExpr();
    p.skipWs();
    if (p.pos != s.size()) throw std::invalid_argument("trailing characters in scalar '" + s + "'");
    return r;
}

Poly Poly::parse(const std::string& s) {
    QScalar r = QScalar::parse(s);
    if (!(r.den() == Poly(1))) throw std::invalid_argument("not a polynomial: " + s);
    return r.num();
}

// ---------------------------------------------------------------------------
// Quantum combinatorics

QScalar quantumInt(int n) {
    if (n < 0) throw std::domain_error("quantumInt of negative argument");
    if (n == 0) return QScalar();
    // [n]_q = (q^{2n}-1)/(q^{n-1}(q^2-1)) = sum_{j=0}^{n-1} q^{n-1-2j}
    Poly num;
    for (int j = 0; j < n; ++j) num = num + Poly::monomial(1, 2 * j);
    return QScalar(num, Poly::monomial(1, n - 1));
}

QScalar quantumFactorial(int n) {
    if (n < 0) throw std::domain_error("quantumFactorial of negative argument");
    QScalar acc(1);
    for (int i = 2; i <= n; ++i) acc *= quantumInt(i);
    return acc;
}

QScalar quantumBinom(int n, int k) {
    if (k < 0 || n < 0 || k > n) throw std::domain_error("quantumBinom requires 0 <= k <= n");
    return quantumFactorial(n) / (quantumFactorial(k) * quantumFactorial(n - k));
}

}  // namespace qva
