#pragma once

#include "qva/cartan.hpp"
#include "qva/free_algebra.hpp"
#include "qva/qscalar.hpp"

#include <map>
#include <memory>
#include <vector>

namespace qva {

/// Per-weight data for the Lusztig form: the spanning monomials, the
/// symmetric Gram matrix and an echelonized basis of its kernel (the slice
/// of the radical, i.e. of the Serre ideal).
struct GramTable {
    Weight alpha;
    std::vector<LetterWord> monomials;            // lexicographically sorted
    std::vector<std::vector<QScalar>> matrix;     // pairings
    std::vector<std::vector<QScalar>> kernel;     // row basis over monomials
    bool kernelReady = false;
    long long expectedDim = -1;                   // Kostant count, for checks
    long long kernelDim() const { return static_cast<long long>(kernel.size()); }
};

/// The algebra U_q^+(g) presented on free words modulo the radical of the
/// Lusztig form. Owns all per-weight caches; immutable Cartan datum.
class UqContext {
public:
    explicit UqContext(CartanData cd, int cutoff = 8);

    const CartanData& cartan() const { return cd_; }
    int cutoff() const { return cutoff_; }
    void setCutoff(int c) { cutoff_ = c; }

    /// q_i = q^{d_i}; the form normalization (E_i, E_i) = 1/(1 - q_i^2).
    QScalar estarBase(int i) const;

    /// Twisted derivation on free words:
    ///   E_i*(AB) = q^{-(alpha_i, wt B)} E_i*(A) B + A E_i*(B),
    ///   E_i*(1) = 0,  E_i*(E_j) = delta_ij / (1 - q_i^2).
    FreeElement estar(int i, const FreeElement& x) const;

    /// Lusztig form via the adjunction (x, y E_i) = (E_i*(x), y); zero across
    /// distinct weights.
    QScalar lusztigForm(const FreeElement& x, const FreeElement& y) const;

    const std::vector<LetterWord>& monomials(const Weight& alpha) const;

    /// Gram matrix for the weight; the kernel is filled in lazily by
    /// gramWithKernel. Tables are cached per weight. Instances are not
    /// thread-safe; verification sweeps that share a context run on one
    /// thread.
    const GramTable& gram(const Weight& alpha) const;
    /// Same table with the kernel computed by fraction-free elimination.
    const GramTable& gramWithKernel(const Weight& alpha) const;

    /// True iff every homogeneous component pairs to zero with every
    /// monomial of its weight. Throws if a component exceeds the cutoff.
    bool isZero(const FreeElement& x) const;
    bool equalMod(const FreeElement& a, const FreeElement& b) const { return isZero(a - b); }

    /// Gram-solve cross-check for estar: solves (z, m) = (x, m E_i) for z in
    /// the span of the monomials at wt(x) - alpha_i; returns true when the
    /// derivation result agrees with the solution modulo the radical.
    bool estarMatchesGramSolve(int i, const FreeElement& x) const;

private:
    CartanData cd_;
    int cutoff_;
    mutable std::map<std::vector<int>, std::vector<LetterWord>> monoCache_;
    mutable std::map<std::vector<int>, std::unique_ptr<GramTable>> gramCache_;
    mutable std::map<std::pair<LetterWord, LetterWord>, QScalar> formCache_;
    mutable std::map<std::pair<int, LetterWord>, FreeElement> estarCache_;

    QScalar formWords(const LetterWord& a, const LetterWord& b) const;
    void checkCutoff(const Weight& alpha) const;
};

/// Element of U_q^+ carrying its reduction context.
struct UqElement {
    FreeElement rep;
    const UqContext* ctx = nullptr;
    bool isZero() const { return ctx->isZero(rep); }
    bool operator==(const UqElement& o) const { return ctx->equalMod(rep, o.rep); }
};

/// Alternating quantum-binomial sum S_{q,m}(x, y) = sum_i binom(m,i)_{q'}
/// (-1)^i x^i y x^{m-i}, with the binomials evaluated at q' = q^{dpow}.
FreeElement serreElement(const FreeElement& x, const FreeElement& y, int m, int dpow = 1);

/// Bar involution on elements: bar on every coefficient, words unchanged.
FreeElement barInvolution(const FreeElement& x);

/// Commutative bivariate polynomial over QScalar used by the factorization
/// identity of the surjection theorem.
class BiPoly {
public:
    static BiPoly variableL();
    static BiPoly variableR();
    static BiPoly constant(QScalar c);
    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }
    bool isZero() const { return terms_.empty(); }

private:
    std::map<std::pair<int, int>, QScalar> terms_;  // (degL, degR) -> coeff
    void add(std::pair<int, int> key, const QScalar& c);
};

/// Verifies sum_i binom(n,i)_q (-1)^i L^i R^{n-i} = prod_{i=0}^{n-1}
/// (R - q^{2i-(n-1)} L) and that the degree-n product divides the
/// degree-(n+2) one.
bool serreFactorizationCheck(int n);

/// Row-reduces a matrix of QScalars with fraction-free (Bareiss) elimination
/// after clearing denominators; returns a kernel basis (rows).
std::vector<std::vector<QScalar>> rationalKernel(const std::vector<std::vector<QScalar>>& m,
                                                 int cols);
/// Rank of a QScalar matrix (exact).
int rationalRank(std::vector<std::vector<QScalar>> rows);

}  // namespace qva
