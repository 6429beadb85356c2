#pragma once

#include "qva/uqplus.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>

namespace qva {

/// Weight-shifting linear operator on degree-truncated U_q^+, represented by
/// its images on monomial words and extended by linearity. Values are
/// memoized per operator instance. Closed under composition, sums, scalar
/// multiples and q-brackets.
class WeightOp {
public:
    using Action = std::function<FreeElement(const LetterWord&)>;

    WeightOp() = default;
    WeightOp(Action action, std::vector<int> shift);

    static WeightOp identity(int rank);
    /// w -> w E_i (right multiplication, the e_i of the q-boson algebra).
    static WeightOp rmul(const UqContext& ctx, int i);
    /// The adjoint E_i^* (the f_i), computed by the derivation recursion.
    static WeightOp estarOp(const UqContext& ctx, int i);

    /// Standard composition: (a.compose(b))(x) = a(b(x)).
    WeightOp compose(const WeightOp& inner) const;
    WeightOp operator+(const WeightOp& o) const;
    WeightOp operator-(const WeightOp& o) const;
    WeightOp scale(const QScalar& c) const;
    /// [a, b]_{q^l} = a b - q^l b a.
    static WeightOp bracket(const WeightOp& a, const WeightOp& b, int qexp);
    WeightOp power(int k, int rank) const;

    FreeElement applyWord(const LetterWord& w) const;
    FreeElement apply(const FreeElement& x) const;

    /// Net weight shift (signed coordinates; slot 0 unused).
    const std::vector<int>& shift() const { return shift_; }

private:
    Action action_;
    std::vector<int> shift_;
    std::shared_ptr<std::map<LetterWord, FreeElement>> memo_ =
        std::make_shared<std::map<LetterWord, FreeElement>>();
};

/// S_{q^dpow, m}(x, y) as an operator: the alternating quantum-binomial sum
/// with binomials evaluated at q^dpow.
WeightOp serreOp(const WeightOp& x, const WeightOp& y, int m, int dpow, int rank);

struct RelationIssue {
    std::string relation;
    LetterWord monomial;
    FreeElement residual;
};

struct CheckReport {
    bool pass = true;
    std::vector<RelationIssue> issues;
    long long checksRun = 0;
    void fail(std::string relation, const LetterWord& w, FreeElement residual);
};

/// All weights over the finite vertices with height <= maxHeight (including
/// the zero weight), in graded lexicographic order.
std::vector<Weight> weightsUpTo(const CartanData& cd, int maxHeight);

/// Checks that op vanishes modulo the Serre radical on every monomial of
/// height <= cutoff. Stops at the first failure unless collectAll.
CheckReport operatorIsZero(const UqContext& ctx, const WeightOp& op, int cutoff,
                           const std::string& label, bool collectAll = false);

/// Checks two operators agree modulo the radical on all monomials up to the
/// cutoff.
CheckReport operatorsAgree(const UqContext& ctx, const WeightOp& a, const WeightOp& b, int cutoff,
                           const std::string& label);

/// q-boson relation f_i e_j - q^{-(alpha_i,alpha_j)} e_j f_i =
/// delta_ij/(1-q_i^2): exact on every free monomial of height <= cutoff,
/// plus the quantum Serre relations for the f_i as operators modulo the
/// radical, plus adjointness (E_i^*(x), y) = (x, y E_i) on the same range.
CheckReport bosonRelationCheck(const UqContext& ctx, int i, int j, int cutoff);

/// Well-definedness on the quotient: op maps each Gram kernel slice into the
/// kernel, for every weight of height <= cutoff.
CheckReport kernelPreservationCheck(const UqContext& ctx, const WeightOp& op, int cutoff,
                                    const std::string& label);

}  // namespace qva
