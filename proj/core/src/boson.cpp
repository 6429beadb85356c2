#include "qva/boson.hpp"

#include <functional>

namespace qva {

WeightOp::WeightOp(Action action, std::vector<int> shift)
    : action_(std::move(action)), shift_(std::move(shift)) {}

WeightOp WeightOp::identity(int rank) {
    return WeightOp([](const LetterWord& w) { return FreeElement::word(w); },
                    std::vector<int>(rank + 1, 0));
}

WeightOp WeightOp::rmul(const UqContext& ctx, int i) {
    std::vector<int> shift(ctx.cartan().rank + 1, 0);
    shift[i] = 1;
    return WeightOp(
        [i](const LetterWord& w) {
            LetterWord nw = w;
            nw.push_back(static_cast<uint8_t>(i));
            return FreeElement::word(nw);
        },
        std::move(shift));
}

WeightOp WeightOp::estarOp(const UqContext& ctx, int i) {
    std::vector<int> shift(ctx.cartan().rank + 1, 0);
    shift[i] = -1;
    const UqContext* c = &ctx;
    return WeightOp([c, i](const LetterWord& w) { return c->estar(i, FreeElement::word(w)); },
                    std::move(shift));
}

WeightOp WeightOp::compose(const WeightOp& inner) const {
    std::vector<int> shift = shift_;
    for (size_t k = 0; k < shift.size(); ++k) shift[k] += inner.shift_[k];
    WeightOp outer = *this;
    WeightOp in = inner;
    return WeightOp([outer, in](const LetterWord& w) { return outer.apply(in.applyWord(w)); },
                    std::move(shift));
}

WeightOp WeightOp::operator+(const WeightOp& o) const {
    if (shift_ != o.shift_) throw std::invalid_argument("adding operators of unequal shift");
    WeightOp a = *this, b = o;
    return WeightOp([a, b](const LetterWord& w) { return a.applyWord(w) + b.applyWord(w); },
                    shift_);
}

WeightOp WeightOp::operator-(const WeightOp& o) const {
    if (shift_ != o.shift_)
        throw std::invalid_argument("subtracting operators of unequal shift");
    WeightOp a = *this, b = o;
    return WeightOp([a, b](const LetterWord& w) { return a.applyWord(w) - b.applyWord(w); },
                    shift_);
}

WeightOp WeightOp::scale(const QScalar& c) const {
    WeightOp a = *this;
    return WeightOp([a, c](const LetterWord& w) { return a.applyWord(w) * c; }, shift_);
}

WeightOp WeightOp::bracket(const WeightOp& a, const WeightOp& b, int qexp) {
    return a.compose(b) - b.compose(a).scale(QScalar::qPower(qexp));
}

WeightOp WeightOp::power(int k, int rank) const {
    WeightOp acc = identity(rank);
    for (int i = 0; i < k; ++i) acc = compose(acc);
    return acc;
}

FreeElement WeightOp::applyWord(const LetterWord& w) const {
    auto it = memo_->find(w);
    if (it != memo_->end()) return it->second;
    FreeElement r = action_(w);
    memo_->emplace(w, r);
    return r;
}

FreeElement WeightOp::apply(const FreeElement& x) const {
    FreeElement out;
    for (const auto& [w, c] : x.terms()) out += applyWord(w) * c;
    return out;
}

WeightOp serreOp(const WeightOp& x, const WeightOp& y, int m, int dpow, int rank) {
    std::vector<WeightOp> pow(m + 1);
    pow[0] = WeightOp::identity(rank);
    for (int i = 1; i <= m; ++i) pow[i] = x.compose(pow[i - 1]);
    WeightOp acc;
    bool first = true;
    for (int i = 0; i <= m; ++i) {
        QScalar c = quantumBinom(m, i).substPower(dpow);
        if (i % 2) c = -c;
        WeightOp term = pow[i].compose(y).compose(pow[m - i]).scale(c);
        acc = first ? term : acc + term;
        first = false;
    }
    return acc;
}

void CheckReport::fail(std::string relation, const LetterWord& w, FreeElement residual) {
    pass = false;
    issues.push_back({std::move(relation), w, std::move(residual)});
}

std::vector<Weight> weightsUpTo(const CartanData& cd, int maxHeight) {
    std::vector<Weight> out;
    Weight cur(cd.rank);
    std::function<void(int, int)> rec = [&](int v, int left) {
        if (v > cd.rank) {
            out.push_back(cur);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            cur[v] = k;
            rec(v + 1, left - k);
        }
        cur[v] = 0;
    };
    rec(1, maxHeight);
    std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) {
        if (a.height() != b.height()) return a.height() < b.height();
        return a.coords < b.coords;
    });
    return out;
}

CheckReport operatorIsZero(const UqContext& ctx, const WeightOp& op, int cutoff,
                           const std::string& label, bool collectAll) {
    CheckReport rep;
    for (const Weight& alpha : weightsUpTo(ctx.cartan(), cutoff)) {
        for (const LetterWord& w : ctx.monomials(alpha)) {
            FreeElement img = op.applyWord(w);
            ++rep.checksRun;
            if (!ctx.isZero(img)) {
                rep.fail(label, w, img);
                if (!collectAll) return rep;
            }
        }
    }
    return rep;
}

CheckReport operatorsAgree(const UqContext& ctx, const WeightOp& a, const WeightOp& b, int cutoff,
                           const std::string& label) {
    CheckReport rep;
    for (const Weight& alpha : weightsUpTo(ctx.cartan(), cutoff)) {
        for (const LetterWord& w : ctx.monomials(alpha)) {
            FreeElement diff = a.applyWord(w) - b.applyWord(w);
            ++rep.checksRun;
            if (!ctx.isZero(diff)) {
                rep.fail(label, w, diff);
                return rep;
            }
        }
    }
    return rep;
}

CheckReport bosonRelationCheck(const UqContext& ctx, int i, int j, int cutoff) {
    CheckReport rep;
    const CartanData& cd = ctx.cartan();
    int rank = cd.rank;
    WeightOp ei = WeightOp::rmul(ctx, j);
    WeightOp fi = WeightOp::estarOp(ctx, i);
    QScalar twist = QScalar::qPower(-cd.pairingGen(i, j));
    QScalar constant =
        i == j ? QScalar(1) / (QScalar(1) - QScalar::qPower(2 * cd.d(i))) : QScalar();

    // exact free-level identity on every monomial
    for (const Weight& alpha : weightsUpTo(cd, cutoff)) {
        for (const LetterWord& w : ctx.monomials(alpha)) {
            FreeElement x = FreeElement::word(w);
            FreeElement lhs = fi.apply(ei.apply(x)) - ei.apply(fi.apply(x)) * twist;
            FreeElement rhs = x * constant;
            ++rep.checksRun;
            if (!(lhs == rhs)) {
                rep.fail("boson f" + std::to_string(i) + "e" + std::to_string(j), w, lhs - rhs);
                return rep;
            }
        }
    }

    // adjointness (E_i^*(x), y) = (x, y E_i) on monomial pairs
    for (const Weight& alpha : weightsUpTo(cd, cutoff)) {
        if (alpha[i] == 0) continue;
        Weight beta = alpha - Weight::simpleRoot(rank, i);
        for (const LetterWord& x : ctx.monomials(alpha)) {
            for (const LetterWord& y : ctx.monomials(beta)) {
                FreeElement fx = ctx.estar(i, FreeElement::word(x));
                QScalar lhs = ctx.lusztigForm(fx, FreeElement::word(y));
                QScalar rhs =
                    ctx.lusztigForm(FreeElement::word(x), FreeElement::word(y).timesGenerator(i));
                ++rep.checksRun;
                if (!(lhs == rhs)) {
                    rep.fail("adjointness E" + std::to_string(i) + "*", x, FreeElement());
                    return rep;
                }
            }
        }
    }

    // the f_i satisfy the quantum Serre relations as operators on the quotient
    if (i != j && cd.cartan(i, j) != 0) {
        int m = 1 - cd.cartan(i, j);
        WeightOp fj = WeightOp::estarOp(ctx, j);
        WeightOp s = serreOp(fi, fj, m, cd.d(i), rank);
        CheckReport sub = operatorIsZero(
            ctx, s, cutoff, "serre f" + std::to_string(i) + "f" + std::to_string(j));
        rep.checksRun += sub.checksRun;
        if (!sub.pass) {
            rep.pass = false;
            rep.issues.insert(rep.issues.end(), sub.issues.begin(), sub.issues.end());
        }
    }
    return rep;
}

CheckReport kernelPreservationCheck(const UqContext& ctx, const WeightOp& op, int cutoff,
                                    const std::string& label) {
    CheckReport rep;
    for (const Weight& alpha : weightsUpTo(ctx.cartan(), cutoff)) {
        if (alpha.height() == 0) continue;
        const GramTable& t = ctx.gramWithKernel(alpha);
        for (const auto& kv : t.kernel) {
            FreeElement k;
            for (size_t m = 0; m < t.monomials.size(); ++m) k.add(t.monomials[m], kv[m]);
            ++rep.checksRun;
            FreeElement img = op.apply(k);
            if (!ctx.isZero(img)) {
                rep.fail(label + " kernel preservation at " + alpha.toString(), LetterWord{}, img);
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace qva
