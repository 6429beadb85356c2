#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qva/uqplus.hpp"

#include <random>

using namespace qva;

namespace {

QScalar one() { return QScalar(1); }
QScalar q() { return QScalar::q(); }

FreeElement wordOf(std::initializer_list<int> letters) {
    LetterWord w;
    for (int l : letters) w.push_back(static_cast<uint8_t>(l));
    return FreeElement::word(w);
}

FreeElement randomHomogeneous(UqContext& ctx, const Weight& alpha, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> pow(-2, 2);
    FreeElement e;
    for (const LetterWord& w : ctx.monomials(alpha)) {
        int c = coeff(rng);
        if (c == 0) continue;
        e.add(w, QScalar(c) * QScalar::qPower(pow(rng)));
    }
    return e;
}

}  // namespace

TEST_CASE("form normalization (E_i, E_j) = delta_ij/(1-q^2)") {
    UqContext ctx(CartanData::presetA(2));
    QScalar expect = one() / (one() - QScalar::qPower(2));
    CHECK(ctx.lusztigForm(wordOf({1}), wordOf({1})) == expect);
    CHECK(ctx.lusztigForm(wordOf({2}), wordOf({2})) == expect);
    CHECK(ctx.lusztigForm(wordOf({1}), wordOf({2})).isZero());
}

TEST_CASE("(E1^2, E1^2) = (1+q^-2)/(1-q^2)^2 by the derivation recursion") {
    UqContext ctx(CartanData::presetA(1));
    QScalar d = one() - QScalar::qPower(2);
    QScalar expect = (one() + QScalar::qPower(-2)) / (d * d);
    CHECK(ctx.lusztigForm(wordOf({1, 1}), wordOf({1, 1})) == expect);
}

TEST_CASE("C2 normalization (E_i, E_i) = 1/(1-q_i^2)") {
    UqContext ctx(CartanData::presetC2());
    CHECK(ctx.lusztigForm(wordOf({1}), wordOf({1})) == one() / (one() - QScalar::qPower(2)));
    CHECK(ctx.lusztigForm(wordOf({2}), wordOf({2})) == one() / (one() - QScalar::qPower(4)));
}

TEST_CASE("estar base cases and E1*(E1^2)") {
    UqContext ctx(CartanData::presetA(2));
    CHECK(ctx.estar(1, FreeElement::unit()).isZero());
    CHECK(ctx.estar(1, wordOf({2})).isZero());
    QScalar d = one() - QScalar::qPower(2);
    CHECK(ctx.estar(1, wordOf({1})) == FreeElement::unit() * (one() / d));
    // E1*(E1^2) = (1+q^-2)/(1-q^2) E1
    FreeElement expect = wordOf({1}) * ((one() + QScalar::qPower(-2)) / d);
    CHECK(ctx.estar(1, wordOf({1, 1})) == expect);
}

TEST_CASE("form symmetry on random homogeneous pairs") {
    for (const char* tag : {"a2", "a3", "c2"}) {
        UqContext ctx(CartanData::fromName(tag));
        std::mt19937 rng(42);
        Weight alpha(ctx.cartan().rank);
        alpha[1] = 2;
        alpha[2] = 1;
        for (int trial = 0; trial < 8; ++trial) {
            FreeElement x = randomHomogeneous(ctx, alpha, rng);
            FreeElement y = randomHomogeneous(ctx, alpha, rng);
            CAPTURE(tag);
            CHECK(ctx.lusztigForm(x, y) == ctx.lusztigForm(y, x));
        }
    }
}

TEST_CASE("graded orthogonality") {
    UqContext ctx(CartanData::presetA(2));
    CHECK(ctx.lusztigForm(wordOf({1, 2}), wordOf({1, 1})).isZero());
    CHECK(ctx.lusztigForm(wordOf({1}), wordOf({1, 2})).isZero());
}

TEST_CASE("gram tables and kernel dimensions") {
    UqContext ctx(CartanData::presetA(2));
    Weight a12 = Weight::simpleRoot(2, 1) + Weight::simpleRoot(2, 2);
    const GramTable& t = ctx.gramWithKernel(a12);
    CHECK(t.monomials.size() == 2);
    CHECK(t.kernelDim() == 0);  // dim U_q^+(sl3) at a1+a2 is 2

    UqContext sl2(CartanData::presetA(1));
    Weight twoA1(1);
    twoA1[1] = 2;
    CHECK(sl2.gramWithKernel(twoA1).monomials.size() == 1);
    CHECK(sl2.gramWithKernel(twoA1).kernelDim() == 0);
}

TEST_CASE("sl2 x sl2: kernel at a1+a2 is spanned by the commutator") {
    UqContext ctx(CartanData::presetA1xA1());
    Weight a12 = Weight::simpleRoot(2, 1) + Weight::simpleRoot(2, 2);
    const GramTable& t = ctx.gramWithKernel(a12);
    CHECK(t.kernelDim() == 1);
    FreeElement comm = wordOf({1, 2}) - wordOf({2, 1});
    CHECK(ctx.isZero(comm));
    // contrast: in A2 the commutator is not in the radical
    UqContext a2(CartanData::presetA(2));
    CHECK_FALSE(a2.isZero(comm));
}

TEST_CASE("surjection theorem instance in U_q+(sl2 x sl2)") {
    UqContext ctx(CartanData::presetA1xA1());
    FreeElement e1 = FreeElement::generator(1), e2 = FreeElement::generator(2);
    CHECK(ctx.isZero(serreElement(e1, e2, 1)));
    CHECK(ctx.isZero(serreElement(e1, e2, 3)));
    // S_{q,2}(E1,E2) = (2-q-q^-1) E1^2 E2 is nonzero
    FreeElement s2 = serreElement(e1, e2, 2);
    CHECK_FALSE(ctx.isZero(s2));
    QScalar c = QScalar(2) - QScalar::q() - QScalar::qPower(-1);
    FreeElement residual = wordOf({1, 1, 2}) * c;
    CHECK(ctx.isZero(s2 - residual));
}

TEST_CASE("quantum Serre elements lie in the radical for every preset") {
    for (const char* tag : {"a2", "a3", "c2", "d4"}) {
        UqContext ctx(CartanData::fromName(tag));
        const CartanData& cd = ctx.cartan();
        for (int i : cd.vertices()) {
            for (int j : cd.vertices()) {
                if (i == j || cd.cartan(i, j) == 0) continue;
                int m = 1 - cd.cartan(i, j);
                FreeElement s =
                    serreElement(FreeElement::generator(i), FreeElement::generator(j), m, cd.d(i));
                CAPTURE(tag);
                CAPTURE(i);
                CAPTURE(j);
                CHECK(ctx.isZero(s));
            }
        }
    }
}

TEST_CASE("E1E2 - E2E1 is nonzero in U_q+(sl3)") {
    UqContext ctx(CartanData::presetA(2));
    CHECK_FALSE(ctx.isZero(wordOf({1, 2}) - wordOf({2, 1})));
    CHECK(ctx.isZero(FreeElement()));
}

TEST_CASE("kernel dimensions match Kostant counts") {
    struct Case {
        const char* tag;
        int maxHeight;
    };
    for (Case c : {Case{"a2", 6}, Case{"a3", 5}, Case{"c2", 6}, Case{"d4", 4}}) {
        UqContext ctx(CartanData::fromName(c.tag));
        int rank = ctx.cartan().rank;
        // enumerate weights of height <= maxHeight
        std::vector<Weight> weights;
        std::vector<int> stack(rank + 1, 0);
        std::function<void(int, int)> rec = [&](int v, int left) {
            if (v > rank) {
                Weight w(rank);
                w.coords = stack;
                if (w.height() > 0) weights.push_back(w);
                return;
            }
            for (int k = 0; k <= left; ++k) {
                stack[v] = k;
                rec(v + 1, left - k);
            }
            stack[v] = 0;
        };
        rec(1, c.maxHeight);
        for (const Weight& w : weights) {
            if (static_cast<int>(ctx.monomials(w).size()) > 60) continue;  // runtime guard
            const GramTable& t = ctx.gramWithKernel(w);
            CAPTURE(c.tag);
            CAPTURE(w.toString());
            CHECK(t.monomials.size() - t.kernelDim() == static_cast<size_t>(t.expectedDim));
        }
    }
}

TEST_CASE("serre operator examples in elements") {
    FreeElement e1 = FreeElement::generator(1), e2 = FreeElement::generator(2);
    CHECK(serreElement(e1, e2, 1) == wordOf({2, 1}) - wordOf({1, 2}));
}

TEST_CASE("serre factorization identity") {
    CHECK(serreFactorizationCheck(1));
    CHECK(serreFactorizationCheck(2));
    CHECK(serreFactorizationCheck(5));
    for (int n = 1; n <= 8; ++n) CHECK(serreFactorizationCheck(n));
}

TEST_CASE("bar involution on elements") {
    FreeElement x = wordOf({1, 2}) * q();
    FreeElement expect = wordOf({1, 2}) * QScalar::qPower(-1);
    CHECK(barInvolution(x) == expect);
    CHECK(barInvolution(FreeElement::generator(1)) == FreeElement::generator(1));
    std::mt19937 rng(3);
    UqContext ctx(CartanData::presetA(2));
    Weight alpha(2);
    alpha[1] = 1;
    alpha[2] = 2;
    for (int t = 0; t < 5; ++t) {
        FreeElement x2 = randomHomogeneous(ctx, alpha, rng);
        CHECK(barInvolution(barInvolution(x2)) == x2);
    }
}

TEST_CASE("estar agrees with the gram-solve oracle") {
    UqContext ctx(CartanData::presetA(2));
    std::mt19937 rng(11);
    Weight alpha(2);
    alpha[1] = 2;
    alpha[2] = 1;
    for (int t = 0; t < 4; ++t) {
        FreeElement x = randomHomogeneous(ctx, alpha, rng);
        if (x.isZero()) continue;
        CHECK(ctx.estarMatchesGramSolve(1, x));
        CHECK(ctx.estarMatchesGramSolve(2, x));
    }
}

TEST_CASE("cutoff guard reports an error") {
    UqContext ctx(CartanData::presetA(1), 3);
    Weight big(1);
    big[1] = 4;
    CHECK_THROWS_AS(ctx.gram(big), std::domain_error);
}
