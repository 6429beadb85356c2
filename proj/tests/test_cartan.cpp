#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qva/cartan.hpp"

using namespace qva;

TEST_CASE("A2 preset matches the right-facing orientation") {
    CartanData cd = CartanData::presetA(2);
    CHECK(cd.cartan(1, 1) == 2);
    CHECK(cd.cartan(1, 2) == -1);
    CHECK(cd.cartan(2, 1) == -1);
    CHECK(cd.edges(1, 2) == 1);
    CHECK(cd.edges(2, 1) == 0);
}

TEST_CASE("affine A2 adds vertex 0 with edges 0->1 and 0->2") {
    CartanData cd = CartanData::presetAhat(2);
    CHECK(cd.affine);
    CHECK(cd.cartan(0, 1) == -1);
    CHECK(cd.cartan(0, 2) == -1);
    CHECK(cd.edges(0, 1) == 1);
    CHECK(cd.edges(0, 2) == 1);
    CHECK(cd.edges(1, 0) == 0);
}

TEST_CASE("sl2hat carries a doubled edge 0->1") {
    CartanData cd = CartanData::fromName("sl2hat");
    CHECK(cd.cartan(0, 1) == -2);
    CHECK(cd.cartan(1, 0) == -2);
    CHECK(cd.edges(0, 1) == 2);
}

TEST_CASE("C2 symmetrizers and pairing") {
    CartanData cd = CartanData::presetC2();
    CHECK(cd.d(1) == 1);
    CHECK(cd.d(2) == 2);
    Weight a1 = Weight::simpleRoot(2, 1), a2 = Weight::simpleRoot(2, 2);
    CHECK(pairing(cd, a1, a2) == -2);
    CHECK(pairing(cd, a2, a2) == 4);
    CHECK(pairing(cd, a1, a1) == 2);
    // d_i C_ij = d_j C_ji
    CHECK(cd.d(1) * cd.cartan(1, 2) == cd.d(2) * cd.cartan(2, 1));
}

TEST_CASE("pairing symmetry on all generator pairs for every preset") {
    for (const char* tag : {"a1", "a2", "a3", "a4", "d4", "c2", "a2hat", "c2hat", "d4hat", "sl2hat"}) {
        CartanData cd = CartanData::fromName(tag);
        for (int i : cd.verticesAll())
            for (int j : cd.verticesAll()) {
                CAPTURE(tag);
                CHECK(cd.pairingGen(i, j) == cd.pairingGen(j, i));
                if (i == j) CHECK(cd.pairingGen(i, i) == 2 * cd.d(i));
            }
    }
}

TEST_CASE("Cartan matrix sanity for every preset") {
    for (const char* tag : {"a1", "a2", "a3", "a4", "d4", "c2", "a3hat", "c2hat", "d4hat", "sl2hat"}) {
        CartanData cd = CartanData::fromName(tag);
        for (int i : cd.verticesAll()) {
            CHECK(cd.cartan(i, i) == 2);
            for (int j : cd.verticesAll()) {
                if (i == j) continue;
                CHECK(cd.cartan(i, j) <= 0);
                CHECK((cd.cartan(i, j) == 0) == (cd.cartan(j, i) == 0));
            }
        }
    }
}

TEST_CASE("simply laced presets satisfy m_ij + m_ji = -C_ij") {
    for (const char* tag : {"a2", "a3", "a4", "d4", "a2hat", "a4hat", "d4hat", "sl2hat"}) {
        CartanData cd = CartanData::fromName(tag);
        for (int i : cd.verticesAll())
            for (int j : cd.verticesAll())
                if (i != j) CHECK(cd.edges(i, j) + cd.edges(j, i) == -cd.cartan(i, j));
    }
}

TEST_CASE("A2 pairing values") {
    CartanData cd = CartanData::presetA(2);
    Weight a1 = Weight::simpleRoot(2, 1), a2 = Weight::simpleRoot(2, 2);
    CHECK(pairing(cd, a1, a1) == 2);
    CHECK(pairing(cd, a1, a2) == -1);
    CHECK(pairing(cd, a2, a1) == -1);
}

TEST_CASE("unknown preset tag throws") {
    CHECK_THROWS_AS(CartanData::fromName("e8"), std::invalid_argument);
}

TEST_CASE("positive roots") {
    CHECK(positiveRoots(CartanData::presetA(2)).size() == 3);
    CHECK(positiveRoots(CartanData::presetA(3)).size() == 6);
    CHECK(positiveRoots(CartanData::presetA(4)).size() == 10);
    CHECK(positiveRoots(CartanData::presetD4()).size() == 12);
    CHECK(positiveRoots(CartanData::presetC2()).size() == 4);

    // highest roots
    CartanData a3 = CartanData::presetA(3);
    Weight theta = highestRoot(a3);
    CHECK(theta.coords == std::vector<int>({0, 1, 1, 1}));
    CHECK(highestRoot(CartanData::presetD4()).coords == std::vector<int>({0, 1, 2, 1, 1}));
    CHECK(highestRoot(CartanData::presetC2()).coords == std::vector<int>({0, 2, 1}));
}

TEST_CASE("Kostant counts against direct enumeration in A2") {
    CartanData cd = CartanData::presetA(2);
    // weight a1+a2: two positive-root multisets {a1,a2} and {a1+a2}
    Weight w = Weight::simpleRoot(2, 1) + Weight::simpleRoot(2, 2);
    CHECK(kostantCount(cd, w) == 2);
    // 2a1+a2: {a1,a1,a2}, {a1,a1+a2}
    Weight w2 = w + Weight::simpleRoot(2, 1);
    CHECK(kostantCount(cd, w2) == 2);
    CHECK(kostantCount(cd, Weight(2)) == 1);
}

TEST_CASE("words of a weight enumerate multiset arrangements") {
    Weight w(2);
    w[1] = 2;
    w[2] = 1;
    auto words = wordsOfWeight(w);
    CHECK(words.size() == 3);
    CHECK(std::is_sorted(words.begin(), words.end()));
    for (const auto& word : words) {
        CartanData cd = CartanData::presetA(2);
        CHECK(weightOfWord(cd, word) == w);
    }
}
