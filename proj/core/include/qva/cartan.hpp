#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qva {

/// Element of N[I]: nonnegative coordinates per vertex, indexed by vertex id.
/// Slot 0 is used only for affine weights.
struct Weight {
    std::vector<int> coords;  // size rank+1, coords[0] unused for finite type

    Weight() = default;
    explicit Weight(int rank) : coords(rank + 1, 0) {}
    static Weight simpleRoot(int rank, int i);

    int height() const;
    int operator[](int i) const { return coords[i]; }
    int& operator[](int i) { return coords[i]; }

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    bool operator==(const Weight& o) const { return coords == o.coords; }
    bool operator<(const Weight& o) const { return coords < o.coords; }
    /// Coordinatewise <=.
    bool dominatedBy(const Weight& o) const;
    bool nonnegative() const;

    std::string toString() const;
};

/// Cartan datum plus quiver orientation. Vertices are labelled 1..rank for
/// finite types; affine data adds the extending vertex 0.
class CartanData {
public:
    std::string name;
    int rank = 0;
    bool affine = false;  // whether vertex 0 is present

    int cartan(int i, int j) const { return c_.at(idx(i)).at(idx(j)); }
    int d(int i) const { return d_.at(idx(i)); }
    /// Number of directed edges i -> j in the chosen orientation.
    int edges(int i, int j) const { return m_.at(idx(i)).at(idx(j)); }
    /// Symmetrized pairing on generators: (alpha_i, alpha_j) = d_i C_{ij}.
    int pairingGen(int i, int j) const { return d(i) * cartan(i, j); }

    std::vector<int> vertices() const;        // 1..rank (finite part)
    std::vector<int> verticesAll() const;     // including 0 if affine

    /// The finite-type datum underlying an affine one (drops vertex 0).
    CartanData finitePart() const;

    static CartanData presetA(int n);
    static CartanData presetAhat(int n);  // n >= 1; n = 1 is the sl2hat datum
    static CartanData presetD4();
    static CartanData presetD4hat();
    static CartanData presetA1xA1();
    static CartanData presetC2();
    static CartanData presetC2hat();
    /// Accepts a1..a9, a1hat.., d4, d4hat, c2, c2hat, sl2, sl2hat, a1xa1.
    static CartanData fromName(const std::string& tag);

    friend long long pairing(const CartanData&, const Weight&, const Weight&);

private:
    // dense matrices indexed by vertex id (0..rank); row/col 0 unused when
    // not affine
    std::vector<std::vector<int>> c_;
    std::vector<std::vector<int>> m_;
    std::vector<int> d_;
    int idx(int i) const;
    void allocate();
    friend struct CartanBuilder;
};

/// Symmetric bilinear form on N[I] with (alpha_i, alpha_j) = d_i C_{ij}.
long long pairing(const CartanData& cd, const Weight& a, const Weight& b);

using LetterWord = std::vector<uint8_t>;  // monomial in the E_i, letters are vertex ids

Weight weightOfWord(const CartanData& cd, const LetterWord& w);
/// All words of the given weight, lexicographically sorted.
std::vector<LetterWord> wordsOfWeight(const Weight& alpha);

/// Positive roots of a finite-type datum.
std::vector<Weight> positiveRoots(const CartanData& cd);
/// Highest root of a finite-type datum.
Weight highestRoot(const CartanData& cd);
/// Kostant partition count: number of multisets of positive roots summing to
/// alpha. Equals dim U_q^+(g)_alpha by the PBW theorem.
long long kostantCount(const CartanData& cd, const Weight& alpha);

std::string wordToString(const LetterWord& w);

}  // namespace qva
