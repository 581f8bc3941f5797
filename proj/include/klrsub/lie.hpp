#pragma once

// Cartan data for affine type A with e vertices (the cyclic quiver on
// I = {0,...,e-1} = Z/e), together with the subdivision maps that pass from
// rank e to rank e+1 by splitting the vertex k into the pair k, k+1:
// on roots, words, weights, and the word classification used to describe
// which residue sequences survive truncation by the ordered idempotent.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace klrsub {

// Element of the positive root lattice Q^+ for the cyclic quiver with e
// vertices: beta = sum_i coeff[i] * alpha_i.
struct Root {
    int e = 0;
    std::vector<long long> coeff;  // size e

    Root() = default;
    explicit Root(int e_) : e(e_), coeff(e_, 0) {
        if (e < 2) throw std::invalid_argument("Root: rank must be >= 2");
    }
    static Root simple(int e, int i) {
        Root r(e);
        r.coeff.at(i) = 1;
        return r;
    }
    long long height() const { return std::accumulate(coeff.begin(), coeff.end(), 0LL); }
    bool operator==(const Root&) const = default;
    Root& operator+=(const Root& o) {
        assert(e == o.e);
        for (int i = 0; i < e; ++i) coeff[i] += o.coeff[i];
        return *this;
    }
    friend Root operator+(Root a, const Root& b) { return a += b; }
};

// Dominant weight Lambda = sum_i coeff[i] * Lambda_i.
struct Weight {
    int e = 0;
    std::vector<long long> coeff;  // size e

    Weight() = default;
    explicit Weight(int e_) : e(e_), coeff(e_, 0) {
        if (e < 2) throw std::invalid_argument("Weight: rank must be >= 2");
    }
    static Weight fundamental(int e, int i) {
        Weight w(e);
        w.coeff.at(i) = 1;
        return w;
    }
    long long level() const { return std::accumulate(coeff.begin(), coeff.end(), 0LL); }
    bool operator==(const Weight&) const = default;
    Weight& operator+=(const Weight& o) {
        assert(e == o.e);
        for (int i = 0; i < e; ++i) coeff[i] += o.coeff[i];
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
};

// A word is a sequence of vertices of I = {0,...,e-1}.
using Word = std::vector<int>;

enum class WordClass { Ordered, AlmostOrdered, UnorderedOther };

inline void check_vertex(int i, int e) {
    if (i < 0 || i >= e) throw std::invalid_argument("vertex out of range for rank");
}

inline Root associated_root(const Word& w, int e) {
    Root r(e);
    for (int i : w) {
        check_vertex(i, e);
        ++r.coeff[i];
    }
    return r;
}

// Cartan matrix entry a_{ij} of the cyclic quiver with e >= 2 vertices:
// 2 on the diagonal, -1 between cyclic neighbours.  For e = 2 the two
// vertices are doubly connected, so the off-diagonal entries are -2.
inline long long cartan_entry(int e, int i, int j) {
    if (i == j) return 2;
    long long a = 0;
    if ((i + 1) % e == j) a -= 1;
    if ((j + 1) % e == i) a -= 1;
    return a;
}

inline long long cartan_pairing(const Root& x, const Root& y) {
    if (x.e != y.e) throw std::invalid_argument("cartan_pairing: rank mismatch");
    long long s = 0;
    for (int i = 0; i < x.e; ++i) {
        if (x.coeff[i] == 0) continue;
        for (int j = 0; j < y.e; ++j)
            if (y.coeff[j] != 0) s += x.coeff[i] * cartan_entry(x.e, i, j) * y.coeff[j];
    }
    return s;
}

// (Lambda_i | alpha_j) = delta_ij, extended bilinearly.
inline long long cartan_pairing(const Weight& L, const Root& y) {
    if (L.e != y.e) throw std::invalid_argument("cartan_pairing: rank mismatch");
    long long s = 0;
    for (int i = 0; i < L.e; ++i) s += L.coeff[i] * y.coeff[i];
    return s;
}

// def_Lambda(beta) = (Lambda | beta) - (beta | beta)/2.  The form is even on
// the root lattice in affine type A, so the halving is exact.
inline long long defect(const Weight& L, const Root& beta) {
    long long bb = cartan_pairing(beta, beta);
    assert(bb % 2 == 0);
    return cartan_pairing(L, beta) - bb / 2;
}

// Subdivision of a root at vertex k: coefficients below k stay put, the
// coefficient at k is duplicated onto k and k+1, coefficients above k shift
// up by one.  The image lands in rank e+1 and satisfies x_k = x_{k+1}.
inline Root subdivide_root(const Root& b, int k) {
    check_vertex(k, b.e);
    Root r(b.e + 1);
    for (int i = 0; i < b.e; ++i) {
        if (i < k) {
            r.coeff[i] += b.coeff[i];
        } else if (i == k) {
            r.coeff[k] += b.coeff[k];
            r.coeff[k + 1] += b.coeff[k];
        } else {
            r.coeff[i + 1] += b.coeff[i];
        }
    }
    return r;
}

// Inverse of subdivide_root on its image {x_k = x_{k+1}} in rank e+1.
inline std::optional<Root> unsubdivide_root(const Root& b, int k) {
    check_vertex(k, b.e - 1);
    if (b.coeff[k] != b.coeff[k + 1]) return std::nullopt;
    Root r(b.e - 1);
    for (int i = 0; i < b.e - 1; ++i) r.coeff[i] = (i <= k) ? b.coeff[i] : b.coeff[i + 1];
    return r;
}

// Subdivision of a word: letters below k stay, the letter k becomes the pair
// (k, k+1), letters above k shift up by one.
inline Word subdivide_word(const Word& w, int k, int e) {
    check_vertex(k, e);
    Word out;
    out.reserve(w.size() + std::count(w.begin(), w.end(), k));
    for (int i : w) {
        check_vertex(i, e);
        if (i < k) {
            out.push_back(i);
        } else if (i == k) {
            out.push_back(k);
            out.push_back(k + 1);
        } else {
            out.push_back(i + 1);
        }
    }
    return out;
}

// Position tracing: phi(t) = t + #{j < t : w_j = k}, 1-based positions.
// Returned vector has phi(t) at index t-1.
inline std::vector<int> position_tracing(const Word& w, int k) {
    std::vector<int> phi(w.size());
    int seen = 0;
    for (std::size_t t = 0; t < w.size(); ++t) {
        phi[t] = static_cast<int>(t + 1) + seen;
        if (w[t] == k) ++seen;
    }
    return phi;
}

// Subdivision of a dominant weight: Lambda_i fixed for i <= k, shifted to
// Lambda_{i+1} for i > k.
inline Weight subdivide_weight(const Weight& L, int k) {
    check_vertex(k, L.e);
    Weight w(L.e + 1);
    for (int i = 0; i < L.e; ++i) w.coeff[i <= k ? i : i + 1] += L.coeff[i];
    return w;
}

inline bool word_is_ordered(const Word& w, int k) {
    const int n = static_cast<int>(w.size());
    for (int a = 0; a < n; ++a)
        if (w[a] == k && (a + 1 >= n || w[a + 1] != k + 1)) return false;
    return true;
}

// Some prefix contains strictly more letters k+1 than letters k.
inline bool word_is_unordered(const Word& w, int k) {
    int diff = 0;  // #k - #(k+1) over the current prefix
    for (int x : w) {
        if (x == k) ++diff;
        if (x == k + 1) --diff;
        if (diff < 0) return true;
    }
    return false;
}

// Classify a word over the subdivided rank (vertices 0..e, pair k, k+1).
// AlmostOrdered means the word is sigma_r applied to an ordered word j with
// j_r = k, i.e. one adjacent pair (k, k+1) swapped to (k+1, k).
inline WordClass classify_word(const Word& w, int k) {
    if (word_is_ordered(w, k)) return WordClass::Ordered;
    const int n = static_cast<int>(w.size());
    for (int r = 0; r + 1 < n; ++r) {
        if (w[r] == k + 1 && w[r + 1] == k) {
            Word j = w;
            std::swap(j[r], j[r + 1]);
            if (word_is_ordered(j, k)) return WordClass::AlmostOrdered;
        }
    }
    return WordClass::UnorderedOther;
}

}  // namespace klrsub
