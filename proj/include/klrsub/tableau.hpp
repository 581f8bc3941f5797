#pragma once

// Row-standard and standard tableaux on multipartitions: the initial
// tableau, residue sequences, the permutation taking the initial tableau to
// a given one, Bruhat order, homogeneous degrees, and the subdivision map on
// tableaux of k-horizontal shapes.

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "klrsub/lie.hpp"
#include "klrsub/partition.hpp"
#include "klrsub/subdivision.hpp"

namespace klrsub {

struct Tableau {
    Multipartition shape;
    std::vector<std::vector<std::vector<long long>>> rows;  // [m-1][r-1][c-1]

    Tableau() = default;
    explicit Tableau(Multipartition sh) : shape(std::move(sh)) {
        rows.resize(shape.level());
        for (int m = 1; m <= shape.level(); ++m) {
            const Partition& p = shape.comp(m);
            rows[m - 1].resize(p.length());
            for (long long r = 1; r <= p.length(); ++r)
                rows[m - 1][r - 1].assign(p.part(r), 0);
        }
    }

    long long size() const { return shape.size(); }
    long long entry(const Node& A) const { return rows[A.m - 1][A.r - 1][A.c - 1]; }
    long long& entry(const Node& A) { return rows[A.m - 1][A.r - 1][A.c - 1]; }

    Node node_of(long long t) const {
        for (int m = 1; m <= shape.level(); ++m)
            for (long long r = 1; r <= shape.comp(m).length(); ++r)
                for (long long c = 1; c <= shape.comp(m).part(r); ++c)
                    if (rows[m - 1][r - 1][c - 1] == t) return {m, r, c};
        throw std::invalid_argument("Tableau: entry not present");
    }

    bool operator==(const Tableau&) const = default;
};

// Nodes in row-reading order: component by component, row by row, left to
// right.
inline std::vector<Node> reading_order(const Multipartition& la) {
    std::vector<Node> nodes;
    for (int m = 1; m <= la.level(); ++m)
        for (long long r = 1; r <= la.comp(m).length(); ++r)
            for (long long c = 1; c <= la.comp(m).part(r); ++c)
                nodes.push_back({m, r, c});
    return nodes;
}

// T^lambda: entries 1..n in row-reading order.
inline Tableau initial_tableau(const Multipartition& la) {
    Tableau T(la);
    long long t = 0;
    for (const Node& A : reading_order(la)) T.entry(A) = ++t;
    return T;
}

inline bool is_row_standard(const Tableau& T) {
    const long long n = T.size();
    std::vector<char> seen(n + 1, 0);
    for (const auto& comp : T.rows)
        for (const auto& row : comp)
            for (std::size_t c = 0; c < row.size(); ++c) {
                long long v = row[c];
                if (v < 1 || v > n || seen[v]) return false;
                seen[v] = 1;
                if (c > 0 && row[c - 1] >= v) return false;
            }
    return true;
}

inline bool is_standard(const Tableau& T) {
    if (!is_row_standard(T)) return false;
    for (const auto& comp : T.rows)
        for (std::size_t r = 1; r < comp.size(); ++r)
            for (std::size_t c = 0; c < comp[r].size(); ++c)
                if (comp[r - 1][c] >= comp[r][c]) return false;
    return true;
}

// i^T: residue of the node containing t, for t = 1..n.
inline Word residue_sequence(const Tableau& T, const Charge& kappa, int e) {
    const long long n = T.size();
    Word w(n, -1);
    for (int m = 1; m <= T.shape.level(); ++m)
        for (long long r = 1; r <= T.shape.comp(m).length(); ++r)
            for (long long c = 1; c <= T.shape.comp(m).part(r); ++c)
                w[T.entry({m, r, c}) - 1] = residue({m, r, c}, kappa, e);
    return w;
}

// Shape of the restriction of T to entries <= t, as a multicomposition (rows
// of row-standard tableaux restrict to left-justified segments).
inline Multicomposition restricted_shape(const Tableau& T, long long t) {
    Multicomposition out(T.rows.size());
    for (std::size_t m = 0; m < T.rows.size(); ++m)
        for (const auto& row : T.rows[m]) {
            long long len = 0;
            for (long long v : row)
                if (v <= t) ++len;
            out[m].push_back(len);
        }
    return out;
}

// S dominates T iff every restriction of S dominates the matching
// restriction of T.
inline bool dominates(const Tableau& S, const Tableau& T) {
    if (S.shape.level() != T.shape.level() || S.size() != T.size()) return false;
    for (long long t = 1; t <= S.size(); ++t)
        if (!dominates(restricted_shape(S, t), restricted_shape(T, t))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Permutations

struct Permutation {
    std::vector<long long> map;  // 1-based one-line notation: map[i-1] = w(i)

    Permutation() = default;
    static Permutation identity(long long n) {
        Permutation w;
        w.map.resize(n);
        std::iota(w.map.begin(), w.map.end(), 1);
        return w;
    }
    static Permutation transposition(long long n, long long a, long long b) {
        Permutation w = identity(n);
        std::swap(w.map[a - 1], w.map[b - 1]);
        return w;
    }
    long long n() const { return static_cast<long long>(map.size()); }
    long long operator()(long long i) const { return map.at(i - 1); }

    // (w * u)(i) = w(u(i))
    friend Permutation operator*(const Permutation& w, const Permutation& u) {
        assert(w.n() == u.n());
        Permutation p;
        p.map.resize(w.n());
        for (long long i = 1; i <= w.n(); ++i) p.map[i - 1] = w(u(i));
        return p;
    }

    long long length() const {  // inversion count
        long long inv = 0;
        for (std::size_t i = 0; i < map.size(); ++i)
            for (std::size_t j = i + 1; j < map.size(); ++j)
                if (map[i] > map[j]) ++inv;
        return inv;
    }

    // Reduced word via repeated leftmost descents of w^{-1}: sorting the
    // one-line notation by adjacent swaps.  Generators are 1-based: r means
    // the simple transposition s_r = (r, r+1).  The word multiplies left to
    // right, w = s_{word[0]} s_{word[1]} ...
    std::vector<long long> reduced_word() const {
        std::vector<long long> v = map, word;
        bool moved = true;
        while (moved) {
            moved = false;
            for (std::size_t i = 0; i + 1 < v.size(); ++i)
                if (v[i] > v[i + 1]) {
                    std::swap(v[i], v[i + 1]);
                    word.push_back(static_cast<long long>(i) + 1);
                    moved = true;
                    break;
                }
        }
        std::reverse(word.begin(), word.end());
        return word;
    }

    bool operator==(const Permutation&) const = default;
};

// The permutation with w . T^lambda = T: w(t) is the entry of T at the t-th
// node in reading order.
inline Permutation permutation_of(const Tableau& T) {
    Permutation w;
    for (const Node& A : reading_order(T.shape)) w.map.push_back(T.entry(A));
    return w;
}

// w . T replaces every entry x by w(x).
inline Tableau act(const Permutation& w, const Tableau& T) {
    Tableau S = T;
    for (auto& comp : S.rows)
        for (auto& row : comp)
            for (long long& v : row) v = w(v);
    return S;
}

// Bruhat order by the prefix criterion: u <= w iff for every i the sorted
// set {u(1),...,u(i)} is entrywise <= the sorted {w(1),...,w(i)}.
inline bool bruhat_leq(const Permutation& u, const Permutation& w) {
    if (u.n() != w.n()) throw std::invalid_argument("bruhat_leq: size mismatch");
    std::vector<long long> a, b;
    for (long long i = 1; i <= u.n(); ++i) {
        a.insert(std::upper_bound(a.begin(), a.end(), u(i)), u(i));
        b.insert(std::upper_bound(b.begin(), b.end(), w(i)), w(i));
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[j] > b[j]) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Addable and removable nodes, degrees

inline std::vector<Node> addable_nodes(const Multipartition& la) {
    std::vector<Node> out;
    for (int m = 1; m <= la.level(); ++m) {
        const Partition& p = la.comp(m);
        for (long long r = 1; r <= p.length() + 1; ++r)
            if (r == 1 || p.part(r - 1) > p.part(r)) out.push_back({m, r, p.part(r) + 1});
    }
    return out;
}

inline std::vector<Node> removable_nodes(const Multipartition& la) {
    std::vector<Node> out;
    for (int m = 1; m <= la.level(); ++m) {
        const Partition& p = la.comp(m);
        for (long long r = 1; r <= p.length(); ++r)
            if (p.part(r) > p.part(r + 1)) out.push_back({m, r, p.part(r)});
    }
    return out;
}

inline Multipartition add_node(const Multipartition& la, const Node& A) {
    Multipartition mu = la;
    auto& parts = mu.comp(A.m).parts;
    if (A.r == static_cast<long long>(parts.size()) + 1)
        parts.push_back(1);
    else
        ++parts.at(A.r - 1);
    return mu;
}

inline Multipartition remove_node(const Multipartition& la, const Node& A) {
    Multipartition mu = la;
    auto& parts = mu.comp(A.m).parts;
    --parts.at(A.r - 1);
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return mu;
}

// Node B lies strictly below node A when B is in a later component, or the
// same component and a lower row.
inline bool strictly_below(const Node& B, const Node& A) {
    return B.m > A.m || (B.m == A.m && B.r > A.r);
}

// d_A(lambda) for a removable node A of lambda with residue i: addable
// i-nodes of lambda strictly below A, minus removable i-nodes of lambda
// strictly below A.
inline long long node_degree(const Multipartition& la, const Node& A, const Charge& kappa,
                             int e) {
    const int i = residue(A, kappa, e);
    long long d = 0;
    for (const Node& B : addable_nodes(la))
        if (strictly_below(B, A) && residue(B, kappa, e) == i) ++d;
    for (const Node& B : removable_nodes(la))
        if (strictly_below(B, A) && residue(B, kappa, e) == i) --d;
    return d;
}

// deg(T) = sum over t of d_{A_t}(shape of T restricted to <= t), where A_t
// is the node containing t.  Defined for standard tableaux.
inline long long degree(const Tableau& T, const Charge& kappa, int e) {
    long long d = 0;
    Multipartition sh = T.shape;
    for (long long t = T.size(); t >= 1; --t) {
        const Node A = T.node_of(t);
        d += node_degree(sh, A, kappa, e);
        sh = remove_node(sh, A);
    }
    return d;
}

// Enumerate the standard tableaux of shape la, passing each together with
// its degree; the degree accumulates node by node as entries are placed.
inline void for_each_standard(const Multipartition& la, const Charge& kappa, int e,
                              const std::function<void(const Tableau&, long long)>& fn) {
    const long long n = la.size();
    Tableau T(la);
    Multipartition cur(std::vector<Partition>(la.level()));
    std::function<void(long long, long long)> rec = [&](long long t, long long deg) {
        if (t > n) {
            fn(T, deg);
            return;
        }
        for (const Node& A : addable_nodes(cur)) {
            if (!contains(la, A)) continue;
            Multipartition next = add_node(cur, A);
            T.entry(A) = t;
            std::swap(cur, next);
            rec(t + 1, deg + node_degree(cur, A, kappa, e));
            std::swap(cur, next);
            T.entry(A) = 0;
        }
    };
    rec(1, 0);
}

// ---------------------------------------------------------------------------
// Tableau subdivision (k-horizontal shapes)

// Every k-node of a k-horizontal shape sits in a strip starting in row 1, so
// subdivision inserts a node directly right of each k-node.  Entries move by
// the position tracing of the residue sequence; the inserted node right of
// the k-node containing t gets phi(t) + 1.
inline Tableau subdivide_tableau(const Tableau& T, const Charge& kappa, int e, int k) {
    if (!is_k_horizontal(T.shape, kappa, e, k))
        throw std::invalid_argument("subdivide_tableau: shape is not k-horizontal");
    const Word iT = residue_sequence(T, kappa, e);
    const std::vector<int> phi = position_tracing(iT, k);

    Tableau S(subdivide_young(T.shape, kappa, e, k));
    for (int m = 1; m <= T.shape.level(); ++m) {
        const Partition& p = T.shape.comp(m);
        for (long long r = 1; r <= p.length(); ++r) {
            long long shift = 0;  // k-nodes passed so far in this row
            for (long long c = 1; c <= p.part(r); ++c) {
                const long long t = T.entry({m, r, c});
                S.entry({m, r, c + shift}) = phi[t - 1];
                if (residue({m, r, c}, kappa, e) == k) {
                    ++shift;
                    S.entry({m, r, c + shift}) = phi[t - 1] + 1;
                }
            }
        }
    }
    return S;
}

}  // namespace klrsub
