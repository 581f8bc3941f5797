#pragma once

// Garnir combinatorics: Garnir nodes and belts, the Garnir tableau G^A, the
// decomposition of the belt into bricks of e nodes sharing the residue
// pattern of A, the brick permutation group, and the Garnir set written as
// {w . T^A : w in D^A} for the maximal element T^A and the minimal-length
// coset representatives D^A.

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <vector>

#include "klrsub/partition.hpp"
#include "klrsub/tableau.hpp"

namespace klrsub {

// Nodes A = (m, r, c) with (m, r+1, c) also in the diagram.
inline std::vector<Node> garnir_nodes(const Multipartition& la) {
    std::vector<Node> out;
    for (int m = 1; m <= la.level(); ++m) {
        const Partition& p = la.comp(m);
        for (long long r = 1; r + 1 <= p.length(); ++r)
            for (long long c = 1; c <= p.part(r + 1); ++c) out.push_back({m, r, c});
    }
    return out;
}

// Belt of A: the tail of row r from column c, plus the head of row r+1
// through column c.
inline std::vector<Node> garnir_belt(const Multipartition& la, const Node& A) {
    std::vector<Node> belt;
    for (long long z = A.c; z <= la.comp(A.m).part(A.r); ++z) belt.push_back({A.m, A.r, z});
    for (long long z = 1; z <= A.c; ++z) belt.push_back({A.m, A.r + 1, z});
    return belt;
}

// G^A: agrees with the initial tableau off the belt; the belt keeps its
// entry set but filled along row r+1 first, then row r, increasing.
inline Tableau garnir_tableau(const Multipartition& la, const Node& A) {
    if (!contains(la, {A.m, A.r + 1, A.c}))
        throw std::invalid_argument("garnir_tableau: not a Garnir node");
    Tableau G = initial_tableau(la);
    std::vector<Node> belt = garnir_belt(la, A);
    std::vector<long long> entries;
    for (const Node& B : belt) entries.push_back(G.entry(B));
    std::sort(entries.begin(), entries.end());
    // Fill order: row r+1 left to right, then row r left to right.
    std::size_t t = 0;
    for (const Node& B : belt)
        if (B.r == A.r + 1) G.entry(B) = entries[t++];
    for (const Node& B : belt)
        if (B.r == A.r) G.entry(B) = entries[t++];
    return G;
}

struct Brick {
    long long row = 0;    // r or r+1
    long long col = 0;    // leftmost column
    long long min_entry = 0;  // n^A_t: least G^A entry on the brick
};

struct GarnirContext {
    Multipartition shape;
    Node node;
    std::vector<Node> belt;
    std::vector<Brick> bricks;  // row r+1 bricks left to right, then row r
    long long k_A = 0;          // number of bricks
    long long f_A = 0;          // bricks in row r
    std::vector<long long> n_A;
};

// Bricks: runs of e consecutive belt nodes in one row whose first node has
// the residue of A.  In row r they start at columns c, c+e, ...; in row r+1
// they end at column c.  Their G^A entries form consecutive blocks of e.
inline GarnirContext brick_data(const Multipartition& la, const Node& A,
                                const Charge& kappa, int e) {
    GarnirContext ctx;
    ctx.shape = la;
    ctx.node = A;
    ctx.belt = garnir_belt(la, A);
    const Tableau G = garnir_tableau(la, A);
    const int resA = residue(A, kappa, e);

    auto scan_row = [&](long long row, long long zlo, long long zhi) {
        for (long long z = zlo; z + e - 1 <= zhi; ++z) {
            if (residue({A.m, row, z}, kappa, e) != resA) continue;
            Brick b;
            b.row = row;
            b.col = z;
            b.min_entry = G.entry({A.m, row, z});
            for (long long a = 1; a < e; ++a)
                b.min_entry = std::min(b.min_entry, G.entry({A.m, row, z + a}));
            ctx.bricks.push_back(b);
            z += e - 1;
        }
    };
    scan_row(A.r + 1, 1, A.c);
    scan_row(A.r, A.c, la.comp(A.m).part(A.r));

    ctx.k_A = static_cast<long long>(ctx.bricks.size());
    for (const Brick& b : ctx.bricks) {
        if (b.row == A.r) ++ctx.f_A;
        ctx.n_A.push_back(b.min_entry);
    }
    for (long long t = 0; t + 1 < ctx.k_A; ++t)
        if (ctx.n_A[t + 1] != ctx.n_A[t] + e)
            throw std::logic_error("brick_data: brick entries not consecutive");
    return ctx;
}

// A permutation of the brick indices 1..k, realised on entries by sending
// n_t + a to n_{pi(t)} + a for 0 <= a < e.
inline Permutation brick_permutation(const GarnirContext& ctx, int e, long long n,
                                     const std::vector<long long>& pi) {
    Permutation w = Permutation::identity(n);
    for (long long t = 0; t < ctx.k_A; ++t)
        for (long long a = 0; a < e; ++a)
            w.map[ctx.n_A[t] + a - 1] = ctx.n_A[pi[t] - 1] + a;
    return w;
}

struct GarnirSet {
    GarnirContext ctx;
    Tableau G;                              // Garnir tableau, minimal in the set
    Tableau T;                              // maximal element T^A
    std::vector<Permutation> coset_reps;    // D^A as permutations of entries
    std::vector<Tableau> tableaux;          // {w . T^A : w in D^A}
};

// D^A consists of the permutations of the k bricks that increase on the
// first f and the last k - f indices; applied to T^A they sweep out the
// Garnir set, with the longest representative giving back G^A.
inline GarnirSet garnir_set(const Multipartition& la, const Node& A, const Charge& kappa,
                            int e) {
    GarnirSet gs;
    gs.ctx = brick_data(la, A, kappa, e);
    gs.G = garnir_tableau(la, A);
    const long long n = la.size();
    const long long k = gs.ctx.k_A, f = gs.ctx.f_A;

    // T^A: blocks assigned to bricks in reading order, row r first.
    {
        std::vector<long long> pi(k);
        long long j = 0;
        for (long long t = 0; t < k; ++t)
            if (gs.ctx.bricks[t].row == A.r) pi[t] = ++j;
        for (long long t = 0; t < k; ++t)
            if (gs.ctx.bricks[t].row == A.r + 1) pi[t] = ++j;
        gs.T = act(brick_permutation(gs.ctx, e, n, pi), gs.G);
    }

    std::vector<long long> pi(k);
    std::iota(pi.begin(), pi.end(), 1);
    do {
        bool rep = true;
        for (long long t = 1; t < k && rep; ++t)
            if (t != f && pi[t - 1] > pi[t]) rep = false;
        if (!rep) continue;
        Permutation w = brick_permutation(gs.ctx, e, n, pi);
        gs.coset_reps.push_back(w);
        gs.tableaux.push_back(act(w, gs.T));
    } while (std::next_permutation(pi.begin(), pi.end()));
    return gs;
}

}  // namespace klrsub
