#pragma once

// Subdivision of (multi)partitions at a vertex k, in two independent forms:
//
//  * subdivide_young walks the Young diagram, decomposes the k- and
//    (k+1)-nodes into maximal zigzag strips and inserts a new node next to
//    every k-node (to its right for strips starting in row 1, above it for
//    strips starting in column 1);
//
//  * subdivide_abacus inserts a flush runner into the e-runner abacus
//    immediately left of runner k.
//
// Both land at rank e+1 and agree; equivalence_check verifies this pointwise.
// The splitting map cuts a partition into a multipartition whose components
// are all k-horizontal, undoing the rows on which subdivision acts vertically.

#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

#include "klrsub/lie.hpp"
#include "klrsub/partition.hpp"

namespace klrsub {

struct SubdivisionDatum {
    int e = 2;     // rank before subdivision
    int k = 0;     // subdivided vertex, 0 <= k < e
    Charge kappa;  // charge before subdivision
};

// Charge after subdivision: vertices <= k fixed, vertices > k shift up.
inline Charge subdivided_charge(const Charge& kappa, int k) {
    Charge out = kappa;
    for (int& x : out)
        if (x > k) ++x;
    return out;
}

// ---------------------------------------------------------------------------
// Strips

enum class StripKind {
    KtoK1,  // first node has residue k; the strip starts in row 1
    K1toK,  // first node has residue k+1; the strip starts in column 1
};

struct Strip {
    StripKind kind = StripKind::KtoK1;
    int component = 1;
    std::vector<Node> nodes;  // zigzag order
    bool maximal = true;
    bool trivial() const { return nodes.size() == 1; }
};

// Maximal strips of one component: walk right from k-nodes, down from
// (k+1)-nodes, starting at the nodes with no predecessor (k-nodes in row 1,
// (k+1)-nodes in column 1).  Every k- and (k+1)-node lies in exactly one.
inline std::vector<Strip> maximal_strips(const Partition& la, int x, int e, int k,
                                         int component = 1) {
    check_vertex(k, e);
    const int kp = (k + 1) % e;
    Charge kap{((x % e) + e) % e};
    auto res = [&](long long r, long long c) { return residue({1, r, c}, kap, e); };

    std::vector<Strip> out;
    auto walk = [&](long long r, long long c, StripKind kind) {
        Strip s;
        s.kind = kind;
        s.component = component;
        while (true) {
            s.nodes.push_back({component, r, c});
            if (res(r, c) == k) {
                ++c;  // k-node: continue right with a (k+1)-node
            } else {
                ++r;  // (k+1)-node: continue down with a k-node
            }
            if (c > la.part(r)) break;
        }
        out.push_back(std::move(s));
    };

    for (long long c = 1; c <= la.part(1); ++c)
        if (res(1, c) == k) walk(1, c, StripKind::KtoK1);
    for (long long r = 1; r <= la.length(); ++r)
        if (res(r, 1) == kp) walk(r, 1, StripKind::K1toK);
    return out;
}

inline std::vector<Strip> maximal_strips(const Multipartition& la, const Charge& kappa,
                                         int e, int k) {
    std::vector<Strip> out;
    for (int m = 1; m <= la.level(); ++m)
        for (auto& s : maximal_strips(la.comp(m), kappa[m - 1], e, k, m))
            out.push_back(std::move(s));
    return out;
}

// ---------------------------------------------------------------------------
// Young-diagram subdivision

// Insert one node per k-node: to its right when the node lies in a strip
// starting in row 1, directly above it when the strip starts in column 1.
// Implemented as node relocation: a node at (r, c) moves right past the
// insertions in its row and down past the insertions in its column.
inline Partition subdivide_young(const Partition& la, int x, int e, int k) {
    check_vertex(k, e);
    std::set<std::pair<long long, long long>> H, V;  // k-nodes by strip kind
    for (const Strip& s : maximal_strips(la, x, e, k)) {
        Charge kap{((x % e) + e) % e};
        for (const Node& A : s.nodes)
            if (residue(A, kap, e) == k)
                (s.kind == StripKind::KtoK1 ? H : V).insert({A.r, A.c});
    }
    auto h = [&](long long r, long long c) {
        long long n = 0;
        for (auto& [r0, c0] : H)
            if (r0 == r && c0 < c) ++n;
        return n;
    };
    auto v = [&](long long r, long long c) {
        long long n = 0;
        for (auto& [r0, c0] : V)
            if (c0 == c && r0 <= r) ++n;
        return n;
    };

    std::set<std::pair<long long, long long>> image;
    for (long long r = 1; r <= la.length(); ++r)
        for (long long c = 1; c <= la.part(r); ++c) {
            const long long hh = h(r, c), vv = v(r, c);
            image.insert({r + vv, c + hh});
            if (H.count({r, c})) image.insert({r + vv, c + hh + 1});
            if (V.count({r, c})) image.insert({r + vv - 1, c + hh});
        }

    // Read the image off as a partition; the insertion rule keeps rows
    // left-justified and lengths weakly decreasing.
    std::vector<long long> rowlen;
    for (auto& [r, c] : image) {
        if (r > static_cast<long long>(rowlen.size())) rowlen.resize(r, 0);
        ++rowlen[r - 1];
    }
    for (std::size_t i = 0; i < rowlen.size(); ++i) {
        for (long long c = 1; c <= rowlen[i]; ++c)
            if (!image.count({static_cast<long long>(i) + 1, c}))
                throw std::logic_error("subdivide_young: image not left-justified");
    }
    return Partition(std::move(rowlen));
}

inline Multipartition subdivide_young(const Multipartition& la, const Charge& kappa,
                                      int e, int k) {
    std::vector<Partition> comps;
    comps.reserve(la.comps.size());
    for (int m = 1; m <= la.level(); ++m)
        comps.push_back(subdivide_young(la.comp(m), kappa[m - 1], e, k));
    return Multipartition(std::move(comps));
}

// ---------------------------------------------------------------------------
// Abacus subdivision

// Bead counting: N_k(n) = #{m in {0..n-1} congruent to k mod e} when n >= 0,
// i.e. floor((n - k)/e) + 1 clamped at 0.
inline long long counting_N(long long n, int k, int e) {
    long long q = n - k;
    long long f = q >= 0 ? q / e : -((-q + e - 1) / e);
    return std::max(0LL, f + 1);
}

// Position of bead n after a runner is inserted immediately left of runner k:
// row q = n / e keeps its row, and within the row the new runner sits between
// the old runners k-1 and k.
inline long long iota(long long n, int k, int e) { return n + counting_N(n, k, e); }

struct AbacusSubdivisionDatum {
    long long a = 0;   // bead count before subdivision, a >= max(k, l(lambda))
    long long c = 0;   // beads on the inserted runner
    int d = 0;         // 0 <= d < e, with a + d = c*e + k
    long long a_prime = 0;  // bead count after subdivision, a + c
};

inline AbacusSubdivisionDatum make_datum(const Partition& la, int x, int e, int k,
                                         long long a) {
    if (a < std::max<long long>(k, la.length()))
        throw std::invalid_argument("make_datum: a must be >= max(k, l(lambda))");
    if (((a - x) % e + e) % e != 0)
        throw std::invalid_argument("make_datum: a must be congruent to the charge mod e");
    AbacusSubdivisionDatum dat;
    dat.a = a;
    dat.d = static_cast<int>(((k - a) % e + e) % e);
    dat.c = (a + dat.d - k) / e;
    dat.a_prime = dat.a + dat.c;
    return dat;
}

// Smallest admissible bead count congruent to the charge.
inline AbacusSubdivisionDatum canonical_datum(const Partition& la, int x, int e, int k) {
    long long lo = std::max<long long>(k, la.length());
    long long a = lo + ((x - lo) % e + e) % e;
    return make_datum(la, x, e, k, a);
}

inline Partition subdivide_abacus(const Partition& la, int x, int e, int k,
                                  const AbacusSubdivisionDatum& dat) {
    std::set<long long> image;
    for (long long n : beta_set(la, dat.a)) {
        long long m = iota(n, k, e);
        assert(m % (e + 1) != k);  // the inserted runner stays clear
        image.insert(m);
    }
    for (long long i = 0; i < dat.c; ++i) image.insert(i * (e + 1) + k);
    if (static_cast<long long>(image.size()) != dat.a_prime)
        throw std::logic_error("subdivide_abacus: bead collision");
    return partition_from_beta(image, dat.a_prime);
}

inline Partition subdivide_abacus(const Partition& la, int x, int e, int k) {
    return subdivide_abacus(la, x, e, k, canonical_datum(la, x, e, k));
}

// Young-diagram and abacus subdivisions agree; checked at the given bead
// count (canonical when a < 0).
inline bool equivalence_check(const Partition& la, int x, int e, int k, long long a = -1) {
    AbacusSubdivisionDatum dat =
        a < 0 ? canonical_datum(la, x, e, k) : make_datum(la, x, e, k, a);
    return subdivide_young(la, x, e, k) == subdivide_abacus(la, x, e, k, dat);
}

// ---------------------------------------------------------------------------
// Horizontality and splitting

// Number of rows 1 <= r < l(lambda) whose first node has residue k+1: the
// rows below which the splitting map cuts, and the number of nontrivial
// strips starting in column 1.
inline long long k_count(const Partition& la, int x, int e, int k) {
    Charge kap{((x % e) + e) % e};
    const int kp = (k + 1) % e;
    long long n = 0;
    for (long long r = 1; r < la.length(); ++r)
        if (residue({1, r, 1}, kap, e) == kp) ++n;
    return n;
}

inline bool is_k_horizontal(const Partition& la, int x, int e, int k) {
    return k_count(la, x, e, k) == 0;
}

inline bool is_k_horizontal(const Multipartition& la, const Charge& kappa, int e, int k) {
    for (int m = 1; m <= la.level(); ++m)
        if (!is_k_horizontal(la.comp(m), kappa[m - 1], e, k)) return false;
    return true;
}

struct SplitResult {
    Multipartition shape;
    Charge kappa;
};

// Cut a partition below every row whose first node has residue k+1.  Each
// piece after the first starts with a row of residue k, so it carries charge
// k; the result is k-horizontal and has the same residue content.
inline SplitResult split(const Partition& la, int x, int e, int k) {
    Charge kap{((x % e) + e) % e};
    const int kp = (k + 1) % e;
    std::vector<Partition> comps;
    Charge charges;
    std::vector<long long> cur;
    int charge = kap[0];
    for (long long r = 1; r <= la.length(); ++r) {
        cur.push_back(la.part(r));
        if (r < la.length() && residue({1, r, 1}, kap, e) == kp) {
            comps.emplace_back(std::move(cur));
            charges.push_back(charge);
            cur.clear();
            charge = k;
        }
    }
    comps.emplace_back(std::move(cur));
    charges.push_back(charge);
    return {Multipartition(std::move(comps)), std::move(charges)};
}

inline SplitResult split(const Multipartition& la, const Charge& kappa, int e, int k) {
    std::vector<Partition> comps;
    Charge charges;
    for (int m = 1; m <= la.level(); ++m) {
        SplitResult piece = split(la.comp(m), kappa[m - 1], e, k);
        for (auto& p : piece.shape.comps) comps.push_back(std::move(p));
        for (int x : piece.kappa) charges.push_back(x);
    }
    return {Multipartition(std::move(comps)), std::move(charges)};
}

}  // namespace klrsub
