#pragma once

// Partitions, multipartitions, charges, residues, beta numbers and abaci.
//
// Conventions: partitions store their nonzero parts only; part(i) returns 0
// beyond the length.  Multipartition components and node coordinates
// (component m, row r, column c) are 1-based to match the usual coordinates
// for Young diagrams of multipartitions.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "klrsub/lie.hpp"

namespace klrsub {

struct Partition {
    std::vector<long long> parts;  // weakly decreasing, no trailing zeros

    Partition() = default;
    Partition(std::initializer_list<long long> p) : parts(p) { normalize(); }
    explicit Partition(std::vector<long long> p) : parts(std::move(p)) { normalize(); }

    void normalize() {
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        for (std::size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i] < parts[i + 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        for (long long p : parts)
            if (p < 0) throw std::invalid_argument("Partition: parts must be nonnegative");
    }

    long long part(long long i) const {  // 1-based
        return (i >= 1 && i <= static_cast<long long>(parts.size())) ? parts[i - 1] : 0;
    }
    long long length() const { return static_cast<long long>(parts.size()); }
    long long size() const {
        long long s = 0;
        for (long long p : parts) s += p;
        return s;
    }
    bool empty() const { return parts.empty(); }

    Partition conjugate() const {
        Partition c;
        if (parts.empty()) return c;
        c.parts.assign(parts[0], 0);
        for (long long p : parts)
            for (long long j = 0; j < p; ++j) ++c.parts[j];
        return c;
    }

    auto operator<=>(const Partition&) const = default;
};

struct Multipartition {
    std::vector<Partition> comps;  // length ell >= 1

    Multipartition() : comps(1) {}
    explicit Multipartition(std::vector<Partition> c) : comps(std::move(c)) {
        if (comps.empty()) throw std::invalid_argument("Multipartition: need >= 1 component");
    }
    Multipartition(std::initializer_list<Partition> c) : comps(c) {
        if (comps.empty()) throw std::invalid_argument("Multipartition: need >= 1 component");
    }

    int level() const { return static_cast<int>(comps.size()); }
    const Partition& comp(int m) const { return comps.at(m - 1); }  // 1-based
    Partition& comp(int m) { return comps.at(m - 1); }
    long long size() const {
        long long s = 0;
        for (const auto& c : comps) s += c.size();
        return s;
    }

    auto operator<=>(const Multipartition&) const = default;
};

// Charge: one vertex per component; sum of Lambda_{kappa_m} is the weight.
using Charge = std::vector<int>;

inline Weight weight_of_charge(const Charge& kappa, int e) {
    Weight L(e);
    for (int x : kappa) {
        check_vertex(x, e);
        ++L.coeff[x];
    }
    return L;
}

struct Node {
    int m = 1;         // component, 1-based
    long long r = 1;   // row, 1-based
    long long c = 1;   // column, 1-based
    auto operator<=>(const Node&) const = default;
};

inline bool contains(const Multipartition& la, const Node& A) {
    return A.m >= 1 && A.m <= la.level() && A.r >= 1 && A.c >= 1 &&
           A.c <= la.comp(A.m).part(A.r);
}

// ---------------------------------------------------------------------------
// Beta numbers and abaci

struct Abacus {
    int runners = 1;                 // number of runners e
    std::set<long long> beads;       // bead positions; x = a*e + b sits on
                                     // runner b in row a, rows grow downward
    long long bead_count() const { return static_cast<long long>(beads.size()); }
};

// M-beta set {lambda_i - i + M : 1 <= i <= M}, returned sorted increasing.
inline std::set<long long> beta_set(const Partition& la, long long M) {
    if (M < la.length())
        throw std::invalid_argument("beta_set: need at least l(lambda) beads");
    std::set<long long> B;
    for (long long i = 1; i <= M; ++i) B.insert(la.part(i) - i + M);
    assert(static_cast<long long>(B.size()) == M);
    return B;
}

inline Partition partition_from_beta(const std::set<long long>& B, long long M) {
    if (static_cast<long long>(B.size()) != M)
        throw std::invalid_argument("partition_from_beta: |B| != M");
    if (!B.empty() && *B.begin() < 0)
        throw std::invalid_argument("partition_from_beta: negative position");
    std::vector<long long> parts;
    long long i = M;
    for (long long b : B) {  // increasing order pairs with i = M, M-1, ..., 1
        parts.push_back(b + i - M);
        --i;
    }
    std::reverse(parts.begin(), parts.end());
    return Partition(std::move(parts));
}

inline Abacus abacus_of(const Partition& la, int e, long long M) {
    Abacus a;
    a.runners = e;
    a.beads = beta_set(la, M);
    return a;
}

inline Partition partition_of_abacus(const Abacus& a) {
    return partition_from_beta(a.beads, a.bead_count());
}

// Monospaced bead diagram: runner labels on top, beads as 'o', gaps as '-'.
inline std::string render(const Abacus& a, long long min_rows = 0) {
    long long rows = min_rows;
    for (long long b : a.beads) rows = std::max(rows, b / a.runners + 1);
    std::ostringstream os;
    for (int b = 0; b < a.runners; ++b) os << b % 10 << ' ';
    os << '\n';
    for (long long r = 0; r < rows; ++r) {
        for (int b = 0; b < a.runners; ++b)
            os << (a.beads.count(r * a.runners + b) ? 'o' : '-') << ' ';
        os << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Residues

inline int residue(const Node& A, const Charge& kappa, int e) {
    if (A.m < 1 || A.m > static_cast<int>(kappa.size()))
        throw std::invalid_argument("residue: component index out of range");
    long long v = (kappa[A.m - 1] + A.c - A.r) % e;
    return static_cast<int>((v + e) % e);
}

inline Root residue_content(const Multipartition& la, const Charge& kappa, int e) {
    Root alpha(e);
    for (int m = 1; m <= la.level(); ++m) {
        const Partition& p = la.comp(m);
        for (long long r = 1; r <= p.length(); ++r)
            for (long long c = 1; c <= p.part(r); ++c)
                ++alpha.coeff[residue({m, r, c}, kappa, e)];
    }
    return alpha;
}

// Residue sequence of the initial tableau of la: residues of the nodes read
// component by component, row by row, left to right.
inline Word initial_residue_word(const Multipartition& la, const Charge& kappa, int e) {
    Word w;
    for (int m = 1; m <= la.level(); ++m) {
        const Partition& p = la.comp(m);
        for (long long r = 1; r <= p.length(); ++r)
            for (long long c = 1; c <= p.part(r); ++c)
                w.push_back(residue({m, r, c}, kappa, e));
    }
    return w;
}

// One (residue-of-leftmost-node, length) pair per nonempty row, in
// row-reading order across components.
inline std::vector<std::pair<int, long long>> row_segments(const Multipartition& la,
                                                           const Charge& kappa, int e) {
    std::vector<std::pair<int, long long>> segs;
    for (int m = 1; m <= la.level(); ++m) {
        const Partition& p = la.comp(m);
        for (long long r = 1; r <= p.length(); ++r)
            segs.emplace_back(residue({m, r, 1}, kappa, e), p.part(r));
    }
    return segs;
}

// ---------------------------------------------------------------------------
// Regularity, dominance, enumeration

// No part repeated e or more times; equivalently the abacus has no run of e
// consecutive beads.
inline bool is_e_regular(const Partition& la, int e) {
    if (e < 2) throw std::invalid_argument("is_e_regular: e >= 2 required");
    long long run = 1;
    for (std::size_t i = 1; i < la.parts.size(); ++i) {
        run = (la.parts[i] == la.parts[i - 1]) ? run + 1 : 1;
        if (run >= e) return false;
    }
    return true;
}

// Dominance on ell-compositions: lambda dominates mu iff every partial sum
// (through earlier components, then rows of the current one) is >=.
using Multicomposition = std::vector<std::vector<long long>>;

inline Multicomposition to_composition(const Multipartition& la) {
    Multicomposition c;
    c.reserve(la.comps.size());
    for (const auto& p : la.comps) c.push_back(p.parts);
    return c;
}

inline bool dominates(const Multicomposition& la, const Multicomposition& mu) {
    const std::size_t ell = std::max(la.size(), mu.size());
    long long base_l = 0, base_m = 0;
    for (std::size_t t = 0; t < ell; ++t) {
        static const std::vector<long long> kEmpty;
        const auto& lt = t < la.size() ? la[t] : kEmpty;
        const auto& mt = t < mu.size() ? mu[t] : kEmpty;
        long long sl = base_l, sm = base_m;
        const std::size_t rows = std::max(lt.size(), mt.size());
        for (std::size_t i = 0; i < rows; ++i) {
            sl += i < lt.size() ? lt[i] : 0;
            sm += i < mt.size() ? mt[i] : 0;
            if (sl < sm) return false;
        }
        base_l = sl;
        base_m = sm;
    }
    return true;
}

inline bool dominates(const Multipartition& la, const Multipartition& mu) {
    return dominates(to_composition(la), to_composition(mu));
}

// All partitions of n (optionally with every part <= max_part).
inline std::vector<Partition> all_partitions(long long n, long long max_part = -1) {
    std::vector<Partition> out;
    std::vector<long long> cur;
    auto rec = [&](auto&& self, long long rem, long long cap) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (long long p = std::min(rem, cap); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, max_part < 0 ? n : std::min(n, max_part));
    return out;
}

// All ell-partitions of n.
inline std::vector<Multipartition> all_multipartitions(long long n, int ell) {
    std::vector<Multipartition> out;
    std::vector<Partition> cur(ell);
    auto rec = [&](auto&& self, int m, long long rem) -> void {
        if (m == ell - 1) {
            for (auto& p : all_partitions(rem)) {
                cur[m] = p;
                out.emplace_back(cur);
            }
            return;
        }
        for (long long s = 0; s <= rem; ++s)
            for (auto& p : all_partitions(s)) {
                cur[m] = p;
                self(self, m + 1, rem - s);
            }
    };
    rec(rec, 0, n);
    return out;
}

// The ell-partitions of ht(alpha) whose residue content equals alpha.
inline std::vector<Multipartition> partitions_with_content(const Root& alpha,
                                                           const Charge& kappa, int e,
                                                           long long max_size) {
    const long long n = alpha.height();
    if (n > max_size)
        throw std::invalid_argument("partitions_with_content: height exceeds max_size guard");
    std::vector<Multipartition> out;
    for (auto& la : all_multipartitions(n, static_cast<int>(kappa.size())))
        if (residue_content(la, kappa, e) == alpha) out.push_back(la);
    return out;
}

// ---------------------------------------------------------------------------
// Printing

inline std::string str(const Partition& p) {
    if (p.empty()) return "-";
    std::ostringstream os;
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (i) os << ',';
        os << p.parts[i];
    }
    return os.str();
}

inline std::string str(const Multipartition& la) {
    std::ostringstream os;
    for (int m = 1; m <= la.level(); ++m) {
        if (m > 1) os << '|';
        os << str(la.comp(m));
    }
    return os.str();
}

}  // namespace klrsub
