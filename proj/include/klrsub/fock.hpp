#pragma once

// The q-Fock space of level l: runner addition on partitions, extended beta
// multisets and their tail counts epsilon_d, the action of the Chevalley
// operators f_i and their divided powers, and a canonical basis engine that
// builds each basis element from a ladder monomial applied to the vacuum and
// then straightens it to have coefficients in qZ[q] below the leading term.

#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "klrsub/laurent.hpp"
#include "klrsub/partition.hpp"
#include "klrsub/subdivision.hpp"
#include "klrsub/tableau.hpp"

namespace klrsub {

// ---------------------------------------------------------------------------
// Runner addition

// lambda^{+d}: on an abacus with a >= l(lambda) beads and a + d >= 0, write
// a + d = c*e + k with 0 <= k < e and insert a flush runner with c beads
// immediately left of runner k.  Independent of the choice of a.
inline Partition runner_add(const Partition& la, int e, long long d, long long a = -1) {
    if (a < 0) a = std::max({1LL, la.length(), -d});
    if (a < la.length() || a + d < 0)
        throw std::invalid_argument("runner_add: need a >= l(lambda) and a + d >= 0");
    const int k = static_cast<int>((a + d) % e);
    const long long c = (a + d - k) / e;
    std::set<long long> image;
    for (long long n : beta_set(la, a)) image.insert(iota(n, k, e));
    for (long long i = 0; i < c; ++i) image.insert(i * (e + 1) + k);
    if (static_cast<long long>(image.size()) != a + c)
        throw std::logic_error("runner_add: bead collision");
    return partition_from_beta(image, a + c);
}

inline Multipartition runner_add(const Multipartition& la, int e,
                                 const std::vector<long long>& d,
                                 const std::vector<long long>& a = {}) {
    if (static_cast<int>(d.size()) != la.level())
        throw std::invalid_argument("runner_add: one d per component");
    std::vector<Partition> comps;
    for (int m = 1; m <= la.level(); ++m)
        comps.push_back(runner_add(la.comp(m), e, d[m - 1],
                                   a.empty() ? -1 : a[m - 1]));
    return Multipartition(std::move(comps));
}

// Extended beta multiset X^e_a(lambda): each bead b contributes b, b-e,
// b-2e, ... down to its runner's smallest nonnegative position.
inline std::vector<long long> extended_beta(const Partition& la, int e, long long a) {
    std::vector<long long> X;
    for (long long b : beta_set(la, a))
        for (long long z = b; z >= 0; z -= e) X.push_back(z);
    std::sort(X.begin(), X.end());
    return X;
}

// Number of entries of the extended beta multiset that are >= a + d,
// counted with multiplicity; independent of the choice of a.
inline long long epsilon_d(const Partition& la, int e, long long d, long long a = -1) {
    if (a < 0) a = std::max({1LL, la.length(), -d});
    long long n = 0;
    for (long long z : extended_beta(la, e, a))
        if (z >= a + d) ++n;
    return n;
}

inline std::vector<long long> epsilon_d(const Multipartition& la, int e,
                                        const std::vector<long long>& d) {
    std::vector<long long> eps;
    for (int m = 1; m <= la.level(); ++m)
        eps.push_back(epsilon_d(la.comp(m), e, d[m - 1]));
    return eps;
}

// ---------------------------------------------------------------------------
// Fock vectors and the f-operator action

using FockVector = std::map<Multipartition, Laurent>;

inline void add_term(FockVector& v, const Multipartition& la, const Laurent& c) {
    Laurent& x = v[la];
    x += c;
    if (x.is_zero()) v.erase(la);
}

inline FockVector operator+(FockVector a, const FockVector& b) {
    for (auto& [la, c] : b) add_term(a, la, c);
    return a;
}

inline FockVector operator*(const Laurent& c, FockVector v) {
    for (auto it = v.begin(); it != v.end();) {
        it->second = c * it->second;
        it = it->second.is_zero() ? v.erase(it) : std::next(it);
    }
    return v;
}

inline FockVector operator-(FockVector a, const FockVector& b) {
    return a + (Laurent::monomial(-1, 0) * b);
}

// The exponent rule for f_i: for an addable i-node A the power of q counts
// addable minus removable i-nodes of lambda on one side of A, with an
// overall sign.  Which side and which sign are conventions of the Fock
// space; the defaults reproduce the canonical bases in the golden data.
struct FockConvention {
    bool count_above = false;  // count nodes strictly above A instead of below
    bool negate = false;       // use q^{-stat}
};

class FockEngine {
public:
    FockEngine(int e, Charge kappa, FockConvention conv = {})
        : e_(e), kappa_(std::move(kappa)), conv_(conv) {
        if (e_ < 2) throw std::invalid_argument("FockEngine: e >= 2 required");
        for (int x : kappa_) check_vertex(x, e_);
    }

    int e() const { return e_; }
    const Charge& charge() const { return kappa_; }

    long long f_exponent(const Multipartition& la, const Node& A) const {
        const int i = residue(A, kappa_, e_);
        long long stat = 0;
        for (const Node& B : addable_nodes(la))
            if (B != A && residue(B, kappa_, e_) == i &&
                strictly_below(B, A) != conv_.count_above)
                ++stat;
        for (const Node& B : removable_nodes(la))
            if (residue(B, kappa_, e_) == i &&
                strictly_below(B, A) != conv_.count_above)
                --stat;
        return conv_.negate ? -stat : stat;
    }

    FockVector f(int i, const FockVector& v) const {
        check_vertex(i, e_);
        FockVector out;
        for (const auto& [la, c] : v)
            for (const Node& A : addable_nodes(la))
                if (residue(A, kappa_, e_) == i)
                    add_term(out, add_node(la, A),
                             c * Laurent::q(static_cast<int>(f_exponent(la, A))));
        return out;
    }

    // Divided power f_i^{(r)} = f_i^r / [r]!; the division is exact.
    FockVector f_divided(int i, int r, const FockVector& v) const {
        FockVector w = v;
        for (int t = 0; t < r; ++t) w = f(i, w);
        const Laurent fac = Laurent::quantum_factorial(r);
        FockVector out;
        for (const auto& [la, c] : w) {
            auto q = c.divide_exact(fac);
            if (!q) throw std::logic_error("f_divided: inexact division by [r]!");
            if (!q->is_zero()) out.emplace(la, *q);
        }
        return out;
    }

    // Ladder monomial A(mu): group the nodes of [mu] by the ladder number
    // tau = r + (e-1)(c-1) - kappa_m, constant on down-left ladders and
    // carrying the uniform residue 1 - tau mod e, and apply the divided
    // powers f_{i_tau}^{(#nodes)} to the vacuum in increasing tau order.
    FockVector ladder_monomial(const Multipartition& mu) const {
        std::map<long long, long long> groups;  // tau -> node count
        for (int m = 1; m <= mu.level(); ++m)
            for (long long r = 1; r <= mu.comp(m).length(); ++r)
                for (long long c = 1; c <= mu.comp(m).part(r); ++c)
                    ++groups[r + (e_ - 1) * (c - 1) - kappa_[m - 1]];
        FockVector v;
        v.emplace(Multipartition(std::vector<Partition>(mu.level())), Laurent::one());
        for (auto [tau, cnt] : groups) {
            const int i = static_cast<int>(((1 - tau) % e_ + e_) % e_);
            v = f_divided(i, static_cast<int>(cnt), v);
        }
        return v;
    }

    // Canonical basis element G(mu): the unique bar-invariant vector with
    // coefficient 1 at mu and coefficients in qZ[q] elsewhere.  Computed by
    // straightening the ladder monomial from the top of the dominance order.
    // Throws if the monomial fails to be unitriangular at mu.
    const FockVector& canonical(const Multipartition& mu) {
        auto it = cache_.find(mu);
        if (it != cache_.end()) return it->second;

        FockVector v = ladder_monomial(mu);
        {
            auto lead = v.find(mu);
            if (lead == v.end() || !(lead->second == Laurent::one()))
                throw std::runtime_error("canonical: ladder monomial is not unital at " +
                                         str(mu));
            for (const auto& [la, c] : v)
                if (!dominates(mu, la))
                    throw std::runtime_error("canonical: support of monomial for " +
                                             str(mu) + " is not dominated");
        }

        for (long long guard = 0; guard < 100000; ++guard) {
            // Pick an offending term maximal in dominance, so that the
            // correction below only touches strictly smaller terms.
            std::vector<const Multipartition*> bad;
            for (const auto& [la, c] : v)
                if (!(la == mu) && !c.in_qZq()) bad.push_back(&la);
            const Multipartition* pick = nullptr;
            for (const Multipartition* p : bad) {
                bool maximal = true;
                for (const Multipartition* o : bad)
                    if (o != p && dominates(*o, *p) && !(*o == *p)) maximal = false;
                if (maximal) {
                    pick = p;
                    break;
                }
            }
            if (!pick) {
                for (const auto& [la, c] : v)
                    if (!(la == mu) && !c.in_qZq())
                        throw std::logic_error("canonical: straightening stalled");
                return cache_.emplace(mu, std::move(v)).first->second;
            }
            const Multipartition la = *pick;
            const Laurent sym = v.at(la).bar_invariant_part();
            v = v - (sym * canonical(la));
            assert(!v.count(la) || v.at(la).in_qZq());
        }
        throw std::logic_error("canonical: straightening did not terminate");
    }

    // d^e_{la, mu}(q): the coefficient of |la> in G(mu).
    Laurent decomposition_number(const Multipartition& la, const Multipartition& mu) {
        const FockVector& g = canonical(mu);
        auto it = g.find(la);
        return it == g.end() ? Laurent::zero() : it->second;
    }

private:
    int e_;
    Charge kappa_;
    FockConvention conv_;
    std::map<Multipartition, FockVector> cache_;
};

inline std::string str(const FockVector& v) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [la, c] : v) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")|" << str(la) << ">";
    }
    return first ? "0" : os.str();
}

}  // namespace klrsub
