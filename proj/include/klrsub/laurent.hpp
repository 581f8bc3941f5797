#pragma once

// Exact arithmetic in the Laurent polynomial ring Z[q, q^-1].
//
// Coefficients are 64-bit integers; the polynomials arising from canonical
// basis computations at desk scale stay tiny, but all arithmetic asserts on
// overflow-free ranges implicitly via the small degrees involved.

#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace klrsub {

class Laurent {
public:
    using Coeff = long long;

    Laurent() = default;

    static Laurent zero() { return Laurent(); }

    static Laurent one() { return monomial(1, 0); }

    // c * q^n
    static Laurent monomial(Coeff c, int n) {
        Laurent p;
        if (c != 0) p.coeffs_[n] = c;
        return p;
    }

    static Laurent q(int n = 1) { return monomial(1, n); }

    // Balanced quantum integer [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}.
    static Laurent quantum_integer(int n) {
        Laurent p;
        for (int d = n - 1; d >= 1 - n; d -= 2) p.coeffs_[d] = 1;
        return p;
    }

    // [n]! = [n][n-1]...[1]
    static Laurent quantum_factorial(int n) {
        Laurent p = one();
        for (int i = 2; i <= n; ++i) p = p * quantum_integer(i);
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    Coeff coeff(int n) const {
        auto it = coeffs_.find(n);
        return it == coeffs_.end() ? 0 : it->second;
    }

    int min_deg() const {
        assert(!coeffs_.empty());
        return coeffs_.begin()->first;
    }

    int max_deg() const {
        assert(!coeffs_.empty());
        return coeffs_.rbegin()->first;
    }

    const std::map<int, Coeff>& terms() const { return coeffs_; }

    // Bar involution: q -> q^{-1}.
    Laurent bar() const {
        Laurent p;
        for (auto [n, c] : coeffs_) p.coeffs_[-n] = c;
        return p;
    }

    bool is_bar_invariant() const { return *this == bar(); }

    // True iff the polynomial lies in qZ[q] (all exponents >= 1).
    bool in_qZq() const { return coeffs_.empty() || min_deg() >= 1; }

    Coeff evaluate_at_one() const {
        Coeff s = 0;
        for (auto [n, c] : coeffs_) s += c;
        return s;
    }

    // The bar-invariant part of the unique decomposition p = sym + pos with
    // sym bar-invariant and pos in qZ[q]: the constant term plus, for each
    // n > 0, the coefficient of q^{-n} spread onto q^n + q^{-n}.
    Laurent bar_invariant_part() const {
        Laurent sym;
        for (auto [n, c] : coeffs_) {
            if (n == 0) {
                sym += monomial(c, 0);
            } else if (n < 0) {
                sym += monomial(c, n);
                sym += monomial(c, -n);
            }
        }
        return sym;
    }

    Laurent& operator+=(const Laurent& o) {
        for (auto [n, c] : o.coeffs_) {
            auto it = coeffs_.find(n);
            if (it == coeffs_.end()) {
                coeffs_[n] = c;
            } else if ((it->second += c) == 0) {
                coeffs_.erase(it);
            }
        }
        return *this;
    }

    Laurent& operator-=(const Laurent& o) {
        for (auto [n, c] : o.coeffs_) {
            auto it = coeffs_.find(n);
            if (it == coeffs_.end()) {
                coeffs_[n] = -c;
            } else if ((it->second -= c) == 0) {
                coeffs_.erase(it);
            }
        }
        return *this;
    }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

    Laurent operator-() const {
        Laurent p;
        for (auto [n, c] : coeffs_) p.coeffs_[n] = -c;
        return p;
    }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent p;
        for (auto [n, c] : a.coeffs_)
            for (auto [m, d] : b.coeffs_) {
                auto it = p.coeffs_.find(n + m);
                if (it == p.coeffs_.end()) {
                    p.coeffs_[n + m] = c * d;
                } else if ((it->second += c * d) == 0) {
                    p.coeffs_.erase(it);
                }
            }
        return p;
    }

    friend Laurent operator*(Coeff c, const Laurent& a) { return monomial(c, 0) * a; }

    bool operator==(const Laurent& o) const = default;

    // Exact division in Z[q, q^-1]; returns std::nullopt if the division
    // leaves a remainder or requires non-integer coefficients.
    std::optional<Laurent> divide_exact(const Laurent& den) const {
        if (den.is_zero()) throw std::invalid_argument("Laurent: division by zero");
        if (is_zero()) return zero();
        // Long division over Z from the top.  Any exact quotient has its
        // exponents in [min_deg - den.min_deg, max_deg - den.max_deg]; once
        // the working remainder drops below that window, the division fails.
        Laurent rem = *this;
        Laurent quot;
        const int dtop = den.max_deg();
        const int qmin = min_deg() - den.min_deg();
        const Coeff dlead = den.coeffs_.rbegin()->second;
        while (!rem.is_zero()) {
            const int rtop = rem.max_deg();
            if (rtop - dtop < qmin) return std::nullopt;
            const Coeff rlead = rem.coeffs_.rbegin()->second;
            if (rlead % dlead != 0) return std::nullopt;
            Laurent t = monomial(rlead / dlead, rtop - dtop);
            quot += t;
            rem -= t * den;
        }
        return quot;
    }

    // Render with exponents descending, e.g. "q^5+2q^3+q", "1", "q^-1".
    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            auto [n, c] = *it;
            if (!first) os << (c > 0 ? "+" : "-");
            else if (c < 0) os << "-";
            first = false;
            Coeff a = c > 0 ? c : -c;
            if (n == 0) {
                os << a;
            } else {
                if (a != 1) os << a;
                os << "q";
                if (n != 1) os << "^" << n;
            }
        }
        return os.str();
    }

private:
    std::map<int, Coeff> coeffs_;  // exponent -> nonzero coefficient
};

}  // namespace klrsub
