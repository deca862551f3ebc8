#pragma once

/**
 * @file wpoly.hpp
 * @brief Dense univariate integer polynomials in w, cyclotomic polynomials and
 *        exact division by monic divisors.
 */

#include "numeric.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace pvcalc {

/// Dense polynomial sum c[i] w^i over the integers; trailing zeros trimmed.
class WPoly {
public:
    WPoly() = default;
    explicit WPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }
    WPoly(const Integer& constant) { if (constant != 0) c_.push_back(constant); }

    static WPoly monomial(std::size_t degree, Integer coeff = 1) {
        if (coeff == 0) return {};
        std::vector<Integer> c(degree + 1);
        c[degree] = std::move(coeff);
        return WPoly(std::move(c));
    }
    /// w^k - 1 for k >= 1.
    static WPoly binomial(std::size_t k) {
        std::vector<Integer> c(k + 1);
        c[k] = 1;
        c[0] -= 1;
        return WPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return c_; }
    Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
    const Integer& leading() const { return c_.back(); }

    /// Lowest index with a nonzero coefficient (zero polynomial: 0).
    std::size_t valuation() const {
        for (std::size_t i = 0; i < c_.size(); ++i) if (c_[i] != 0) return i;
        return 0;
    }

    WPoly shifted(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<Integer> c(k, Integer(0));
        c.insert(c.end(), c_.begin(), c_.end());
        return WPoly(std::move(c));
    }
    /// Divides by w^k; caller guarantees valuation() >= k.
    WPoly unshifted(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        return WPoly(std::vector<Integer>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
    }

    WPoly& operator+=(const WPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    WPoly& operator-=(const WPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend WPoly operator+(WPoly a, const WPoly& b) { return a += b; }
    friend WPoly operator-(WPoly a, const WPoly& b) { return a -= b; }
    WPoly operator-() const {
        WPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend WPoly operator*(const WPoly& a, const WPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return WPoly(std::move(c));
    }
    WPoly& operator*=(const WPoly& o) { return *this = *this * o; }
    friend WPoly operator*(const Integer& s, const WPoly& p) {
        if (s == 0) return {};
        WPoly r = p;
        for (auto& x : r.c_) x *= s;
        return r;
    }

    friend bool operator==(const WPoly&, const WPoly&) = default;

    /// Exact quotient by a monic divisor, or nullopt when the remainder is nonzero.
    std::optional<WPoly> divide_exact(const WPoly& divisor) const {
        if (divisor.is_zero() || divisor.leading() != 1) {
            throw error("WPoly::divide_exact needs a monic divisor");
        }
        if (is_zero()) return WPoly{};
        int dd = divisor.degree();
        if (degree() < dd) return std::nullopt;
        std::vector<Integer> rem = c_;
        std::vector<Integer> quo(static_cast<std::size_t>(degree() - dd + 1));
        for (int i = degree() - dd; i >= 0; --i) {
            Integer t = rem[static_cast<std::size_t>(i + dd)];
            quo[static_cast<std::size_t>(i)] = t;
            if (t == 0) continue;
            for (int k = 0; k <= dd; ++k) rem[static_cast<std::size_t>(i + k)] -= t * divisor.c_[static_cast<std::size_t>(k)];
        }
        for (int k = 0; k < dd; ++k) {
            if (rem[static_cast<std::size_t>(k)] != 0) return std::nullopt;
        }
        return WPoly(std::move(quo));
    }

    template <class T>
    T evaluate(const T& x) const {
        T acc = T(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Integer> c_;
};

inline int moebius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

inline std::vector<int> divisors(int n) {
    std::vector<int> out;
    for (int k = 1; k <= n; ++k) if (n % k == 0) out.push_back(k);
    return out;
}

/// The n-th cyclotomic polynomial, via prod_{k|n} (w^k - 1)^{mu(n/k)}.
inline const WPoly& cyclotomic(int n) {
    if (n < 1) throw error("cyclotomic index must be positive");
    thread_local std::map<int, WPoly> cache;
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    WPoly num(Integer(1)), den(Integer(1));
    for (int k : divisors(n)) {
        int mu = moebius(n / k);
        if (mu == 1) num *= WPoly::binomial(static_cast<std::size_t>(k));
        else if (mu == -1) den *= WPoly::binomial(static_cast<std::size_t>(k));
    }
    // den is monic up to sign; normalise so divide_exact sees a monic divisor.
    if (den.leading() != 1) { den = -den; num = -num; }
    auto q = num.divide_exact(den);
    if (!q) throw error("cyclotomic construction failed");
    return cache.emplace(n, std::move(*q)).first->second;
}

/// Phi_n(1): p when n is a power of the prime p, 1 otherwise (n >= 2).
inline int cyclotomic_at_one(int n) {
    if (n < 2) throw error("cyclotomic_at_one needs n >= 2");
    for (int p = 2; p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            return n == 1 ? p : 1;
        }
    }
    return 1;
}

}  // namespace pvcalc
