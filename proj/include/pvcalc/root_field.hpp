#pragma once

/**
 * @file root_field.hpp
 * @brief Exact arithmetic in Q(theta), theta the positive real d-th root of an
 *        integer q >= 2.
 *
 * The minimal polynomial of theta is x^e - r, where e is the smallest divisor
 * of d such that r = q^(e/d) is an integer (x^e - r is then irreducible by
 * Capelli's criterion). Elements are coefficient vectors in the basis
 * 1, theta, ..., theta^(e-1); callers that want a length-d vector in powers
 * of x = q^(1/d) just pad with zeros, since theta and x are the same number.
 */

#include "numeric.hpp"
#include "wpoly.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace pvcalc {

class RootField {
public:
    using Elem = std::vector<Rational>;

    RootField(int d, const Integer& q) : d_(d), q_(q) {
        if (d < 1) throw data_error("root field needs d >= 1");
        if (q < 2) throw data_error("root field needs q >= 2");
        for (int e : divisors(d)) {
            unsigned k = static_cast<unsigned>(d / e);
            Integer root = integer_root(q, k);
            if (boost::multiprecision::pow(root, k) == q) {
                deg_ = e;
                r_ = root;
                break;
            }
        }
    }

    int d() const { return d_; }
    const Integer& q() const { return q_; }
    /// Degree of Q(theta) over Q.
    int degree() const { return deg_; }
    /// theta^degree() == radicand()
    const Integer& radicand() const { return r_; }

    Elem zero() const { return Elem(static_cast<std::size_t>(deg_), Rational(0)); }
    Elem constant(const Rational& c) const {
        Elem e = zero();
        e[0] = c;
        return e;
    }
    /// theta^k for any integer k.
    Elem theta_power(std::int64_t k) const {
        std::int64_t e = deg_;
        std::int64_t quo = k >= 0 ? k / e : -((-k + e - 1) / e);
        std::int64_t rem = k - quo * e;
        Rational scale = quo >= 0 ? Rational(boost::multiprecision::pow(r_, static_cast<unsigned>(quo)))
                                  : Rational(1) / Rational(boost::multiprecision::pow(r_, static_cast<unsigned>(-quo)));
        Elem out = zero();
        out[static_cast<std::size_t>(rem)] = scale;
        return out;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem out = a;
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
        return out;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem out = a;
        for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
        return out;
    }
    Elem scale(const Elem& a, const Rational& s) const {
        Elem out = a;
        for (auto& x : out) x *= s;
        return out;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        std::size_t e = static_cast<std::size_t>(deg_);
        std::vector<Rational> full(2 * e, Rational(0));
        for (std::size_t i = 0; i < e; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < e; ++j) full[i + j] += a[i] * b[j];
        }
        Elem out = zero();
        for (std::size_t k = 0; k < full.size(); ++k) {
            if (k < e) out[k] += full[k];
            else out[k - e] += full[k] * Rational(r_);
        }
        return out;
    }
    bool is_zero(const Elem& a) const {
        for (const auto& x : a) if (x != 0) return false;
        return true;
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against x^e - r.
    Elem inverse(const Elem& a) const {
        if (is_zero(a)) throw division_by_zero_error("inverse of zero in Q(q^(1/d))");
        using Poly = std::vector<Rational>;
        auto trim = [](Poly& p) { while (!p.empty() && p.back() == 0) p.pop_back(); };
        auto sub_scaled_shift = [&](Poly& p, const Poly& s, const Rational& c, std::size_t shift) {
            if (p.size() < s.size() + shift) p.resize(s.size() + shift, Rational(0));
            for (std::size_t i = 0; i < s.size(); ++i) p[i + shift] -= c * s[i];
            trim(p);
        };
        auto divmod = [&](Poly num, const Poly& den) {
            Poly quo;
            trim(num);
            while (!num.empty() && num.size() >= den.size()) {
                std::size_t shift = num.size() - den.size();
                Rational c = num.back() / den.back();
                if (quo.size() < shift + 1) quo.resize(shift + 1, Rational(0));
                quo[shift] += c;
                sub_scaled_shift(num, den, c, shift);
            }
            return std::pair{quo, num};
        };
        auto mulp = [&](const Poly& x, const Poly& y) {
            if (x.empty() || y.empty()) return Poly{};
            Poly out(x.size() + y.size() - 1, Rational(0));
            for (std::size_t i = 0; i < x.size(); ++i)
                for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
            trim(out);
            return out;
        };
        auto subp = [&](Poly x, const Poly& y) {
            if (x.size() < y.size()) x.resize(y.size(), Rational(0));
            for (std::size_t i = 0; i < y.size(); ++i) x[i] -= y[i];
            trim(x);
            return x;
        };

        Poly modulus(static_cast<std::size_t>(deg_) + 1, Rational(0));
        modulus[0] = -Rational(r_);
        modulus.back() = 1;
        Poly r0 = modulus, r1(a.begin(), a.end());
        trim(r1);
        Poly s0, s1{Rational(1)};  // coefficients of `a`
        while (!r1.empty()) {
            auto [quo, rem] = divmod(r0, r1);
            Poly s2 = subp(s0, mulp(quo, s1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r0 is a nonzero constant since the modulus is irreducible.
        if (r0.size() != 1) throw error("root field modulus is not irreducible");
        Elem out = zero();
        auto [unused, reduced] = divmod(s0, modulus);
        for (std::size_t i = 0; i < reduced.size(); ++i) out[i] = reduced[i] / r0[0];
        return out;
    }

    /// Value of an integer polynomial at theta.
    Elem eval(const WPoly& p) const {
        Elem acc = zero();
        for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
            if (p.coeffs()[i] == 0) continue;
            acc = add(acc, scale(theta_power(static_cast<std::int64_t>(i)), Rational(p.coeffs()[i])));
        }
        return acc;
    }

    /// Pads to a length-d coefficient vector in powers of x = q^(1/d).
    std::vector<Rational> as_x_vector(const Elem& a) const {
        std::vector<Rational> out(static_cast<std::size_t>(d_), Rational(0));
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
        return out;
    }

private:
    int d_;
    Integer q_;
    int deg_ = 1;
    Integer r_ = 0;
};

/// Renders a coefficient vector as "c0 + c1*x + c2*x^2" (zero terms dropped).
inline std::string render_x_vector(const std::vector<Rational>& v) {
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        Rational c = v[i];
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        first = false;
        std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
        if (mono.empty()) out += to_string(mag);
        else if (mag == 1) out += mono;
        else out += to_string(mag) + "*" + mono;
    }
    return first ? "0" : out;
}

}  // namespace pvcalc
