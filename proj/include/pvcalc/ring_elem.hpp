#pragma once

/**
 * @file ring_elem.hpp
 * @brief The realization ring A_d = Z[u,v,w]/(w^d - uv), localized at w and at
 *        all w^k - 1.
 *
 * Classes of varieties enter through their Hodge polynomials (uv = L, so the
 * Lefschetz class is L = w^d and w = L^(1/d)). Vanishing verdicts computed here
 * are verdicts in this realization; they are the evidence level the Hodge and
 * Euler specializations provide, not statements about K_0(Var) itself.
 *
 * Representation. As a Z[w]-module A_d is free on {u^a : a >= 0} and
 * {v^b : b >= 1}, so a numerator is stored as a map from a signed key
 * (k >= 0 for u^k, k < 0 for v^-k) to an integer polynomial in w. The
 * denominator is w^m times a multiset of cyclotomic polynomials Phi_e(w).
 * Each Phi_e(w) is prime in A_d (A_d / Phi_e = Z[zeta_e][u, u^-1]) and
 * division by w is detected monomially, so cancelling every factor that
 * divides the numerator yields a unique stored form.
 */

#include "hodge_poly.hpp"
#include "numeric.hpp"
#include "root_field.hpp"
#include "wpoly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pvcalc {

class RingElem {
public:
    using Numerator = std::map<int, WPoly>;

    /// Zero of A_d.
    explicit RingElem(int d) : d_(d) {
        if (d < 1) throw context_error("ring context needs d >= 1");
    }
    RingElem(int d, const Integer& c) : RingElem(d) {
        if (c != 0) num_[0] = WPoly(c);
    }

    /// Builds numerator / (w^wpow * prod Phi_e^count) and normalizes.
    static RingElem from_parts(int d, Numerator num, int wpow, std::map<int, int> cyclo) {
        RingElem r(d);
        r.num_ = std::move(num);
        r.wpow_ = wpow;
        r.cyclo_ = std::move(cyclo);
        r.normalize();
        return r;
    }

    /// w^k for any integer k.
    static RingElem w_power(int d, std::int64_t k) {
        RingElem r(d);
        if (k >= 0) r.num_[0] = WPoly::monomial(static_cast<std::size_t>(k));
        else {
            r.num_[0] = WPoly(Integer(1));
            r.wpow_ = static_cast<int>(-k);
        }
        return r;
    }

    /// Image of a Hodge polynomial under uv -> w^d.
    static RingElem from_hodge(int d, const HodgePoly& h) {
        RingElem r(d);
        for (const auto& [m, c] : h.terms()) {
            auto [a, b] = m;
            int common = std::min(a, b);
            r.num_[a - b] += WPoly::monomial(static_cast<std::size_t>(common) * static_cast<std::size_t>(d), c);
        }
        r.normalize();
        return r;
    }

    int d() const { return d_; }
    const Numerator& numerator() const { return num_; }
    int denom_w_power() const { return wpow_; }
    /// Multiset of cyclotomic indices e of the denominator factors Phi_e(w).
    const std::map<int, int>& denom_cyclotomic() const { return cyclo_; }

    bool is_zero() const { return num_.empty(); }

    RingElem operator-() const {
        RingElem r = *this;
        for (auto& [k, p] : r.num_) p = -p;
        return r;
    }

    friend RingElem operator+(const RingElem& x, const RingElem& y) {
        check_context(x, y);
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        int wpow = std::max(x.wpow_, y.wpow_);
        std::map<int, int> cyclo = x.cyclo_;
        for (const auto& [e, c] : y.cyclo_) cyclo[e] = std::max(cyclo[e], c);
        Numerator num = x.scaled_numerator(wpow, cyclo);
        for (auto& [k, p] : y.scaled_numerator(wpow, cyclo)) num[k] += p;
        return from_parts(x.d_, std::move(num), wpow, std::move(cyclo));
    }
    friend RingElem operator-(const RingElem& x, const RingElem& y) { return x + (-y); }

    friend RingElem operator*(const RingElem& x, const RingElem& y) {
        check_context(x, y);
        if (x.is_zero() || y.is_zero()) return RingElem(x.d_);
        Numerator num;
        for (const auto& [kx, px] : x.num_) {
            for (const auto& [ky, py] : y.num_) {
                std::size_t shift = 0;
                if ((kx > 0 && ky < 0) || (kx < 0 && ky > 0)) {
                    shift = static_cast<std::size_t>(std::min(std::abs(kx), std::abs(ky))) * static_cast<std::size_t>(x.d_);
                }
                num[kx + ky] += (px * py).shifted(shift);
            }
        }
        std::map<int, int> cyclo = x.cyclo_;
        for (const auto& [e, c] : y.cyclo_) cyclo[e] += c;
        return from_parts(x.d_, std::move(num), x.wpow_ + y.wpow_, std::move(cyclo));
    }
    friend RingElem operator*(const Integer& s, const RingElem& x) { return RingElem(x.d_, s) * x; }

    RingElem& operator+=(const RingElem& o) { return *this = *this + o; }
    RingElem& operator-=(const RingElem& o) { return *this = *this - o; }
    RingElem& operator*=(const RingElem& o) { return *this = *this * o; }

    /// Equality by cross-multiplication: x == y iff x - y has zero numerator.
    friend bool operator==(const RingElem& x, const RingElem& y) { return (x - y).is_zero(); }

    /// Identical stored data (normal forms coincide).
    bool same_representation(const RingElem& o) const {
        return d_ == o.d_ && num_ == o.num_ && wpow_ == o.wpow_ && cyclo_ == o.cyclo_;
    }

    /// 1 / (w^a - w^b), a != b.
    static RingElem inverse_binomial(int d, std::int64_t a, std::int64_t b) {
        if (a == b) throw division_by_zero_error("inverse of w^a - w^a");
        // w^a - w^b = sign * w^min * (w^k - 1) with k = |a - b|.
        std::int64_t lo = std::min(a, b);
        std::int64_t k = std::abs(a - b);
        Integer sign = a > b ? 1 : -1;
        std::map<int, int> cyclo;
        for (int e : divisors(static_cast<int>(k))) cyclo[e] += 1;
        RingElem r = from_parts(d, Numerator{{0, WPoly(sign)}}, 0, std::move(cyclo));
        return r * w_power(d, -lo);
    }

private:
    static void check_context(const RingElem& x, const RingElem& y) {
        if (x.d_ != y.d_) {
            throw context_error("ring elements with different d (" + std::to_string(x.d_) + " vs " +
                                std::to_string(y.d_) + ")");
        }
    }

    Numerator scaled_numerator(int wpow, const std::map<int, int>& cyclo) const {
        WPoly factor = WPoly::monomial(static_cast<std::size_t>(wpow - wpow_));
        for (const auto& [e, c] : cyclo) {
            auto it = cyclo_.find(e);
            int have = it == cyclo_.end() ? 0 : it->second;
            for (int i = have; i < c; ++i) factor *= cyclotomic(e);
        }
        Numerator out;
        for (const auto& [k, p] : num_) out[k] = p * factor;
        return out;
    }

    void normalize() {
        for (auto it = num_.begin(); it != num_.end();) {
            if (it->second.is_zero()) it = num_.erase(it); else ++it;
        }
        for (auto it = cyclo_.begin(); it != cyclo_.end();) {
            if (it->first < 1) throw error("invalid cyclotomic index");
            if (it->second == 0) it = cyclo_.erase(it); else ++it;
        }
        if (num_.empty()) {
            wpow_ = 0;
            cyclo_.clear();
            return;
        }
        if (wpow_ > 0) {
            std::size_t common = SIZE_MAX;
            for (const auto& [k, p] : num_) common = std::min(common, p.valuation());
            std::size_t drop = std::min(common, static_cast<std::size_t>(wpow_));
            if (drop > 0) {
                for (auto& [k, p] : num_) p = p.unshifted(drop);
                wpow_ -= static_cast<int>(drop);
            }
        }
        for (auto it = cyclo_.begin(); it != cyclo_.end();) {
            const WPoly& phi = cyclotomic(it->first);
            while (it->second > 0) {
                Numerator reduced;
                bool ok = true;
                for (const auto& [k, p] : num_) {
                    auto q = p.divide_exact(phi);
                    if (!q) { ok = false; break; }
                    reduced[k] = std::move(*q);
                }
                if (!ok) break;
                num_ = std::move(reduced);
                --it->second;
            }
            if (it->second == 0) it = cyclo_.erase(it); else ++it;
        }
    }

    int d_;
    Numerator num_;
    int wpow_ = 0;
    std::map<int, int> cyclo_;
};

/// L^a = w^(a d).
inline RingElem lpow(int d, const Rational& a) { return RingElem::w_power(d, scaled_exponent(a, d)); }

/// L = w^d.
inline RingElem lefschetz(int d) { return RingElem::w_power(d, d); }

/// (L - 1) / (L^a - 1), a != 0.
inline RingElem lfactor(int d, const Rational& a) {
    std::int64_t k = scaled_exponent(a, d);
    if (k == 0) {
        throw division_by_zero_error("(L-1)/(L^0-1): logarithmic pole (alpha = 0) where a nonzero exponent is required");
    }
    RingElem::Numerator num{{0, WPoly::binomial(static_cast<std::size_t>(d))}};
    std::map<int, int> cyclo;
    for (int e : divisors(static_cast<int>(std::abs(k)))) cyclo[e] += 1;
    RingElem r = RingElem::from_parts(d, std::move(num), 0, std::move(cyclo));
    if (k > 0) return r;
    // w^-k - 1 = -w^-k (w^k - 1)
    return -(r * RingElem::w_power(d, -k));
}

/// Euler realization chi: u -> s^d, v -> 1, w -> s, evaluated at s = 1.
inline Rational euler_realize(const RingElem& x) {
    if (x.is_zero()) return Rational(0);
    int d = x.d();
    WPoly n;
    for (const auto& [k, p] : x.numerator()) {
        n += k >= 0 ? p.shifted(static_cast<std::size_t>(k) * static_cast<std::size_t>(d)) : p;
    }
    int r = 0;
    Rational den = 1;
    for (const auto& [e, c] : x.denom_cyclotomic()) {
        if (e == 1) r = c;
        else for (int i = 0; i < c; ++i) den *= cyclotomic_at_one(e);
    }
    for (int i = 0; i < r; ++i) {
        auto q = n.divide_exact(WPoly::binomial(1));
        if (!q) {
            throw chi_domain_error("Euler realization undefined: (s-1)^" + std::to_string(r) +
                                   " does not divide the specialized numerator");
        }
        n = std::move(*q);
    }
    return Rational(n.evaluate(Integer(1))) / den;
}

/// Specialization u -> q, v -> 1, w -> q^(1/d), exact in Q(q^(1/d)); returned as
/// a length-d coefficient vector in powers of x = q^(1/d) (reduced mod x^d - q).
inline std::vector<Rational> numeric_eval(const RingElem& x, const Integer& q) {
    RootField field(x.d(), q);
    RootField::Elem num = field.zero();
    for (const auto& [k, p] : x.numerator()) {
        RootField::Elem term = field.eval(p);
        if (k > 0) term = field.scale(term, Rational(boost::multiprecision::pow(q, static_cast<unsigned>(k))));
        num = field.add(num, term);
    }
    RootField::Elem den = field.theta_power(x.denom_w_power());
    for (const auto& [e, c] : x.denom_cyclotomic()) {
        RootField::Elem phi = field.eval(cyclotomic(e));
        for (int i = 0; i < c; ++i) den = field.mul(den, phi);
    }
    return field.as_x_vector(field.mul(num, field.inverse(den)));
}

namespace detail {

struct Term {
    int key;
    std::size_t wexp;
    Integer coeff;
};

inline std::vector<Term> ordered_terms(const RingElem::Numerator& num, int d) {
    std::vector<Term> terms;
    for (const auto& [k, p] : num) {
        for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
            if (p.coeffs()[i] != 0) terms.push_back({k, i, p.coeffs()[i]});
        }
    }
    auto weight = [d](const Term& t) { return static_cast<long long>(std::abs(t.key)) * d + static_cast<long long>(t.wexp); };
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        if (weight(a) != weight(b)) return weight(a) > weight(b);
        if (a.key != b.key) return a.key > b.key;
        return a.wexp > b.wexp;
    });
    return terms;
}

/// Rewrites the cyclotomic denominator as a product of (w^k - 1) factors,
/// multiplying the numerator by the cyclotomic factors that are missing.
/// Greedy on the largest index, so the result is a function of the normal form.
inline std::pair<RingElem::Numerator, std::map<int, int>> binomial_cover(const RingElem& x) {
    std::map<int, int> remaining = x.denom_cyclotomic();
    std::map<int, int> cover;
    WPoly extra(Integer(1));
    while (!remaining.empty()) {
        int e = remaining.rbegin()->first;
        cover[e] += 1;
        for (int f : divisors(e)) {
            auto it = remaining.find(f);
            if (it != remaining.end()) {
                if (--it->second == 0) remaining.erase(it);
            } else {
                extra *= cyclotomic(f);
            }
        }
    }
    RingElem::Numerator num;
    for (const auto& [k, p] : x.numerator()) num[k] = p * extra;
    return {num, cover};
}

inline std::string power_suffix(long long e) { return e == 1 ? "" : "^" + std::to_string(e); }

template <class MonomialFn>
std::string render_numerator(const RingElem::Numerator& num, int d, MonomialFn mono_text, bool& multi, bool& negative) {
    auto terms = ordered_terms(num, d);
    multi = terms.size() > 1;
    negative = !terms.empty() && terms.front().coeff < 0;
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        Integer c = negative ? Integer(-t.coeff) : t.coeff;
        bool neg = c < 0;
        Integer mag = neg ? Integer(-c) : c;
        if (first) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        first = false;
        std::string mono = mono_text(t.key, t.wexp);
        if (mono.empty()) out += mag.str();
        else if (mag == 1) out += mono;
        else out += mag.str() + "*" + mono;
    }
    return out;
}

inline std::string motivic_monomial(int key, std::size_t wexp) {
    std::string s;
    if (key > 0) s = "u" + power_suffix(key);
    else if (key < 0) s = "v" + power_suffix(-key);
    if (wexp > 0) {
        if (!s.empty()) s += "*";
        s += "w" + power_suffix(static_cast<long long>(wexp));
    }
    return s;
}

inline std::string uv_fraction_power(const Rational& e) {
    if (e == 1) return "uv";
    if (is_integral(e)) return "(uv)^" + to_string(e);
    return "(uv)^(" + to_string(e) + ")";
}

inline std::string assemble(const std::string& body, bool multi, bool negative, const std::string& denom) {
    std::string num = body;
    if (negative) num = multi ? "-(" + body + ")" : "-" + body;
    else if (multi && !denom.empty()) num = "(" + body + ")";
    if (denom.empty()) return num;
    return num + " / " + denom;
}

}  // namespace detail

/// Canonical text: expanded numerator over "w^m * (w^k - 1)^e * ...".
/// Parse-stable: parse_ring_elem(render(x), d) has the same normal form as x.
inline std::string render(const RingElem& x) {
    if (x.is_zero()) return "0";
    auto [num, cover] = detail::binomial_cover(x);
    bool multi = false, negative = false;
    std::string body = detail::render_numerator(num, x.d(), detail::motivic_monomial, multi, negative);
    std::vector<std::string> factors;
    if (x.denom_w_power() > 0) factors.push_back("w" + detail::power_suffix(x.denom_w_power()));
    for (const auto& [k, e] : cover) {
        std::string f = k == 1 ? "(w - 1)" : "(w^" + std::to_string(k) + " - 1)";
        factors.push_back(f + detail::power_suffix(e));
    }
    std::string denom;
    if (factors.size() == 1) denom = factors.front();
    else if (!factors.empty()) {
        denom = "(";
        for (std::size_t i = 0; i < factors.size(); ++i) denom += (i ? " * " : "") + factors[i];
        denom += ")";
    }
    return detail::assemble(body, multi, negative, denom);
}

inline std::string legend(int d) { return "[w = L^(1/" + std::to_string(d) + ")]"; }

/// The same element with uv in place of L: w^c -> (uv)^(c/d).
inline std::string render_hodge(const RingElem& x) {
    if (x.is_zero()) return "0";
    int d = x.d();
    auto [num, cover] = detail::binomial_cover(x);
    auto mono = [d](int key, std::size_t wexp) {
        std::string s;
        if (key > 0) s = "u" + detail::power_suffix(key);
        else if (key < 0) s = "v" + detail::power_suffix(-key);
        if (wexp > 0) {
            if (!s.empty()) s += "*";
            s += detail::uv_fraction_power(Rational(static_cast<long long>(wexp), d));
        }
        return s;
    };
    bool multi = false, negative = false;
    std::string body = detail::render_numerator(num, d, mono, multi, negative);
    std::vector<std::string> factors;
    if (x.denom_w_power() > 0) factors.push_back(detail::uv_fraction_power(Rational(x.denom_w_power(), d)));
    for (const auto& [k, e] : cover) {
        factors.push_back("(" + detail::uv_fraction_power(Rational(k, d)) + " - 1)" + detail::power_suffix(e));
    }
    std::string denom;
    if (factors.size() == 1) denom = factors.front();
    else if (!factors.empty()) {
        denom = "(";
        for (std::size_t i = 0; i < factors.size(); ++i) denom += (i ? " * " : "") + factors[i];
        denom += ")";
    }
    return detail::assemble(body, multi, negative, denom);
}

namespace detail {

/// Recursive-descent reader for the canonical motivic rendering.
class RingParser {
public:
    RingParser(std::string_view text, int d) : s_(text), d_(d) {}

    RingElem parse() {
        RingElem num = signed_numerator();
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            num = num * denominator_inverse();
        }
        skip_ws();
        if (peek() == '[') {  // optional legend
            auto close = s_.find(']', pos_);
            if (close == std::string_view::npos) fail("unterminated legend");
            pos_ = close + 1;
        }
        skip_ws();
        if (pos_ != s_.size()) fail("trailing characters");
        return num;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw parse_error("ring element: " + what + " at offset " + std::to_string(pos_));
    }
    void skip_ws() { while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_; }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    Integer integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }
    long long exponent() {
        if (peek() != '^') return 1;
        ++pos_;
        return integer().convert_to<long long>();
    }

    RingElem signed_numerator() {
        if (peek() == '-') {
            std::size_t save = pos_;
            ++pos_;
            if (peek() == '(') {
                ++pos_;
                RingElem p = polynomial();
                expect(')');
                return -p;
            }
            pos_ = save;
        }
        if (peek() == '(') {
            ++pos_;
            RingElem p = polynomial();
            expect(')');
            return p;
        }
        return polynomial();
    }

    RingElem polynomial() {
        RingElem acc(d_);
        bool negate = false;
        if (peek() == '-') { negate = true; ++pos_; }
        acc = negate ? -monomial() : monomial();
        for (;;) {
            char c = peek();
            if (c == '+') { ++pos_; acc += monomial(); }
            else if (c == '-') { ++pos_; acc -= monomial(); }
            else break;
        }
        return acc;
    }

    RingElem monomial() {
        RingElem m(d_, 1);
        bool any = false;
        for (;;) {
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                m = m * RingElem(d_, integer());
            } else if (c == 'u' || c == 'v' || c == 'w') {
                ++pos_;
                long long e = exponent();
                HodgePoly h = c == 'u' ? HodgePoly::monomial(static_cast<int>(e), 0)
                            : c == 'v' ? HodgePoly::monomial(0, static_cast<int>(e))
                                       : HodgePoly(1);
                m = m * (c == 'w' ? RingElem::w_power(d_, e) : RingElem::from_hodge(d_, h));
            } else {
                fail("expected monomial");
            }
            any = true;
            if (peek() == '*') { ++pos_; continue; }
            break;
        }
        if (!any) fail("empty monomial");
        return m;
    }

    // Inverse of one denominator factor: "w^m" or "(w^k - 1)^e".
    RingElem factor_inverse() {
        if (peek() == 'w') {
            ++pos_;
            return RingElem::w_power(d_, -exponent());
        }
        expect('(');
        expect('w');
        long long k = exponent();
        expect('-');
        if (integer() != 1) fail("expected '1'");
        expect(')');
        long long e = exponent();
        RingElem inv = RingElem::inverse_binomial(d_, k, 0);
        RingElem out(d_, 1);
        for (long long i = 0; i < e; ++i) out *= inv;
        return out;
    }

    RingElem denominator_inverse() {
        // Either a single factor, or "(" factor ("*" factor)* ")".
        skip_ws();
        std::size_t save = pos_;
        if (peek() == '(') {
            ++pos_;
            if (peek() == 'w') {
                // Could be "(w^k - 1)" or "(w^m * ...)": try the binomial first.
                pos_ = save;
                try {
                    RingElem f = factor_inverse();
                    if (peek() != '*') return f;
                } catch (const parse_error&) {
                }
                pos_ = save + 1;
            }
            RingElem acc = factor_inverse();
            while (peek() == '*') {
                ++pos_;
                acc *= factor_inverse();
            }
            expect(')');
            return acc;
        }
        return factor_inverse();
    }

    std::string_view s_;
    int d_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Reads the output of render() (with or without the legend) back into A_d.
inline RingElem parse_ring_elem(std::string_view text, int d) { return detail::RingParser(text, d).parse(); }

}  // namespace pvcalc
