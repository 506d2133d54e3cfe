#pragma once

// Univariate polynomials over Q and rational functions in one symbolic
// parameter.  Rational functions are kept as coprime integer polynomials with
// a positive-leading-coefficient denominator, so equality is structural.

#include "crinv/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace crinv {

/// Dense univariate polynomial over Rat; coeffs_[k] is the x^k coefficient.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(Rat c) {
        if (!c.is_zero()) coeffs_.push_back(std::move(c));
    }
    UniPoly(int c) : UniPoly(Rat(c)) {}
    explicit UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly x() { return UniPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    const Rat& coeff(int k) const {
        static const Rat zero(0);
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
        return coeffs_[static_cast<std::size_t>(k)];
    }
    Rat leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

    UniPoly operator-() const {
        UniPoly r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return UniPoly(std::move(c));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return UniPoly(std::move(c));
    }
    friend UniPoly operator*(const Rat& s, const UniPoly& p) {
        UniPoly r(p);
        for (auto& c : r.coeffs_) c = s * c;
        r.trim();
        return r;
    }
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero()) throw std::domain_error("UniPoly::divmod: division by zero");
        UniPoly q, r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int d = r.degree() - b.degree();
            Rat f = r.leading() / b.leading();
            std::vector<Rat> mono(static_cast<std::size_t>(d) + 1, Rat(0));
            mono.back() = f;
            UniPoly m(std::move(mono));
            q += m;
            r -= m * b;
        }
        return {q, r};
    }

    /// Monic gcd; gcd(0,0) == 0.
    static UniPoly gcd(UniPoly a, UniPoly b) {
        while (!b.is_zero()) {
            auto [q, r] = divmod(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero()) a = (Rat(1) / a.leading()) * a;
        return a;
    }

    Rat evaluate(const Rat& x) const {
        Rat acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    /// Scale to integer coefficients with content 1; returns the factor taken
    /// out, so *this == factor * primitive.  Zero returns (0, 0).
    std::pair<Rat, UniPoly> primitive() const {
        if (is_zero()) return {Rat(0), UniPoly()};
        BigInt l = 1, g = 0;
        for (auto& c : coeffs_) {
            if (c.is_zero()) continue;
            l = boost::multiprecision::lcm(l, c.den());
        }
        for (auto& c : coeffs_) g = boost::multiprecision::gcd(g, c.num() * (l / c.den()));
        Rat f(g, l);
        if (leading().sign() < 0) f = -f;
        UniPoly p = (Rat(1) / f) * (*this);
        return {f, p};
    }

    /// Descending powers, no spaces: "3*n^2+12*n+12", "-n", "n^2+n".
    std::string str(const std::string& name) const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const Rat& c = coeff(k);
            if (c.is_zero()) continue;
            std::string mono = k == 0 ? "" : (k == 1 ? name : name + "^" + std::to_string(k));
            std::string cs = c.str();
            std::string term;
            if (mono.empty()) term = cs;
            else if (cs == "1") term = mono;
            else if (cs == "-1") term = "-" + mono;
            else term = cs + "*" + mono;
            if (out.empty()) out = term;
            else if (term[0] == '-') out += "-" + term.substr(1);
            else out += "+" + term;
        }
        return out;
    }

    int term_count() const {
        int k = 0;
        for (auto& c : coeffs_)
            if (!c.is_zero()) ++k;
        return k;
    }

private:
    std::vector<Rat> coeffs_;
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
};

/// Rational function num/den in the parameter "n".  A field.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(int c) : num_(c), den_(1) {}
    RatFunc(Rat c) : num_(std::move(c)), den_(1) { normalize(); }
    RatFunc(UniPoly num) : num_(std::move(num)), den_(1) { normalize(); }
    RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        normalize();
    }

    /// The symbolic parameter itself.
    static RatFunc n() { return RatFunc(UniPoly::x()); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }

    RatFunc operator-() const { return RatFunc(-num_, den_); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    /// Evaluate at a rational parameter value; the denominator must not vanish.
    Rat evaluate(const Rat& x) const {
        Rat d = den_.evaluate(x);
        if (d.is_zero()) throw std::domain_error("RatFunc::evaluate: pole");
        return num_.evaluate(x) / d;
    }

    /// "n/(n+2)", "(n^2+n)/(3*n^2+12*n+12)", "-2", "n".
    std::string str() const {
        std::string ns = num_.str("n");
        if (den_ == UniPoly(1)) return wrap_if_sum(ns);
        return wrap_if_sum(ns) + "/" + wrap_always(den_.str("n"), den_);
    }

private:
    UniPoly num_, den_; // coprime; den integer primitive with positive leading

    void normalize() {
        if (num_.is_zero()) {
            den_ = UniPoly(1);
            return;
        }
        UniPoly g = UniPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = UniPoly::divmod(num_, g).first;
            den_ = UniPoly::divmod(den_, g).first;
        }
        auto [fn, pn] = num_.primitive();
        auto [fd, pd] = den_.primitive();
        Rat f = fn / fd; // value == f * pn / pd
        num_ = Rat(f.num()) * pn;
        den_ = Rat(f.den()) * pd;
    }

    static std::string wrap_if_sum(const std::string& s) {
        bool sum = false;
        for (std::size_t i = 1; i < s.size(); ++i)
            if (s[i] == '+' || s[i] == '-') sum = true;
        return sum ? "(" + s + ")" : s;
    }
    static std::string wrap_always(const std::string& s, const UniPoly& p) {
        if (p.degree() <= 0) return s;
        return "(" + s + ")";
    }
};

} // namespace crinv
