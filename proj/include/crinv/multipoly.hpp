#pragma once

// Sparse multivariate polynomials over an exact coefficient ring.
// Terms are kept in graded lexicographic order; binary operations align
// variable lists by name union.

#include "crinv/rational.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace crinv {

/// Name order: alphabetic prefix, then numeric suffix compared as a number,
/// so d2 < d10 and c1 < c2 < t1.
inline bool var_name_less(const std::string& a, const std::string& b) {
    auto split = [](const std::string& s) {
        std::size_t i = s.size();
        while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
        long long num = -1;
        if (i < s.size() && s.size() - i <= 18) num = std::stoll(s.substr(i));
        return std::pair<std::string, long long>(s.substr(0, i), num);
    };
    auto [pa, na] = split(a);
    auto [pb, nb] = split(b);
    if (pa != pb) return pa < pb;
    if (na != nb) return na < nb;
    return a < b;
}

/// Graded lex on exponent vectors: lower total degree first, then
/// lexicographically smaller exponent vector first.
struct GradedLexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        int da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }
};

template <class C>
class MultiPoly {
public:
    using Terms = std::map<std::vector<int>, C, GradedLexLess>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
        check_sorted();
    }
    /// Constant polynomial with no variables.
    MultiPoly(const C& c) {
        if (!c.is_zero()) terms_[{}] = c;
    }
    MultiPoly(int c) : MultiPoly(C(c)) {}

    static MultiPoly variable(const std::string& name) {
        MultiPoly p({name});
        p.terms_[{1}] = C(1);
        return p;
    }
    static MultiPoly constant(std::vector<std::string> vars, const C& c) {
        MultiPoly p(std::move(vars));
        if (!c.is_zero()) p.terms_[std::vector<int>(p.vars_.size(), 0)] = c;
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        for (int e : terms_.begin()->first)
            if (e != 0) return false;
        return true;
    }
    /// Constant term (coefficient of the all-zero exponent).
    C constant_term() const {
        auto it = terms_.find(std::vector<int>(vars_.size(), 0));
        return it == terms_.end() ? C(0) : it->second;
    }

    int total_degree() const {
        int d = 0;
        for (auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    int degree_in(const std::string& name) const {
        int vi = var_index(name);
        if (vi < 0) return 0;
        int d = 0;
        for (auto& [e, c] : terms_) d = std::max(d, e[vi]);
        return d;
    }

    MultiPoly operator-() const {
        MultiPoly r(*this);
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        auto [x, y] = aligned(a, b);
        for (auto& [e, c] : y.terms_) x.add_term(e, c);
        return x;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        auto [x, y] = aligned(a, b);
        for (auto& [e, c] : y.terms_) x.add_term(e, -c);
        return x;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        auto [x, y] = aligned(a, b);
        MultiPoly r(x.vars_);
        for (auto& [ea, ca] : x.terms_)
            for (auto& [eb, cb] : y.terms_) {
                std::vector<int> e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend MultiPoly operator*(const C& s, const MultiPoly& p) {
        MultiPoly r(p.vars_);
        if (s.is_zero()) return r;
        r.terms_ = p.terms_;
        for (auto& [e, c] : r.terms_) c = s * c;
        return r;
    }
    MultiPoly& scale_divide(const C& s) {
        for (auto& [e, c] : terms_) c = c / s;
        return *this;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        auto [x, y] = aligned(a, b);
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    void add_term(const std::vector<int>& exps, const C& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            terms_.emplace(exps, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Coefficient of name^k, as a polynomial in the remaining variables.
    MultiPoly coeff_of(const std::string& name, int k) const {
        int vi = var_index(name);
        std::vector<std::string> rest;
        for (int i = 0; i < static_cast<int>(vars_.size()); ++i)
            if (i != vi) rest.push_back(vars_[i]);
        MultiPoly r(rest);
        for (auto& [e, c] : terms_) {
            int have = vi < 0 ? 0 : e[vi];
            if (have != k) continue;
            std::vector<int> re;
            for (int i = 0; i < static_cast<int>(e.size()); ++i)
                if (i != vi) re.push_back(e[i]);
            r.add_term(re, c);
        }
        return r;
    }

    /// Substitute polynomials for (some) variables.  Unlisted variables stay.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& repl) const {
        MultiPoly acc(vars_);
        for (auto& [e, c] : terms_) {
            MultiPoly term(c);
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (e[i] == 0) continue;
                auto it = repl.find(vars_[i]);
                MultiPoly base = it != repl.end() ? it->second : variable(vars_[i]);
                term *= power(base, e[i]);
            }
            acc += term;
        }
        return acc;
    }

    /// Full evaluation; every variable that occurs must be assigned.
    C evaluate(const std::map<std::string, C>& vals) const {
        C acc(0);
        for (auto& [e, c] : terms_) {
            C t = c;
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (e[i] == 0) continue;
                auto it = vals.find(vars_[i]);
                if (it == vals.end())
                    throw std::invalid_argument("MultiPoly::evaluate: no value for " + vars_[i]);
                C p(1);
                for (int k = 0; k < e[i]; ++k) p *= it->second;
                t *= p;
            }
            acc += t;
        }
        return acc;
    }

    template <class D, class F>
    MultiPoly<D> map_coeffs(F f) const {
        MultiPoly<D> r(vars_);
        for (auto& [e, c] : terms_) r.add_term(e, f(c));
        return r;
    }

    static MultiPoly power(const MultiPoly& p, int e) {
        if (e < 0) throw std::invalid_argument("MultiPoly::power: negative exponent");
        MultiPoly r = constant(p.vars_, C(1)), b = p;
        for (; e > 0; e >>= 1) {
            if (e & 1) r *= b;
            b *= b;
        }
        return r;
    }

    /// Canonical form: graded lex, ascending; "3*d1^2*d2 - 1/2*d3".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto& [e, c] : terms_) {
            std::string mono;
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_[i];
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            std::string cs = c.str();
            std::string term;
            if (mono.empty()) term = cs;
            else if (cs == "1") term = mono;
            else if (cs == "-1") term = "-" + mono;
            else term = cs + "*" + mono;
            if (out.empty()) {
                out = term;
            } else if (!term.empty() && term[0] == '-') {
                out += " - " + term.substr(1);
            } else {
                out += " + " + term;
            }
        }
        return out;
    }

private:
    std::vector<std::string> vars_;
    Terms terms_;

    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return static_cast<int>(i);
        return -1;
    }

    void check_sorted() {
        for (std::size_t i = 0; i + 1 < vars_.size(); ++i)
            if (!var_name_less(vars_[i], vars_[i + 1]))
                throw std::invalid_argument("MultiPoly: variable list must be strictly increasing");
    }

    /// Rewrite both operands over the union of their variable lists.
    static std::pair<MultiPoly, MultiPoly> aligned(const MultiPoly& a, const MultiPoly& b) {
        if (a.vars_ == b.vars_) return {a, b};
        std::vector<std::string> u;
        std::merge(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(u), var_name_less);
        u.erase(std::unique(u.begin(), u.end()), u.end());
        return {a.embed(u), b.embed(u)};
    }

    MultiPoly embed(const std::vector<std::string>& u) const {
        std::vector<int> pos(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::lower_bound(u.begin(), u.end(), vars_[i], var_name_less);
            pos[i] = static_cast<int>(it - u.begin());
        }
        MultiPoly r(u);
        for (auto& [e, c] : terms_) {
            std::vector<int> ne(u.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
            r.terms_.emplace(std::move(ne), c);
        }
        return r;
    }

    template <class D>
    friend class MultiPoly;
};

using QPoly = MultiPoly<Rat>;

} // namespace crinv
