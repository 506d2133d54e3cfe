#pragma once

// Symmetric polynomials in the degree variables d_1..d_r, written in the
// elementary symmetric basis s_1..s_r.  The d-degree of a basis monomial is
// sum j*e_j; the s-count (number of elementary factors) is sum e_j.

#include "crinv/errors.hpp"
#include "crinv/invariant_ring.hpp"
#include "crinv/multipoly.hpp"
#include "crinv/rational.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace crinv {

class SigmaPoly {
public:
    using Terms = std::map<std::vector<int>, Rat, WeightedGradedLess>;

    explicit SigmaPoly(int r) : r_(r) {
        if (r < 1) throw std::invalid_argument("SigmaPoly: r must be >= 1");
    }

    static SigmaPoly sigma(int r, int j) {
        if (j < 1 || j > r)
            throw GeneratorOutOfRange("sigma index " + std::to_string(j) + " out of range [1, " +
                                      std::to_string(r) + "]");
        SigmaPoly s(r);
        std::vector<int> e(static_cast<std::size_t>(r), 0);
        e[static_cast<std::size_t>(j - 1)] = 1;
        s.terms_.emplace(std::move(e), Rat(1));
        return s;
    }
    static SigmaPoly constant(int r, const Rat& c) {
        SigmaPoly s(r);
        if (!c.is_zero()) s.terms_.emplace(std::vector<int>(static_cast<std::size_t>(r), 0), c);
        return s;
    }

    int r() const { return r_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<int>& exps, const Rat& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            terms_.emplace(exps, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    static int d_degree(const std::vector<int>& exps) {
        int w = 0;
        for (std::size_t j = 0; j < exps.size(); ++j) w += static_cast<int>(j + 1) * exps[j];
        return w;
    }
    static int sigma_count(const std::vector<int>& exps) {
        int c = 0;
        for (int e : exps) c += e;
        return c;
    }
    int d_degree() const {
        int d = 0;
        for (auto& [e, c] : terms_) d = std::max(d, d_degree(e));
        return d;
    }

    SigmaPoly operator-() const {
        SigmaPoly s(*this);
        for (auto& [e, c] : s.terms_) c = -c;
        return s;
    }
    friend SigmaPoly operator+(const SigmaPoly& a, const SigmaPoly& b) {
        check_same_r(a, b);
        SigmaPoly s(a);
        for (auto& [e, c] : b.terms_) s.add_term(e, c);
        return s;
    }
    friend SigmaPoly operator-(const SigmaPoly& a, const SigmaPoly& b) { return a + (-b); }
    friend SigmaPoly operator*(const SigmaPoly& a, const SigmaPoly& b) {
        check_same_r(a, b);
        SigmaPoly s(a.r_);
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) {
                std::vector<int> e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                s.add_term(e, ca * cb);
            }
        return s;
    }
    friend SigmaPoly operator*(const Rat& c, const SigmaPoly& a) {
        SigmaPoly s(a.r_);
        if (c.is_zero()) return s;
        for (auto& [e, v] : a.terms_) s.terms_.emplace(e, c * v);
        return s;
    }
    SigmaPoly& operator+=(const SigmaPoly& o) { return *this = *this + o; }
    SigmaPoly& operator-=(const SigmaPoly& o) { return *this = *this - o; }
    SigmaPoly& operator*=(const SigmaPoly& o) { return *this = *this * o; }

    friend bool operator==(const SigmaPoly& a, const SigmaPoly& b) {
        return a.r_ == b.r_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SigmaPoly& a, const SigmaPoly& b) { return !(a == b); }

    static SigmaPoly power(const SigmaPoly& s, int e) {
        if (e < 0) throw std::invalid_argument("SigmaPoly::power: negative exponent");
        SigmaPoly r = constant(s.r_, Rat(1)), b = s;
        for (; e > 0; e >>= 1) {
            if (e & 1) r *= b;
            b *= b;
        }
        return r;
    }

    /// Expansion into the d-variables.
    MultiPoly<Rat> expand() const {
        MultiPoly<Rat> acc;
        for (auto& [e, c] : terms_) {
            MultiPoly<Rat> t(c);
            for (std::size_t j = 0; j < e.size(); ++j)
                if (e[j] > 0)
                    t *= MultiPoly<Rat>::power(elementary(r_, static_cast<int>(j + 1)), e[j]);
            acc += t;
        }
        return acc;
    }

    /// Numeric value at a degree tuple.
    Rat evaluate(const std::vector<int>& degrees) const {
        if (static_cast<int>(degrees.size()) != r_)
            throw std::invalid_argument("SigmaPoly::evaluate: expected " + std::to_string(r_) +
                                        " degrees");
        std::vector<Rat> sig = sigma_values(degrees);
        Rat acc(0);
        for (auto& [e, c] : terms_) {
            Rat t = c;
            for (std::size_t j = 0; j < e.size(); ++j)
                for (int k = 0; k < e[j]; ++k) t *= sig[j];
            acc += t;
        }
        return acc;
    }

    /// Numeric elementary symmetric values sigma_1..sigma_r of a degree tuple.
    static std::vector<Rat> sigma_values(const std::vector<int>& degrees) {
        std::vector<Rat> e(degrees.size() + 1, Rat(0));
        e[0] = Rat(1);
        std::size_t used = 0;
        for (int d : degrees) {
            ++used;
            for (std::size_t j = used; j >= 1; --j) e[j] += Rat(d) * e[j - 1];
        }
        return std::vector<Rat>(e.begin() + 1, e.end());
    }

    /// Canonical form, e.g. "-s2*s3 + 2/3*s1^2*s3" (d-degree graded, lex asc).
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto& [e, c] : terms_) {
            std::string mono;
            for (std::size_t j = 0; j < e.size(); ++j) {
                if (e[j] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += "s" + std::to_string(j + 1);
                if (e[j] > 1) mono += "^" + std::to_string(e[j]);
            }
            std::string cs = c.str();
            std::string term;
            if (mono.empty()) term = cs;
            else if (cs == "1") term = mono;
            else if (cs == "-1") term = "-" + mono;
            else term = cs + "*" + mono;
            if (out.empty()) out = term;
            else if (term[0] == '-') out += " - " + term.substr(1);
            else out += " + " + term;
        }
        return out;
    }

    /// Elementary symmetric polynomial sigma_j of d_1..d_r.
    static const MultiPoly<Rat>& elementary(int r, int j) {
        thread_local std::map<std::pair<int, int>, MultiPoly<Rat>> cache;
        auto key = std::make_pair(r, j);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
        // coefficient of t^j in prod (1 + d_i t)
        std::vector<MultiPoly<Rat>> e(static_cast<std::size_t>(r + 1));
        e[0] = MultiPoly<Rat>(Rat(1));
        for (std::size_t k = 1; k <= static_cast<std::size_t>(r); ++k) e[k] = MultiPoly<Rat>();
        for (int i = 1; i <= r; ++i) {
            auto di = MultiPoly<Rat>::variable("d" + std::to_string(i));
            for (int k = std::min(i, r); k >= 1; --k)
                e[static_cast<std::size_t>(k)] += di * e[static_cast<std::size_t>(k - 1)];
        }
        return cache.emplace(key, e[static_cast<std::size_t>(j)]).first->second;
    }

private:
    int r_;
    Terms terms_;

    static void check_same_r(const SigmaPoly& a, const SigmaPoly& b) {
        if (a.r_ != b.r_) throw std::invalid_argument("SigmaPoly: mismatched variable counts");
    }
};

/// Unique rewriting of a symmetric polynomial in d_1..d_r into the elementary
/// basis, by repeated subtraction of the basis monomial matching the
/// lex-leading d-monomial.
inline SigmaPoly sigma_decompose(const MultiPoly<Rat>& p, int r) {
    // variables must be d1..dr
    for (auto& v : p.vars()) {
        if (v.size() < 2 || v[0] != 'd')
            throw std::invalid_argument("sigma_decompose: unexpected variable " + v);
        int i = std::stoi(v.substr(1));
        if (i < 1 || i > r)
            throw std::invalid_argument("sigma_decompose: variable " + v + " outside d1..d" +
                                        std::to_string(r));
    }

    // symmetry check: every adjacent transposition fixes p
    for (int i = 1; i < r; ++i) {
        std::map<std::string, MultiPoly<Rat>> swap_map;
        swap_map["d" + std::to_string(i)] = MultiPoly<Rat>::variable("d" + std::to_string(i + 1));
        swap_map["d" + std::to_string(i + 1)] = MultiPoly<Rat>::variable("d" + std::to_string(i));
        if (!(p.substitute(swap_map) == p))
            throw NotSymmetric("polynomial is not symmetric under d" + std::to_string(i) +
                               " <-> d" + std::to_string(i + 1));
    }

    SigmaPoly acc(r);
    MultiPoly<Rat> rest = p;
    int guard = 0;
    while (!rest.is_zero()) {
        if (++guard > 100000) throw Error("sigma_decompose: no convergence");
        std::vector<int> lead;
        Rat lead_c(0);
        bool have = false;
        std::vector<int> cvar_of;
        for (auto& v : rest.vars()) cvar_of.push_back(std::stoi(v.substr(1)));
        for (auto& [e, c] : rest.terms()) {
            std::vector<int> full(static_cast<std::size_t>(r), 0);
            for (std::size_t i = 0; i < e.size(); ++i)
                full[static_cast<std::size_t>(cvar_of[i] - 1)] = e[i];
            if (!have || lead < full) {
                lead = full;
                lead_c = c;
                have = true;
            }
        }
        // symmetric leading monomial has weakly decreasing exponents
        for (std::size_t i = 0; i + 1 < lead.size(); ++i)
            if (lead[i] < lead[i + 1]) throw Error("sigma_decompose: leading term not dominant");
        std::vector<int> mu(static_cast<std::size_t>(r), 0);
        for (std::size_t i = 0; i < lead.size(); ++i) {
            int next = i + 1 < lead.size() ? lead[i + 1] : 0;
            mu[i] = lead[i] - next;
        }
        SigmaPoly cand(r);
        cand.add_term(mu, lead_c);
        acc += cand;
        rest -= cand.expand();
    }
    return acc;
}

/// Restrict to d-degree exactly D, then keep the terms of minimal s-count.
inline SigmaPoly leading_sigma_part(const SigmaPoly& s, int target_d_degree) {
    int best = -1;
    for (auto& [e, c] : s.terms()) {
        if (SigmaPoly::d_degree(e) != target_d_degree) continue;
        int sc = SigmaPoly::sigma_count(e);
        if (best == -1 || sc < best) best = sc;
    }
    SigmaPoly r(s.r());
    if (best == -1) return r;
    for (auto& [e, c] : s.terms())
        if (SigmaPoly::d_degree(e) == target_d_degree && SigmaPoly::sigma_count(e) == best)
            r.add_term(e, c);
    return r;
}

} // namespace crinv
