#pragma once

// The graded ring of invariant polynomials in the Chern generators c_1..c_N
// or the power-sum generators T_1..T_N (deg c_i = deg T_i = i).  Basis
// conversion goes through Newton's identities.

#include "crinv/errors.hpp"
#include "crinv/rational.hpp"

#include <cctype>
#include <map>
#include <string>
#include <vector>

namespace crinv {

enum class GenBasis { Chern, PowerSum };

/// Weighted graded lex: generator i has weight i; lower weight first, then
/// lexicographically smaller exponent vector.
struct WeightedGradedLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        long wa = 0, wb = 0;
        for (std::size_t i = 0; i < a.size(); ++i) wa += static_cast<long>(i + 1) * a[i];
        for (std::size_t i = 0; i < b.size(); ++i) wb += static_cast<long>(i + 1) * b[i];
        if (wa != wb) return wa < wb;
        return a < b;
    }
};

template <class C>
class InvariantPoly {
public:
    using Terms = std::map<std::vector<int>, C, WeightedGradedLess>;

    InvariantPoly(GenBasis basis, int maxgen) : basis_(basis), maxgen_(maxgen) {
        if (maxgen < 1) throw std::invalid_argument("InvariantPoly: maxgen must be >= 1");
    }

    /// c_i or T_i.
    static InvariantPoly generator(GenBasis basis, int maxgen, int i) {
        if (i < 1 || i > maxgen)
            throw GeneratorOutOfRange("generator index " + std::to_string(i) +
                                      " out of range [1, " + std::to_string(maxgen) + "]");
        InvariantPoly p(basis, maxgen);
        std::vector<int> e(static_cast<std::size_t>(maxgen), 0);
        e[static_cast<std::size_t>(i - 1)] = 1;
        p.terms_.emplace(std::move(e), C(1));
        return p;
    }
    static InvariantPoly constant(GenBasis basis, int maxgen, const C& c) {
        InvariantPoly p(basis, maxgen);
        if (!c.is_zero()) p.terms_.emplace(std::vector<int>(static_cast<std::size_t>(maxgen), 0), c);
        return p;
    }

    GenBasis basis() const { return basis_; }
    int maxgen() const { return maxgen_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

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

    static int weight(const std::vector<int>& exps) {
        int w = 0;
        for (std::size_t i = 0; i < exps.size(); ++i) w += static_cast<int>(i + 1) * exps[i];
        return w;
    }

    int degree() const {
        int d = 0;
        for (auto& [e, c] : terms_) d = std::max(d, weight(e));
        return d;
    }
    bool is_homogeneous(int d) const {
        for (auto& [e, c] : terms_)
            if (weight(e) != d) return false;
        return true;
    }
    InvariantPoly homogeneous_part(int d) const {
        InvariantPoly r(basis_, maxgen_);
        for (auto& [e, c] : terms_)
            if (weight(e) == d) r.terms_.emplace(e, c);
        return r;
    }
    /// True when the polynomial is a single monomial with coefficient 1.
    bool is_unit_monomial() const {
        return terms_.size() == 1 && terms_.begin()->second == C(1);
    }

    InvariantPoly operator-() const {
        InvariantPoly r(*this);
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    friend InvariantPoly operator+(const InvariantPoly& a, const InvariantPoly& b) {
        auto [x, y] = aligned(a, b);
        for (auto& [e, c] : y.terms_) x.add_term(e, c);
        return x;
    }
    friend InvariantPoly operator-(const InvariantPoly& a, const InvariantPoly& b) {
        auto [x, y] = aligned(a, b);
        for (auto& [e, c] : y.terms_) x.add_term(e, -c);
        return x;
    }
    friend InvariantPoly operator*(const InvariantPoly& a, const InvariantPoly& b) {
        auto [x, y] = aligned(a, b);
        InvariantPoly r(x.basis_, x.maxgen_);
        for (auto& [ea, ca] : x.terms_)
            for (auto& [eb, cb] : y.terms_) {
                std::vector<int> e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend InvariantPoly operator*(const C& s, const InvariantPoly& p) {
        InvariantPoly r(p.basis_, p.maxgen_);
        if (s.is_zero()) return r;
        for (auto& [e, c] : p.terms_) r.terms_.emplace(e, s * c);
        return r;
    }
    InvariantPoly& operator+=(const InvariantPoly& o) { return *this = *this + o; }
    InvariantPoly& operator-=(const InvariantPoly& o) { return *this = *this - o; }
    InvariantPoly& operator*=(const InvariantPoly& o) { return *this = *this * o; }

    friend bool operator==(const InvariantPoly& a, const InvariantPoly& b) {
        if (a.basis_ != b.basis_) return false;
        auto [x, y] = aligned(a, b);
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const InvariantPoly& a, const InvariantPoly& b) { return !(a == b); }

    static InvariantPoly power(const InvariantPoly& p, int e) {
        if (e < 0) throw std::invalid_argument("InvariantPoly::power: negative exponent");
        InvariantPoly r = constant(p.basis_, p.maxgen_, C(1)), b = p;
        for (; e > 0; e >>= 1) {
            if (e & 1) r *= b;
            b *= b;
        }
        return r;
    }

    InvariantPoly with_maxgen(int m) const {
        if (m == maxgen_) return *this;
        InvariantPoly r(basis_, m);
        for (auto& [e, c] : terms_) {
            std::vector<int> ne(static_cast<std::size_t>(m), 0);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (static_cast<int>(i) >= m)
                    throw GeneratorOutOfRange("with_maxgen: generator " + std::to_string(i + 1) +
                                              " exceeds new bound " + std::to_string(m));
                ne[i] = e[i];
            }
            r.terms_.emplace(std::move(ne), c);
        }
        return r;
    }

    /// T_k written in the Chern generators, via Newton's identities.
    static InvariantPoly power_sum_in_chern(int k) {
        thread_local std::map<int, InvariantPoly> cache;
        if (auto it = cache.find(k); it != cache.end()) return it->second;
        InvariantPoly acc(GenBasis::Chern, k);
        for (int i = 1; i <= k - 1; ++i) {
            auto e_i = generator(GenBasis::Chern, k, i);
            auto p = power_sum_in_chern(k - i).with_maxgen(k);
            acc += C(Rat(i % 2 == 1 ? 1 : -1)) * (e_i * p);
        }
        acc += C(Rat(k % 2 == 1 ? k : -k)) * generator(GenBasis::Chern, k, k);
        cache.emplace(k, acc);
        return acc;
    }

    /// c_k written in the power-sum generators.
    static InvariantPoly chern_in_power_sums(int k) {
        thread_local std::map<int, InvariantPoly> cache;
        if (auto it = cache.find(k); it != cache.end()) return it->second;
        InvariantPoly acc(GenBasis::PowerSum, k);
        for (int i = 1; i <= k; ++i) {
            auto p_i = generator(GenBasis::PowerSum, k, i);
            InvariantPoly e = k - i == 0 ? constant(GenBasis::PowerSum, k, C(1))
                                         : chern_in_power_sums(k - i).with_maxgen(k);
            acc += C(Rat(i % 2 == 1 ? 1 : -1)) * (e * p_i);
        }
        auto r = C(Rat(1, k)) * acc;
        cache.emplace(k, r);
        return r;
    }

    InvariantPoly to_chern() const { return convert(GenBasis::Chern); }
    InvariantPoly to_power() const { return convert(GenBasis::PowerSum); }

    /// Chern-basis image with every monomial containing c_1 deleted.
    InvariantPoly reduce_mod_c1() const {
        InvariantPoly p = to_chern();
        InvariantPoly r(GenBasis::Chern, p.maxgen_);
        for (auto& [e, c] : p.terms_)
            if (e[0] == 0) r.terms_.emplace(e, c);
        return r;
    }

    template <class D, class F>
    InvariantPoly<D> map_coeffs(F f) const {
        InvariantPoly<D> r(basis_, maxgen_);
        for (auto& [e, c] : terms_) r.add_term(e, f(c));
        return r;
    }

    /// Canonical form: graded lex ascending, e.g. "c2*c3 - 1/3*c1^2*c3".
    std::string str() const {
        if (terms_.empty()) return "0";
        const char* g = basis_ == GenBasis::Chern ? "c" : "T";
        std::string out;
        for (auto& [e, c] : terms_) {
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += g + std::to_string(i + 1);
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
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

private:
    GenBasis basis_;
    int maxgen_;
    Terms terms_;

    static std::pair<InvariantPoly, InvariantPoly> aligned(const InvariantPoly& a,
                                                           const InvariantPoly& b) {
        if (a.basis_ != b.basis_)
            throw std::invalid_argument("InvariantPoly: mixed bases in arithmetic");
        int m = std::max(a.maxgen_, b.maxgen_);
        return {a.with_maxgen(m), b.with_maxgen(m)};
    }

    InvariantPoly convert(GenBasis target) const {
        if (basis_ == target) return *this;
        InvariantPoly acc(target, maxgen_);
        for (auto& [e, c] : terms_) {
            InvariantPoly t = constant(target, maxgen_, c);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                InvariantPoly g = target == GenBasis::Chern
                                      ? power_sum_in_chern(static_cast<int>(i + 1))
                                      : chern_in_power_sums(static_cast<int>(i + 1));
                t *= power(g.with_maxgen(maxgen_), e[i]);
            }
            acc += t;
        }
        return acc;
    }
};

/// Parse an invariant polynomial.  Terms are sums of products of rational
/// constants and generators "c<k>" / "T<k>" with optional "^e"; "*" between
/// factors is optional; whitespace is ignored.  Pure-c input stays in the
/// Chern basis, pure-T input in the power-sum basis, mixed input is converted
/// to Chern.
inline InvariantPoly<Rat> parse_phi(const std::string& src, int maxgen) {
    struct Term {
        Rat coeff;
        std::vector<int> cexp, texp;
    };
    std::vector<Term> parsed;
    bool any_c = false, any_t = false;

    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
    };
    auto parse_uint = [&](const char* what) {
        skip_ws();
        if (i >= src.size() || !std::isdigit(static_cast<unsigned char>(src[i])))
            throw SyntaxError(std::string("expected ") + what, i);
        long long v = 0;
        while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
            v = v * 10 + (src[i] - '0');
            if (v > 1000000) throw SyntaxError("number too large", i);
            ++i;
        }
        return static_cast<int>(v);
    };

    skip_ws();
    if (i >= src.size()) throw SyntaxError("empty expression", i);

    bool first = true;
    while (true) {
        skip_ws();
        if (i >= src.size()) break;
        int sign = 1;
        if (!first || src[i] == '+' || src[i] == '-') {
            if (first) {
                // leading sign on the first term
                sign = src[i] == '-' ? -1 : 1;
                ++i;
            } else {
                if (src[i] == '+') sign = 1;
                else if (src[i] == '-') sign = -1;
                else throw SyntaxError("expected '+' or '-'", i);
                ++i;
            }
        }
        first = false;

        Term t;
        t.coeff = Rat(sign);
        t.cexp.assign(static_cast<std::size_t>(maxgen), 0);
        t.texp.assign(static_cast<std::size_t>(maxgen), 0);
        bool have_factor = false;
        bool pending_star = false;
        while (true) {
            skip_ws();
            if (i < src.size() && src[i] == '*') {
                if (!have_factor) throw SyntaxError("unexpected '*'", i);
                ++i;
                pending_star = true;
                skip_ws();
            }
            if (i >= src.size()) break;
            char ch = src[i];
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                int num = parse_uint("number");
                skip_ws();
                if (i < src.size() && src[i] == '/') {
                    ++i;
                    int den = parse_uint("denominator");
                    if (den == 0) throw SyntaxError("zero denominator", i - 1);
                    t.coeff *= Rat(num, den);
                } else {
                    t.coeff *= Rat(num);
                }
                have_factor = true;
                pending_star = false;
            } else if (ch == 'c' || ch == 'T') {
                std::size_t gen_pos = i;
                ++i;
                int k = parse_uint("generator index");
                if (k < 1 || k > maxgen)
                    throw GeneratorOutOfRange("generator " + std::string(1, ch) + std::to_string(k) +
                                              " out of range [1, " + std::to_string(maxgen) +
                                              "] at position " + std::to_string(gen_pos));
                int e = 1;
                skip_ws();
                if (i < src.size() && src[i] == '^') {
                    ++i;
                    e = parse_uint("exponent");
                }
                auto& exp = ch == 'c' ? t.cexp : t.texp;
                exp[static_cast<std::size_t>(k - 1)] += e;
                (ch == 'c' ? any_c : any_t) = true;
                have_factor = true;
                pending_star = false;
            } else {
                break; // '+', '-', or garbage; handled by the outer loop
            }
        }
        if (!have_factor || pending_star) throw SyntaxError("expected term", i);
        parsed.push_back(std::move(t));
        skip_ws();
        if (i < src.size() && src[i] != '+' && src[i] != '-')
            throw SyntaxError("unexpected character", i);
    }
    if (parsed.empty()) throw SyntaxError("expected term", i);

    GenBasis out_basis = any_t && !any_c ? GenBasis::PowerSum : GenBasis::Chern;
    InvariantPoly<Rat> acc(out_basis, maxgen);
    for (auto& t : parsed) {
        bool has_c = false, has_t = false;
        for (int e : t.cexp) has_c |= e != 0;
        for (int e : t.texp) has_t |= e != 0;
        if (out_basis == GenBasis::PowerSum) {
            auto m = InvariantPoly<Rat>::constant(GenBasis::PowerSum, maxgen, t.coeff);
            InvariantPoly<Rat> mono(GenBasis::PowerSum, maxgen);
            mono.add_term(t.texp, Rat(1));
            acc += m * mono;
        } else {
            auto term = InvariantPoly<Rat>::constant(GenBasis::Chern, maxgen, t.coeff);
            if (has_c) {
                InvariantPoly<Rat> mono(GenBasis::Chern, maxgen);
                mono.add_term(t.cexp, Rat(1));
                term *= mono;
            }
            if (has_t) {
                InvariantPoly<Rat> mono(GenBasis::PowerSum, maxgen);
                mono.add_term(t.texp, Rat(1));
                term *= mono.to_chern();
            }
            acc += term;
        }
    }
    return acc;
}

} // namespace crinv
