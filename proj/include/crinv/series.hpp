#pragma once

// Truncated power series in one variable, exact coefficients, x^(N+1) == 0.
// Coefficients are multivariate polynomials so geometric data can stay symbolic.

#include "crinv/errors.hpp"
#include "crinv/multipoly.hpp"

#include <string>
#include <vector>

namespace crinv {

class TruncatedSeries {
public:
    /// Zero series of the given truncation order (terms x^0..x^order kept).
    TruncatedSeries(std::string var, int order)
        : var_(std::move(var)), coeffs_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
    }

    static TruncatedSeries constant(std::string var, int order, const QPoly& c) {
        TruncatedSeries s(std::move(var), order);
        s.coeffs_[0] = c;
        return s;
    }
    /// c0 + c1*x, truncated.
    static TruncatedSeries linear(std::string var, int order, const QPoly& c0, const QPoly& c1) {
        TruncatedSeries s(std::move(var), order);
        s.coeffs_[0] = c0;
        if (order >= 1) s.coeffs_[1] = c1;
        return s;
    }

    const std::string& var() const { return var_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const QPoly& coeff(int k) const {
        static const QPoly zero;
        if (k < 0 || k > order()) return zero;
        return coeffs_[static_cast<std::size_t>(k)];
    }
    void set_coeff(int k, QPoly c) {
        if (k < 0 || k > order()) throw std::out_of_range("TruncatedSeries::set_coeff");
        coeffs_[static_cast<std::size_t>(k)] = std::move(c);
    }

    bool is_zero() const {
        for (auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_compatible(a, b);
        TruncatedSeries r(a.var_, a.order());
        for (int k = 0; k <= a.order(); ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_compatible(a, b);
        TruncatedSeries r(a.var_, a.order());
        for (int k = 0; k <= a.order(); ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_compatible(a, b);
        TruncatedSeries r(a.var_, a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (int j = 0; i + j <= a.order(); ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    /// Multiplicative inverse.  The constant term must be a nonzero rational
    /// constant; otherwise NonUnitConstantTerm is thrown.
    TruncatedSeries inverse() const {
        if (!coeffs_[0].is_constant() || coeffs_[0].is_zero())
            throw NonUnitConstantTerm("series inverse: constant term is not a nonzero constant");
        Rat c0 = coeffs_[0].constant_term();
        TruncatedSeries r(var_, order());
        r.coeffs_[0] = QPoly(Rat(1) / c0);
        for (int k = 1; k <= order(); ++k) {
            QPoly acc;
            for (int j = 1; j <= k; ++j) acc += coeffs_[j] * r.coeffs_[k - j];
            r.coeffs_[k] = (Rat(-1) / c0) * acc;
        }
        return r;
    }

    /// Integer power; negative exponents go through inverse().
    TruncatedSeries pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        TruncatedSeries r = constant(var_, order(), QPoly(Rat(1)));
        TruncatedSeries b = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r = r * b;
            b = b * b;
        }
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_compatible(a, b);
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

    /// "1 - 3*x + 15*x^2" with polynomial coefficients parenthesized.
    std::string str() const {
        std::string out;
        for (int k = 0; k <= order(); ++k) {
            if (coeffs_[k].is_zero()) continue;
            std::string cs = coeffs_[k].str();
            bool compound = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
            std::string mono = k == 0 ? "" : (k == 1 ? var_ : var_ + "^" + std::to_string(k));
            std::string term;
            if (mono.empty()) term = compound ? "(" + cs + ")" : cs;
            else if (cs == "1") term = mono;
            else if (cs == "-1") term = "-" + mono;
            else if (compound) term = "(" + cs + ")*" + mono;
            else term = cs + "*" + mono;
            if (out.empty()) out = term;
            else if (term[0] == '-') out += " - " + term.substr(1);
            else out += " + " + term;
        }
        return out.empty() ? "0" : out;
    }

private:
    std::string var_;
    std::vector<QPoly> coeffs_;

    static void check_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.var_ != b.var_ || a.order() != b.order())
            throw std::invalid_argument("TruncatedSeries: mixed variable or order");
    }
};

} // namespace crinv
