#pragma once

// Characteristic numbers of a smooth complete intersection Y of r
// hypersurfaces in CP^{n+r}, and the induced global curvature integral over
// the unit circle bundle.  Degrees are either the symbols d1..dr or positive
// integers; both modes run the same series pipeline.

#include "crinv/einstein.hpp"
#include "crinv/errors.hpp"
#include "crinv/invariant_ring.hpp"
#include "crinv/series.hpp"
#include "crinv/symmetric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crinv {

struct CIData {
    int n = 1; // complex dimension of Y
    int r = 1; // codimension in CP^{n+r}
    std::vector<int> degrees; // empty in symbolic mode

    static CIData symbolic(int n, int r) {
        CIData ci;
        ci.n = n;
        ci.r = r;
        ci.validate();
        return ci;
    }
    static CIData numeric(int n, int r, std::vector<int> degrees) {
        CIData ci;
        ci.n = n;
        ci.r = r;
        ci.degrees = std::move(degrees);
        ci.validate();
        return ci;
    }

    bool is_numeric() const { return !degrees.empty(); }

    void validate() const {
        if (n < 1) throw InvalidDimension("dimension n must be >= 1, got " + std::to_string(n));
        if (r < 1) throw std::invalid_argument("codimension r must be >= 1");
        if (!degrees.empty()) {
            if (static_cast<int>(degrees.size()) != r)
                throw std::invalid_argument("expected " + std::to_string(r) + " degrees, got " +
                                            std::to_string(degrees.size()));
            for (int d : degrees)
                if (d < 1) throw std::invalid_argument("degrees must be positive");
        }
    }
};

/// Coefficient polynomials [P_1..P_n] with c_i(TY) = P_i x^i, from the series
///   c(TY) = (1+x)^(n+r+1) (1+d_1 x)^-1 ... (1+d_r x)^-1  mod x^(n+1).
inline std::vector<QPoly> total_chern(const CIData& ci) {
    ci.validate();
    auto s = TruncatedSeries::linear("x", ci.n, QPoly(Rat(1)), QPoly(Rat(1))).pow(ci.n + ci.r + 1);
    for (int i = 1; i <= ci.r; ++i) {
        QPoly di = ci.is_numeric()
                       ? QPoly(Rat(ci.degrees[static_cast<std::size_t>(i - 1)]))
                       : QPoly::variable("d" + std::to_string(i));
        s = s * TruncatedSeries::linear("x", ci.n, QPoly(Rat(1)), di).inverse();
    }
    std::vector<QPoly> out;
    for (int i = 1; i <= ci.n; ++i) out.push_back(s.coeff(i));
    return out;
}

/// x^n-coefficient of phi evaluated at the c_i(TY).  Since c_i(TY) sits in
/// x-degree i and phi is homogeneous of degree n, this is a finite sum of
/// products of the coefficient polynomials.
inline QPoly chern_number_coeff(const InvariantPoly<Rat>& phi, const CIData& ci) {
    auto ch = phi.to_chern();
    if (!ch.is_homogeneous(ci.n))
        throw WrongDegree("expected a homogeneous element of degree " + std::to_string(ci.n));
    auto cs = total_chern(ci);
    QPoly acc;
    for (auto& [e, c] : ch.terms()) {
        QPoly t(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= cs[i];
        acc += t;
    }
    return acc;
}

/// Pairing against the fundamental class, symbolic degrees:
/// <x^n, [Y]> = d_1...d_r = sigma_r.
inline SigmaPoly chern_number_symbolic(const InvariantPoly<Rat>& phi, const CIData& ci) {
    if (ci.is_numeric())
        throw std::invalid_argument("chern_number_symbolic: numeric degree data");
    auto coeff = chern_number_coeff(phi, ci);
    return sigma_decompose(coeff, ci.r) * SigmaPoly::sigma(ci.r, ci.r);
}

inline Rat chern_number_numeric(const InvariantPoly<Rat>& phi, const CIData& ci) {
    if (!ci.is_numeric())
        throw std::invalid_argument("chern_number_numeric: symbolic degree data");
    auto coeff = chern_number_coeff(phi, ci);
    Rat v = coeff.constant_term();
    if (!(coeff == QPoly(v)))
        throw Error("chern_number_numeric: non-constant coefficient"); // unreachable
    for (int d : ci.degrees) v *= Rat(d);
    return v;
}

/// An exact rational (or symmetric-polynomial) multiple of pi.
struct PiValue {
    std::optional<Rat> numeric;
    std::optional<SigmaPoly> symbolic;

    static PiValue of(Rat q) {
        PiValue v;
        v.numeric = std::move(q);
        return v;
    }
    static PiValue of(SigmaPoly p) {
        PiValue v;
        v.symbolic = std::move(p);
        return v;
    }
    bool is_zero() const {
        if (numeric) return numeric->is_zero();
        return symbolic->is_zero();
    }
    std::string str() const {
        if (is_zero()) return "0";
        if (numeric) return numeric->str() + "*pi";
        std::string s = symbolic->str();
        if (symbolic->terms().size() == 1 && s[0] != '-' && s.find(' ') == std::string::npos)
            return s + "*pi";
        return "(" + s + ")*pi";
    }
    friend bool operator==(const PiValue& a, const PiValue& b) {
        return a.numeric == b.numeric && a.symbolic == b.symbolic;
    }
};

/// Total curvature integral over the circle bundle:
///   -(2/(n(n+1))) <phi~(TY), [Y]> pi,  phi~ the base-side transform of phi.
inline PiValue total_Iprime(const InvariantPoly<Rat>& phi, const CIData& ci) {
    auto tilde = einstein_transform(phi, EinsteinMode::Base, ci.n);
    Rat scale = Rat(-2) / Rat(static_cast<long long>(ci.n) * (ci.n + 1));
    if (ci.is_numeric()) return PiValue::of(scale * chern_number_numeric(tilde, ci));
    return PiValue::of(scale * chern_number_symbolic(tilde, ci));
}

/// Lowest-sigma-order part of the degree-(n+r) piece of the symbolic pairing,
/// for a unit monomial in c_2..c_n.  For phi = c_{i1}...c_{ik} this equals
/// (-1)^k sigma_{i1}...sigma_{ik} sigma_r.
inline SigmaPoly leading_term(const InvariantPoly<Rat>& phi, const CIData& ci) {
    if (ci.is_numeric()) throw std::invalid_argument("leading_term: numeric degree data");
    if (phi.basis() != GenBasis::Chern || !phi.is_unit_monomial())
        throw NotMonomial("expected a single monomial in c2..c" + std::to_string(ci.n) +
                          " with coefficient 1");
    if (phi.terms().begin()->first[0] != 0)
        throw NotMonomial("monomial must not contain c1");
    auto tilde = einstein_transform(phi, EinsteinMode::Base, ci.n);
    return leading_sigma_part(chern_number_symbolic(tilde, ci), ci.n + ci.r);
}

/// Geometric-hypothesis report; the algebra is valid regardless, so failures
/// come back as warnings and never stop a computation.
inline std::vector<std::string> validate_positivity(const CIData& ci) {
    std::vector<std::string> warnings;
    if (ci.is_numeric()) {
        long long total = 0;
        for (int d : ci.degrees) total += d;
        if (total <= ci.n + ci.r + 1) warnings.push_back("canonical bundle not positive");
    }
    if (ci.r <= ci.n) warnings.push_back("sigma-independence hypothesis r > n fails");
    return warnings;
}

} // namespace crinv
