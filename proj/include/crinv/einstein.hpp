#pragma once

// Transforms of the power-sum generators induced by the two distinguished
// scale choices.  In both modes the degree-one image vanishes and the map is
// extended multiplicatively over the power-sum basis.

#include "crinv/invariant_ring.hpp"
#include "crinv/ratfunc.hpp"

#include <stdexcept>

namespace crinv {

enum class EinsteinMode { Domain, Base };

inline Rat binomial(int m, int l) {
    Rat r(1);
    for (int i = 0; i < l; ++i) r *= Rat(m - i, i + 1);
    return r;
}

/// Image of T_m, in the Chern basis:
///   sum_{l=0}^{m-2} (-1)^l C(m,l) K^-l c1^l T_{m-l}  +  (-1)^(m-1) (m-1) K^-(m-1) c1^m
/// where K is the mode constant.
template <class C>
InvariantPoly<C> einstein_t(int m, const C& kconst) {
    if (m < 1) throw std::invalid_argument("einstein_t: m must be >= 1");
    using P = InvariantPoly<C>;
    P acc(GenBasis::Chern, m);
    const P c1 = P::generator(GenBasis::Chern, m, 1);
    C kinv = C(1) / kconst;
    C kpow(1);
    for (int l = 0; l + 2 <= m; ++l) {
        C coef = C(binomial(m, l)) * kpow;
        if (l % 2 == 1) coef = -coef;
        P tm = InvariantPoly<Rat>::power_sum_in_chern(m - l)
                   .with_maxgen(m)
                   .template map_coeffs<C>([](const Rat& r) { return C(r); });
        acc += coef * (P::power(c1, l) * tm);
        kpow = kpow * kinv;
    }
    // kpow == K^-(m-1) here
    C tail = C(Rat(m - 1)) * kpow;
    if (m % 2 == 0) tail = -tail;
    acc += tail * P::power(c1, m);
    return acc;
}

/// Multiplicative extension over the power-sum basis; constants are fixed.
/// Returns the image in the Chern basis.
template <class C>
InvariantPoly<C> einstein_transform(const InvariantPoly<C>& phi, const C& kconst) {
    auto pw = phi.to_power();
    InvariantPoly<C> acc(GenBasis::Chern, phi.maxgen());
    for (auto& [e, c] : pw.terms()) {
        auto t = InvariantPoly<C>::constant(GenBasis::Chern, phi.maxgen(), c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto img = einstein_t<C>(static_cast<int>(i + 1), kconst).with_maxgen(phi.maxgen());
            t *= InvariantPoly<C>::power(img, e[i]);
        }
        acc += t;
    }
    return acc;
}

/// Numeric mode constant: n+2 on the total space side, n+1 on the base side.
inline Rat einstein_constant(EinsteinMode mode, int n) {
    if (n < 1) throw InvalidDimension("dimension n must be >= 1, got " + std::to_string(n));
    return Rat(mode == EinsteinMode::Domain ? n + 2 : n + 1);
}

inline InvariantPoly<Rat> einstein_transform(const InvariantPoly<Rat>& phi, EinsteinMode mode,
                                             int n) {
    return einstein_transform<Rat>(phi, einstein_constant(mode, n));
}

/// Symbolic-dimension mode constant.
inline RatFunc einstein_constant_symbolic(EinsteinMode mode) {
    return RatFunc::n() + RatFunc(mode == EinsteinMode::Domain ? 2 : 1);
}

inline InvariantPoly<RatFunc> einstein_transform_symbolic(const InvariantPoly<Rat>& phi,
                                                          EinsteinMode mode) {
    auto lifted = phi.map_coeffs<RatFunc>([](const Rat& r) { return RatFunc(r); });
    return einstein_transform<RatFunc>(lifted, einstein_constant_symbolic(mode));
}

} // namespace crinv
