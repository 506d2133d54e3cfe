#pragma once

// Mixed expansions of trace generators in an auxiliary degree-one variable w,
// and the extraction pipeline that recovers the characteristic coefficients
// from the top Chern class written in either trace family.

#include "crinv/einstein.hpp"
#include "crinv/invariant_ring.hpp"
#include "crinv/multipoly.hpp"
#include "crinv/ratfunc.hpp"

namespace crinv {

/// sum_{l=0}^{m-1} C(m,l) scale^l w^l t_{m-l}  +  kconst scale^m w^m
/// with generators named tprefix+"1", tprefix+"2", ...
inline MultiPoly<RatFunc> expand_general(int m, const RatFunc& kconst, const RatFunc& scale,
                                         const std::string& tprefix) {
    if (m < 1) throw std::invalid_argument("expand_general: m must be >= 1");
    using P = MultiPoly<RatFunc>;
    P w = P::variable("w");
    P acc;
    RatFunc spow(1);
    for (int l = 0; l + 1 <= m; ++l) {
        P t = P::variable(tprefix + std::to_string(m - l));
        acc += P(RatFunc(binomial(m, l)) * spow) * P::power(w, l) * t;
        spow = spow * scale;
    }
    acc += P(kconst * spow) * P::power(w, m);
    return acc;
}

/// Trace of the twisted curvature in terms of w and the plain traces.
inline MultiPoly<RatFunc> expand_TW(int m) {
    return expand_general(m, RatFunc::n() + RatFunc(2), RatFunc(1), "tP");
}

/// Plain trace in terms of w and the twisted traces.
inline MultiPoly<RatFunc> expand_TPsi(int m) {
    return expand_general(m, RatFunc::n() + RatFunc(2), RatFunc(-1), "tW");
}

/// Monomials of a power-sum element, rendered as a polynomial in variables
/// prefix+"1".. prefix+"N".
inline MultiPoly<Rat> poly_from_power_sums(const InvariantPoly<Rat>& p,
                                           const std::string& prefix) {
    if (p.basis() != GenBasis::PowerSum)
        throw std::invalid_argument("poly_from_power_sums: expected power-sum basis");
    MultiPoly<Rat> acc;
    for (auto& [e, c] : p.terms()) {
        MultiPoly<Rat> t(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                t *= MultiPoly<Rat>::power(
                    MultiPoly<Rat>::variable(prefix + std::to_string(i + 1)), e[i]);
        acc += t;
    }
    return acc;
}

/// Inverse of poly_from_power_sums; every variable must be prefix+<index>.
inline InvariantPoly<Rat> power_sums_from_poly(const MultiPoly<Rat>& p, const std::string& prefix,
                                               int maxgen) {
    InvariantPoly<Rat> acc(GenBasis::PowerSum, maxgen);
    std::vector<int> gen_of; // -1 marks a foreign variable, rejected only if used
    for (auto& v : p.vars()) {
        if (v.size() > prefix.size() && v.compare(0, prefix.size(), prefix) == 0)
            gen_of.push_back(std::stoi(v.substr(prefix.size())));
        else
            gen_of.push_back(-1);
    }
    for (auto& [e, c] : p.terms()) {
        std::vector<int> exps(static_cast<std::size_t>(maxgen), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            int g = gen_of[i];
            if (g == -1)
                throw std::invalid_argument("power_sums_from_poly: unexpected variable " +
                                            p.vars()[i]);
            if (g < 1 || g > maxgen)
                throw GeneratorOutOfRange("power_sums_from_poly: generator " + std::to_string(g));
            exps[static_cast<std::size_t>(g - 1)] += e[i];
        }
        acc.add_term(exps, c);
    }
    return acc;
}

/// Characteristic coefficients [Phi_0 .. Phi_n] for a fibre dimension n,
/// in the Chern basis (Phi_0 is a constant).
///
/// Pipeline: write c_{n+1} in the twisted traces, substitute their expansions,
/// check the w-free part reproduces c_{n+1} in the plain traces, substitute
/// the reverse expansions into the remainder, and read off the coefficient of
/// w^{n+1-m}.
inline std::vector<InvariantPoly<Rat>> chern_expansion(int n) {
    if (n < 1) throw InvalidDimension("dimension n must be >= 1, got " + std::to_string(n));
    using P = MultiPoly<Rat>;
    auto at_n = [n](const RatFunc& f) { return f.evaluate(Rat(n)); };

    auto cn1 = InvariantPoly<Rat>::chern_in_power_sums(n + 1);
    P e_tw = poly_from_power_sums(cn1, "tW");

    std::map<std::string, P> tw_expand, tp_expand;
    for (int j = 1; j <= n + 1; ++j) {
        tw_expand["tW" + std::to_string(j)] = expand_TW(j).map_coeffs<Rat>(at_n);
        tp_expand["tP" + std::to_string(j)] = expand_TPsi(j).map_coeffs<Rat>(at_n);
    }

    P f = e_tw.substitute(tw_expand);
    P f0 = f.coeff_of("w", 0);
    if (!(f0 == poly_from_power_sums(cn1, "tP")))
        throw Error("chern_expansion: w-free part does not reproduce the top Chern class");

    P rest = f - f0;
    P h = rest.substitute(tp_expand);

    std::vector<InvariantPoly<Rat>> phi;
    for (int m = 0; m <= n; ++m) {
        P hm = h.coeff_of("w", n + 1 - m);
        auto pm = power_sums_from_poly(hm, "tW", n + 1);
        if (!pm.is_homogeneous(m))
            throw Error("chern_expansion: coefficient of w^" + std::to_string(n + 1 - m) +
                        " is not homogeneous of degree " + std::to_string(m));
        phi.push_back(pm.to_chern());
    }
    if (!(h.coeff_of("w", 0).is_zero()))
        throw Error("chern_expansion: unexpected w-free remainder");
    return phi;
}

} // namespace crinv
