#pragma once

#include "altform.hpp"

namespace crinv {

/// The real (1,1)-form omega = i h_{ab̄} theta^a ∧ theta^b̄.
inline AltForm omega_form(const HermitianForm& h) {
    AltForm w(h.n, 1, 1);
    for (int a = 1; a <= h.n; ++a)
        for (int b = 1; b <= h.n; ++b) w.add({a}, {b}, CRat::i() * h.lower(a, b));
    return w;
}

/// L phi = omega ∧ phi.
inline AltForm L(const HermitianForm& h, const AltForm& phi) { return wedge(omega_form(h), phi); }

/// Metric adjoint of L.  On components:
///   (Lambda phi)_{A B̄} = i(-1)^p sum_{a,b} h^{ab̄} phi_{(a A)(b B̄)}.
/// Zero on forms with p = 0 or q = 0.
inline AltForm Lambda(const HermitianForm& h, const AltForm& phi) {
    AltForm r(phi.n, phi.p > 0 ? phi.p - 1 : 0, phi.q > 0 ? phi.q - 1 : 0);
    if (phi.p == 0 || phi.q == 0) return r;
    int sgn = (phi.p % 2 == 0) ? 1 : -1;
    CRat pre = CRat::i() * CRat(sgn);
    for (const auto& [k, c] : phi.comp)
        for (int ia = 0; ia < phi.p; ++ia)
            for (int ib = 0; ib < phi.q; ++ib) {
                std::vector<int> unb;
                unb.reserve(phi.p - 1);
                for (int t = 0; t < phi.p; ++t)
                    if (t != ia) unb.push_back(k.first[t]);
                std::vector<int> bar;
                bar.reserve(phi.q - 1);
                for (int t = 0; t < phi.q; ++t)
                    if (t != ib) bar.push_back(k.second[t]);
                int hop = ia + ib;
                CRat v = pre * h.upper(k.first[ia], k.second[ib]) * c;
                r.add(std::move(unb), std::move(bar), (hop % 2 == 0) ? v : -v);
            }
    return r;
}

/// H phi = (n - p - q) phi, the weight operator of the sl(2)-triple {L, H, Lambda}.
inline AltForm Hop(const AltForm& phi) { return phi * CRat(phi.n - phi.p - phi.q); }

inline AltForm Lpow(const HermitianForm& h, AltForm phi, int m) {
    for (int i = 0; i < m; ++i) phi = L(h, phi);
    return phi;
}

inline AltForm Lambdapow(const HermitianForm& h, AltForm phi, int m) {
    for (int i = 0; i < m; ++i) phi = Lambda(h, phi);
    return phi;
}

/// Basis of the primitive subspace {phi : Lambda phi = 0} of bidegree (p,q),
/// computed as the exact kernel of the Lambda matrix.
inline std::vector<AltForm> primitive_basis(const HermitianForm& h, int p, int q) {
    auto Is = increasing_tuples(h.n, p);
    auto Js = increasing_tuples(h.n, q);
    std::vector<AltForm> basis_forms;
    basis_forms.reserve(Is.size() * Js.size());
    for (const auto& I : Is)
        for (const auto& J : Js) {
            AltForm e(h.n, p, q);
            e.add(I, J, CRat(1));
            basis_forms.push_back(std::move(e));
        }
    if (p == 0 || q == 0) return basis_forms;

    auto tIs = increasing_tuples(h.n, p - 1);
    auto tJs = increasing_tuples(h.n, q - 1);
    std::map<AltForm::Key, int> row_of;
    for (const auto& I : tIs)
        for (const auto& J : tJs) row_of[{I, J}] = static_cast<int>(row_of.size());

    int cols = static_cast<int>(basis_forms.size());
    CMat m(row_of.size(), std::vector<CRat>(cols));
    for (int c = 0; c < cols; ++c) {
        AltForm im = Lambda(h, basis_forms[c]);
        for (const auto& [k, v] : im.comp) m[row_of.at(k)][c] = v;
    }
    auto ker = detail::cmat_kernel(std::move(m), cols);
    std::vector<AltForm> out;
    out.reserve(ker.size());
    for (const auto& vec : ker) {
        AltForm f(h.n, p, q);
        for (int c = 0; c < cols; ++c)
            if (!vec[c].is_zero())
                for (const auto& [k, v] : basis_forms[c].comp) f.add(k.first, k.second, vec[c] * v);
        out.push_back(std::move(f));
    }
    return out;
}

/// Random element of the primitive subspace; zero form when the subspace is trivial.
inline AltForm random_primitive(std::mt19937_64& rng, const HermitianForm& h, int p, int q) {
    auto basis = primitive_basis(h, p, q);
    AltForm f(h.n, p, q);
    for (const auto& b : basis) {
        CRat c = rand_crat(rng, 3);
        if (c.is_zero()) continue;
        for (const auto& [k, v] : b.comp) f.add(k.first, k.second, c * v);
    }
    if (f.is_zero() && !basis.empty())
        for (const auto& [k, v] : basis.front().comp) f.add(k.first, k.second, v);
    return f;
}

}  // namespace crinv
