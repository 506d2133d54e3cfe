#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace crinv {

using CMat = std::vector<std::vector<CRat>>;

namespace detail {

/// Sorts idx ascending and returns the permutation sign, or 0 on a repeated entry.
inline int sort_sign(std::vector<int>& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        for (std::size_t j = i; j > 0 && idx[j] <= idx[j - 1]; --j) {
            if (idx[j] == idx[j - 1]) return 0;
            std::swap(idx[j], idx[j - 1]);
            sign = -sign;
        }
    return sign;
}

inline CMat cmat_identity(int n) {
    CMat m(n, std::vector<CRat>(n));
    for (int i = 0; i < n; ++i) m[i][i] = CRat(1);
    return m;
}

/// Exact Gauss-Jordan inverse.  Throws Error when the matrix is singular.
inline CMat cmat_inverse(CMat a) {
    int n = static_cast<int>(a.size());
    CMat inv = cmat_identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!a[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) throw Error("matrix is singular");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        CRat d = a[col][col];
        for (int c = 0; c < n; ++c) { a[col][c] /= d; inv[col][c] /= d; }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            CRat f = a[r][col];
            for (int c = 0; c < n; ++c) {
                a[r][c] -= f * a[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

/// Basis of the right kernel of a (not necessarily square) matrix.
inline std::vector<std::vector<CRat>> cmat_kernel(CMat a, int cols) {
    int rows = static_cast<int>(a.size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!a[i][c].is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[piv], a[r]);
        CRat d = a[r][c];
        for (int j = c; j < cols; ++j) a[r][j] /= d;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            CRat f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<CRat>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<CRat> v(cols);
        v[free] = CRat(1);
        for (std::size_t k = 0; k < pivot_col.size(); ++k)
            v[pivot_col[k]] = -a[static_cast<int>(k)][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Exact determinant by cofactor expansion; fine for the small sizes used here.
inline CRat cmat_det(const CMat& m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return CRat(1);
    if (n == 1) return m[0][0];
    CRat d;
    for (int r = 0; r < n; ++r) {
        if (m[r][0].is_zero()) continue;
        CMat minor;
        minor.reserve(n - 1);
        for (int i = 0; i < n; ++i) {
            if (i == r) continue;
            minor.emplace_back(m[i].begin() + 1, m[i].end());
        }
        CRat term = m[r][0] * cmat_det(minor);
        d += (r % 2 == 0) ? term : -term;
    }
    return d;
}

}  // namespace detail

/// Nondegenerate hermitian form h_{ab̄} together with its exact inverse.
/// upper(a,b) = h^{ab̄} satisfies sum_b h^{ab̄} h_{cb̄} = delta_{ac}.
class HermitianForm {
public:
    int n = 0;
    CMat h;    // h[a][b] = h_{(a+1)(b+1)bar}
    CMat hup;  // hup[a][b] = h^{(a+1)(b+1)bar}

    HermitianForm() = default;

    explicit HermitianForm(CMat mat) : n(static_cast<int>(mat.size())), h(std::move(mat)) {
        for (const auto& row : h)
            if (static_cast<int>(row.size()) != n)
                throw std::invalid_argument("hermitian form must be square");
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (h[a][b] != h[b][a].conj())
                    throw std::invalid_argument("hermitian form must be conjugate-symmetric");
        CMat inv = detail::cmat_inverse(h);
        hup.assign(n, std::vector<CRat>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) hup[a][b] = inv[b][a];
    }

    static HermitianForm identity(int n) { return HermitianForm(detail::cmat_identity(n)); }

    /// h_{ab̄}, 1-based.
    const CRat& lower(int a, int b) const { return h[a - 1][b - 1]; }
    /// h^{ab̄}, 1-based.
    const CRat& upper(int a, int b) const { return hup[a - 1][b - 1]; }
};

/// Alternating (p,q)-form on C^n.  Components are stored on strictly increasing
/// 1-based index tuples in the grouped slot order (all unbarred, then all barred);
/// permuted tuples are recovered with the sign of the permutation.
class AltForm {
public:
    using Key = std::pair<std::vector<int>, std::vector<int>>;

    int n = 0, p = 0, q = 0;
    std::map<Key, CRat> comp;

    AltForm() = default;

    AltForm(int n_, int p_, int q_) : n(n_), p(p_), q(q_) {
        if (n < 0 || p < 0 || q < 0 || p > n || q > n)
            throw std::invalid_argument("bidegree out of range");
    }

    static AltForm scalar(int n, CRat c) {
        AltForm f(n, 0, 0);
        if (!c.is_zero()) f.comp[{{}, {}}] = std::move(c);
        return f;
    }

    static AltForm theta(int n, int a) {
        AltForm f(n, 1, 0);
        f.comp[{{a}, {}}] = CRat(1);
        return f;
    }

    static AltForm theta_bar(int n, int b) {
        AltForm f(n, 0, 1);
        f.comp[{{}, {b}}] = CRat(1);
        return f;
    }

    bool is_zero() const { return comp.empty(); }

    /// Value of a (0,0)-form.
    CRat scalar_value() const {
        if (p != 0 || q != 0) throw Error("scalar_value requires bidegree (0,0)");
        auto it = comp.find({{}, {}});
        return it == comp.end() ? CRat(0) : it->second;
    }

    /// Component for arbitrary tuples; antisymmetry signs applied, repeats give 0.
    CRat get(std::vector<int> unb, std::vector<int> bar) const {
        check_tuples(unb, bar);
        int su = detail::sort_sign(unb);
        int sb = detail::sort_sign(bar);
        if (su == 0 || sb == 0) return CRat(0);
        auto it = comp.find({std::move(unb), std::move(bar)});
        if (it == comp.end()) return CRat(0);
        CRat v = it->second;
        return (su * sb == 1) ? v : -v;
    }

    /// Adds c to the component addressed by (unb, bar); repeats are a no-op.
    void add(std::vector<int> unb, std::vector<int> bar, const CRat& c) {
        check_tuples(unb, bar);
        if (c.is_zero()) return;
        int su = detail::sort_sign(unb);
        int sb = detail::sort_sign(bar);
        if (su == 0 || sb == 0) return;
        Key k{std::move(unb), std::move(bar)};
        CRat& slot = comp[k];
        slot += (su * sb == 1) ? c : -c;
        if (slot.is_zero()) comp.erase(k);
    }

    /// A zero form acts as the identity for any shape: operator chains that run
    /// past the top degree report a clamped bidegree on their zero results.
    AltForm& operator+=(const AltForm& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) { p = o.p; q = o.q; }
        require_same_shape(o);
        for (const auto& [k, v] : o.comp) {
            CRat& slot = comp[k];
            slot += v;
            if (slot.is_zero()) comp.erase(k);
        }
        return *this;
    }

    AltForm& operator-=(const AltForm& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) { p = o.p; q = o.q; }
        require_same_shape(o);
        for (const auto& [k, v] : o.comp) {
            CRat& slot = comp[k];
            slot -= v;
            if (slot.is_zero()) comp.erase(k);
        }
        return *this;
    }

    AltForm& operator*=(const CRat& c) {
        if (c.is_zero()) { comp.clear(); return *this; }
        for (auto& [k, v] : comp) v *= c;
        return *this;
    }

    AltForm operator-() const {
        AltForm r = *this;
        for (auto& [k, v] : r.comp) v = -v;
        return r;
    }

    friend AltForm operator+(AltForm a, const AltForm& b) { return a += b; }
    friend AltForm operator-(AltForm a, const AltForm& b) { return a -= b; }
    friend AltForm operator*(AltForm a, const CRat& c) { return a *= c; }
    friend AltForm operator*(const CRat& c, AltForm a) { return a *= c; }

    /// Two all-zero forms compare equal even when their recorded bidegrees differ
    /// (a wedge past top degree clamps its bidegree).
    friend bool operator==(const AltForm& a, const AltForm& b) {
        if (a.n != b.n) return false;
        if (a.is_zero() && b.is_zero()) return true;
        return a.p == b.p && a.q == b.q && a.comp == b.comp;
    }
    friend bool operator!=(const AltForm& a, const AltForm& b) { return !(a == b); }

    std::string str() const {
        if (comp.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, v] : comp) {
            if (!first) os << " + ";
            first = false;
            os << "(" << v.str() << ")";
            for (int a : k.first) os << "*t" << a;
            for (int b : k.second) os << "*tb" << b;
        }
        return os.str();
    }

private:
    void check_tuples(const std::vector<int>& unb, const std::vector<int>& bar) const {
        if (static_cast<int>(unb.size()) != p || static_cast<int>(bar.size()) != q)
            throw std::invalid_argument("index tuple length does not match bidegree");
        for (int a : unb)
            if (a < 1 || a > n) throw std::invalid_argument("index out of range");
        for (int b : bar)
            if (b < 1 || b > n) throw std::invalid_argument("index out of range");
    }

    void require_same_shape(const AltForm& o) const {
        if (n != o.n || p != o.p || q != o.q)
            throw BidegreeMismatch("bidegree (" + std::to_string(p) + "," + std::to_string(q) +
                                   ") != (" + std::to_string(o.p) + "," + std::to_string(o.q) + ")");
    }
};

/// All strictly increasing k-tuples from {1..n}.
inline std::vector<std::vector<int>> increasing_tuples(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) { out.push_back(cur); return; }
        for (int v = next; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

/// Exterior product in the grouped slot order: moving the second factor's
/// unbarred block past the first factor's barred block costs (-1)^{p2*q1}.
inline AltForm wedge(const AltForm& a, const AltForm& b) {
    if (a.n != b.n) throw std::invalid_argument("wedge requires the same dimension");
    int P = a.p + b.p, Q = a.q + b.q;
    AltForm r(a.n, std::min(P, a.n), std::min(Q, a.n));
    if (P > a.n || Q > a.n) return r;
    int cross = ((b.p * a.q) % 2 == 0) ? 1 : -1;
    for (const auto& [ka, va] : a.comp)
        for (const auto& [kb, vb] : b.comp) {
            std::vector<int> unb = ka.first;
            unb.insert(unb.end(), kb.first.begin(), kb.first.end());
            std::vector<int> bar = ka.second;
            bar.insert(bar.end(), kb.second.begin(), kb.second.end());
            CRat c = va * vb;
            if (cross < 0) c = -c;
            r.add(std::move(unb), std::move(bar), c);
        }
    return r;
}

/// Interior product with the basis vector e_v (barred = false) or its conjugate.
/// A graded derivation of degree -1.
inline AltForm contract(int v, bool barred, const AltForm& phi) {
    if (v < 1 || v > phi.n) throw std::invalid_argument("index out of range");
    AltForm r(phi.n, phi.p - (barred ? 0 : 1) >= 0 ? phi.p - (barred ? 0 : 1) : 0,
              phi.q - (barred ? 1 : 0) >= 0 ? phi.q - (barred ? 1 : 0) : 0);
    if ((!barred && phi.p == 0) || (barred && phi.q == 0)) return r;
    for (const auto& [k, c] : phi.comp) {
        const std::vector<int>& grp = barred ? k.second : k.first;
        auto pos = std::find(grp.begin(), grp.end(), v);
        if (pos == grp.end()) continue;
        int hop = static_cast<int>(pos - grp.begin());
        if (barred) hop += phi.p;
        std::vector<int> rem(grp.begin(), pos);
        rem.insert(rem.end(), pos + 1, grp.end());
        CRat val = (hop % 2 == 0) ? c : -c;
        if (barred)
            r.add(k.first, std::move(rem), val);
        else
            r.add(std::move(rem), k.second, val);
    }
    return r;
}

/// Hermitian inner product <phi, psi>_h = (1/p!q!) phi_{IJ̄} conj(psi)^{IJ̄};
/// reduces to minor determinants of h^{ab̄} over increasing tuples.
inline CRat inner_product(const AltForm& phi, const AltForm& psi, const HermitianForm& hf) {
    if (phi.n != psi.n || phi.n != hf.n)
        throw std::invalid_argument("inner_product requires matching dimensions");
    if (phi.p != psi.p || phi.q != psi.q)
        throw BidegreeMismatch("bidegree (" + std::to_string(phi.p) + "," + std::to_string(phi.q) +
                               ") != (" + std::to_string(psi.p) + "," + std::to_string(psi.q) + ")");
    CRat total;
    for (const auto& [kf, cf] : phi.comp)
        for (const auto& [kg, cg] : psi.comp) {
            const auto& I = kf.first;
            const auto& J = kf.second;
            const auto& K = kg.first;
            const auto& L = kg.second;
            CMat mp(phi.p, std::vector<CRat>(phi.p));
            for (int a = 0; a < phi.p; ++a)
                for (int b = 0; b < phi.p; ++b) mp[a][b] = hf.upper(I[a], K[b]);
            CMat mq(phi.q, std::vector<CRat>(phi.q));
            for (int a = 0; a < phi.q; ++a)
                for (int b = 0; b < phi.q; ++b) mq[a][b] = hf.upper(L[a], J[b]);
            total += cf * cg.conj() * detail::cmat_det(mp) * detail::cmat_det(mq);
        }
    return total;
}

inline int rand_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

inline CRat rand_crat(std::mt19937_64& rng, int span = 4) {
    return CRat(Rat(rand_int(rng, -span, span), rand_int(rng, 1, 3)),
                Rat(rand_int(rng, -span, span), rand_int(rng, 1, 3)));
}

inline AltForm random_altform(std::mt19937_64& rng, int n, int p, int q) {
    AltForm f(n, p, q);
    for (const auto& I : increasing_tuples(n, p))
        for (const auto& J : increasing_tuples(n, q)) f.add(I, J, rand_crat(rng));
    return f;
}

inline CMat cmat_mul(const CMat& a, const CMat& b) {
    int n = static_cast<int>(a.size());
    CMat r(n, std::vector<CRat>(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

/// Random invertible hermitian form A·A* + k·id.  positive = true keeps k >= 1,
/// which is positive definite; otherwise k walks negative until the exact
/// inverse exists, which yields indefinite but nondegenerate samples.
inline HermitianForm random_hermitian(std::mt19937_64& rng, int n, bool positive) {
    CMat a(n, std::vector<CRat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = rand_crat(rng, 2);
    CMat base(n, std::vector<CRat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CRat s;
            for (int k = 0; k < n; ++k) s += a[i][k] * a[j][k].conj();
            base[i][j] = s;
        }
    int k0 = positive ? 1 : -1;
    int step = positive ? 1 : -1;
    for (int t = 0; t < 64; ++t) {
        CMat m = base;
        for (int i = 0; i < n; ++i) m[i][i] += CRat(k0 + step * t);
        try {
            return HermitianForm(std::move(m));
        } catch (const Error&) {
        }
    }
    throw Error("failed to build an invertible hermitian form");
}

/// Invertible hermitian form of mixed signature: T*·D·T with unit-triangular T
/// (det 1) and D = diag(1,-1,1,...).  Congruence preserves signature, so the
/// sample is genuinely indefinite; needs n >= 2.
inline HermitianForm random_indefinite(std::mt19937_64& rng, int n) {
    if (n < 2) throw std::invalid_argument("indefinite forms need dimension >= 2");
    CMat u = detail::cmat_identity(n), l = detail::cmat_identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i < j) u[i][j] = rand_crat(rng, 2);
            if (i > j) l[i][j] = rand_crat(rng, 2);
        }
    CMat t = cmat_mul(u, l);
    CMat h(n, std::vector<CRat>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            CRat s;
            for (int k = 0; k < n; ++k) {
                CRat term = t[k][a].conj() * t[k][b];
                s += (k % 2 == 0) ? term : -term;
            }
            h[a][b] = s;
        }
    return HermitianForm(std::move(h));
}

}  // namespace crinv
