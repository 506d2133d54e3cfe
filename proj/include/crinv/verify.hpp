#pragma once

// Self-check suites behind `verify`: each suite replays the identities its
// module rests on with seeded random data and reports per-identity pass/fail
// counts plus the first counterexample.  Everything here is exact; a failure
// always means an implementation bug, never numerical noise.

#include "crinv/complete_intersection.hpp"
#include "crinv/expansion.hpp"
#include "crinv/tractor.hpp"

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace crinv {

struct IdentityResult {
    std::string name;
    long long checks = 0;
    long long failures = 0;
    std::string counterexample; // first failure only, empty when clean
    bool passed() const { return failures == 0; }
};

struct SuiteReport {
    std::string suite;
    int n = 0;
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<IdentityResult> identities;

    bool passed() const {
        for (const auto& r : identities)
            if (!r.passed()) return false;
        return true;
    }
    long long total_checks() const {
        long long t = 0;
        for (const auto& r : identities) t += r.checks;
        return t;
    }
};

namespace vdetail {

struct Recorder {
    IdentityResult res;
    explicit Recorder(std::string name) { res.name = std::move(name); }
    template <class F>
    void check(bool ok, F&& describe) {
        ++res.checks;
        if (!ok && res.failures++ == 0) res.counterexample = describe();
    }
};

template <class F>
IdentityResult run_identity(const std::string& name, F&& body) {
    Recorder rec(name);
    try {
        body(rec);
    } catch (const std::exception& e) {
        ++rec.res.checks;
        ++rec.res.failures;
        if (rec.res.counterexample.empty())
            rec.res.counterexample = std::string("exception: ") + e.what();
    }
    return rec.res;
}

inline std::mt19937_64 salted_rng(std::uint64_t seed, std::uint64_t salt) {
    return std::mt19937_64(seed * 0x9E3779B97F4A7C15ULL + salt);
}

inline long long factv(int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

inline std::string form_str(const AltForm& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, val] : f.comp) {
        if (!first) os << "; ";
        first = false;
        os << "[";
        for (std::size_t i = 0; i < key.first.size(); ++i) os << (i ? " " : "") << key.first[i];
        os << "|";
        for (std::size_t i = 0; i < key.second.size(); ++i) os << (i ? " " : "") << key.second[i];
        os << "]=" << val.str();
    }
    return os.str();
}

inline std::string metric_str(const HermitianForm& h) {
    std::ostringstream os;
    os << "[";
    for (int a = 1; a <= h.n; ++a) {
        os << (a > 1 ? "; " : "");
        for (int b = 1; b <= h.n; ++b) os << (b > 1 ? ", " : "") << h.lower(a, b).str();
    }
    os << "]";
    return os.str();
}

// Identity, positive definite, and indefinite invertible metric samples.
inline std::vector<HermitianForm> metric_samples(std::mt19937_64& rng, int n) {
    std::vector<HermitianForm> hs;
    hs.push_back(HermitianForm::identity(n));
    hs.push_back(random_hermitian(rng, n, true));
    if (n >= 2)
        hs.push_back(random_indefinite(rng, n));
    else
        hs.push_back(HermitianForm(CMat{{CRat(-1)}}));
    return hs;
}

inline Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    int a = num(rng);
    if (a == 0) a = 1;
    return Rat(a, den(rng));
}

inline InvariantPoly<Rat> random_invariant_poly(std::mt19937_64& rng, GenBasis basis, int ngens) {
    std::uniform_int_distribution<int> exp(0, 2);
    InvariantPoly<Rat> p(basis, ngens);
    for (int t = 0; t < 3; ++t) {
        std::vector<int> e(static_cast<std::size_t>(ngens));
        for (auto& x : e) x = exp(rng);
        p.add_term(e, random_rat(rng));
    }
    return p;
}

inline SigmaPoly random_sigma_poly(std::mt19937_64& rng, int r) {
    std::uniform_int_distribution<int> exp(0, 2);
    SigmaPoly s = SigmaPoly::constant(r, Rat(0));
    for (int t = 0; t < 3; ++t) {
        std::vector<int> e(static_cast<std::size_t>(r));
        for (auto& x : e) x = exp(rng);
        s.add_term(e, random_rat(rng));
    }
    return s;
}

// Exponent vectors e with sum (i+1) e_i = degree over generators c_1..c_ngens.
inline std::vector<std::vector<int>> weighted_exps(int ngens, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(ngens));
    std::function<void(int, int)> rec = [&](int gen, int rest) {
        if (gen > ngens) {
            if (rest == 0) out.push_back(cur);
            return;
        }
        for (int e = 0; e * gen <= rest; ++e) {
            cur[static_cast<std::size_t>(gen - 1)] = e;
            rec(gen + 1, rest - e * gen);
        }
        cur[static_cast<std::size_t>(gen - 1)] = 0;
    };
    rec(1, degree);
    return out;
}

inline std::vector<PhiPartition> partitions_of(int m) {
    std::vector<PhiPartition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(PhiPartition(cur));
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(m, m);
    return out;
}

inline std::string partition_str(const PhiPartition& part) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < part.parts.size(); ++i) os << (i ? "," : "") << part.parts[i];
    os << ")";
    return os.str();
}

// Brute-force evaluations of the low-degree component formulas, independent of
// the chain machinery they certify.

inline CRat norm2_S(const CurvatureData& d) {
    const int n = d.n;
    const auto& up = d.h.hup;
    CRat t;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int e = 0; e < n; ++e)
                    for (int r = 0; r < n; ++r)
                        for (int s = 0; s < n; ++s)
                            for (int u = 0; u < n; ++u)
                                for (int v = 0; v < n; ++v)
                                    t += d.S[a][b][c][e] * d.S[r][s][u][v].conj() * up[a][r] *
                                         up[s][b] * up[c][u] * up[v][e];
    return t;
}

inline CRat norm2_V(const CurvatureData& d) {
    const int n = d.n;
    const auto& up = d.h.hup;
    CRat t;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int r = 0; r < n; ++r)
                    for (int s = 0; s < n; ++s)
                        for (int u = 0; u < n; ++u)
                            t += d.V[a][b][c] * d.V[r][s][u].conj() * up[a][r] * up[s][b] *
                                 up[c][u];
    return t;
}

inline Tensor4 raised_S(const CurvatureData& d) {
    const int n = d.n;
    const auto& up = d.h.hup;
    Tensor4 su(static_cast<std::size_t>(n),
               Tensor3(static_cast<std::size_t>(n),
                       Tensor2(static_cast<std::size_t>(n),
                               std::vector<CRat>(static_cast<std::size_t>(n)))));
    for (int g = 0; g < n; ++g)
        for (int gp = 0; gp < n; ++gp)
            for (int a = 0; a < n; ++a)
                for (int np = 0; np < n; ++np) {
                    CRat sum;
                    for (int dd = 0; dd < n; ++dd)
                        for (int mm = 0; mm < n; ++mm)
                            sum += up[gp][dd] * up[np][mm] * d.S[g][dd][a][mm];
                    su[g][gp][a][np] = sum;
                }
    return su;
}

inline Tensor3 raised_V(const CurvatureData& d) {
    const int n = d.n;
    const auto& up = d.h.hup;
    Tensor3 vu(static_cast<std::size_t>(n),
               Tensor2(static_cast<std::size_t>(n),
                       std::vector<CRat>(static_cast<std::size_t>(n))));
    for (int g = 0; g < n; ++g)
        for (int gp = 0; gp < n; ++gp)
            for (int a = 0; a < n; ++a) {
                CRat sum;
                for (int nu = 0; nu < n; ++nu) sum += up[gp][nu] * d.V[g][nu][a];
                vu[g][gp][a] = sum;
            }
    return vu;
}

// First index is the direction raised from the trailing barred slot of
// conj(V); the last two are the chain endomorphism row and column.
inline Tensor3 raised_V_conj(const CurvatureData& d) {
    const int n = d.n;
    const auto& up = d.h.hup;
    Tensor3 vc(static_cast<std::size_t>(n),
               Tensor2(static_cast<std::size_t>(n),
                       std::vector<CRat>(static_cast<std::size_t>(n))));
    for (int m = 0; m < n; ++m)
        for (int g = 0; g < n; ++g)
            for (int gp = 0; gp < n; ++gp) {
                CRat sum;
                for (int nu = 0; nu < n; ++nu)
                    for (int b = 0; b < n; ++b)
                        sum += up[m][b] * up[gp][nu] * d.V[nu][g][b].conj();
                vc[m][g][gp] = sum;
            }
    return vc;
}

inline Tensor2 raised_U(const CurvatureData& d) {
    const int n = d.n;
    const auto& up = d.h.hup;
    Tensor2 uu(static_cast<std::size_t>(n), std::vector<CRat>(static_cast<std::size_t>(n)));
    for (int g = 0; g < n; ++g)
        for (int gp = 0; gp < n; ++gp) {
            CRat sum;
            for (int nu = 0; nu < n; ++nu) sum += up[gp][nu] * d.U[g][nu];
            uu[g][gp] = sum;
        }
    return uu;
}

inline CRat degree2_covector(const CurvatureData& d, int alpha0) {
    const int n = d.n;
    const auto& up = d.h.hup;
    CRat sum;
    for (int b = 0; b < n; ++b)
        for (int g = 0; g < n; ++g)
            for (int m = 0; m < n; ++m) {
                CRat vup;
                for (int r = 0; r < n; ++r)
                    for (int nu = 0; nu < n; ++nu)
                        for (int t = 0; t < n; ++t)
                            vup += up[r][b] * up[g][nu] * up[t][m] * d.V[r][nu][t];
                sum += d.S[alpha0][b][g][m] * vup;
            }
    return CRat(Rat(-1, 2)) * CRat::i() * sum;
}

inline CRat degree3_scalar(const CurvatureData& d) {
    const int n = d.n;
    Tensor4 su = raised_S(d);
    CRat sum;
    for (int g1 = 0; g1 < n; ++g1)
        for (int g2 = 0; g2 < n; ++g2)
            for (int g3 = 0; g3 < n; ++g3)
                for (int a = 0; a < n; ++a)
                    for (int nu = 0; nu < n; ++nu)
                        for (int mu = 0; mu < n; ++mu)
                            sum += su[g1][g2][a][nu] * su[g2][g3][nu][mu] * su[g3][g1][mu][a] +
                                   su[g1][g2][a][nu] * su[g2][g3][mu][a] * su[g3][g1][nu][mu];
    return CRat(Rat(1, 6)) * sum;
}

inline CRat degree3_covector(const CurvatureData& d, int alpha0) {
    const int n = d.n;
    Tensor4 su = raised_S(d);
    Tensor3 vu = raised_V(d);
    const CRat i = CRat::i();
    CRat t1, t2, t3;
    for (int g1 = 0; g1 < n; ++g1)
        for (int g2 = 0; g2 < n; ++g2)
            for (int g3 = 0; g3 < n; ++g3)
                for (int mu = 0; mu < n; ++mu)
                    for (int nu = 0; nu < n; ++nu) {
                        t1 += vu[g1][g2][alpha0] * su[g2][g3][mu][nu] * su[g3][g1][nu][mu];
                        t2 += su[g1][g2][alpha0][nu] * vu[g2][g3][mu] * su[g3][g1][nu][mu];
                        t3 += su[g1][g2][alpha0][nu] * su[g2][g3][nu][mu] * vu[g3][g1][mu];
                    }
    return CRat(Rat(1, 6)) * (-(i * t1) + i * t2 + i * t3);
}

inline CRat degree3_corner(const CurvatureData& d) {
    const int n = d.n;
    Tensor4 su = raised_S(d);
    Tensor3 vu = raised_V(d);
    Tensor3 vc = raised_V_conj(d);
    Tensor2 uu = raised_U(d);
    CRat t;
    for (int g1 = 0; g1 < n; ++g1)
        for (int g2 = 0; g2 < n; ++g2)
            for (int g3 = 0; g3 < n; ++g3)
                for (int mu = 0; mu < n; ++mu)
                    for (int nu = 0; nu < n; ++nu) {
                        t -= uu[g1][g2] * su[g2][g3][mu][nu] * su[g3][g1][nu][mu];
                        t += vc[mu][g1][g2] * vu[g2][g3][nu] * su[g3][g1][mu][nu];
                        t += vc[mu][g1][g2] * su[g2][g3][mu][nu] * vu[g3][g1][nu];
                    }
    return CRat(Rat(1, 6)) * t;
}

} // namespace vdetail

/// Ring-level identities: generator-basis round-trips, sigma decomposition,
/// the vanishing of the transformed first power sum, and the formal expansion
/// inverses.  n is the generator count of the sampled ring.
inline SuiteReport verify_ring(int n, std::uint64_t seed, int trials) {
    if (n < 1) throw InvalidDimension("ring suite needs n >= 1, got " + std::to_string(n));
    using namespace vdetail;
    SuiteReport rep{"ring", n, seed, trials, {}};

    rep.identities.push_back(run_identity("newton_roundtrip", [&](Recorder& rec) {
        auto rng = salted_rng(seed, 11);
        for (int t = 0; t < trials; ++t) {
            auto p = random_invariant_poly(rng, GenBasis::Chern, n);
            rec.check(p.to_power().to_chern() == p,
                      [&] { return "chern start, trial " + std::to_string(t) + ": " + p.str(); });
            auto q = random_invariant_poly(rng, GenBasis::PowerSum, n);
            rec.check(q.to_chern().to_power() == q,
                      [&] { return "power start, trial " + std::to_string(t) + ": " + q.str(); });
        }
    }));

    rep.identities.push_back(run_identity("sigma_roundtrip", [&](Recorder& rec) {
        auto rng = salted_rng(seed, 12);
        const int r = n + 1;
        for (int t = 0; t < trials; ++t) {
            SigmaPoly sp = random_sigma_poly(rng, r);
            rec.check(sigma_decompose(sp.expand(), r) == sp,
                      [&] { return "trial " + std::to_string(t) + ": " + sp.str(); });
        }
    }));

    rep.identities.push_back(run_identity("einstein_T1_vanishes", [&](Recorder& rec) {
        auto t1 = InvariantPoly<Rat>::generator(GenBasis::PowerSum, 1, 1);
        for (EinsteinMode mode : {EinsteinMode::Domain, EinsteinMode::Base}) {
            rec.check(einstein_transform(t1, mode, n).is_zero(),
                      [&] { return std::string("numeric mode, n = ") + std::to_string(n); });
            rec.check(einstein_transform_symbolic(t1, mode).is_zero(),
                      [] { return std::string("symbolic mode"); });
        }
    }));

    rep.identities.push_back(run_identity("expansion_inverse", [&](Recorder& rec) {
        using P = MultiPoly<RatFunc>;
        for (int m = 1; m <= 4; ++m) {
            std::map<std::string, P> tp, tw;
            for (int j = 1; j <= m; ++j) {
                tp["tP" + std::to_string(j)] = expand_TPsi(j);
                tw["tW" + std::to_string(j)] = expand_TW(j);
            }
            rec.check(expand_TW(m).substitute(tp) == P::variable("tW" + std::to_string(m)),
                      [&] { return "forward, m = " + std::to_string(m); });
            rec.check(expand_TPsi(m).substitute(tw) == P::variable("tP" + std::to_string(m)),
                      [&] { return "backward, m = " + std::to_string(m); });
        }
    }));

    rep.identities.push_back(run_identity("chern_expansion_selfcheck", [&](Recorder& rec) {
        const int nn = std::min(n, 5); // cost cap; larger n adds nothing new
        auto phi = chern_expansion(nn); // throws if the internal cross-check fails
        rec.check(static_cast<int>(phi.size()) == nn + 1,
                  [&] { return "expected " + std::to_string(nn + 1) + " graded parts"; });
        rec.check(!phi.back().is_zero(), [] { return std::string("top part vanished"); });
    }));

    return rep;
}

/// Intersection-pipeline identities: the frozen golden value, annihilation of
/// first-generator multiples, the leading-term formula, and distinctness of
/// the symbolic pairings.
inline SuiteReport verify_ci(int n, std::uint64_t seed, int trials) {
    if (n < 2) throw InvalidDimension("ci suite needs n >= 2, got " + std::to_string(n));
    using namespace vdetail;
    SuiteReport rep{"ci", n, seed, trials, {}};
    const int r = n + 1;

    rep.identities.push_back(run_identity("golden_invariant", [&](Recorder& rec) {
        auto ci = CIData::numeric(2, 3, {3, 3, 3});
        auto phi = parse_phi("c2", 2);
        PiValue v = total_Iprime(phi, ci);
        rec.check(v == PiValue::of(Rat(-108)), [&] { return "got " + v.str(); });
    }));

    rep.identities.push_back(run_identity("c1_factor_annihilation", [&](Recorder& rec) {
        auto rng = salted_rng(seed, 21);
        auto ci = CIData::symbolic(n, r);
        auto exps = weighted_exps(n, n - 1);
        auto c1 = InvariantPoly<Rat>::generator(GenBasis::Chern, n, 1);
        for (int t = 0; t < trials; ++t) {
            InvariantPoly<Rat> psi(GenBasis::Chern, n);
            for (const auto& e : exps) {
                Rat c = random_rat(rng);
                std::uniform_int_distribution<int> keep(0, 1);
                if (keep(rng)) psi.add_term(e, c);
            }
            if (psi.is_zero()) psi.add_term(exps.front(), Rat(1));
            PiValue v = total_Iprime(c1 * psi, ci);
            rec.check(v.is_zero(), [&] {
                return "trial " + std::to_string(t) + ", psi = " + psi.str() + ": " + v.str();
            });
        }
    }));

    rep.identities.push_back(run_identity("leading_term_matches", [&](Recorder& rec) {
        auto ci = CIData::symbolic(n, r);
        for (const auto& e : weighted_exps(n, n)) {
            if (e[0] != 0) continue; // monomials in c_2..c_n only
            InvariantPoly<Rat> mono(GenBasis::Chern, n);
            mono.add_term(e, Rat(1));
            SigmaPoly expected = SigmaPoly::sigma(r, r);
            int k = 0;
            for (int i = 2; i <= n; ++i)
                for (int j = 0; j < e[static_cast<std::size_t>(i - 1)]; ++j) {
                    expected = expected * SigmaPoly::sigma(r, i);
                    ++k;
                }
            if (k % 2 == 1) expected = expected * SigmaPoly::constant(r, Rat(-1));
            SigmaPoly got = leading_term(mono, ci);
            rec.check(got == expected,
                      [&] { return mono.str() + ": got " + got.str(); });
        }
    }));

    rep.identities.push_back(run_identity("pairwise_distinct", [&](Recorder& rec) {
        auto ci = CIData::symbolic(n, r);
        std::vector<std::pair<std::string, PiValue>> vals;
        for (const auto& e : weighted_exps(n, n)) {
            if (e[0] != 0) continue;
            InvariantPoly<Rat> mono(GenBasis::Chern, n);
            mono.add_term(e, Rat(1));
            vals.emplace_back(mono.str(), total_Iprime(mono, ci));
        }
        for (std::size_t i = 0; i < vals.size(); ++i)
            for (std::size_t j = i + 1; j < vals.size(); ++j)
                rec.check(!(vals[i].second == vals[j].second), [&] {
                    return vals[i].first + " and " + vals[j].first + " both give " +
                           vals[i].second.str();
                });
    }));

    return rep;
}

/// Operator-calculus identities on random forms over identity, positive
/// definite, and indefinite invertible metrics.
inline SuiteReport verify_lefschetz(int n, std::uint64_t seed, int trials) {
    if (n < 1) throw InvalidDimension("lefschetz suite needs n >= 1, got " + std::to_string(n));
    using namespace vdetail;
    SuiteReport rep{"lefschetz", n, seed, trials, {}};

    auto describe = [n](const HermitianForm& h, const AltForm& phi, int p, int q, int t) {
        std::ostringstream os;
        os << "n=" << n << " p=" << p << " q=" << q << " trial=" << t
           << " h=" << metric_str(h) << " form: " << form_str(phi);
        return os.str();
    };

    rep.identities.push_back(run_identity("sl2_commutators", [&](Recorder& rec) {
        auto rng = salted_rng(seed, 31);
        auto hs = metric_samples(rng, n);
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q)
                for (int t = 0; t < trials; ++t) {
                    const HermitianForm& h = hs[static_cast<std::size_t>(t) % hs.size()];
                    AltForm phi = random_altform(rng, n, p, q);
                    bool ok = Hop(L(h, phi)) - L(h, Hop(phi)) == CRat(-2) * L(h, phi) &&
                              Hop(Lambda(h, phi)) - Lambda(h, Hop(phi)) ==
                                  CRat(2) * Lambda(h, phi) &&
                              Lambda(h, L(h, phi)) - L(h, Lambda(h, phi)) == Hop(phi);
                    rec.check(ok, [&] { return describe(h, phi, p, q, t); });
                }
    }));

    rep.identities.push_back(run_identity("L_power_commutators", [&](Recorder& rec) {
        auto rng = salted_rng(seed, 32);
        auto hs = metric_samples(rng, n);
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q)
                for (int t = 0; t < trials; ++t) {
                    const HermitianForm& h = hs[static_cast<std::size_t>(t) % hs.size()];
                    AltForm phi = random_altform(rng, n, p, q);
                    for (int m = 1; m <= 3; ++m) {
                        AltForm lhs1 = Lambda(h, Lpow(h, phi, m)) - Lpow(h, Lambda(h, phi), m);
                        bool ok1 = lhs1 == CRat(m * (n - p - q - m + 1)) * Lpow(h, phi, m - 1);
                        AltForm lhs2 =
                            Lambdapow(h, L(h, phi), m) - L(h, Lambdapow(h, phi, m));
                        bool ok2 =
                            lhs2 == CRat(m * (n - p - q + m - 1)) * Lambdapow(h, phi, m - 1);
                        rec.check(ok1 && ok2, [&] {
                            return "m=" + std::to_string(m) + " " + describe(h, phi, p, q, t);
                        });
                    }
                }
    }));

    rep.identities.push_back(run_identity("primitive_collapse", [&](Recorder& rec) {
        auto rng = salted_rng(seed, 33);
        auto hs = metric_samples(rng, n);
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q) {
                if (p + q > n) continue;
                for (int t = 0; t < trials; ++t) {
                    const HermitianForm& h = hs[static_cast<std::size_t>(t) % hs.size()];
                    AltForm phi = random_primitive(rng, h, p, q);
                    rec.check(Lambda(h, phi).is_zero(),
                              [&] { return describe(h, phi, p, q, t); });
                    for (int m = 1; m <= 3; ++m)
                        for (int k = 1; k <= m; ++k) {
                            Rat coeff(factv(m), factv(m - k));
                            for (int j = 1; j <= k; ++j) coeff *= Rat(n - p - q - m + j);
                            bool ok = Lambdapow(h, Lpow(h, phi, m), k) ==
                                      Lpow(h, phi, m - k) * CRat(coeff);
                            rec.check(ok, [&] {
                                return "m=" + std::to_string(m) + " k=" + std::to_string(k) +
                                       " " + describe(h, phi, p, q, t);
                            });
                        }
                }
            }
    }));

    rep.identities.push_back(run_identity("bidegree_decomposition", [&](Recorder& rec) {
        auto rng = salted_rng(seed, 34);
        auto hs = metric_samples(rng, n);
        for (int t = 0; t < trials; ++t) {
            const HermitianForm& h = hs[static_cast<std::size_t>(t) % hs.size()];

            AltForm a = random_altform(rng, n, n, n);
            rec.check(a == Lpow(h, Lambdapow(h, a, n), n) *
                               CRat(Rat(1, factv(n) * factv(n))),
                      [&] { return describe(h, a, n, n, t); });

            AltForm b = random_altform(rng, n, n, n - 1);
            rec.check(b == Lpow(h, Lambdapow(h, b, n - 1), n - 1) *
                               CRat(Rat(1, factv(n - 1) * factv(n - 1))),
                      [&] { return describe(h, b, n, n - 1, t); });

            AltForm c = random_altform(rng, n, n - 1, n - 1);
            rec.check(L(h, c) == Lpow(h, Lambdapow(h, c, n - 1), n) *
                                     CRat(Rat(1, factv(n) * factv(n - 1))),
                      [&] { return describe(h, c, n - 1, n - 1, t); });

            if (n >= 2)
                for (int m = 0; m <= n - 1; ++m) {
                    AltForm phi = random_altform(rng, n, m, m);
                    AltForm lhs = Lambdapow(h, Lpow(h, phi, n - m - 1), n - 2);
                    AltForm rhs(n, 1, 1);
                    if (m >= 1) rhs += CRat(m) * Lambdapow(h, phi, m - 1);
                    rhs += CRat(n - m - 1) * L(h, Lambdapow(h, phi, m));
                    bool ok = lhs == rhs * CRat(Rat(factv(n - 2) * factv(n - m - 1), factv(m)));
                    rec.check(ok, [&] { return describe(h, phi, m, m, t); });
                }

            if (n >= 3)
                for (int m = 2; m <= n - 1; ++m) {
                    AltForm phi = random_altform(rng, n, m, m - 1);
                    AltForm lhs = Lambdapow(h, Lpow(h, phi, n - m - 1), n - 3);
                    AltForm rhs(n, 2, 1);
                    rhs += CRat(m - 1) * Lambdapow(h, phi, m - 2);
                    rhs += CRat(n - m - 1) * L(h, Lambdapow(h, phi, m - 1));
                    bool ok = lhs ==
                              rhs * CRat(Rat(factv(n - 3) * factv(n - m - 1), factv(m - 1)));
                    rec.check(ok, [&] { return describe(h, phi, m, m - 1, t); });
                }
        }
    }));

    return rep;
}

/// Extended-curvature identities: hermiticity, the trace-free tangential
/// block, partition-order invariance, the covector link, the low-degree
/// component formulas, and the two graded cross-checks.  The last two rerun
/// the heavy wedge machinery and cap their sample count.
inline SuiteReport verify_tractor(int n, std::uint64_t seed, int trials) {
    if (n < 2) throw InvalidDimension("tractor suite needs n >= 2, got " + std::to_string(n));
    using namespace vdetail;
    SuiteReport rep{"tractor", n, seed, trials, {}};
    auto parts = partitions_of(n);
    const int heavy = std::min(trials, 3);

    auto sample_seed = [&](std::uint64_t salt, int t) {
        return seed * 1000003ULL + salt * 7919ULL + static_cast<std::uint64_t>(t);
    };

    rep.identities.push_back(run_identity("S_phi_hermitian", [&](Recorder& rec) {
        for (int t = 0; t < trials; ++t) {
            CurvatureData d = random_curvature(sample_seed(41, t), n);
            for (const auto& part : parts) {
                SPhiResult sp = s_phi_matrix(part, d);
                for (int A = 0; A <= n; ++A)
                    for (int B = 0; B <= n; ++B)
                        rec.check(sp.entries[static_cast<std::size_t>(A)]
                                            [static_cast<std::size_t>(B)].conj() ==
                                      sp.entries[static_cast<std::size_t>(B)]
                                                [static_cast<std::size_t>(A)],
                                  [&] {
                                      return "partition " + partition_str(part) + ", entry (" +
                                             std::to_string(A) + "," + std::to_string(B) +
                                             "), sample seed " +
                                             std::to_string(sample_seed(41, t));
                                  });
            }
        }
    }));

    rep.identities.push_back(run_identity("S_phi_tracefree", [&](Recorder& rec) {
        for (int t = 0; t < trials; ++t) {
            CurvatureData d = random_curvature(sample_seed(42, t), n);
            for (const auto& part : parts) {
                SPhiResult sp = s_phi_matrix(part, d);
                CRat scalar = s_phi_scalar(sp, d.h);
                for (int a = 1; a <= n; ++a)
                    for (int b = 1; b <= n; ++b) {
                        CRat diff =
                            sp.tangential(a, b) - CRat(Rat(1, n)) * scalar * d.h.lower(a, b);
                        rec.check(diff.is_zero(), [&] {
                            return "partition " + partition_str(part) + ", entry (" +
                                   std::to_string(a) + "," + std::to_string(b) +
                                   "), residue " + diff.str() + ", sample seed " +
                                   std::to_string(sample_seed(42, t));
                        });
                    }
            }
        }
    }));

    rep.identities.push_back(run_identity("partition_order_invariance", [&](Recorder& rec) {
        for (int t = 0; t < std::min(trials, 5); ++t) {
            CurvatureData d = random_curvature(sample_seed(43, t), n);
            for (const auto& part : parts) {
                if (part.parts.size() < 2) continue;
                std::vector<int> rev(part.parts.rbegin(), part.parts.rend());
                SPhiResult a = s_phi_matrix(part, d);
                SPhiResult b = s_phi_matrix(PhiPartition(rev), d);
                for (int A = 0; A <= n; ++A)
                    for (int B = 0; B <= n; ++B)
                        rec.check(a.entries[static_cast<std::size_t>(A)]
                                           [static_cast<std::size_t>(B)] ==
                                      b.entries[static_cast<std::size_t>(A)]
                                               [static_cast<std::size_t>(B)],
                                  [&] {
                                      return "partition " + partition_str(part) + " vs reversed, entry (" +
                                             std::to_string(A) + "," + std::to_string(B) + ")";
                                  });
            }
        }
    }));

    rep.identities.push_back(run_identity("covector_identity", [&](Recorder& rec) {
        for (int t = 0; t < trials; ++t) {
            CurvatureData d = random_curvature(sample_seed(44, t), n);
            for (const auto& part : parts) {
                SPhiResult sp = s_phi_matrix(part, d);
                const int k = static_cast<int>(part.parts.size());
                for (int a = 1; a <= n; ++a) {
                    CRat rhs;
                    for (int p = 1; p <= k; ++p)
                        rhs += CRat(Rat(part.parts[static_cast<std::size_t>(p - 1)])) *
                               s_prime(p, part, d)[static_cast<std::size_t>(a - 1)];
                    rhs *= CRat::i() / CRat(Rat(n));
                    rec.check(sp.with_infty(a) == rhs, [&] {
                        return "partition " + partition_str(part) + ", slot " +
                               std::to_string(a) + ", sample seed " +
                               std::to_string(sample_seed(44, t));
                    });
                }
            }
        }
    }));

    rep.identities.push_back(run_identity("cm_degree_two_oracles", [&](Recorder& rec) {
        TractorFlags tf;
        tf.chern_moser_tracefree = true;
        for (int t = 0; t < std::min(trials, 10); ++t) {
            CurvatureData d = random_curvature(sample_seed(45, t), n, tf);
            SPhiResult sp = s_phi_matrix({2}, d);
            auto tag = [&](const char* what) {
                return std::string(what) + ", sample seed " + std::to_string(sample_seed(45, t));
            };
            rec.check(s_phi_scalar(sp, d.h) == CRat(Rat(-1, 2)) * norm2_S(d),
                      [&] { return tag("scalar"); });
            for (int a = 1; a <= n; ++a)
                rec.check(sp.with_infty(a) == degree2_covector(d, a - 1),
                          [&] { return tag("covector"); });
            rec.check(sp.infty_infty() == CRat(Rat(-1, 2)) * norm2_V(d),
                      [&] { return tag("corner"); });
        }
    }));

    if (n >= 3)
        rep.identities.push_back(run_identity("cm_degree_three_oracles", [&](Recorder& rec) {
            TractorFlags tf;
            tf.chern_moser_tracefree = true;
            for (int t = 0; t < std::min(trials, 5); ++t) {
                CurvatureData d = random_curvature(sample_seed(46, t), n, tf);
                SPhiResult sp = s_phi_matrix({3}, d);
                auto tag = [&](const char* what) {
                    return std::string(what) + ", sample seed " +
                           std::to_string(sample_seed(46, t));
                };
                rec.check(s_phi_scalar(sp, d.h) == degree3_scalar(d),
                          [&] { return tag("scalar"); });
                for (int a = 1; a <= n; ++a)
                    rec.check(sp.with_infty(a) == degree3_covector(d, a - 1),
                              [&] { return tag("covector"); });
                rec.check(sp.infty_infty() == degree3_corner(d),
                          [&] { return tag("corner"); });
            }
        }));

    rep.identities.push_back(run_identity("omega_decomposition", [&](Recorder& rec) {
        for (int t = 0; t < heavy; ++t) {
            CurvatureData d = random_curvature(sample_seed(47, t), n);
            for (const auto& part : parts) {
                DecompositionReport r = phi_omega_decomposition(part, d);
                rec.check(r.even_ok && r.odd_ok, [&] {
                    return "partition " + partition_str(part) + ", sample seed " +
                           std::to_string(sample_seed(47, t)) +
                           (r.even_ok ? ", odd part mismatch" : ", even part mismatch");
                });
            }
        }
    }));

    rep.identities.push_back(run_identity("infty_contraction", [&](Recorder& rec) {
        for (int t = 0; t < heavy; ++t) {
            CurvatureData d = random_curvature(sample_seed(48, t), n);
            for (const auto& part : parts) {
                InftyContractionReport ic = infty_contraction_check(part, d);
                rec.check(ic.ok, [&] {
                    return "partition " + partition_str(part) + ", sample seed " +
                           std::to_string(sample_seed(48, t)) + ": lhs " + ic.lhs.str() +
                           " vs rhs " + ic.rhs.str();
                });
            }
        }
    }));

    return rep;
}

/// Dispatch by suite name; "all" runs every suite in a fixed order.
inline std::vector<SuiteReport> verify_suites(const std::string& which, int n,
                                              std::uint64_t seed, int trials) {
    std::vector<SuiteReport> out;
    if (which == "ring" || which == "all") out.push_back(verify_ring(n, seed, trials));
    if (which == "ci" || which == "all") out.push_back(verify_ci(n, seed, trials));
    if (which == "lefschetz" || which == "all") out.push_back(verify_lefschetz(n, seed, trials));
    if (which == "tractor" || which == "all") out.push_back(verify_tractor(n, seed, trials));
    if (out.empty())
        throw std::invalid_argument("unknown suite '" + which +
                                    "' (expected lefschetz, tractor, ring, ci, or all)");
    return out;
}

} // namespace crinv
