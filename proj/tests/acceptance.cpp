// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Every comparison is exact; the only tolerance anywhere is the
// wall-clock budget on the first criterion.

#include <crinv/verify.hpp>

#include <chrono>
#include <iostream>
#include <map>
#include <string>
#include <vector>

using namespace crinv;
using IP = InvariantPoly<Rat>;

namespace {

int failures = 0;

void report(int idx, const std::string& label, bool ok, const std::string& detail = "") {
    std::cout << "criterion " << idx << ": " << (ok ? "pass" : "FAIL") << " - " << label
              << "\n";
    if (!ok) {
        ++failures;
        if (!detail.empty()) std::cerr << "  detail: " << detail << "\n";
    }
}

// Substitute w -> omega_coeff * c1 into a numeric {w, tP_j} expansion and
// rewrite the traces through Newton's identities; independent of the closed
// form it certifies.
IP substitute_omega(const MultiPoly<Rat>& expansion, const Rat& omega_coeff, int maxgen) {
    int wi = -1;
    std::vector<int> gen_of(expansion.vars().size(), 0);
    for (std::size_t i = 0; i < expansion.vars().size(); ++i) {
        const std::string& v = expansion.vars()[i];
        if (v == "w") wi = static_cast<int>(i);
        else gen_of[i] = std::stoi(v.substr(2)); // "tP<j>"
    }
    IP acc(GenBasis::Chern, maxgen);
    const IP c1 = IP::generator(GenBasis::Chern, maxgen, 1);
    for (auto& [e, c] : expansion.terms()) {
        IP t = IP::constant(GenBasis::Chern, maxgen, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (static_cast<int>(i) == wi) {
                t = pow(omega_coeff, e[i]) * (t * IP::power(c1, e[i]));
            } else {
                auto tj = IP::power_sum_in_chern(gen_of[i]).with_maxgen(maxgen);
                t *= IP::power(tj, e[i]);
            }
        }
        acc += t;
    }
    return acc;
}

std::string failed_identities(const SuiteReport& rep) {
    std::string out;
    for (const auto& id : rep.identities)
        if (!id.passed()) {
            if (!out.empty()) out += "; ";
            out += id.name + ": " + id.counterexample;
        }
    return out;
}

} // namespace

int main() {
    using clock = std::chrono::steady_clock;

    // 1: frozen intersection invariant, exact and under one second
    {
        auto t0 = clock::now();
        auto ci = CIData::numeric(2, 3, {3, 3, 3});
        PiValue v = total_Iprime(parse_phi("c2", 2), ci);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0);
        bool ok = v == PiValue::of(Rat(-108)) && ms.count() < 1000;
        report(1, "frozen intersection invariant, exact, under one second", ok,
               "value " + v.str() + ", " + std::to_string(ms.count()) + " ms");
    }

    // 2-4: leading sigma parts, annihilation of first-generator multiples,
    // and distinctness, per dimension, via the ci identity suite
    {
        bool lead = true, annih = true, dist = true;
        std::string dlead, dannih, ddist;
        for (int n : {2, 3, 4}) {
            SuiteReport rep = verify_ci(n, 2026, 50);
            for (const auto& id : rep.identities) {
                if (id.name == "leading_term_matches" && !id.passed()) {
                    lead = false;
                    dlead += "n=" + std::to_string(n) + ": " + id.counterexample + " ";
                }
                if (id.name == "c1_factor_annihilation" && !id.passed()) {
                    annih = false;
                    dannih += "n=" + std::to_string(n) + ": " + id.counterexample + " ";
                }
                if (id.name == "pairwise_distinct" && !id.passed()) {
                    dist = false;
                    ddist += "n=" + std::to_string(n) + ": " + id.counterexample + " ";
                }
            }
        }
        report(2, "leading sigma part of every degree-n monomial, n in {2,3,4}", lead, dlead);
        report(3, "zero invariant for 50 random first-generator multiples per n", annih,
               dannih);
        report(4, "pairwise distinct symbolic invariants across monomials", dist, ddist);
    }

    // 5: Einstein side: first power sum dies, the cubic transform matches its
    // display numerically and symbolically, closed form matches substitution
    {
        bool ok = true;
        std::string detail;
        auto t1 = IP::generator(GenBasis::PowerSum, 1, 1);
        for (int n = 1; n <= 8 && ok; ++n)
            for (EinsteinMode mode : {EinsteinMode::Domain, EinsteinMode::Base})
                if (!einstein_transform(t1, mode, n).is_zero()) {
                    ok = false;
                    detail = "transformed first power sum nonzero at n = " + std::to_string(n);
                }
        for (EinsteinMode mode : {EinsteinMode::Domain, EinsteinMode::Base})
            if (ok && !einstein_transform_symbolic(t1, mode).is_zero()) {
                ok = false;
                detail = "transformed first power sum nonzero symbolically";
            }

        auto c3 = IP::generator(GenBasis::Chern, 3, 3);
        if (ok) {
            std::string got = einstein_transform_symbolic(c3, EinsteinMode::Domain).str();
            std::string want = "c3 - n/(n+2)*c1*c2 + (n^2+n)/(3*n^2+12*n+12)*c1^3";
            if (got != want) {
                ok = false;
                detail = "symbolic cubic transform printed " + got;
            }
        }
        for (int n = 1; n <= 8 && ok; ++n) {
            IP want(GenBasis::Chern, 3);
            want.add_term({0, 0, 1}, Rat(1));
            want.add_term({1, 1, 0}, Rat(-n) / Rat(n + 2));
            want.add_term({3, 0, 0},
                          Rat(static_cast<long long>(n) * (n + 1)) /
                              Rat(3LL * (n + 2) * (n + 2)));
            if (!(einstein_transform(c3, EinsteinMode::Domain, n) == want)) {
                ok = false;
                detail = "cubic transform mismatch at n = " + std::to_string(n);
            }
        }
        for (int m = 1; m <= 8 && ok; ++m) {
            auto raw = expand_TW(m);
            for (int n = 1; n <= 8 && ok; ++n) {
                auto ex = raw.map_coeffs<Rat>(
                    [n](const RatFunc& f) { return f.evaluate(Rat(n)); });
                if (!(substitute_omega(ex, Rat(-1, n + 2), m) ==
                      einstein_t<Rat>(m, Rat(n + 2)))) {
                    ok = false;
                    detail = "closed form vs substitution at m = " + std::to_string(m) +
                             ", n = " + std::to_string(n);
                }
            }
        }
        report(5, "Einstein transforms: vanishing, cubic display, closed form", ok, detail);
    }

    // 6: the two trace expansions invert each other; the graded expansion of
    // the top Chern form reproduces it at order zero
    {
        bool ok = true;
        std::string detail;
        using P = MultiPoly<RatFunc>;
        for (int m = 1; m <= 6 && ok; ++m) {
            std::map<std::string, P> tp, tw;
            for (int j = 1; j <= m; ++j) {
                tp["tP" + std::to_string(j)] = expand_TPsi(j);
                tw["tW" + std::to_string(j)] = expand_TW(j);
            }
            if (!(expand_TW(m).substitute(tp) == P::variable("tW" + std::to_string(m))) ||
                !(expand_TPsi(m).substitute(tw) == P::variable("tP" + std::to_string(m)))) {
                ok = false;
                detail = "inverse fails at m = " + std::to_string(m);
            }
        }
        for (int n = 1; n <= 5 && ok; ++n) {
            try {
                auto parts = chern_expansion(n); // self-checks its order-zero term
                if (static_cast<int>(parts.size()) != n + 1) {
                    ok = false;
                    detail = "wrong number of graded parts at n = " + std::to_string(n);
                }
            } catch (const std::exception& e) {
                ok = false;
                detail = e.what();
            }
        }
        if (ok) {
            auto parts = chern_expansion(1);
            IP want0 = IP::constant(GenBasis::Chern, 1, Rat(-3));
            IP want1(GenBasis::Chern, 1);
            want1.add_term({1}, Rat(2));
            if (!(parts[0] == want0) || !(parts[1] == want1)) {
                ok = false;
                detail = "frozen dimension-one parts changed";
            }
        }
        report(6, "trace expansions invert; graded expansion self-consistent", ok, detail);
    }

    // 7: operator calculus on 100 seeded forms per bidegree, dimensions 1-4,
    // over identity, positive definite, and indefinite metrics
    {
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= 4; ++n) {
            SuiteReport rep = verify_lefschetz(n, 7, 100);
            if (!rep.passed()) {
                ok = false;
                detail += "n=" + std::to_string(n) + " " + failed_identities(rep) + " ";
            }
        }
        report(7, "operator identities on 100 seeded forms per bidegree, n <= 4", ok, detail);
    }

    // 8: extended curvature identities for n in {2,3}, all partitions: the
    // trace-free block, the covector link, the low-degree component formulas,
    // the graded decomposition, and the corner contraction
    {
        bool ok = true;
        std::string detail;
        for (int n : {2, 3}) {
            SuiteReport rep = verify_tractor(n, 5, 5);
            if (!rep.passed()) {
                ok = false;
                detail += "n=" + std::to_string(n) + " " + failed_identities(rep) + " ";
            }
        }
        report(8, "extended curvature identities, all partitions, n in {2,3}", ok, detail);
    }

    // 9: generator-basis and sigma round-trips on 200 seeded inputs each
    {
        SuiteReport rep = verify_ring(3, 11, 200);
        bool ok = rep.passed();
        report(9, "basis and sigma round-trips on 200 seeded inputs", ok,
               ok ? "" : failed_identities(rep));
    }

    if (failures) {
        std::cout << "acceptance: FAIL (" << failures << " criteria)\n";
        return 1;
    }
    std::cout << "acceptance: PASS\n";
    return 0;
}
