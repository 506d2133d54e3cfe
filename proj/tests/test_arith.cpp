#include "doctest.h"

#include "crinv/multipoly.hpp"
#include "crinv/ratfunc.hpp"
#include "crinv/rational.hpp"
#include "crinv/series.hpp"

#include <random>

using namespace crinv;

namespace {

Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    return Rat(num(rng), den(rng));
}

QPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, int maxdeg) {
    std::uniform_int_distribution<int> e(0, maxdeg);
    std::uniform_int_distribution<int> nterms(0, 5);
    QPoly p(vars);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        std::vector<int> exps;
        exps.reserve(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i) exps.push_back(e(rng));
        p.add_term(exps, random_rat(rng));
    }
    return p;
}

} // namespace

TEST_CASE("rationals reduce and print") {
    CHECK(Rat(6, 4) == Rat(3, 2));
    CHECK(Rat(6, 4).str() == "3/2");
    CHECK(Rat(-6, 4).str() == "-3/2");
    CHECK(Rat(2, -4) == Rat(-1, 2));
    CHECK(Rat(0, 5).str() == "0");
    CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
    CHECK((Rat(2, 3) * Rat(9, 4)) == Rat(3, 2));
    CHECK((Rat(1, 2) / Rat(1, 4)) == Rat(2));
    CHECK(pow(Rat(2, 3), 3) == Rat(8, 27));
    CHECK(pow(Rat(2), -2) == Rat(1, 4));
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("gaussian rationals form a field") {
    CRat i = CRat::i();
    CHECK(i * i == CRat(-1));
    CRat z(Rat(1, 2), Rat(3));
    CHECK((z * z.conj()).re == z.norm2());
    CHECK((z / z) == CRat(1));
    CHECK(ipow(5) == i);
    CHECK(ipow(-1) == -i);
    CHECK(ipow(2) == CRat(-1));
    CHECK(CRat(Rat(0), Rat(-1)).str() == "-i");
    CHECK(CRat(Rat(1), Rat(-2)).str() == "1-2i");
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        CRat a(random_rat(rng), random_rat(rng));
        CRat b(random_rat(rng), random_rat(rng));
        if (b.is_zero()) continue;
        CHECK((a / b) * b == a);
        CHECK(conj(a * b) == conj(a) * conj(b));
    }
}

TEST_CASE("multivariate polynomial arithmetic") {
    QPoly x = QPoly::variable("x"), y = QPoly::variable("y");
    QPoly p = x * x - Rat(2) * (x * y) + y * y;
    QPoly q = x - y;
    CHECK(p == q * q);
    CHECK((p - q * q).is_zero());
    CHECK(p.total_degree() == 2);
    // canonical order: graded lex, ascending exponent vectors
    CHECK(p.str() == "y^2 - 2*x*y + x^2");

    SUBCASE("alignment by name union") {
        QPoly a = QPoly::variable("d2");
        QPoly b = QPoly::variable("d10");
        CHECK((a + b).str() == "d10 + d2");
        CHECK((a * b).total_degree() == 2);
    }

    SUBCASE("substitution and evaluation") {
        QPoly r = p.substitute({{"y", QPoly(Rat(1))}});
        CHECK(r == x * x - Rat(2) * x + QPoly(Rat(1)));
        CHECK(p.evaluate({{"x", Rat(3)}, {"y", Rat(1)}}) == Rat(4));
        CHECK_THROWS_AS(p.evaluate({{"x", Rat(3)}}), std::invalid_argument);
    }

    SUBCASE("coefficient extraction") {
        QPoly c1 = p.coeff_of("x", 1);
        CHECK(c1 == Rat(-2) * y);
        CHECK(p.coeff_of("x", 0) == y * y);
    }

    SUBCASE("ring axioms on random samples") {
        std::mt19937_64 rng(11);
        std::vector<std::string> vars{"x", "y", "z"};
        for (int t = 0; t < 40; ++t) {
            QPoly a = random_poly(rng, vars, 3);
            QPoly b = random_poly(rng, vars, 3);
            QPoly c = random_poly(rng, vars, 3);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
        }
    }
}

TEST_CASE("truncated series inversion") {
    SUBCASE("symbolic coefficient, order 2") {
        QPoly d = QPoly::variable("d");
        TruncatedSeries s = TruncatedSeries::linear("x", 2, QPoly(Rat(1)), d);
        TruncatedSeries inv = s.inverse();
        CHECK(inv.coeff(0) == QPoly(Rat(1)));
        CHECK(inv.coeff(1) == -d);
        CHECK(inv.coeff(2) == d * d);
        CHECK((s * inv) == TruncatedSeries::constant("x", 2, QPoly(Rat(1))));
    }
    SUBCASE("rational constant term, order 1") {
        TruncatedSeries s = TruncatedSeries::linear("x", 1, QPoly(Rat(2)), QPoly(Rat(1)));
        TruncatedSeries inv = s.inverse();
        CHECK(inv.coeff(0) == QPoly(Rat(1, 2)));
        CHECK(inv.coeff(1) == QPoly(Rat(-1, 4)));
    }
    SUBCASE("non-unit constant term is rejected") {
        QPoly d = QPoly::variable("d");
        TruncatedSeries s = TruncatedSeries::linear("x", 2, d, QPoly(Rat(1)));
        CHECK_THROWS_AS(s.inverse(), NonUnitConstantTerm);
        TruncatedSeries z = TruncatedSeries::linear("x", 2, QPoly(), QPoly(Rat(1)));
        CHECK_THROWS_AS(z.inverse(), NonUnitConstantTerm);
    }
    SUBCASE("random series invert back") {
        std::mt19937_64 rng(23);
        for (int t = 0; t < 30; ++t) {
            TruncatedSeries s("x", 4);
            Rat c0 = random_rat(rng);
            if (c0.is_zero()) c0 = Rat(1);
            s.set_coeff(0, QPoly(c0));
            for (int k = 1; k <= 4; ++k)
                s.set_coeff(k, random_poly(rng, {"u", "v"}, 2));
            CHECK(s * s.inverse() == TruncatedSeries::constant("x", 4, QPoly(Rat(1))));
            CHECK(s.pow(3) == s * s * s);
            CHECK(s.pow(-2) * s.pow(2) == TruncatedSeries::constant("x", 4, QPoly(Rat(1))));
        }
    }
    SUBCASE("printing") {
        QPoly d = QPoly::variable("d");
        TruncatedSeries s = TruncatedSeries::linear("x", 2, QPoly(Rat(1)), d);
        CHECK(s.inverse().str() == "1 - d*x + d^2*x^2");
    }
}

TEST_CASE("univariate polynomials and rational functions") {
    UniPoly n = UniPoly::x();
    UniPoly p = n * n + Rat(3) * n + UniPoly(2); // (n+1)(n+2)
    UniPoly q = n + UniPoly(1);
    auto [quo, rem] = UniPoly::divmod(p, q);
    CHECK(rem.is_zero());
    CHECK(quo == n + UniPoly(2));
    CHECK(UniPoly::gcd(p, q) == q);
    CHECK(p.evaluate(Rat(2)) == Rat(12));

    RatFunc f(p, q); // reduces to n+2
    CHECK(f == RatFunc(n + UniPoly(2)));
    RatFunc g = RatFunc::n() / (RatFunc::n() + RatFunc(2));
    CHECK(g.str() == "n/(n+2)");
    CHECK(g.evaluate(Rat(2)) == Rat(1, 2));
    RatFunc h = (RatFunc::n() * RatFunc::n() + RatFunc::n())
        / (RatFunc(3) * (RatFunc::n() + RatFunc(2)) * (RatFunc::n() + RatFunc(2)));
    CHECK(h.str() == "(n^2+n)/(3*n^2+12*n+12)");

    SUBCASE("normalization is canonical") {
        RatFunc a(Rat(2) * n, Rat(4) * (n + UniPoly(2)));
        RatFunc b(n, Rat(2) * (n + UniPoly(2)));
        CHECK(a == b);
        RatFunc c(-n, -(n + UniPoly(2)));
        CHECK(c == RatFunc(n, n + UniPoly(2)));
    }
    SUBCASE("field operations on random samples") {
        std::mt19937_64 rng(31);
        auto rand_rf = [&]() {
            UniPoly a(std::vector<Rat>{random_rat(rng), random_rat(rng), random_rat(rng)});
            UniPoly b(std::vector<Rat>{random_rat(rng), random_rat(rng)});
            if (b.is_zero()) b = UniPoly(1);
            return RatFunc(a, b);
        };
        for (int t = 0; t < 40; ++t) {
            RatFunc a = rand_rf(), b = rand_rf(), c = rand_rf();
            CHECK((a + b) * c == a * c + b * c);
            if (!b.is_zero()) CHECK((a / b) * b == a);
        }
    }
}
