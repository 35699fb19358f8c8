#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minifold/linalg.hpp"
#include "minifold/multipoly.hpp"
#include "minifold/parse.hpp"
#include "minifold/rng.hpp"
#include "minifold/series.hpp"
#include "minifold/univariate.hpp"

using namespace minifold;

namespace {

MultiPoly P(const std::string& text, std::vector<std::string> vars) {
    return parse_poly(text, vars);
}

RationalSeries series_from(std::vector<Rational> coeffs, int low, int trunc) {
    return RationalSeries("w", low, std::move(coeffs), trunc);
}

MultiPoly random_poly(Rng& rng, const std::vector<std::string>& vars, int max_deg, int terms) {
    MultiPoly p(vars);
    for (int t = 0; t < terms; ++t) {
        Exponents e(vars.size());
        for (auto& x : e) x = static_cast<int>(rng.range(0, max_deg));
        p.add_term(e, rng.rational(7));
    }
    return p;
}

RationalSeries random_unit_series(Rng& rng, int trunc) {
    std::vector<Rational> c{Rational(1)};
    for (int k = 1; k < trunc; ++k) c.push_back(rng.rational(5));
    return RationalSeries("w", 0, std::move(c), trunc);
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(1, -2).str() == "-1/2");
    CHECK(Rational::parse("22/7") == Rational(22, 7));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK(Rational(8).nth_root(3) == Rational(2));
    CHECK(Rational(27, 8).nth_root(3) == Rational(3, 2));
    CHECK_THROWS_AS(Rational(2).nth_root(2), algebra_error);
    CHECK_THROWS_AS(Rational::parse("1/0"), algebra_error);
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
}

TEST_CASE("poly_arith examples") {
    std::vector<std::string> xy{"x", "y"};
    CHECK(P("(x+y)*(x-y)", xy) == P("x^2-y^2", xy));
    Rng rng(7);
    MultiPoly p = random_poly(rng, xy, 3, 4);
    CHECK(p + MultiPoly(xy) == p);

    // (x+1)^3 against a repeated-multiplication oracle
    MultiPoly xp1 = P("x+1", xy);
    MultiPoly cube = xp1 * xp1 * xp1;
    CHECK(P("(x+1)^3", xy) == cube);
    CHECK(cube == P("x^3+3*x^2+3*x+1", xy));

    CHECK_THROWS_AS(P("x", {"x"}) + P("y", {"y"}), algebra_error);
}

TEST_CASE("poly ring axioms hold exactly on random triples") {
    Rng rng(42);
    std::vector<std::string> vars{"x", "y", "z"};
    for (int it = 0; it < 20; ++it) {
        MultiPoly a = random_poly(rng, vars, 3, 4);
        MultiPoly b = random_poly(rng, vars, 3, 4);
        MultiPoly c = random_poly(rng, vars, 3, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("poly_partial") {
    std::vector<std::string> xy{"x", "y"};
    for (int p = 1; p <= 6; ++p) {
        MultiPoly xp = MultiPoly::variable(xy, "x", p);
        CHECK(xp.partial("x") == MultiPoly::variable(xy, "x", p - 1).scaled(Rational(p)));
    }
    CHECK(P("x", xy).partial("y").is_zero());
    CHECK(P("x^2*y + y^3", xy).partial("x") == P("2*x*y", xy));
    CHECK_THROWS_AS(P("x", xy).partial("q"), algebra_error);
}

TEST_CASE("polynomial substitution") {
    std::vector<std::string> xy{"x", "y"};
    std::vector<std::string> uv{"u", "v"};
    MultiPoly p = P("x^2*y - 3*y + 1", xy);
    std::vector<MultiPoly> images{parse_poly("u + v", uv), parse_poly("u*v", uv)};
    MultiPoly expect = parse_poly("(u+v)^2*u*v - 3*u*v + 1", uv);
    CHECK(p.substituted(images) == expect);
}

TEST_CASE("exact poly division") {
    std::vector<std::string> xy{"x", "y"};
    MultiPoly a = P("x^2-y^2", xy);
    auto q = try_divide_exact(a, P("x-y", xy));
    REQUIRE(q.has_value());
    CHECK(*q == P("x+y", xy));
    CHECK(!try_divide_exact(a, P("x+1", xy)).has_value());
}

TEST_CASE("series_nth_root") {
    // sqrt(1+2w+w^2) = 1+w
    auto s = series_from({Rational(1), Rational(2), Rational(1)}, 0, 10);
    auto r = s.nth_root(2);
    CHECK(r.coeff(0) == Rational(1));
    CHECK(r.coeff(1) == Rational(1));
    for (int k = 2; k < 10; ++k) CHECK(r.coeff(k).is_zero());

    auto one = series_from({Rational(1)}, 0, 8);
    auto c = one.nth_root(3);
    CHECK(c.coeff(0) == Rational(1));
    for (int k = 1; k < 8; ++k) CHECK(c.coeff(k).is_zero());

    // sqrt(1+w): binomial series oracle binom(1/2, k)
    auto sq = series_from({Rational(1), Rational(1)}, 0, 10).nth_root(2);
    Rational binom(1);
    for (int k = 0; k < 10; ++k) {
        CHECK(sq.coeff(k) == binom);
        binom = binom * (Rational(1, 2) - Rational(k)) / Rational(k + 1);
    }

    CHECK_THROWS_AS(series_from({Rational(2)}, 0, 4).nth_root(2), algebra_error);
    CHECK_THROWS_AS(one.nth_root(0), algebra_error);
}

TEST_CASE("series_log and exp") {
    auto one = series_from({Rational(1)}, 0, 8);
    CHECK(one.log().is_zero());

    // Mercator oracle: log(1+w) = sum (-1)^{k+1} w^k / k
    auto lg = series_from({Rational(1), Rational(1)}, 0, 12).log();
    for (int k = 1; k < 12; ++k) {
        Rational expect = Rational((k % 2) ? 1 : -1, k);
        CHECK(lg.coeff(k) == expect);
    }

    auto s = series_from({Rational(1), Rational(1), Rational(1)}, 0, 9);
    auto roundtrip = s.log().exp();
    for (int k = 0; k < 9; ++k) CHECK(roundtrip.coeff(k) == s.coeff(k));

    CHECK_THROWS_AS(series_from({Rational(2)}, 0, 4).log(), algebra_error);
}

TEST_CASE("series_reversion") {
    auto id = series_from({Rational(1)}, 1, 9).reversion();
    CHECK(id.coeff(1) == Rational(1));
    for (int k = 2; k < 9; ++k) CHECK(id.coeff(k).is_zero());

    auto half = series_from({Rational(2)}, 1, 9).reversion();
    CHECK(half.coeff(1) == Rational(1, 2));

    // w + w^2 against a Lagrange-inversion oracle:
    //   [u^n] g^{-1} = (1/n) [w^{n-1}] (w/g(w))^n
    auto g = series_from({Rational(1), Rational(1)}, 1, 9);
    auto rev = g.reversion();
    for (int n = 1; n < 8; ++n) {
        auto ratio = g.shifted(-1).inverse();  // w/g(w)
        auto pw = ratio.pow(static_cast<unsigned>(n));
        Rational oracle = pw.coeff(n - 1) / Rational(n);
        CHECK(rev.coeff(n) == oracle);
    }
    // first values 1, -1, 2, -5, 14 (signed Catalan numbers)
    CHECK(rev.coeff(1) == Rational(1));
    CHECK(rev.coeff(2) == Rational(-1));
    CHECK(rev.coeff(3) == Rational(2));
    CHECK(rev.coeff(4) == Rational(-5));
    CHECK(rev.coeff(5) == Rational(14));

    CHECK_THROWS_AS(series_from({Rational(1)}, 2, 9).reversion(), algebra_error);
}

TEST_CASE("series round-trip properties on random data") {
    Rng rng(2024);
    for (int it = 0; it < 10; ++it) {
        auto s = random_unit_series(rng, 10);
        auto back = s.log().exp();
        for (int k = 0; k < 10; ++k) CHECK(back.coeff(k) == s.coeff(k));

        unsigned n = static_cast<unsigned>(rng.range(2, 5));
        auto root = s.nth_root(n);
        auto powed = root.pow(n);
        for (int k = 0; k < powed.trunc(); ++k) CHECK(powed.coeff(k) == s.coeff(k));

        // reversion composes to the identity
        std::vector<Rational> lin{rng.nonzero_rational(5)};
        for (int k = 2; k < 9; ++k) lin.push_back(rng.rational(5));
        RationalSeries f("w", 1, lin, 9);
        auto inv = f.reversion();
        auto comp = f.compose(inv);
        CHECK(comp.coeff(1) == Rational(1));
        for (int k = 2; k < comp.trunc(); ++k) CHECK(comp.coeff(k).is_zero());
    }
}

TEST_CASE("residue_at_zero") {
    auto inv_w = series_from({Rational(1)}, -1, 6);
    CHECK(inv_w.residue() == Rational(1));

    auto no_pole = series_from({Rational(3), Rational(0), Rational(1)}, 0, 6);
    CHECK(no_pole.residue().is_zero());

    // Res_{u=0} p u^{i+j-(p+1)} du = p when i+j = p
    for (int p = 2; p <= 5; ++p)
        for (int i = 1; i < p; ++i) {
            int j = p - i;
            auto mono = RationalSeries::monomial("u", i + j - (p + 1), Rational(p), 4);
            CHECK(mono.residue() == Rational(p));
        }

    RationalSeries truncated_away = series_from({Rational(1)}, -3, -2);
    CHECK_THROWS_AS(truncated_away.residue(), truncation_error);
}

TEST_CASE("residue_sum_at_roots") {
    std::vector<std::string> sv{"s"};
    CHECK(residue_sum_at_roots(P("1", sv), P("s", sv)) == Rational(1));
    CHECK(residue_sum_at_roots(P("1", sv), P("s^2-1", sv)) == Rational(0));
    // partial fractions: s/(s^2-4) = (1/2)/(s-2) + (1/2)/(s+2)
    CHECK(residue_sum_at_roots(P("s", sv), P("s^2-4", sv)) == Rational(1));

    CHECK_THROWS_AS(residue_sum_at_roots(P("1", sv), P("s^2", sv)), algebra_error);
    CHECK_THROWS_AS(residue_sum_at_roots(P("1", sv), P("2", sv)), algebra_error);
}

TEST_CASE("global residue theorem on random rational forms") {
    Rng rng(11);
    for (int it = 0; it < 12; ++it) {
        // denominator: squarefree with nonzero constant term
        Upoly denom;
        for (;;) {
            std::vector<Rational> dc;
            dc.push_back(rng.nonzero_rational(5));
            int deg = static_cast<int>(rng.range(2, 5));
            for (int k = 1; k < deg; ++k) dc.push_back(rng.rational(5));
            dc.push_back(rng.nonzero_rational(5));
            denom = Upoly(std::move(dc));
            if (is_squarefree(denom)) break;
        }
        std::vector<Rational> nc;
        for (int k = 0; k <= static_cast<int>(rng.range(0, 4)); ++k) nc.push_back(rng.rational(5));
        Upoly numer(std::move(nc));
        if (numer.is_zero()) continue;
        int shift = static_cast<int>(rng.range(-3, 2));

        Rational at_roots = residue_sum_at_roots_shifted(numer, denom, shift);
        auto at_zero = expand_at_zero(numer, denom, shift, 2).residue();
        // expansion at infinity: substitute s = 1/w exactly
        // numer(1/w) * w^{-shift} / denom(1/w) ds, ds = -dw/w^2
        Upoly numer_rev(std::vector<Rational>(numer.coeffs().rbegin(), numer.coeffs().rend()));
        Upoly denom_rev(std::vector<Rational>(denom.coeffs().rbegin(), denom.coeffs().rend()));
        int wshift = denom.degree() - numer.degree() - shift - 2;
        Rational at_inf = -expand_at_zero(numer_rev, denom_rev, wshift, 2).residue();
        CHECK(at_roots + at_zero + at_inf == Rational(0));
    }
}

TEST_CASE("mat_solve over rationals") {
    Matrix<Rational> id = Matrix<Rational>::identity(3, Rational(1));
    std::vector<Rational> b{Rational(1), Rational(2), Rational(3)};
    CHECK(mat_solve(id, b) == b);

    Matrix<Rational> d(2, 2, Rational(0));
    d.at(0, 0) = Rational(2);
    d.at(1, 1) = Rational(3);
    auto x = mat_solve(d, {Rational(2), Rational(3)});
    CHECK(x[0] == Rational(1));
    CHECK(x[1] == Rational(1));

    Matrix<Rational> sing(2, 2, Rational(1));
    CHECK_THROWS_AS(mat_solve(sing, {Rational(1), Rational(1)}), algebra_error);
}

TEST_CASE("hankel block double inversion is the identity (q=3)") {
    // Hankel-type block (i+j)*b_{i+j} with b_3 = 1, entries for i+j <= 3
    Rational b2(5, 7);
    Matrix<Rational> h(2, 2, Rational(0));
    h.at(0, 0) = Rational(2) * b2;
    h.at(0, 1) = Rational(3);
    h.at(1, 0) = Rational(3);
    h.at(1, 1) = Rational(0);
    auto inv = mat_inverse(h);
    auto back = mat_inverse(inv);
    CHECK(back == h);
}

TEST_CASE("mat_solve over rational functions and substitution identity") {
    Rng rng(99);
    std::vector<std::string> vars{"a", "b"};
    auto rf = [&](const std::string& t) { return RationalFunction(parse_poly(t, vars)); };
    Matrix<RationalFunction> m(2, 2, RationalFunction::constant(vars, Rational(0)));
    m.at(0, 0) = rf("a");
    m.at(0, 1) = rf("1");
    m.at(1, 0) = rf("b");
    m.at(1, 1) = rf("a+1");
    std::vector<RationalFunction> rhs{rf("a+b"), rf("a*b+1")};
    auto x = mat_solve(m, rhs);
    auto back = m.apply(x);
    CHECK(back[0] == rhs[0]);
    CHECK(back[1] == rhs[1]);

    for (int it = 0; it < 6; ++it) {
        Matrix<Rational> a(3, 3, Rational(0));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) a.at(i, j) = rng.rational(6);
        if (determinant(a).is_zero()) continue;
        std::vector<Rational> rb{rng.rational(6), rng.rational(6), rng.rational(6)};
        CHECK(a.apply(mat_solve(a, rb)) == rb);
    }
}

TEST_CASE("char_poly") {
    Matrix<Rational> a(2, 2, Rational(0));
    a.at(0, 0) = Rational(1);
    a.at(0, 1) = Rational(2);
    a.at(1, 0) = Rational(3);
    a.at(1, 1) = Rational(4);
    auto c = char_poly(a);  // t^2 - 5t - 2
    REQUIRE(c.size() == 3);
    CHECK(c[2] == Rational(1));
    CHECK(c[1] == Rational(-5));
    CHECK(c[0] == Rational(-2));
}

TEST_CASE("polynomial parser") {
    std::vector<std::string> vars{"x", "y"};
    CHECK(parse_poly(" x ^ 2 + 3/4 * y - 1 ", vars) == P("x^2+3/4*y-1", vars));
    CHECK(parse_poly("-x", vars) == -P("x", vars));
    CHECK_THROWS_AS(parse_poly("x + q", vars), parse_error);
    CHECK_THROWS_AS(parse_poly("x +", vars), parse_error);
    CHECK(poly_identifiers("z*y + x^2*z") == std::vector<std::string>{"x", "y", "z"});
}
