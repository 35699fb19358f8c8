#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minifold/euler.hpp"
#include "minifold/flat.hpp"
#include "minifold/fstructure.hpp"
#include "minifold/parse.hpp"
#include "minifold/rng.hpp"

using namespace minifold;

namespace {

BasePoint node_point(const NodeFamily& fam, std::vector<long> nums, std::vector<long> dens) {
    std::vector<Rational> vals;
    for (std::size_t i = 0; i < nums.size(); ++i) vals.push_back(Rational(nums[i], dens[i]));
    return make_node_point(fam, vals);
}

BasePoint random_point(const NodeFamily& fam, Rng& rng) {
    for (;;) {
        std::vector<Rational> vals;
        vals.push_back(rng.nonzero_rational(5));
        for (std::size_t i = 1; i < fam.base_vars.size(); ++i) vals.push_back(rng.rational(5));
        BasePoint b = make_node_point(fam, vals);
        if (fiber_restrict(fam, b).morse) return b;
    }
}

}  // namespace

TEST_CASE("fiber_restrict: (2,2) at (1,0,0,0)") {
    NodeFamily fam = build_node_family(2, 2);
    BasePoint b = node_point(fam, {1, 0, 0, 0}, {1, 1, 1, 1});
    FiberModel fm = fiber_restrict(fam, b);
    // F_b = s^2 + 1/s^2: fnum = s^4 + 1; H_b = 2s^2 - 2/s^2: hnum = 2s^4 - 2
    CHECK(fm.fnum == Upoly({Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)}));
    CHECK(fm.hnum == Upoly({Rational(-2), Rational(0), Rational(0), Rational(0), Rational(2)}));
    CHECK(fm.morse);  // s^4 - 1 squarefree

    // H_b agrees with x dF/dx - y dF/dy evaluated on the fiber.
    Rational s(3, 2);
    Rational x = s, y = fm.eps0 / s;
    Rational hval = fm.hnum.evaluate(s) / s.pow(2);
    CHECK(hval == x * (Rational(2) * x) - y * (Rational(2) * y));

    BasePoint on_disc = node_point(fam, {0, 0, 0, 0}, {1, 1, 1, 1});
    CHECK_THROWS_AS(fiber_restrict(fam, on_disc), algebra_error);
}

TEST_CASE("pairing at the (2,2) monomial point: frozen matrix") {
    NodeFamily fam = build_node_family(2, 2);
    FiberModel fm = fiber_restrict(fam, node_point(fam, {1, 0, 0, 0}, {1, 1, 1, 1}));
    PairingMatrix pm = pairing_matrix(fm);
    // order (eps d_eps, d_a1, d_b1, d_c)
    Matrix<Rational> expect(4, 4, Rational(0));
    expect.at(0, 3) = expect.at(3, 0) = Rational(1);
    expect.at(1, 1) = Rational(1, 2);
    expect.at(2, 2) = Rational(1, 2);
    CHECK(pm.total == expect);

    // summand at s=0 carries the b-block, summand at infinity the a-block,
    // each with half the corner
    CHECK(pm.summand_zero.at(2, 2) == Rational(1, 2));
    CHECK(pm.summand_zero.at(1, 1) == Rational(0));
    CHECK(pm.summand_infinity.at(1, 1) == Rational(1, 2));
    CHECK(pm.summand_infinity.at(2, 2) == Rational(0));
    CHECK(pm.summand_zero.at(0, 3) == Rational(1, 2));
    CHECK(pm.summand_infinity.at(0, 3) == Rational(1, 2));
}

TEST_CASE("pairing at a generic (2,3) point: frozen values") {
    NodeFamily fam = build_node_family(2, 3);
    // (eps, a1, b1, b2, c) = (2, 1/2, 1/3, 2/7, 1/5)
    BasePoint b = node_point(fam, {2, 1, 1, 2, 1}, {1, 2, 3, 7, 5});
    FiberModel fm = fiber_restrict(fam, b);
    PairingMatrix pm = pairing_matrix(fm);
    CHECK(pm.total.at(0, 4) == Rational(1));
    CHECK(pm.total.at(1, 1) == Rational(1, 2));    // <d_a1, d_a1> = 1/p
    CHECK(pm.total.at(2, 3) == Rational(1, 3));    // b-block antidiagonal
    CHECK(pm.total.at(3, 3) == Rational(-4, 63));  // inverse Hankel entry
    CHECK(pm.total.at(2, 2) == Rational(0));
    CHECK(pm.total.at(0, 0) == Rational(0));
    CHECK(pm.total.at(1, 2) == Rational(0));

    // b-block equals the inverse of the Hankel matrix [[2 b2, 3], [3, 0]]
    Matrix<Rational> hb = hankel_matrix({b.at("b1"), b.at("b2")}, 3);
    Matrix<Rational> inv = mat_inverse(hb);
    CHECK(pm.summand_zero.at(2, 2) == inv.at(0, 0));
    CHECK(pm.summand_zero.at(2, 3) == inv.at(0, 1));
    CHECK(pm.summand_zero.at(3, 3) == inv.at(1, 1));
}

TEST_CASE("pairing symmetry at random smooth points") {
    Rng rng(31);
    for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}}) {
        NodeFamily fam = build_node_family(p, q);
        for (int it = 0; it < 10; ++it) {
            FiberModel fm = fiber_restrict(fam, random_point(fam, rng));
            PairingMatrix pm = pairing_matrix(fm);
            CHECK(pm.total == pm.total.transposed());
        }
    }
}

TEST_CASE("pairing is bilinear over constants") {
    Rng rng(47);
    NodeFamily fam = build_node_family(2, 3);
    for (int it = 0; it < 5; ++it) {
        FiberModel fm = fiber_restrict(fam, random_point(fam, rng));
        Rational lam = rng.rational(6), mu = rng.rational(6);
        for (std::size_t w = 0; w < fm.frame_size(); ++w) {
            Upoly combo = fm.rep_num[0].scaled(lam) + fm.rep_num[1].scaled(mu);
            Rational lhs = pairing_of_reps(combo, fm.rep_num[w], fm).total;
            Rational rhs = lam * pairing(0, w, fm).total + mu * pairing(1, w, fm).total;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("residue theorem check") {
    Rng rng(41);
    NodeFamily fam = build_node_family(2, 3);
    BasePoint b0 = node_point(fam, {1, 0, 0, 0, 0}, {1, 1, 1, 1, 1});
    FiberModel fm0 = fiber_restrict(fam, b0);
    std::size_t dc = fm0.frame_size() - 1;
    CHECK(residue_theorem_check(fm0, dc, dc));  // u = v = d_c
    for (std::size_t i = 0; i < fm0.frame_size(); ++i)
        for (std::size_t j = i; j < fm0.frame_size(); ++j)
            CHECK(residue_theorem_check(fm0, i, j));
    for (int it = 0; it < 5; ++it) {
        FiberModel fm = fiber_restrict(fam, random_point(fam, rng));
        auto u = static_cast<std::size_t>(rng.range(0, static_cast<long>(fm.frame_size()) - 1));
        auto v = static_cast<std::size_t>(rng.range(0, static_cast<long>(fm.frame_size()) - 1));
        CHECK(residue_theorem_check(fm, u, v));
    }
}

TEST_CASE("flat coordinates at a monomial point vanish and invert F") {
    NodeFamily fam = build_node_family(2, 3);
    BasePoint b = node_point(fam, {1, 0, 0, 0, 0}, {1, 1, 1, 1, 1});
    FiberModel fm = fiber_restrict(fam, b);
    int N = 2 + 3 + 4;
    FlatChart fc = flat_coordinates(fm, N);
    for (const auto& t : fc.t) CHECK(t.is_zero());
    for (const auto& s : fc.s) CHECK(s.is_zero());
    CHECK(fc.t0_arg == Rational(1));
    CHECK(fc.s0_arg == Rational(1));

    // Round trip: F(x(u)) = u^{-p}, i.e. G(w(u)) * (u/w(u))^p = 1 where
    // G(w) = w^p F_b(1/w) is the reversed fnum.
    RationalSeries w_of_u = fc.u.reversion();
    std::vector<Rational> grev(fm.fnum.coeffs().rbegin(), fm.fnum.coeffs().rend());
    RationalSeries gu("u", 0, grev, N);
    RationalSeries lhs = gu.compose(w_of_u);
    RationalSeries xu = w_of_u.shifted(-1).inverse();
    RationalSeries prod = lhs * xu.pow(static_cast<unsigned>(fam.p));
    CHECK(prod.coeff(0) == Rational(1));
    for (int k = 1; k < prod.trunc(); ++k) CHECK(prod.coeff(k).is_zero());

    // truncation guard
    CHECK_THROWS_AS(flat_coordinates(fm, fam.p + fam.q + 1), truncation_error);
}

TEST_CASE("symbolic flat coordinates: exact t1 and a-dependence") {
    NodeFamily fam = build_node_family(2, 2);
    auto t = flat_t_symbolic(fam, 8);
    REQUIRE(t.size() == 1);
    CHECK(t[0] == parse_poly("-1/2 * a1", fam.base_vars));

    NodeFamily f23 = build_node_family(2, 3);
    for (const auto& ti : flat_t_symbolic(f23, 9)) {
        CHECK(!ti.depends_on("b1"));
        CHECK(!ti.depends_on("b2"));
        CHECK(!ti.depends_on("c"));
        CHECK(!ti.depends_on("eps"));
    }
    for (const auto& sj : flat_s_symbolic(f23, 9)) {
        CHECK(!sj.depends_on("a1"));
        CHECK(!sj.depends_on("c"));
        CHECK(!sj.depends_on("eps"));
    }

    // symbolic values evaluated at a point match the numeric chart
    Rng rng(55);
    BasePoint b = random_point(f23, rng);
    FlatChart fc = flat_coordinates(fiber_restrict(f23, b), 9);
    auto ts = flat_t_symbolic(f23, 9);
    auto ss = flat_s_symbolic(f23, 9);
    for (std::size_t i = 0; i < ts.size(); ++i) CHECK(ts[i].evaluate(b) == fc.t[i]);
    for (std::size_t j = 0; j < ss.size(); ++j) CHECK(ss[j].evaluate(b) == fc.s[j]);
}

TEST_CASE("flat pairing: reference values for (2,3) and (3,2)") {
    Rng rng(61);
    {
        NodeFamily fam = build_node_family(2, 3);
        BasePoint b = random_point(fam, rng);
        FlatPairingReport fr = flat_pairing_check(fam, b, 2 + 3 + 4);
        CHECK(fr.ok);
        CHECK(fr.flat_matrix.at(1, 1) == Rational(2));  // <dt1, dt1> = p
        CHECK(fr.flat_matrix.at(2, 3) == Rational(3));  // <ds1, ds2> = q
        CHECK(fr.flat_matrix.at(1, 2) == Rational(0));  // <dt1, ds1> = 0
        CHECK(fr.corner_is_one);
        CHECK(fr.eps_diag_zero);
    }
    {
        NodeFamily fam = build_node_family(3, 2);
        BasePoint b = random_point(fam, rng);
        FlatPairingReport fr = flat_pairing_check(fam, b, 3 + 2 + 4);
        CHECK(fr.ok);
        CHECK(fr.flat_matrix.at(1, 2) == Rational(3));  // <dt1, dt2> = 3 = p
        CHECK(fr.flat_matrix.at(1, 1) == Rational(0));
    }
}

TEST_CASE("flat matrix is constant across base points") {
    Rng rng(71);
    NodeFamily fam = build_node_family(2, 3);
    FlatPairingReport first = flat_pairing_check(fam, random_point(fam, rng), 9);
    for (int it = 0; it < 3; ++it) {
        FlatPairingReport fr = flat_pairing_check(fam, random_point(fam, rng), 9);
        CHECK(fr.flat_matrix == first.flat_matrix);
    }
}

TEST_CASE("t values are unchanged when only the b side moves") {
    NodeFamily fam = build_node_family(3, 3);
    BasePoint b = node_point(fam, {1, 1, 2, -1, 1, 0}, {2, 3, 5, 2, 7, 1});
    FlatChart fc = flat_coordinates(fiber_restrict(fam, b), 10);
    BasePoint b2 = b;
    b2["b1"] = Rational(9, 4);
    b2["b2"] = Rational(-3, 8);
    FlatChart fc2 = flat_coordinates(fiber_restrict(fam, b2), 10);
    CHECK(fc.t == fc2.t);
    // and s unchanged when only a moves
    BasePoint b3 = b;
    b3["a1"] = Rational(5, 9);
    b3["a2"] = Rational(-1, 6);
    FlatChart fc3 = flat_coordinates(fiber_restrict(fam, b3), 10);
    CHECK(fc.s == fc3.s);
}

TEST_CASE("frobenius compatibility <u*v, w> = <u, v*w> at sampled points") {
    Rng rng(83);
    for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}}) {
        NodeFamily fam = build_node_family(p, q);
        FStructure fs = build_fstructure_node(fam);
        const std::size_t n = fs.size();
        for (int it = 0; it < 3; ++it) {
            BasePoint b = random_point(fam, rng);
            PairingMatrix pm = pairing_matrix(fiber_restrict(fam, b));
            // c[i][j][m] evaluated at the point
            std::vector<std::vector<std::vector<Rational>>> c(
                n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t m = 0; m < n; ++m) c[i][j][m] = fs.tensor[i][j][m].evaluate(b);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k) {
                        Rational lhs(0), rhs(0);
                        for (std::size_t m = 0; m < n; ++m) {
                            lhs += c[i][j][m] * pm.total.at(m, k);
                            rhs += c[j][k][m] * pm.total.at(i, m);
                        }
                        CHECK(lhs == rhs);
                    }
        }
    }
}

TEST_CASE("euler field: coefficients, F-class identity, weights") {
    NodeFamily fam = build_node_family(2, 3);
    std::vector<MultiPoly> e = euler_field(fam);
    const auto& bv = fam.base_vars;
    CHECK(e[0] == parse_poly("5/6 * eps", bv));
    CHECK(e[1] == parse_poly("1/2 * a1", bv));
    CHECK(e[2] == parse_poly("2/3 * b1", bv));
    CHECK(e[3] == parse_poly("1/3 * b2", bv));
    CHECK(e[4] == parse_poly("c", bv));

    for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {2, 5}}) {
        NodeFamily f = build_node_family(p, q);
        CHECK(euler_maps_to_f_class(f));
        CHECK(base_weights(f)[0] == Rational(1, p) + Rational(1, q));
        WeightReport wr = weight_check(f);
        CHECK(wr.ok);
    }
}
