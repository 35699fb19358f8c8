#include "minifold/flat.hpp"

#include "minifold/tprime.hpp"

namespace minifold {

namespace {

RationalSeries series_from_upoly(const Upoly& p, const std::string& var, int trunc) {
    if (p.is_zero()) return RationalSeries::zero(var, Rational(0), trunc);
    return RationalSeries(var, 0, p.coeffs(), trunc);
}

Upoly reversed(const Upoly& p) {
    std::vector<Rational> c(p.coeffs().rbegin(), p.coeffs().rend());
    return Upoly(std::move(c));
}

}  // namespace

FlatChart flat_coordinates(const FiberModel& fm, int N) {
    const int p = fm.p, q = fm.q;
    if (N < p + q + 2) throw truncation_error("flat_coordinates: need N >= p+q+2");
    FlatChart fc;
    fc.N = N;

    // x side (s -> infinity): w = 1/s, w^p F_b(1/w) = reversed(fnum), which is
    // a unit power series because F is monic of degree p in x.
    RationalSeries gu = series_from_upoly(reversed(fm.fnum), "w", N);
    RationalSeries u = RationalSeries::monomial("w", 1, Rational(1), N + 1) * gu.nth_root(static_cast<unsigned>(p)).inverse();
    fc.u = u.truncated(N);

    // w as a series in u, then xu = u / w(u).
    RationalSeries w_of_u = fc.u.reversion();
    RationalSeries xu = w_of_u.shifted(-1).inverse();
    fc.t0_arg = xu.coeff(0);
    RationalSeries tlog = xu.scaled(fc.t0_arg.inverse()).log();
    for (int i = 1; i < p; ++i) fc.t.push_back(tlog.coeff(i));

    // y side (s -> 0): s^q F_b = fnum with constant term eps0^q; the
    // canonical root eps0 normalizes it to a unit series.
    RationalSeries gv = series_from_upoly(fm.fnum, "s", N);
    Rational rho = fm.eps0;
    RationalSeries gv_unit = gv.scaled(rho.pow(q).inverse());
    RationalSeries v = RationalSeries::monomial("s", 1, rho.inverse(), N + 1) *
                       gv_unit.nth_root(static_cast<unsigned>(q)).inverse();
    fc.v = v.truncated(N);
    RationalSeries s_of_v = fc.v.reversion();
    // yv = (eps0/s) v = unit series; compose with s(v) to express it in v.
    RationalSeries yv = fc.v.shifted(-1).scaled(fm.eps0);
    RationalSeries yv_in_v = yv.compose(s_of_v);
    fc.s0_arg = yv_in_v.coeff(0);
    RationalSeries slog = yv_in_v.scaled(fc.s0_arg.inverse()).log();
    for (int j = 1; j < q; ++j) fc.s.push_back(slog.coeff(j));
    return fc;
}

namespace {

// Symbolic u-side t-coordinates for a family with x-exponent p, y-exponent q
// over the given parameter ring; a_names/b_names give the unfolding
// coefficients of x^i resp. y^j.
std::vector<MultiPoly> t_symbolic_impl(int p, int q, const std::vector<std::string>& params,
                                       const std::vector<std::string>& a_names,
                                       const std::vector<std::string>& b_names, int N) {
    MultiPoly zero(params);
    MultiPoly one = MultiPoly::constant(params, Rational(1));
    // G(w) = w^p F(1/w) = 1 + sum a_i w^{p-i} + c w^p + sum b_j eps^j w^{p+j} + eps^q w^{p+q}
    std::vector<MultiPoly> g(static_cast<std::size_t>(N), zero);
    g[0] = one;
    auto put = [&](int k, const MultiPoly& v) {
        if (k < N) g[static_cast<std::size_t>(k)] += v;
    };
    for (int i = 1; i < p; ++i) put(p - i, MultiPoly::variable(params, a_names[static_cast<std::size_t>(i - 1)]));
    put(p, MultiPoly::variable(params, "c"));
    MultiPoly eps = MultiPoly::variable(params, "eps");
    for (int j = 1; j < q; ++j)
        put(p + j, MultiPoly::variable(params, b_names[static_cast<std::size_t>(j - 1)]) *
                       eps.pow(static_cast<unsigned>(j)));
    put(p + q, eps.pow(static_cast<unsigned>(q)));
    PolySeries gw("w", 0, g, N);

    PolySeries u = PolySeries::monomial("w", 1, one, N + 1) *
                   gw.nth_root(static_cast<unsigned>(p)).inverse();
    u = u.truncated(N);
    PolySeries w_of_u = u.reversion();
    PolySeries xu = w_of_u.shifted(-1).inverse();
    PolySeries tlog = xu.log();
    std::vector<MultiPoly> t;
    for (int i = 1; i < p; ++i) t.push_back(tlog.coeff(i));
    return t;
}

}  // namespace

std::vector<MultiPoly> flat_t_symbolic(const NodeFamily& fam, int N) {
    std::vector<std::string> a_names, b_names;
    for (int i = 1; i < fam.p; ++i) a_names.push_back("a" + std::to_string(i));
    for (int j = 1; j < fam.q; ++j) b_names.push_back("b" + std::to_string(j));
    return t_symbolic_impl(fam.p, fam.q, fam.base_vars, a_names, b_names, N);
}

std::vector<MultiPoly> flat_s_symbolic(const NodeFamily& fam, int N) {
    // The x<->y swap exchanges the two punctures, so the s_j are the t_j of
    // the family with (p, q) swapped and the a/b roles exchanged.
    std::vector<std::string> a_names, b_names;
    for (int i = 1; i < fam.p; ++i) a_names.push_back("a" + std::to_string(i));
    for (int j = 1; j < fam.q; ++j) b_names.push_back("b" + std::to_string(j));
    return t_symbolic_impl(fam.q, fam.p, fam.base_vars, b_names, a_names, N);
}

FlatPairingReport flat_pairing_check(const NodeFamily& fam, const BasePoint& b, int N) {
    const int p = fam.p, q = fam.q;
    FlatPairingReport rep;
    FiberModel fm = fiber_restrict(fam, b);
    FlatChart fc = flat_coordinates(fm, N);

    // Route (i): series residues. t side at s = infinity:
    //   <dt_i, dt_j> = + sigma * [w^p] (u(w)^{i+j} * reversed(hnum)).
    RationalSeries p_rev = RationalSeries("w", 0, reversed(fm.hnum).coeffs(), N);
    rep.series_t_block = Matrix<Rational>(static_cast<std::size_t>(p - 1),
                                          static_cast<std::size_t>(p - 1), Rational(0));
    for (int i = 1; i < p; ++i)
        for (int j = 1; j < p; ++j) {
            RationalSeries integ = fc.u.pow(static_cast<unsigned>(i + j)) * p_rev;
            rep.series_t_block.at(i - 1, j - 1) = integ.coeff(p) * Rational(fm.sigma);
        }
    // s side at s = 0: <ds_i, ds_j> = - sigma * [s^q](v^{i+j} * hnum).
    RationalSeries hnum_s = RationalSeries("s", 0, fm.hnum.coeffs(), N);
    rep.series_s_block = Matrix<Rational>(static_cast<std::size_t>(q - 1),
                                          static_cast<std::size_t>(q - 1), Rational(0));
    for (int i = 1; i < q; ++i)
        for (int j = 1; j < q; ++j) {
            RationalSeries integ = fc.v.pow(static_cast<unsigned>(i + j)) * hnum_s;
            rep.series_s_block.at(i - 1, j - 1) = -integ.coeff(q) * Rational(fm.sigma);
        }

    // Route (ii): exact chain rule through the pairing matrix. Coordinates
    // theta = (log eps, t, s, c); J = d theta / d params.
    std::vector<MultiPoly> tsym = flat_t_symbolic(fam, N);
    std::vector<MultiPoly> ssym = flat_s_symbolic(fam, N);
    const std::size_t n = fam.frame_size();
    Matrix<Rational> J(n, n, Rational(0));
    J.at(0, 0) = fm.eps0.inverse();
    for (int i = 1; i < p; ++i)
        for (std::size_t m = 0; m < n; ++m)
            J.at(static_cast<std::size_t>(i), m) =
                tsym[static_cast<std::size_t>(i - 1)].partial(fam.base_vars[m]).evaluate(b);
    for (int j = 1; j < q; ++j)
        for (std::size_t m = 0; m < n; ++m)
            J.at(static_cast<std::size_t>(p - 1 + j), m) =
                ssym[static_cast<std::size_t>(j - 1)].partial(fam.base_vars[m]).evaluate(b);
    J.at(n - 1, n - 1) = Rational(1);

    PairingMatrix pm = pairing_matrix(fm);
    // Convert the frame pairing (first field eps*d_eps) to coordinate fields.
    Matrix<Rational> g_coord = pm.total;
    for (std::size_t j = 0; j < n; ++j) {
        g_coord.at(0, j) = g_coord.at(0, j) / fm.eps0;
        g_coord.at(j, 0) = g_coord.at(j, 0) / fm.eps0;
    }
    Matrix<Rational> K = mat_inverse(J);
    rep.flat_matrix = K.transposed() * g_coord * K;

    // Evaluate the expected constants.
    auto entry = [&](std::size_t i, std::size_t j) { return rep.flat_matrix.at(i, j); };
    rep.t_block_ok = rep.s_block_ok = rep.cross_ok = true;
    rep.routes_agree = true;
    for (int i = 1; i < p; ++i)
        for (int j = 1; j < p; ++j) {
            Rational expect = (i + j == p) ? Rational(p) : Rational(0);
            if (entry(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) != expect)
                rep.t_block_ok = false;
            if (rep.series_t_block.at(i - 1, j - 1) != expect) rep.t_block_ok = false;
            if (rep.series_t_block.at(i - 1, j - 1) !=
                entry(static_cast<std::size_t>(i), static_cast<std::size_t>(j)))
                rep.routes_agree = false;
        }
    for (int i = 1; i < q; ++i)
        for (int j = 1; j < q; ++j) {
            Rational expect = (i + j == q) ? Rational(q) : Rational(0);
            if (entry(static_cast<std::size_t>(p - 1 + i), static_cast<std::size_t>(p - 1 + j)) !=
                expect)
                rep.s_block_ok = false;
            if (rep.series_s_block.at(i - 1, j - 1) != expect) rep.s_block_ok = false;
            if (rep.series_s_block.at(i - 1, j - 1) !=
                entry(static_cast<std::size_t>(p - 1 + i), static_cast<std::size_t>(p - 1 + j)))
                rep.routes_agree = false;
        }
    for (int i = 1; i < p; ++i)
        for (int j = 1; j < q; ++j)
            if (!entry(static_cast<std::size_t>(i), static_cast<std::size_t>(p - 1 + j)).is_zero())
                rep.cross_ok = false;
    rep.corner_is_one = entry(0, n - 1) == Rational(1);
    rep.eps_diag_zero = entry(0, 0).is_zero();
    rep.ok = rep.t_block_ok && rep.s_block_ok && rep.cross_ok && rep.routes_agree;
    return rep;
}

}  // namespace minifold
