#include "minifold/fiber.hpp"

namespace minifold {

BasePoint make_node_point(const NodeFamily& fam, const std::vector<Rational>& values) {
    if (values.size() != fam.base_vars.size())
        throw algebra_error("make_node_point: expected " + std::to_string(fam.base_vars.size()) +
                            " values (eps, a.., b.., c)");
    BasePoint b;
    for (std::size_t i = 0; i < values.size(); ++i) b[fam.base_vars[i]] = values[i];
    return b;
}

namespace {

// Restriction x -> s, y -> eps0/s of a polynomial in (x, y) with parameter
// coefficients already evaluated at the base point; returns s^q * value.
Upoly restrict_to_fiber(const MultiPoly& g, const BasePoint& b, const Rational& eps0, int q) {
    MultiPoly ev = g.evaluated(b);  // now in x, y only
    std::vector<Rational> c;
    auto bump = [&](int k, const Rational& v) {
        if (k < 0) throw algebra_error("restrict_to_fiber: exponent below -q");
        if (static_cast<int>(c.size()) <= k) c.resize(static_cast<std::size_t>(k) + 1, Rational(0));
        c[static_cast<std::size_t>(k)] += v;
    };
    std::size_t xi = 0, yi = 1;
    if (ev.vars() != std::vector<std::string>{"x", "y"}) {
        xi = yi = ev.vars().size();
        for (std::size_t i = 0; i < ev.vars().size(); ++i) {
            if (ev.vars()[i] == "x") xi = i;
            if (ev.vars()[i] == "y") yi = i;
        }
    }
    for (const auto& [e, k] : ev.terms()) {
        int dx = xi < e.size() ? e[xi] : 0;
        int dy = yi < e.size() ? e[yi] : 0;
        bump(q + dx - dy, k * eps0.pow(dy));
    }
    return Upoly(std::move(c));
}

}  // namespace

FiberModel fiber_restrict(const NodeFamily& fam, const BasePoint& b) {
    for (const auto& v : fam.base_vars)
        if (!b.count(v)) throw algebra_error("fiber_restrict: missing base value for " + v);
    FiberModel fm;
    fm.p = fam.p;
    fm.q = fam.q;
    fm.point = b;
    fm.eps0 = b.at("eps");
    if (fm.eps0.is_zero())
        throw algebra_error("fiber_restrict: base point lies on the discriminant (eps = 0)");

    fm.fnum = restrict_to_fiber(fam.F, b, fm.eps0, fam.q);
    fm.hnum = restrict_to_fiber(fam.H, b, fm.eps0, fam.q);
    if (fm.hnum.degree() != fam.p + fam.q)
        throw algebra_error("fiber_restrict: s^q H_b must have degree p+q");
    fm.morse = is_squarefree(fm.hnum);

    MultiPoly x = MultiPoly::variable(fam.ring_vars, "x");
    MultiPoly y = MultiPoly::variable(fam.ring_vars, "y");
    MultiPoly sym = (x * fam.F.partial("x") + y * fam.F.partial("y")).scaled(Rational(1, 2));
    fm.rep_num.push_back(restrict_to_fiber(sym, b, fm.eps0, fam.q));
    fm.frame_names.push_back(fam.frame_name(0));
    for (std::size_t k = 1; k < fam.frame_size(); ++k) {
        fm.rep_num.push_back(restrict_to_fiber(fam.F.partial(fam.base_vars[k]), b, fm.eps0, fam.q));
        fm.frame_names.push_back(fam.frame_name(k));
    }
    return fm;
}

namespace {

Upoly reversed(const Upoly& p) {
    std::vector<Rational> c(p.coeffs().rbegin(), p.coeffs().rend());
    return Upoly(std::move(c));
}

}  // namespace

PairingValue pairing(std::size_t u, std::size_t v, const FiberModel& fm) {
    if (u >= fm.frame_size() || v >= fm.frame_size())
        throw algebra_error("pairing: frame index out of range");
    return pairing_of_reps(fm.rep_num[u], fm.rep_num[v], fm);
}

PairingValue pairing_of_reps(const Upoly& nu, const Upoly& nv, const FiberModel& fm) {
    const int q = fm.q, p = fm.p;
    // Integrand: N_u N_v / (H_b s) ds = nu*nv / (P s^{q+1}) ds with P = hnum.
    Upoly num = nu * nv;

    // Residue at s = 0.
    Rational res0 = expand_at_zero(num, fm.hnum, -(q + 1), 0).residue();

    // Residue at s = infinity, via s = 1/w.
    Upoly num_rev = reversed(num);
    Upoly p_rev = reversed(fm.hnum);
    int shift = (q + 1) + (p + q) - num.degree() - 2;
    Rational res_inf_neg = expand_at_zero(num_rev, p_rev, shift, 0).residue();

    PairingValue out;
    Rational sg(fm.sigma);
    out.at_zero_puncture = -res0 * sg;
    out.at_infinity_puncture = res_inf_neg * sg;
    out.total = out.at_zero_puncture + out.at_infinity_puncture;
    return out;
}

PairingMatrix pairing_matrix(const FiberModel& fm) {
    const std::size_t n = fm.frame_size();
    PairingMatrix out{Matrix<Rational>(n, n, Rational(0)), Matrix<Rational>(n, n, Rational(0)),
                      Matrix<Rational>(n, n, Rational(0))};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            PairingValue pv = pairing(i, j, fm);
            out.total.at(i, j) = out.total.at(j, i) = pv.total;
            out.summand_zero.at(i, j) = out.summand_zero.at(j, i) = pv.at_zero_puncture;
            out.summand_infinity.at(i, j) = out.summand_infinity.at(j, i) =
                pv.at_infinity_puncture;
        }
    return out;
}

bool residue_theorem_check(const FiberModel& fm, std::size_t u, std::size_t v) {
    if (!fm.morse)
        throw algebra_error("residue_theorem_check: H_b has a multiple zero at this point");
    const int q = fm.q, p = fm.p;
    Upoly num = fm.rep_num[u] * fm.rep_num[v];
    Rational at_roots = residue_sum_at_roots_shifted(num, fm.hnum, -(q + 1));
    Rational res0 = expand_at_zero(num, fm.hnum, -(q + 1), 0).residue();
    Upoly num_rev = reversed(num);
    Upoly p_rev = reversed(fm.hnum);
    int shift = (q + 1) + (p + q) - num.degree() - 2;
    Rational res_inf = -expand_at_zero(num_rev, p_rev, shift, 0).residue();
    return (at_roots + res0 + res_inf).is_zero();
}

Matrix<Rational> hankel_matrix(const std::vector<Rational>& coeffs, int m) {
    if (static_cast<int>(coeffs.size()) != m - 1)
        throw algebra_error("hankel_matrix: expected m-1 coefficients");
    Matrix<Rational> h(static_cast<std::size_t>(m - 1), static_cast<std::size_t>(m - 1),
                       Rational(0));
    for (int i = 1; i < m; ++i)
        for (int j = 1; j < m; ++j) {
            int k = i + j;
            if (k < m)
                h.at(i - 1, j - 1) = Rational(k) * coeffs[static_cast<std::size_t>(k - 1)];
            else if (k == m)
                h.at(i - 1, j - 1) = Rational(m);
        }
    return h;
}

bool pairing_zero_pattern(const Matrix<Rational>& m, int p, int q, bool infinity_side) {
    // Row/column blocks: 0 = eps*d_eps, [1, p-1] = a, [p, p+q-2] = b, last = c.
    const std::size_t n = static_cast<std::size_t>(p + q);
    auto block = [&](std::size_t k) {
        if (k == 0) return 0;
        if (k <= static_cast<std::size_t>(p - 1)) return 1;
        if (k <= static_cast<std::size_t>(p + q - 2)) return 2;
        return 3;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int bi = block(i), bj = block(j);
            bool allowed;
            if ((bi == 0 && bj == 3) || (bi == 3 && bj == 0))
                allowed = true;  // corners
            else if (bi == 1 && bj == 1)
                allowed = infinity_side;  // a-block lives at s = infinity
            else if (bi == 2 && bj == 2)
                allowed = !infinity_side;  // b-block lives at s = 0
            else
                allowed = false;
            if (!allowed && !m.at(i, j).is_zero()) return false;
        }
    return true;
}

bool pairing_blocks_match_hankel(const PairingMatrix& pm, int p, int q, const BasePoint& b) {
    std::vector<Rational> avals, bvals;
    for (int i = 1; i < p; ++i) avals.push_back(b.at("a" + std::to_string(i)));
    for (int j = 1; j < q; ++j) bvals.push_back(b.at("b" + std::to_string(j)));
    if (p > 1) {
        Matrix<Rational> inv = mat_inverse(hankel_matrix(avals, p));
        for (int i = 1; i < p; ++i)
            for (int j = 1; j < p; ++j)
                if (pm.summand_infinity.at(static_cast<std::size_t>(i),
                                           static_cast<std::size_t>(j)) != inv.at(i - 1, j - 1))
                    return false;
    }
    if (q > 1) {
        Matrix<Rational> inv = mat_inverse(hankel_matrix(bvals, q));
        for (int i = 1; i < q; ++i)
            for (int j = 1; j < q; ++j)
                if (pm.summand_zero.at(static_cast<std::size_t>(p - 1 + i),
                                       static_cast<std::size_t>(p - 1 + j)) != inv.at(i - 1, j - 1))
                    return false;
    }
    return true;
}

std::vector<std::vector<MultiPoly>> hankel_matrix_symbolic(const std::vector<std::string>& ring,
                                                           const std::string& prefix, int m) {
    std::vector<std::vector<MultiPoly>> h(
        static_cast<std::size_t>(m - 1),
        std::vector<MultiPoly>(static_cast<std::size_t>(m - 1), MultiPoly(ring)));
    for (int i = 1; i < m; ++i)
        for (int j = 1; j < m; ++j) {
            int k = i + j;
            if (k < m)
                h[i - 1][j - 1] =
                    MultiPoly::variable(ring, prefix + std::to_string(k)).scaled(Rational(k));
            else if (k == m)
                h[i - 1][j - 1] = MultiPoly::constant(ring, Rational(m));
        }
    return h;
}

}  // namespace minifold
