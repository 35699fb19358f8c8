#include "minifold/euler.hpp"

namespace minifold {

std::vector<MultiPoly> euler_field(const NodeFamily& fam) {
    const auto& bv = fam.base_vars;
    std::vector<MultiPoly> e;
    e.push_back(MultiPoly::variable(bv, "eps").scaled(Rational(1, fam.p) + Rational(1, fam.q)));
    for (int i = 1; i < fam.p; ++i)
        e.push_back(MultiPoly::variable(bv, "a" + std::to_string(i))
                        .scaled(Rational(fam.p - i, fam.p)));
    for (int i = 1; i < fam.q; ++i)
        e.push_back(MultiPoly::variable(bv, "b" + std::to_string(i))
                        .scaled(Rational(fam.q - i, fam.q)));
    e.push_back(MultiPoly::variable(bv, "c"));
    return e;
}

std::vector<Rational> base_weights(const NodeFamily& fam) {
    std::vector<Rational> w;
    w.push_back(Rational(1, fam.p) + Rational(1, fam.q));
    for (int i = 1; i < fam.p; ++i) w.push_back(Rational(fam.p - i, fam.p));
    for (int i = 1; i < fam.q; ++i) w.push_back(Rational(fam.q - i, fam.q));
    w.push_back(Rational(1));
    return w;
}

std::vector<Rational> frame_weights(const NodeFamily& fam) {
    std::vector<Rational> w = base_weights(fam);
    w[0] = Rational(0);  // eps*d_eps is weight neutral
    return w;
}

bool euler_maps_to_f_class(const NodeFamily& fam) {
    // E in frame terms: (1/p+1/q) * (eps d_eps) + sum_i w_i * var_i * d_i.
    std::vector<MultiPoly> e = euler_field(fam);
    const std::size_t n = fam.frame_size();
    std::vector<MultiPoly> image(fam.algebra.dim(), fam.algebra.param_zero());
    for (std::size_t k = 0; k < n; ++k) {
        MultiPoly frame_coeff =
            k == 0 ? MultiPoly::constant(fam.base_vars, Rational(1, fam.p) + Rational(1, fam.q))
                   : e[k];
        if (frame_coeff.is_zero()) continue;
        std::vector<MultiPoly> col = tprime_node(k, fam);
        for (std::size_t i = 0; i < image.size(); ++i) image[i] += frame_coeff * col[i];
    }
    std::vector<MultiPoly> fcl = f_class_node(fam);
    for (std::size_t i = 0; i < image.size(); ++i)
        if (image[i] != fcl[i]) return false;
    return true;
}

namespace {

// Inverse of a small symbolic matrix over the rational-function field.
std::vector<std::vector<RationalFunction>> invert_symbolic(
    const std::vector<std::vector<MultiPoly>>& m) {
    const std::size_t n = m.size();
    const auto& vars = m[0][0].vars();
    Matrix<RationalFunction> mm(n, n, RationalFunction::constant(vars, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mm.at(i, j) = RationalFunction(m[i][j]);
    Matrix<RationalFunction> inv = mat_inverse(mm);
    std::vector<std::vector<RationalFunction>> out(
        n, std::vector<RationalFunction>(n, RationalFunction::constant(vars, Rational(0))));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = inv.at(i, j);
    return out;
}

bool entry_has_degree(const RationalFunction& e, const std::vector<Rational>& weights,
                      const Rational& expected) {
    if (e.is_zero()) return true;
    auto dn = e.num().quasi_degree(weights);
    auto dd = e.den().quasi_degree(weights);
    if (!dn || !dd) return false;
    return *dn - *dd == expected;
}

}  // namespace

WeightReport weight_check(const NodeFamily& fam) {
    WeightReport rep;
    const auto& bv = fam.base_vars;
    std::vector<Rational> wvars = base_weights(fam);

    auto a_block = invert_symbolic(hankel_matrix_symbolic(bv, "a", fam.p));
    rep.a_block_ok = true;
    for (int i = 1; i < fam.p; ++i)
        for (int j = 1; j < fam.p; ++j)
            if (!entry_has_degree(a_block[i - 1][j - 1], wvars, Rational(i + j - fam.p, fam.p)))
                rep.a_block_ok = false;

    auto b_block = invert_symbolic(hankel_matrix_symbolic(bv, "b", fam.q));
    rep.b_block_ok = true;
    for (int i = 1; i < fam.q; ++i)
        for (int j = 1; j < fam.q; ++j)
            if (!entry_has_degree(b_block[i - 1][j - 1], wvars, Rational(i + j - fam.q, fam.q)))
                rep.b_block_ok = false;

    // Lie_E <,> = <,> entrywise: every nonzero entry of the pairing matrix is
    // quasi-homogeneous of degree 1 - w(row) - w(col). The nonzero entries
    // are the two corner constants and the two inverse blocks checked above,
    // so it remains to check the corners' weight budget is zero.
    std::vector<Rational> wf = frame_weights(fam);
    Rational corner_expected = Rational(1) - wf[0] - wf[wf.size() - 1];
    rep.lie_consistent = corner_expected.is_zero();
    for (int i = 1; i < fam.p; ++i)
        for (int j = 1; j < fam.p; ++j) {
            Rational expect = Rational(1) - wf[static_cast<std::size_t>(i)] -
                              wf[static_cast<std::size_t>(j)];
            if (expect != Rational(i + j - fam.p, fam.p)) rep.lie_consistent = false;
        }
    for (int i = 1; i < fam.q; ++i)
        for (int j = 1; j < fam.q; ++j) {
            Rational expect = Rational(1) - wf[static_cast<std::size_t>(fam.p - 1 + i)] -
                              wf[static_cast<std::size_t>(fam.p - 1 + j)];
            if (expect != Rational(i + j - fam.q, fam.q)) rep.lie_consistent = false;
        }

    rep.ok = rep.a_block_ok && rep.b_block_ok && rep.lie_consistent;
    return rep;
}

}  // namespace minifold
