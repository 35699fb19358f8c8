#include "minifold/tprime.hpp"

namespace minifold {

std::vector<MultiPoly> tprime_node(std::size_t k, const NodeFamily& fam) {
    if (k >= fam.frame_size()) throw algebra_error("tprime_node: field not in the frame");
    if (k == 0) {
        MultiPoly x = MultiPoly::variable(fam.ring_vars, "x");
        return fam.algebra.normal_form(x * fam.F.partial("x"));
    }
    return fam.algebra.normal_form(fam.F.partial(fam.base_vars[k]));
}

std::vector<MultiPoly> tprime_node_symmetric_lift(const NodeFamily& fam) {
    MultiPoly x = MultiPoly::variable(fam.ring_vars, "x");
    MultiPoly y = MultiPoly::variable(fam.ring_vars, "y");
    MultiPoly d = (x * fam.F.partial("x") + y * fam.F.partial("y")).scaled(Rational(1, 2));
    return fam.algebra.normal_form(d);
}

std::vector<std::vector<MultiPoly>> tprime_matrix(const NodeFamily& fam) {
    const std::size_t n = fam.algebra.dim();
    std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n, fam.algebra.param_zero()));
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<MultiPoly> col = tprime_node(k, fam);
        for (std::size_t i = 0; i < n; ++i) m[i][k] = col[i];
    }
    return m;
}

Matrix<Rational> tprime_matrix_at(const NodeFamily& fam,
                                  const std::map<std::string, Rational>& point) {
    auto m = tprime_matrix(fam);
    const std::size_t n = m.size();
    Matrix<Rational> out(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = m[i][j].evaluate(point);
    return out;
}

RationalFunction tprime_determinant(const NodeFamily& fam) {
    auto m = tprime_matrix(fam);
    const std::size_t n = m.size();
    Matrix<RationalFunction> mm(n, n, RationalFunction::constant(fam.base_vars, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mm.at(i, j) = RationalFunction(m[i][j]);
    return determinant(mm);
}

std::vector<MultiPoly> f_class_node(const NodeFamily& fam) {
    return fam.algebra.normal_form(fam.F);
}

}  // namespace minifold
