#ifndef MINIFOLD_TPRIME_HPP
#define MINIFOLD_TPRIME_HPP

#include "minifold/families.hpp"
#include "minifold/linalg.hpp"

namespace minifold {

// Class in the node algebra of the derivative of F along a lift of the
// logarithmic frame field `k` (0 = eps*d_eps, lifted to x*d_x; the others
// lift to themselves). Coefficients over the base parameters.
std::vector<MultiPoly> tprime_node(std::size_t k, const NodeFamily& fam);

// Same for the symmetric lift (x*d_x + y*d_y)/2 of eps*d_eps; the class must
// agree with tprime_node(0, ...) because the two lifts differ by H/2.
std::vector<MultiPoly> tprime_node_symmetric_lift(const NodeFamily& fam);

// (p+q) x (p+q) matrix of the map in the algebra basis (rows) and the frame
// (columns, ordered eps*d_eps, d_a1.., d_b1.., d_c). Entries are polynomials
// in the base parameters.
std::vector<std::vector<MultiPoly>> tprime_matrix(const NodeFamily& fam);

Matrix<Rational> tprime_matrix_at(const NodeFamily& fam,
                                  const std::map<std::string, Rational>& point);

// Determinant over the rational-function field (a nonzero constant for this
// family, so the map is invertible over the whole base).
RationalFunction tprime_determinant(const NodeFamily& fam);

// Class of F itself in the node algebra.
std::vector<MultiPoly> f_class_node(const NodeFamily& fam);

}  // namespace minifold

#endif
