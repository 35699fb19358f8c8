#ifndef MINIFOLD_MF_MODULE_HPP
#define MINIFOLD_MF_MODULE_HPP

#include "minifold/groebner.hpp"
#include "minifold/tangent_fields.hpp"

namespace minifold {

// dim and standard-monomial basis of
//   O_X / (V(f) : V a generator of the dual-class-map module),
// i.e. the quotient by the curve ideal plus the tangent-field derivatives
// of f. Degree bound defaults to p+q+r+3 and retries once with twice that.
QuotientBasis compute_Mf_spacecurve(const DeterminantalCurveFamily& fam, int degree_bound = -1);

// Complete-intersection version: (g) plus the maximal minors of the Jacobian
// of (f, g_1..g_k).
QuotientBasis compute_Mf_icis(const ICISFamily& fam, int degree_bound = -1);

// Fiber of the node module at zero parameters: Q[x,y]/(xy, p x^p - q y^q).
QuotientBasis compute_Mf_node(int p, int q);

// Monomials spanning M_f modulo the derivatives of f along all vector fields
// tangent to X (computed up to the given coefficient degree), ordered by
// degree then lexicographically. This reproduces the unfolding monomials of
// the miniversal deformation of f.
std::vector<MultiPoly> unfolding_basis(const std::vector<MultiPoly>& ideal_gens,
                                       const MultiPoly& f, int degree_bound = -1,
                                       int field_degree = 4);

std::vector<MultiPoly> unfolding_basis_curve(const DeterminantalCurveFamily& fam);
std::vector<MultiPoly> unfolding_basis_node(int p, int q);

// All fields (up to the coefficient degree) tangent to V(ideal_gens):
// v with v(g) in the ideal for every generator.
std::vector<VectorFieldPoly> tangent_fields_of_variety(const std::vector<MultiPoly>& ideal_gens,
                                                       int field_degree);

}  // namespace minifold

#endif
