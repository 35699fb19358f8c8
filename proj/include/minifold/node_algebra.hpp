#ifndef MINIFOLD_NODE_ALGEBRA_HPP
#define MINIFOLD_NODE_ALGEBRA_HPP

#include <vector>

#include "minifold/multipoly.hpp"

namespace minifold {

// The rank p+q algebra Q[params][x,y]/(xy - eps, H) with monomial basis
// {1, x, ..., x^p, y, ..., y^{q-1}}. H is the relative jacobian
//   sum i*a_i x^i + p x^p - sum i*b_i y^i - q y^q.
// Coefficients of normal forms are polynomials in the base parameters with
// denominators only powers of p and q.
class NodeAlgebra {
  public:
    NodeAlgebra(int p, int q);

    int p() const { return p_; }
    int q() const { return q_; }
    std::size_t dim() const { return static_cast<std::size_t>(p_ + q_); }

    // Ring variables: x, y followed by the parameters.
    const std::vector<std::string>& ring_vars() const { return ring_vars_; }
    // eps, a1..a_{p-1}, b1..b_{q-1}, c.
    const std::vector<std::string>& param_vars() const { return param_vars_; }

    MultiPoly hamiltonian() const { return H_; }  // H in the full ring

    // Basis monomial as a full-ring polynomial. Index scheme:
    // 0 -> 1, 1..p -> x^i, p+1..p+q-1 -> y^(i-p).
    MultiPoly basis_monomial(std::size_t k) const;
    std::string basis_name(std::size_t k) const;

    // Unique representative in the basis span; coefficients over param_vars.
    std::vector<MultiPoly> normal_form(const MultiPoly& g) const;

    // c[i][j][k] with basis_i * basis_j = sum_k c[i][j][k] basis_k.
    const std::vector<std::vector<std::vector<MultiPoly>>>& structure_constants() const;

    // Product of two coefficient vectors via the structure constants.
    std::vector<MultiPoly> multiply(const std::vector<MultiPoly>& u,
                                    const std::vector<MultiPoly>& v) const;

    MultiPoly param_zero() const { return MultiPoly(param_vars_); }
    MultiPoly param_one() const { return MultiPoly::constant(param_vars_, Rational(1)); }

  private:
    int p_, q_;
    std::vector<std::string> ring_vars_, param_vars_;
    MultiPoly H_;
    mutable std::vector<std::vector<std::vector<MultiPoly>>> sc_;  // lazily built

    void reduce_map(std::map<std::pair<int, int>, MultiPoly>& m) const;
};

// Names eps, a1.., b1.., c for given (p, q).
std::vector<std::string> node_param_names(int p, int q);

}  // namespace minifold

#endif
