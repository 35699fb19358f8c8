#ifndef MINIFOLD_FAMILIES_HPP
#define MINIFOLD_FAMILIES_HPP

#include <json.hpp>
#include <vector>

#include "minifold/node_algebra.hpp"

namespace minifold {

using Json = nlohmann::ordered_json;

// Miniversal deformation of x^p + y^q on the node xy = 0:
//   F = c + sum a_i x^i + x^p + sum b_i y^i + y^q over pi(x,y,a,b,c) = (xy,a,b,c).
struct NodeFamily {
    int p = 0, q = 0;
    std::vector<std::string> ring_vars;  // x, y, eps, a.., b.., c
    std::vector<std::string> base_vars;  // eps, a.., b.., c
    MultiPoly F;    // full ring
    MultiPoly pi1;  // x*y
    MultiPoly H;    // x dF/dx - y dF/dy
    NodeAlgebra algebra;

    // Frame of logarithmic fields, aligned with base_vars: index 0 is
    // eps*d/d_eps, the rest are coordinate fields.
    std::size_t frame_size() const { return base_vars.size(); }
    std::string frame_name(std::size_t k) const;
};

NodeFamily build_node_family(int p, int q);

// Space curve cut out by the 2x3 matrix [[x, y, 0], [0, y, z]] (the three
// coordinate axes) with matrix perturbation parameters s1, s2, s3 and the
// unfolding F = x^p + sum a_i x^{p-i} + y^q + sum b_i y^{q-i} + z^r + sum c_i z^{r-i} + d.
struct DeterminantalCurveFamily {
    int p = 0, q = 0, r = 0;
    std::vector<std::string> space_vars;  // x, y, z
    std::vector<std::string> base_vars;   // s1, s2, s3, a.., b.., c.., d
    std::vector<std::string> ring_vars;   // space + base
    std::vector<std::vector<MultiPoly>> matrix;            // space ring, 2x3
    std::vector<std::vector<MultiPoly>> matrix_perturbed;  // full ring
    MultiPoly f;  // space ring
    MultiPoly F;  // full ring

    // Maximal minors with the alternating sign convention; i-th minor drops
    // column i.
    std::vector<MultiPoly> minors() const;
    std::vector<MultiPoly> minors_perturbed() const;
};

DeterminantalCurveFamily build_cpqr_family(int p, int q, int r);

// Isolated complete intersection data: X = V(g_1..g_k) in C^(n+k), plus f.
struct ICISFamily {
    std::vector<std::string> vars;
    std::vector<MultiPoly> g;
    MultiPoly f;
};

ICISFamily build_icis_family(const std::vector<std::string>& vars,
                             std::vector<MultiPoly> g, MultiPoly f);

// JSON forms (documented in the README): polynomials as exponent/coefficient
// term lists, rationals as exact strings.
Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);
Json family_to_json(const NodeFamily& fam);
Json family_to_json(const DeterminantalCurveFamily& fam);
Json family_to_json(const ICISFamily& fam);
NodeFamily node_family_from_json(const Json& j);
DeterminantalCurveFamily curve_family_from_json(const Json& j);
ICISFamily icis_family_from_json(const Json& j);

}  // namespace minifold

#endif
