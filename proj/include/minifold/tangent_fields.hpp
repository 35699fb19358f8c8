#ifndef MINIFOLD_TANGENT_FIELDS_HPP
#define MINIFOLD_TANGENT_FIELDS_HPP

#include "minifold/families.hpp"

namespace minifold {

// Polynomial vector field: one coefficient per coordinate of `coords`;
// components may live in a larger ring (e.g. with deformation parameters).
struct VectorFieldPoly {
    std::vector<std::string> coords;
    std::vector<MultiPoly> components;

    MultiPoly apply(const MultiPoly& f) const {
        MultiPoly r(f.vars());
        for (std::size_t k = 0; k < coords.size(); ++k)
            r += components[k].vars() == f.vars()
                     ? components[k] * f.partial(coords[k])
                     : components[k].embedded(f.vars()) * f.partial(coords[k]);
        return r;
    }
};

// One field per pair i<j of minors: the formal 3x3 determinant with first
// row the coordinate fields and the other rows the minor gradients, expanded
// along the first row. `coords` are the space variables to differentiate by;
// the minors may carry parameters.
std::vector<VectorFieldPoly> determinantal_tangent_fields(const std::vector<MultiPoly>& minors,
                                                          const std::vector<std::string>& coords);

std::vector<VectorFieldPoly> curve_tangent_fields(const DeterminantalCurveFamily& fam,
                                                  bool perturbed);

// Fields annihilating the g_i (rows: coordinates, then each grad g_i), one
// per (k+1)-subset of columns, by cofactor expansion along the first row.
// With include_f_row, the grad f row is added and (k+2)-subsets are used;
// that variant errors when k+2 exceeds the ambient dimension.
std::vector<VectorFieldPoly> icis_tangent_fields(const ICISFamily& fam, bool include_f_row = false);

}  // namespace minifold

#endif
