#ifndef MINIFOLD_FSTRUCTURE_HPP
#define MINIFOLD_FSTRUCTURE_HPP

#include "minifold/euler.hpp"
#include "minifold/tprime.hpp"

namespace minifold {

// Multiplication on the frame of logarithmic fields, with rational-function
// structure constants over the base coordinates. Frame field k is
// frame_multiplier[k] * d/d(base_vars[k]); for the node frame the first
// multiplier is eps and the rest are 1.
struct FStructure {
    std::vector<std::string> base_vars;
    std::vector<std::string> frame_names;
    std::vector<RationalFunction> frame_multiplier;
    std::size_t unit_index = 0;
    std::vector<std::vector<std::vector<RationalFunction>>> tensor;  // c[i][j][k]
    std::vector<RationalFunction> euler_coords;  // coordinate components of E

    std::size_t size() const { return frame_names.size(); }
    RationalFunction rf_zero() const { return RationalFunction::constant(base_vars, Rational(0)); }
    RationalFunction rf_one() const { return RationalFunction::constant(base_vars, Rational(1)); }

    // Coordinate components of frame field k.
    std::vector<RationalFunction> frame_field(std::size_t k) const;
    // Frame coefficients of a coordinate-component field (divides by the
    // multipliers, which are monomial units off the discriminant).
    std::vector<RationalFunction> frame_coords(const std::vector<RationalFunction>& field) const;
    // Star product of two coordinate-component fields.
    std::vector<RationalFunction> star(const std::vector<RationalFunction>& u,
                                       const std::vector<RationalFunction>& v) const;
};

// Pulls the node-algebra product back through t'F; the unit is d_c and the
// Euler field is the one matching the class of F.
FStructure build_fstructure_node(const NodeFamily& fam);

// Round trip t'F(u * v) = t'F(u) t'F(v) as an exact identity.
bool fstructure_node_round_trip(const NodeFamily& fam, const FStructure& fs);

}  // namespace minifold

#endif
