#ifndef MINIFOLD_CURVE_STRUCTURE_HPP
#define MINIFOLD_CURVE_STRUCTURE_HPP

#include "minifold/fman_checks.hpp"
#include "minifold/groebner.hpp"

namespace minifold {

// Pointwise multiplication data for the perturbed curve family at a rational
// base point off the discriminant: the finite algebra
//   Q[x,y,z] / (perturbed minors + tangent-field derivatives of F),
// the frame of parameter fields expressed through their t'F classes, and
// (optionally) exact first derivatives of everything in the base directions,
// obtained by differentiating the normal-form linear algebra.
struct CurveStructure {
    BasePoint point;
    int degree_bound = 0;
    std::vector<Exponents> basis;  // standard monomials, grevlex ascending
    int dim = 0;
    std::vector<std::string> frame_names;
    bool with_jets = false;
    JetFStructure jets;  // populated when with_jets

    // Multiplication by the class of F in the monomial basis.
    Matrix<Rational> mult_by_f{0, 0, Rational(0)};
    Upoly char_poly_f;
    bool semisimple = false;
    Rational trace_f;
    Rational char_poly_root_sum;  // = -c_{n-1}, for the trace consistency check
};

CurveStructure build_fstructure_curve(const DeterminantalCurveFamily& fam, const BasePoint& b,
                                      bool with_jets, int degree_bound = -1);

BasePoint make_curve_point(const DeterminantalCurveFamily& fam,
                           const std::vector<Rational>& values);

}  // namespace minifold

#endif
