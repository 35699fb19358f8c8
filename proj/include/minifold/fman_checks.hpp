#ifndef MINIFOLD_FMAN_CHECKS_HPP
#define MINIFOLD_FMAN_CHECKS_HPP

#include "minifold/fstructure.hpp"

namespace minifold {

using FieldRF = std::vector<RationalFunction>;  // coordinate components

FieldRF field_bracket(const FieldRF& u, const FieldRF& v, const std::vector<std::string>& vars);

// (Lie_u star)(f_i, f_j) = [u, f_i*f_j] - [u,f_i]*f_j - f_i*[u,f_j] for the
// frame fields; entries are coordinate-component fields.
std::vector<std::vector<FieldRF>> lie_of_product(const FStructure& fs, const FieldRF& u);

struct AxiomReport {
    bool commutative = false, associative = false, unital = false;
    bool ok() const { return commutative && associative && unital; }
};
// Exact rational-function identities.
AxiomReport check_axioms(const FStructure& fs);

// Lie_E(star) = star as a symbolic tensor identity.
bool check_euler(const FStructure& fs);

// First-order data of an F-structure at a rational base point; enough to
// evaluate every Lie-derivative identity exactly at the point.
struct JetScalar {
    Rational v;
    std::vector<Rational> d;  // derivative per base coordinate
};
struct JetFStructure {
    std::vector<std::string> base_vars;
    std::size_t n = 0;
    std::size_t unit_index = 0;
    std::vector<JetScalar> frame_mult;
    std::vector<std::vector<std::vector<JetScalar>>> c;  // c[i][j][k]
    std::vector<JetScalar> euler;                        // coordinate components
};

JetFStructure jet_at(const FStructure& fs, const BasePoint& b);

bool jet_check_axioms(const JetFStructure& js);
// Eq-of-motion of the multiplication: Lie_{u*v}(star) = Lie_u(star)*v + u*Lie_v(star)
// for all frame pairs, exactly at the point.
bool jet_check_integrability(const JetFStructure& js);
bool jet_check_euler(const JetFStructure& js);

struct IntegrabilityReport {
    bool ok = true;
    std::vector<BasePoint> counterexamples;
};
// Evaluates the integrability identity exactly at each sample point.
IntegrabilityReport check_integrability(const FStructure& fs, const std::vector<BasePoint>& pts);

// Characteristic polynomial of multiplication by the class of F on the node
// algebra at a base point; semisimple iff squarefree.
struct SemisimplicityResult {
    bool semisimple = false;
    Upoly char_poly;
    Rational trace;
};
SemisimplicityResult semisimplicity_node_at(const NodeFamily& fam, const BasePoint& b);
// Same data from the multiplication-by-E operator on the frame; conjugate to
// the algebra operator, so the characteristic polynomials agree.
SemisimplicityResult semisimplicity_at(const FStructure& fs, const BasePoint& b);

// Restriction of the node structure to the stratum eps = 0: the frame field
// eps*d_eps dies in Theta_B/(eps)Theta_B and its t'F class generates the
// ideal to quotient by. Only principal coordinate ideals are supported, and
// for the node family only (eps) defines a stratum.
struct StratumRestriction {
    FStructure structure;   // over the remaining base coordinates
    int dimension = 0;      // of the quotient algebra
    int ideal_rank = 0;     // rank of multiplication by the dead generator
};
StratumRestriction restrict_to_stratum(const NodeFamily& fam, const std::string& coordinate);

}  // namespace minifold

#endif
