#ifndef MINIFOLD_FIBER_HPP
#define MINIFOLD_FIBER_HPP

#include <map>

#include "minifold/families.hpp"
#include "minifold/univariate.hpp"

namespace minifold {

using BasePoint = std::map<std::string, Rational>;

BasePoint make_node_point(const NodeFamily& fam, const std::vector<Rational>& values);

// The fiber xy = eps0 parametrized by x = s, y = eps0/s. Laurent data is
// held as polynomials in s divided by s^q: F_b = fnum/s^q, H_b = hnum/s^q.
// The relative form restricts to sigma * ds/s; sigma is calibrated once so
// that the pairing matrix reproduces the reference block pattern.
struct FiberModel {
    int p = 0, q = 0;
    BasePoint point;
    Rational eps0;
    Upoly fnum;  // s^q * F_b, degree p+q, monic
    Upoly hnum;  // s^q * H_b, degree p+q, leading coefficient p
    bool morse = false;  // hnum squarefree <=> all critical points nondegenerate
    int sigma = 1;

    // t'F representatives restricted to the fiber, numerators over s^q, in
    // frame order (eps*d_eps via the symmetric lift, d_a*, d_b*, d_c).
    std::vector<Upoly> rep_num;
    std::vector<std::string> frame_names;

    std::size_t frame_size() const { return rep_num.size(); }
};

// Errors when eps0 = 0 (base point on the discriminant).
FiberModel fiber_restrict(const NodeFamily& fam, const BasePoint& b);

// <u, v> as the residue sum at the critical points, split into the
// contributions of the two punctures: S1 from s = 0 (where x collapses) and
// S2 from s = infinity (where y collapses). pairing = S1 + S2.
struct PairingValue {
    Rational total, at_zero_puncture, at_infinity_puncture;
};
PairingValue pairing(std::size_t u, std::size_t v, const FiberModel& fm);
// Same residue computation for arbitrary representatives given by their
// numerators over s^q (the pairing is bilinear in these).
PairingValue pairing_of_reps(const Upoly& nu, const Upoly& nv, const FiberModel& fm);

struct PairingMatrix {
    Matrix<Rational> total, summand_zero, summand_infinity;
};
PairingMatrix pairing_matrix(const FiberModel& fm);

// Exact global check: residues at both punctures plus the residue sum over
// the zeros of H_b add to zero. Requires a squarefree hnum.
bool residue_theorem_check(const FiberModel& fm, std::size_t u, std::size_t v);

// Hankel-type matrix with entries (i+j) * coeff_{i+j} for 1 <= i,j <= m-1,
// where coeff_m := 1 and entries with i+j > m vanish. The pairing blocks
// are the inverses of these.
Matrix<Rational> hankel_matrix(const std::vector<Rational>& coeffs, int m);
std::vector<std::vector<MultiPoly>> hankel_matrix_symbolic(const std::vector<std::string>& ring,
                                                           const std::string& prefix, int m);

// Zero pattern of one summand: corners plus one diagonal block
// (the a-block for the infinity-side summand, the b-block for the other).
bool pairing_zero_pattern(const Matrix<Rational>& m, int p, int q, bool infinity_side);
// Both diagonal blocks equal the inverses of the Hankel matrices built from
// the base-point coefficients.
bool pairing_blocks_match_hankel(const PairingMatrix& pm, int p, int q, const BasePoint& b);

}  // namespace minifold

#endif
