#ifndef MINIFOLD_EULER_HPP
#define MINIFOLD_EULER_HPP

#include "minifold/fiber.hpp"
#include "minifold/tprime.hpp"

namespace minifold {

// Euler field on the base, as coordinate components over base_vars:
//   (1/p + 1/q) eps d_eps + sum ((p-i)/p) a_i d_a_i + sum ((q-i)/q) b_i d_b_i + c d_c.
std::vector<MultiPoly> euler_field(const NodeFamily& fam);

// Weight of each base coordinate under the quasi-homogeneous grading.
std::vector<Rational> base_weights(const NodeFamily& fam);
// Weight of each frame field (eps*d_eps has weight 0, d_c weight 1, ...).
std::vector<Rational> frame_weights(const NodeFamily& fam);

// t'F(E) equals the class of F, exactly over the parameter ring.
bool euler_maps_to_f_class(const NodeFamily& fam);

struct WeightReport {
    bool ok = false;
    bool a_block_ok = false, b_block_ok = false, lie_consistent = false;
    std::string note;
};

// Quasi-homogeneity of the symbolic inverse Hankel blocks: entry (i,j) of
// the x-side block has degree (i+j-p)/p, of the y-side block (i+j-q)/q, and
// every pairing entry has degree 1 - w(row) - w(col), which is the
// entrywise form of Lie_E <,> = <,>.
WeightReport weight_check(const NodeFamily& fam);

}  // namespace minifold

#endif
