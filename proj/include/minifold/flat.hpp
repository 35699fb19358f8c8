#ifndef MINIFOLD_FLAT_HPP
#define MINIFOLD_FLAT_HPP

#include "minifold/fiber.hpp"
#include "minifold/series.hpp"

namespace minifold {

// Flat chart at a smooth fiber: u is the local coordinate in w = 1/s at the
// puncture where x grows (F = u^{-p} there), v the coordinate in s at the
// puncture where y grows (F = v^{-q}). The t_i come from log(xu), the s_j
// from log(yv). Both logs have rational constant coefficient (t0_arg,
// s0_arg); t0 = log(t0_arg) is reported unevaluated and never used.
struct FlatChart {
    int N = 0;
    RationalSeries u{"w", 0, {Rational(0)}, 0};
    RationalSeries v{"s", 0, {Rational(0)}, 0};
    std::vector<Rational> t;       // t_1..t_{p-1}
    std::vector<Rational> s;       // s_1..s_{q-1}
    Rational t0_arg{1}, s0_arg{1};
};

FlatChart flat_coordinates(const FiberModel& fm, int N);

// t_i as exact polynomials in the base parameters (computed over the
// polynomial coefficient ring); s_j via the x<->y swapped family.
std::vector<MultiPoly> flat_t_symbolic(const NodeFamily& fam, int N);
std::vector<MultiPoly> flat_s_symbolic(const NodeFamily& fam, int N);

struct FlatPairingReport {
    bool ok = false;
    bool t_block_ok = false, s_block_ok = false, cross_ok = false;
    bool routes_agree = false;
    bool corner_is_one = false, eps_diag_zero = false;
    Matrix<Rational> flat_matrix{0, 0, Rational(0)};     // chain-rule route
    Matrix<Rational> series_t_block{0, 0, Rational(0)};  // route (i), t side
    Matrix<Rational> series_s_block{0, 0, Rational(0)};  // route (i), s side
    std::string note;
};

// Both routes of the flat-pairing computation: (i) series residues of
// u^{i+j} H alpha at the matching puncture, (ii) transport of the pairing
// matrix through the exact Jacobian of (log eps, t, s, c).
FlatPairingReport flat_pairing_check(const NodeFamily& fam, const BasePoint& b, int N);

}  // namespace minifold

#endif
