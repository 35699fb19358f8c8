#ifndef MINIFOLD_GROEBNER_HPP
#define MINIFOLD_GROEBNER_HPP

#include <vector>

#include "minifold/multipoly.hpp"

namespace minifold {

struct certificate_error : std::runtime_error {
    explicit certificate_error(const std::string& what, int attempted_degree = -1)
        : std::runtime_error(what), attempted_degree(attempted_degree) {}
    int attempted_degree;
};

// Graded reverse lexicographic order; a "greater" monomial reduces first.
bool grevlex_greater(const Exponents& a, const Exponents& b);
bool monomial_divides(const Exponents& d, const Exponents& m);

// A reduced Groebner basis for grevlex, with monic integer-primitive scaling
// handled internally.
class GroebnerBasis {
  public:
    // Computes the basis from generators in the same ring. degree_cap bounds
    // the degree of any intermediate polynomial (guards runaway inputs).
    GroebnerBasis(const std::vector<MultiPoly>& gens, int degree_cap = 64);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<MultiPoly>& elements() const { return basis_; }
    std::vector<Exponents> leading_exponents() const;

    // Full normal form; zero iff p lies in the ideal.
    MultiPoly reduce(const MultiPoly& p) const;
    bool contains(const MultiPoly& p) const { return reduce(p).is_zero(); }

  private:
    std::vector<std::string> vars_;
    std::vector<MultiPoly> basis_;
};

struct QuotientBasis {
    int dimension = 0;
    std::vector<Exponents> standard_monomials;  // grevlex-ascending
    std::vector<int> certificate;               // per-variable pure power in LT ideal
};

// Dimension of Q[vars]/(gens) via standard monomials of a grevlex basis.
// Fails with certificate_error unless every variable has a pure power at
// most D in the leading-term ideal.
QuotientBasis quotient_dimension(const std::vector<MultiPoly>& gens, int D);

// Same, retrying once with 2*D on certificate failure.
QuotientBasis quotient_dimension_retry(const std::vector<MultiPoly>& gens, int D);

// Brute-force oracle: rank of the Macaulay matrix of all monomial multiples
// m*g with deg(m*g) <= D; returns the count of degree<=D monomials minus the
// rank. Used by tests to cross-check quotient_dimension.
int macaulay_quotient_count(const std::vector<MultiPoly>& gens, int D);

}  // namespace minifold

#endif
