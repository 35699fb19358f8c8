#ifndef MINIFOLD_UNIVARIATE_HPP
#define MINIFOLD_UNIVARIATE_HPP

#include <vector>

#include "minifold/linalg.hpp"
#include "minifold/multipoly.hpp"
#include "minifold/series.hpp"

namespace minifold {

// Dense univariate polynomial over Q; coeffs[k] multiplies x^k.
class Upoly {
  public:
    Upoly() = default;
    explicit Upoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Upoly constant(const Rational& c) { return Upoly({c}); }
    static Upoly x() { return Upoly({Rational(0), Rational(1)}); }

    // A MultiPoly that depends on at most one variable.
    static Upoly from_multipoly(const MultiPoly& p);
    MultiPoly to_multipoly(const std::string& var) const;

    const std::vector<Rational>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    Rational lead() const;
    Rational evaluate(const Rational& x) const;

    Upoly operator-() const;
    friend Upoly operator+(const Upoly& a, const Upoly& b);
    friend Upoly operator-(const Upoly& a, const Upoly& b);
    friend Upoly operator*(const Upoly& a, const Upoly& b);
    Upoly scaled(const Rational& k) const;
    friend bool operator==(const Upoly& a, const Upoly& b) { return a.c_ == b.c_; }

    Upoly derivative() const;
    Upoly monic() const;

    // Euclidean division: returns (quotient, remainder).
    std::pair<Upoly, Upoly> divmod(const Upoly& d) const;

    std::string str(const std::string& var = "t") const;

  private:
    std::vector<Rational> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

Upoly gcd(const Upoly& a, const Upoly& b);
bool is_squarefree(const Upoly& p);

// Sum over the roots r of `denom` (with multiplicity one; denom must be
// squarefree) of Res_{x=r} numer/denom dx, computed exactly as the trace of
// multiplication by numer * (denom')^{-1} on Q[x]/(denom). `shift` extends
// the numerator by x^shift with shift possibly negative, in which case x
// must be invertible mod denom (denom(0) != 0).
Rational residue_sum_at_roots_shifted(const Upoly& numer, const Upoly& denom, int shift);
Rational residue_sum_at_roots(const Upoly& numer, const Upoly& denom);
Rational residue_sum_at_roots(const MultiPoly& numer, const MultiPoly& denom);

// Laurent expansion of numer/denom at x = 0, to the requested truncation.
RationalSeries expand_at_zero(const Upoly& numer, const Upoly& denom, int numer_shift, int trunc,
                              const std::string& var = "s");

}  // namespace minifold

#endif
