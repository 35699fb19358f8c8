#ifndef MINIFOLD_RATFUNC_HPP
#define MINIFOLD_RATFUNC_HPP

#include "minifold/multipoly.hpp"

namespace minifold {

// Quotient of two MultiPoly over the same variable list. Canonical form:
// the denominator is content-normalized (integer coefficients, gcd 1,
// positive leading coefficient in map order); exact polynomial cancellation
// is attempted but full multivariate gcd is not.
class RationalFunction {
  public:
    RationalFunction() = default;
    explicit RationalFunction(MultiPoly num) : num_(std::move(num)) {
        den_ = MultiPoly::constant(num_.vars(), Rational(1));
        normalize();
    }
    RationalFunction(MultiPoly num, MultiPoly den);

    static RationalFunction constant(std::vector<std::string> vars, const Rational& c) {
        return RationalFunction(MultiPoly::constant(std::move(vars), c));
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const std::vector<std::string>& vars() const { return num_.vars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    // Throws if a nontrivial denominator remains.
    MultiPoly as_polynomial() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction inverse() const;

    // Equality as rational functions: cross-multiplied.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    RationalFunction partial(const std::string& var) const;
    Rational evaluate(const std::map<std::string, Rational>& values) const;
    RationalFunction evaluated(const std::map<std::string, Rational>& values) const;

    std::string str() const;

  private:
    MultiPoly num_, den_;
    void normalize();
};

}  // namespace minifold

#endif
