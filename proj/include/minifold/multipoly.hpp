#ifndef MINIFOLD_MULTIPOLY_HPP
#define MINIFOLD_MULTIPOLY_HPP

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minifold/rational.hpp"

namespace minifold {

using Exponents = std::vector<int>;

// Exact multivariate polynomial over Q. Terms are kept in a map keyed by the
// exponent vector; zero coefficients are never stored. All arithmetic requires
// identical variable lists (see aligned()/embedded()).
class MultiPoly {
  public:
    using TermMap = std::map<Exponents, Rational>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, const Rational& c);
    static MultiPoly variable(std::vector<std::string> vars, const std::string& name, int exp = 1);
    static MultiPoly monomial(std::vector<std::string> vars, Exponents e, const Rational& c);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // throws unless constant
    std::size_t term_count() const { return terms_.size(); }
    int total_degree() const;  // -1 for the zero polynomial
    int degree_in(std::size_t var_index) const;

    void add_term(const Exponents& e, const Rational& c);
    Rational coeff(const Exponents& e) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly scaled(const Rational& c) const;
    MultiPoly pow(unsigned e) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // Formal partial derivative; the variable must exist.
    MultiPoly partial(const std::string& var) const;
    MultiPoly partial(std::size_t var_index) const;

    // Substitutes values for a subset of variables; result lives in the ring
    // on the remaining variables (in original order).
    MultiPoly evaluated(const std::map<std::string, Rational>& values) const;
    // Full evaluation to a scalar; every variable must receive a value.
    Rational evaluate(const std::map<std::string, Rational>& values) const;
    // Substitutes polynomials (over the same target ring) for every variable.
    MultiPoly substituted(const std::vector<MultiPoly>& images) const;

    // Returns a copy living in the ring with variable list `new_vars`, which
    // must contain every variable of this polynomial.
    MultiPoly embedded(const std::vector<std::string>& new_vars) const;

    // True if the polynomial uses the given variable.
    bool depends_on(const std::string& var) const;

    // gcd of all coefficients times sign of the leading one (map-order); zero poly -> 0.
    Rational content() const;

    // Quasi-homogeneity: if every term has the same weighted degree, returns it.
    std::optional<Rational> quasi_degree(const std::vector<Rational>& weights) const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

  private:
    std::vector<std::string> vars_;
    TermMap terms_;

    std::size_t var_index(const std::string& name) const;
    void check_same_ring(const MultiPoly& o, const char* op) const;
};

// Exact division: returns a/b if b divides a in Q[vars], nullopt otherwise.
std::optional<MultiPoly> try_divide_exact(const MultiPoly& a, const MultiPoly& b);

}  // namespace minifold

#endif
