#include "minifold/rational.hpp"

#include <ostream>

namespace minifold {

Rational Rational::parse(const std::string& s) {
    std::string t;
    t.reserve(s.size());
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw algebra_error("Rational::parse: empty string");
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(t);
            return Rational(n);
        }
        mpz_class n(t.substr(0, slash));
        mpz_class d(t.substr(slash + 1));
        if (d == 0) throw algebra_error("Rational::parse: zero denominator");
        mpq_class q(n, d);
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw algebra_error("Rational::parse: bad literal '" + s + "'");
    }
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw algebra_error("Rational::pow: zero to negative power");
        return Rational(0);
    }
    mpz_class n, d;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), a);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), a);
    mpq_class q(n, d);
    q.canonicalize();
    Rational r(q);
    return e < 0 ? r.inverse() : r;
}

Rational Rational::nth_root(unsigned n) const {
    if (n == 0) throw algebra_error("Rational::nth_root: n = 0");
    if (n == 1) return *this;
    if (is_zero()) return Rational(0);
    if (sign() < 0 && n % 2 == 0)
        throw algebra_error("Rational::nth_root: even root of negative value");
    mpz_class an = ::abs(num()), ad = den(), rn, rd;
    int exact_n = mpz_root(rn.get_mpz_t(), an.get_mpz_t(), n);
    int exact_d = mpz_root(rd.get_mpz_t(), ad.get_mpz_t(), n);
    if (!exact_n || !exact_d) throw algebra_error("Rational::nth_root: not a perfect power");
    mpq_class q(sign() < 0 ? -rn : rn, rd);
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace minifold
