#include "minifold/univariate.hpp"

#include <sstream>

namespace minifold {

Upoly Upoly::from_multipoly(const MultiPoly& p) {
    int vi = -1;
    for (std::size_t i = 0; i < p.vars().size(); ++i)
        if (p.degree_in(i) > 0) {
            if (vi >= 0) throw algebra_error("Upoly: polynomial is not univariate");
            vi = static_cast<int>(i);
        }
    std::vector<Rational> c;
    for (const auto& [e, k] : p.terms()) {
        int d = vi >= 0 ? e[static_cast<std::size_t>(vi)] : 0;
        if (static_cast<int>(c.size()) <= d) c.resize(static_cast<std::size_t>(d) + 1, Rational(0));
        c[static_cast<std::size_t>(d)] = k;
    }
    return Upoly(std::move(c));
}

MultiPoly Upoly::to_multipoly(const std::string& var) const {
    MultiPoly p({var});
    for (std::size_t k = 0; k < c_.size(); ++k)
        p.add_term({static_cast<int>(k)}, c_[k]);
    return p;
}

Rational Upoly::lead() const {
    if (c_.empty()) return Rational(0);
    return c_.back();
}

Rational Upoly::evaluate(const Rational& x) const {
    Rational r(0);
    for (std::size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
    return r;
}

Upoly Upoly::operator-() const {
    Upoly r = *this;
    for (Rational& x : r.c_) x = -x;
    return r;
}

Upoly operator+(const Upoly& a, const Upoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Upoly(std::move(c));
}

Upoly operator-(const Upoly& a, const Upoly& b) { return a + (-b); }

Upoly operator*(const Upoly& a, const Upoly& b) {
    if (a.is_zero() || b.is_zero()) return Upoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Upoly(std::move(c));
}

Upoly Upoly::scaled(const Rational& k) const {
    Upoly r = *this;
    for (Rational& x : r.c_) x *= k;
    r.trim();
    return r;
}

Upoly Upoly::derivative() const {
    if (c_.size() <= 1) return Upoly();
    std::vector<Rational> c(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) c[k - 1] = c_[k] * Rational(static_cast<long>(k));
    return Upoly(std::move(c));
}

Upoly Upoly::monic() const {
    if (is_zero()) return *this;
    return scaled(lead().inverse());
}

std::pair<Upoly, Upoly> Upoly::divmod(const Upoly& d) const {
    if (d.is_zero()) throw algebra_error("Upoly: division by zero");
    Upoly r = *this;
    std::vector<Rational> q;
    int dd = d.degree();
    while (!r.is_zero() && r.degree() >= dd) {
        int k = r.degree() - dd;
        Rational f = r.lead() / d.lead();
        if (static_cast<int>(q.size()) <= k) q.resize(static_cast<std::size_t>(k) + 1, Rational(0));
        q[static_cast<std::size_t>(k)] += f;
        std::vector<Rational> sub(static_cast<std::size_t>(k) + 1, Rational(0));
        sub[static_cast<std::size_t>(k)] = f;
        r = r - Upoly(std::move(sub)) * d;
    }
    return {Upoly(std::move(q)), r};
}

std::string Upoly::str(const std::string& var) const { return to_multipoly(var).str(); }

Upoly gcd(const Upoly& a, const Upoly& b) {
    Upoly x = a, y = b;
    while (!y.is_zero()) {
        Upoly r = x.divmod(y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

bool is_squarefree(const Upoly& p) {
    if (p.degree() <= 0) return true;
    return gcd(p, p.derivative()).degree() == 0;
}

namespace {

// Representation of Q[x]/(denom) elements as vectors of length deg(denom).
std::vector<Rational> reduce_mod(const Upoly& p, const Upoly& denom) {
    Upoly r = p.divmod(denom).second;
    std::vector<Rational> v(static_cast<std::size_t>(denom.degree()), Rational(0));
    for (int k = 0; k <= r.degree(); ++k) v[static_cast<std::size_t>(k)] = r.coeff(static_cast<std::size_t>(k));
    return v;
}

Matrix<Rational> mult_matrix(const Upoly& g, const Upoly& denom) {
    const std::size_t n = static_cast<std::size_t>(denom.degree());
    Matrix<Rational> m(n, n, Rational(0));
    Upoly xk = Upoly::constant(Rational(1));
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> col = reduce_mod(g * xk, denom);
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = col[i];
        xk = xk * Upoly::x();
    }
    return m;
}

// Inverse of g modulo denom via extended Euclid; throws if not coprime.
Upoly inverse_mod(const Upoly& g, const Upoly& denom) {
    Upoly r0 = denom, r1 = g.divmod(denom).second;
    Upoly t0, t1 = Upoly::constant(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        Upoly t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.degree() != 0) throw algebra_error("inverse_mod: not invertible");
    return (t0.scaled(r0.lead().inverse())).divmod(denom).second;
}

}  // namespace

Rational residue_sum_at_roots_shifted(const Upoly& numer, const Upoly& denom, int shift) {
    if (denom.degree() < 1) throw algebra_error("residue_sum_at_roots: constant denominator");
    if (!is_squarefree(denom)) throw algebra_error("residue_sum_at_roots: denominator not squarefree");
    Upoly dprime = denom.derivative();
    Upoly g = numer.divmod(denom).second * inverse_mod(dprime, denom);
    if (shift > 0) {
        Upoly xs = Upoly::constant(Rational(1));
        for (int i = 0; i < shift; ++i) xs = xs * Upoly::x();
        g = g * xs;
    } else if (shift < 0) {
        if (denom.coeff(0).is_zero())
            throw algebra_error("residue_sum_at_roots: x not invertible mod denominator");
        Upoly xinv = inverse_mod(Upoly::x(), denom);
        for (int i = 0; i < -shift; ++i) g = g * xinv;
    }
    return mult_matrix(g.divmod(denom).second, denom).trace();
}

Rational residue_sum_at_roots(const Upoly& numer, const Upoly& denom) {
    return residue_sum_at_roots_shifted(numer, denom, 0);
}

Rational residue_sum_at_roots(const MultiPoly& numer, const MultiPoly& denom) {
    return residue_sum_at_roots(Upoly::from_multipoly(numer), Upoly::from_multipoly(denom));
}

RationalSeries expand_at_zero(const Upoly& numer, const Upoly& denom, int numer_shift, int trunc,
                              const std::string& var) {
    if (denom.is_zero()) throw algebra_error("expand_at_zero: zero denominator");
    // Split denom = x^k * dtil with dtil(0) != 0.
    int k = 0;
    Upoly dtil = denom;
    while (dtil.coeff(0).is_zero()) {
        std::vector<Rational> c(dtil.coeffs().begin() + 1, dtil.coeffs().end());
        dtil = Upoly(std::move(c));
        ++k;
    }
    int rel = trunc - numer_shift + k + 1;
    if (rel < 1) rel = 1;
    std::vector<Rational> dc(dtil.coeffs());
    RationalSeries ds(var, 0, dc, rel);
    std::vector<Rational> nc(numer.coeffs());
    if (nc.empty()) return RationalSeries::zero(var, Rational(0), trunc);
    RationalSeries ns(var, numer_shift, nc, numer_shift + static_cast<int>(nc.size()) + rel);
    return (ns * ds.inverse()).shifted(-k).truncated(trunc);
}

std::vector<Rational> char_poly(const Matrix<Rational>& a) {
    if (a.rows() != a.cols()) throw algebra_error("char_poly: not square");
    const std::size_t n = a.rows();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = Rational(1);
    Matrix<Rational> m(n, n, Rational(0));  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A*M_{k-1} + c_{n-k+1} * I
        Matrix<Rational> am = a * m;
        for (std::size_t i = 0; i < n; ++i) am.at(i, i) += c[n - k + 1];
        m = am;
        Matrix<Rational> prod = a * m;
        c[n - k] = -(prod.trace() / Rational(static_cast<long>(k)));
    }
    return c;
}

}  // namespace minifold
