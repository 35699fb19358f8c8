#include "minifold/ratfunc.hpp"

namespace minifold {

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.vars() != den_.vars())
        throw algebra_error("RationalFunction: variable list mismatch");
    if (den_.is_zero()) throw algebra_error("RationalFunction: zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(num_.vars(), Rational(1));
        return;
    }
    if (auto q = try_divide_exact(num_, den_)) {
        num_ = std::move(*q);
        den_ = MultiPoly::constant(num_.vars(), Rational(1));
    } else if (auto qd = try_divide_exact(den_, num_)) {
        // num divides den: reduce to constant numerator.
        den_ = std::move(*qd);
        num_ = MultiPoly::constant(num_.vars(), Rational(1));
    }
    // Cancel common monomial factors.
    Exponents mgcd;
    bool first = true;
    auto fold = [&](const MultiPoly& p) {
        for (const auto& [e, c] : p.terms()) {
            if (first) {
                mgcd = e;
                first = false;
            } else {
                for (std::size_t i = 0; i < mgcd.size(); ++i) mgcd[i] = std::min(mgcd[i], e[i]);
            }
        }
    };
    fold(num_);
    fold(den_);
    bool nontrivial = false;
    for (int x : mgcd) nontrivial = nontrivial || x > 0;
    if (nontrivial) {
        auto strip = [&](const MultiPoly& p) {
            MultiPoly r(p.vars());
            Exponents e2(mgcd.size());
            for (const auto& [e, c] : p.terms()) {
                for (std::size_t i = 0; i < e2.size(); ++i) e2[i] = e[i] - mgcd[i];
                r.add_term(e2, c);
            }
            return r;
        };
        num_ = strip(num_);
        den_ = strip(den_);
    }
    Rational c = den_.content();
    num_ = num_.scaled(c.inverse());
    den_ = den_.scaled(c.inverse());
}

MultiPoly RationalFunction::as_polynomial() const {
    if (!den_.is_constant()) throw algebra_error("RationalFunction: not a polynomial");
    return num_.scaled(den_.constant_value().inverse());
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw algebra_error("RationalFunction: division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw algebra_error("RationalFunction: inverse of zero");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::partial(const std::string& var) const {
    // (n/d)' = (n'd - n d')/d^2
    return RationalFunction(num_.partial(var) * den_ - num_ * den_.partial(var), den_ * den_);
}

Rational RationalFunction::evaluate(const std::map<std::string, Rational>& values) const {
    Rational d = den_.evaluate(values);
    if (d.is_zero()) throw algebra_error("RationalFunction: pole at evaluation point");
    return num_.evaluate(values) / d;
}

RationalFunction RationalFunction::evaluated(const std::map<std::string, Rational>& values) const {
    MultiPoly d = den_.evaluated(values);
    if (d.is_zero()) throw algebra_error("RationalFunction: pole at evaluation point");
    return RationalFunction(num_.evaluated(values), d);
}

std::string RationalFunction::str() const {
    if (is_polynomial()) return as_polynomial().str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace minifold
