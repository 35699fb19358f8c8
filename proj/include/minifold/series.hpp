#ifndef MINIFOLD_SERIES_HPP
#define MINIFOLD_SERIES_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "minifold/multipoly.hpp"
#include "minifold/rational.hpp"

namespace minifold {

struct truncation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coefficient-ring hooks. K must support +, -, *, unary -, ==.
template <class K>
struct ring_ops;

template <>
struct ring_ops<Rational> {
    static Rational zero(const Rational&) { return Rational(0); }
    static Rational one(const Rational&) { return Rational(1); }
    static bool is_zero(const Rational& a) { return a.is_zero(); }
    static bool is_one(const Rational& a) { return a.is_one(); }
    static Rational div(const Rational& a, const Rational& b) { return a / b; }
    static Rational div_int(const Rational& a, long n) { return a / Rational(n); }
    static Rational mul_rat(const Rational& a, const Rational& r) { return a * r; }
};

template <>
struct ring_ops<MultiPoly> {
    static MultiPoly zero(const MultiPoly& proto) { return MultiPoly(proto.vars()); }
    static MultiPoly one(const MultiPoly& proto) {
        return MultiPoly::constant(proto.vars(), Rational(1));
    }
    static bool is_zero(const MultiPoly& a) { return a.is_zero(); }
    static bool is_one(const MultiPoly& a) { return a.is_constant() && a.constant_value().is_one(); }
    static MultiPoly div(const MultiPoly& a, const MultiPoly& b) {
        if (b.is_constant()) return a.scaled(b.constant_value().inverse());
        auto q = try_divide_exact(a, b);
        if (!q) throw algebra_error("series: inexact coefficient division");
        return *q;
    }
    static MultiPoly div_int(const MultiPoly& a, long n) { return a.scaled(Rational(1, n)); }
    static MultiPoly mul_rat(const MultiPoly& a, const Rational& r) { return a.scaled(r); }
};

// Truncated Laurent series in one variable: coefficients for exponents
// low .. trunc-1 are known exactly; asking at or beyond trunc throws.
template <class K>
class TruncSeries {
  public:
    using Ops = ring_ops<K>;

    TruncSeries(std::string var, int low, std::vector<K> coeffs, int trunc)
        : var_(std::move(var)), low_(low), coeffs_(std::move(coeffs)), trunc_(trunc) {
        if (coeffs_.empty()) throw algebra_error("TruncSeries: need at least one coefficient");
        proto_ = Ops::zero(coeffs_.front());
        if (low_ + static_cast<int>(coeffs_.size()) > trunc_)
            coeffs_.resize(static_cast<std::size_t>(std::max(0, trunc_ - low_)));
        normalize();
    }

    static TruncSeries zero(std::string var, const K& proto, int trunc) {
        TruncSeries s(std::move(var), 0, {proto}, trunc);
        s.coeffs_.clear();
        s.low_ = trunc;
        s.proto_ = Ops::zero(proto);
        return s;
    }
    static TruncSeries monomial(std::string var, int exp, const K& c, int trunc) {
        return TruncSeries(std::move(var), exp, std::vector<K>{c}, trunc);
    }

    const std::string& var() const { return var_; }
    int low() const { return low_; }
    int trunc() const { return trunc_; }
    bool is_zero() const { return coeffs_.empty(); }
    const K& prototype() const { return proto_; }

    // Exponent of the first possibly-nonzero coefficient.
    int valuation() const { return coeffs_.empty() ? trunc_ : low_; }

    K coeff(int k) const {
        if (k >= trunc_)
            throw truncation_error("TruncSeries: coefficient " + std::to_string(k) +
                                   " beyond truncation order " + std::to_string(trunc_));
        if (k < low_ || k >= low_ + static_cast<int>(coeffs_.size())) return proto_;
        return coeffs_[static_cast<std::size_t>(k - low_)];
    }

    TruncSeries truncated(int new_trunc) const {
        TruncSeries r = *this;
        r.trunc_ = std::min(trunc_, new_trunc);
        r.normalize();
        return r;
    }

    TruncSeries shifted(int k) const {  // multiply by var^k
        TruncSeries r = *this;
        r.low_ += k;
        r.trunc_ += k;
        return r;
    }

    TruncSeries operator-() const {
        TruncSeries r = *this;
        for (K& c : r.coeffs_) c = -c;
        return r;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        a.check(b);
        int trunc = std::min(a.trunc_, b.trunc_);
        int low = std::min(a.valuation(), b.valuation());
        low = std::min(low, trunc);
        std::vector<K> cs(static_cast<std::size_t>(trunc - low), Ops::zero(a.proto_));
        for (int k = low; k < trunc; ++k) {
            K v = Ops::zero(a.proto_);
            if (k >= a.valuation() && k < a.trunc_) v = v + a.coeff(k);
            if (k >= b.valuation() && k < b.trunc_) v = v + b.coeff(k);
            cs[static_cast<std::size_t>(k - low)] = v;
        }
        return make(a.var_, low, std::move(cs), trunc, a.proto_);
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.check(b);
        int la = a.valuation(), lb = b.valuation();
        int trunc = std::min(a.trunc_ + lb, b.trunc_ + la);
        int low = la + lb;
        if (low >= trunc || a.is_zero() || b.is_zero()) {
            TruncSeries z = zero(a.var_, a.proto_, trunc);
            return z;
        }
        std::vector<K> cs(static_cast<std::size_t>(trunc - low), Ops::zero(a.proto_));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (Ops::is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                int e = a.low_ + static_cast<int>(i) + b.low_ + static_cast<int>(j);
                if (e >= trunc) break;
                std::size_t idx = static_cast<std::size_t>(e - low);
                cs[idx] = cs[idx] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return make(a.var_, low, std::move(cs), trunc, a.proto_);
    }

    TruncSeries scaled(const K& c) const {
        TruncSeries r = *this;
        for (K& x : r.coeffs_) x = x * c;
        r.normalize();
        return r;
    }

    TruncSeries pow(unsigned e) const {
        int v = valuation();
        int rel = trunc_ - v;  // relative precision is preserved under powers
        if (e == 0) return monomial(var_, 0, Ops::one(proto_), std::max(rel, 1));
        if (is_zero()) return zero(var_, proto_, static_cast<int>(e) * v + rel);
        TruncSeries r = monomial(var_, 0, Ops::one(proto_), 1 << 28);
        TruncSeries base = *this;
        unsigned k = e;
        while (true) {
            if (k & 1u) r = r * base;
            k >>= 1u;
            if (!k) break;
            base = base * base;
        }
        return r;
    }

    // Multiplicative inverse; the lowest coefficient must be a unit.
    TruncSeries inverse() const {
        if (is_zero()) throw algebra_error("TruncSeries: inverse of zero series");
        int l = low_;
        const K& lead = coeffs_.front();
        int n = trunc_ - l;  // known length of the unit part
        std::vector<K> u(static_cast<std::size_t>(n), Ops::zero(proto_));
        K inv_lead = Ops::div(Ops::one(proto_), lead);
        u[0] = inv_lead;
        for (int k = 1; k < n; ++k) {
            K s = Ops::zero(proto_);
            for (int i = 1; i <= k; ++i) {
                const K a_i = coeff(l + i);
                if (!Ops::is_zero(a_i)) s = s + a_i * u[static_cast<std::size_t>(k - i)];
            }
            u[static_cast<std::size_t>(k)] = -(s * inv_lead);
        }
        return make(var_, -l, std::move(u), trunc_ - 2 * l, proto_);
    }

    // log of a series with constant term 1 (zero constant term in the result).
    TruncSeries log() const {
        require_one_at_zero("series_log");
        TruncSeries d = derivative();
        TruncSeries q = d * inverse();  // s'/s, a power series
        return q.integral();
    }

    // exp of a series with zero constant term.
    TruncSeries exp() const {
        if (valuation() < 1 && !is_zero())
            throw algebra_error("series_exp: nonzero constant term");
        int n = trunc_;
        if (n <= 0) return zero(var_, proto_, n);
        std::vector<K> e(static_cast<std::size_t>(n), Ops::zero(proto_));
        e[0] = Ops::one(proto_);
        for (int k = 1; k < n; ++k) {
            K s = Ops::zero(proto_);
            for (int j = 1; j <= k; ++j) {
                K lj = j < trunc_ ? coeff(j) : proto_;
                if (!Ops::is_zero(lj)) s = s + Ops::mul_rat(lj, Rational(j)) * e[static_cast<std::size_t>(k - j)];
            }
            e[static_cast<std::size_t>(k)] = Ops::div_int(s, k);
        }
        return make(var_, 0, std::move(e), n, proto_);
    }

    // n-th root of a series with constant term 1, by Newton iteration on the
    // inverse root y = s^{-1/n}:  y <- y*((n+1) - s*y^n)/n.
    TruncSeries nth_root(unsigned n) const {
        if (n == 0) throw algebra_error("series_nth_root: n = 0");
        require_one_at_zero("series_nth_root");
        int target = trunc_;
        TruncSeries y = monomial(var_, 0, Ops::one(proto_), 1);
        int prec = 1;
        while (prec < target) {
            prec = std::min(2 * prec, target);
            TruncSeries yk = make_copy(y, prec);
            TruncSeries t = truncated(prec) * yk.pow(n);
            TruncSeries np1 = monomial(var_, 0, Ops::one(proto_), prec).scaled_rat(Rational(static_cast<long>(n) + 1));
            y = (yk * (np1 - t)).scaled_rat(Rational(1, static_cast<long>(n))).truncated(prec);
        }
        // s^{1/n} = s * y^{n-1}
        return (truncated(target) * y.pow(n - 1)).truncated(target);
    }

    // Substitution a(b); requires a Laurent-free a (low >= 0) and val(b) >= 1.
    TruncSeries compose(const TruncSeries& inner) const {
        if (valuation() < 0) throw algebra_error("series_compose: outer has a pole");
        if (inner.valuation() < 1)
            throw algebra_error("series_compose: inner valuation must be >= 1");
        int bl = std::max(1, inner.valuation());
        int trunc = std::min(inner.trunc_, trunc_ * bl);
        TruncSeries r = zero(inner.var_, proto_, trunc);
        // Horner from the top stored coefficient all the way down to the
        // constant term (absent coefficients are exact zeros).
        for (int k = std::min(trunc_, low_ + static_cast<int>(coeffs_.size())) - 1; k >= 0; --k) {
            r = r * inner.truncated(trunc);
            K c = k >= low_ ? coeff(k) : proto_;
            if (!Ops::is_zero(c)) r = r + monomial(inner.var_, 0, c, trunc);
        }
        return r.truncated(trunc);
    }

    // Compositional inverse of a = c1*w + ..., c1 a unit.
    TruncSeries reversion() const {
        if (valuation() != 1) throw algebra_error("series_reversion: valuation must be exactly 1");
        K c1 = coeff(1);
        if (Ops::is_zero(c1)) throw algebra_error("series_reversion: zero linear term");
        int n = trunc_;
        K ic1 = Ops::div(Ops::one(proto_), c1);
        std::vector<K> g(static_cast<std::size_t>(std::max(0, n - 1)), Ops::zero(proto_));
        if (n <= 1) return zero(var_, proto_, n);
        g[0] = ic1;
        for (int k = 2; k < n; ++k) {
            TruncSeries gk(var_, 1, std::vector<K>(g.begin(), g.begin() + (k - 1)), k);
            TruncSeries comp = truncated(k + 1).compose(gk.padded(k + 1));
            K bad = comp.trunc() > k ? comp.coeff(k) : Ops::zero(proto_);
            g[static_cast<std::size_t>(k - 1)] = -(bad * ic1);
        }
        return make(var_, 1, std::move(g), n, proto_);
    }

    // Coefficient of var^{-1}; errors if that is not determined.
    K residue() const {
        if (trunc_ <= -1) throw truncation_error("residue: truncation excludes exponent -1");
        return coeff(-1);
    }

    TruncSeries derivative() const {
        std::vector<K> cs;
        cs.reserve(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            int e = low_ + static_cast<int>(i);
            cs.push_back(Ops::mul_rat(coeffs_[i], Rational(e)));
        }
        if (cs.empty()) return zero(var_, proto_, trunc_ - 1);
        return make(var_, low_ - 1, std::move(cs), trunc_ - 1, proto_);
    }

    // Term-by-term antiderivative with zero constant; requires no var^{-1} term.
    TruncSeries integral() const {
        if (low_ <= -1 && !Ops::is_zero(coeff(-1)))
            throw algebra_error("series_integral: nonzero residue term");
        std::vector<K> cs;
        cs.reserve(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            int e = low_ + static_cast<int>(i);
            cs.push_back(e == -1 ? Ops::zero(proto_) : Ops::div_int(coeffs_[i], e + 1));
        }
        if (cs.empty()) return zero(var_, proto_, trunc_ + 1);
        return make(var_, low_ + 1, std::move(cs), trunc_ + 1, proto_);
    }

    TruncSeries padded(int new_trunc) const {  // assert-extend: claims zeros up to new_trunc
        TruncSeries r = *this;
        r.trunc_ = std::max(trunc_, new_trunc);
        return r;
    }

    TruncSeries scaled_rat(const Rational& c) const {
        TruncSeries r = *this;
        for (K& x : r.coeffs_) x = Ops::mul_rat(x, c);
        r.normalize();
        return r;
    }

    std::string str() const;

  private:
    std::string var_;
    int low_ = 0;
    std::vector<K> coeffs_;
    int trunc_ = 0;
    K proto_{};

    static TruncSeries make(std::string var, int low, std::vector<K> cs, int trunc, const K& proto) {
        TruncSeries s = zero(var, proto, trunc);
        s.low_ = low;
        s.coeffs_ = std::move(cs);
        s.normalize();
        return s;
    }
    static TruncSeries make_copy(const TruncSeries& s, int trunc) { return s.padded(trunc); }

    void normalize() {
        while (!coeffs_.empty() && Ops::is_zero(coeffs_.front())) {
            coeffs_.erase(coeffs_.begin());
            ++low_;
        }
        int keep = trunc_ - low_;
        if (keep < 0) keep = 0;
        if (static_cast<int>(coeffs_.size()) > keep)
            coeffs_.resize(static_cast<std::size_t>(keep));
        while (!coeffs_.empty() && Ops::is_zero(coeffs_.back())) coeffs_.pop_back();
        if (coeffs_.empty()) low_ = trunc_;
    }

    void check(const TruncSeries& o) const {
        if (var_ != o.var_) throw algebra_error("TruncSeries: variable mismatch");
    }

    void require_one_at_zero(const char* who) const {
        if (valuation() < 0)
            throw algebra_error(std::string(who) + ": series has a pole");
        if (is_zero() || valuation() != 0 || !Ops::is_one(coeffs_.front()))
            throw algebra_error(std::string(who) + ": leading coefficient is not 1");
    }
};

template <class K>
std::string TruncSeries<K>::str() const {
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (Ops::is_zero(coeffs_[i])) continue;
        if (!s.empty()) s += " + ";
        int e = low_ + static_cast<int>(i);
        if constexpr (std::is_same_v<K, Rational>) {
            s += coeffs_[i].str();
        } else {
            s += "(" + coeffs_[i].str() + ")";
        }
        if (e != 0) s += "*" + var_ + "^" + std::to_string(e);
    }
    if (s.empty()) s = "0";
    s += " + O(" + var_ + "^" + std::to_string(trunc_) + ")";
    return s;
}

using RationalSeries = TruncSeries<Rational>;
using PolySeries = TruncSeries<MultiPoly>;

}  // namespace minifold

#endif
