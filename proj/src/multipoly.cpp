#include "minifold/multipoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace minifold {

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rational& c) {
    MultiPoly p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(Exponents(p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, const std::string& name, int exp) {
    MultiPoly p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e.at(p.var_index(name)) = exp;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, Exponents e, const Rational& c) {
    MultiPoly p(std::move(vars));
    if (e.size() != p.vars_.size()) throw algebra_error("MultiPoly::monomial: exponent arity");
    if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
    return p;
}

std::size_t MultiPoly::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    throw algebra_error("MultiPoly: unknown variable '" + name + "'");
}

void MultiPoly::check_same_ring(const MultiPoly& o, const char* op) const {
    if (vars_ != o.vars_)
        throw algebra_error(std::string("MultiPoly: variable list mismatch in ") + op);
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exponents& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw algebra_error("MultiPoly: not a constant");
    return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

int MultiPoly::degree_in(std::size_t var_index) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(var_index));
    return d;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != vars_.size()) throw algebra_error("MultiPoly::add_term: exponent arity");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same_ring(o, "+");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_same_ring(o, "-");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same_ring(b, "*");
    MultiPoly r(a.vars_);
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(vars_, Rational(1));
    MultiPoly base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

MultiPoly MultiPoly::partial(const std::string& var) const { return partial(var_index(var)); }

MultiPoly MultiPoly::partial(std::size_t vi) const {
    if (vi >= vars_.size()) throw algebra_error("MultiPoly::partial: bad index");
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[vi] == 0) continue;
        Exponents d = e;
        d[vi] -= 1;
        r.add_term(d, c * Rational(e[vi]));
    }
    return r;
}

MultiPoly MultiPoly::evaluated(const std::map<std::string, Rational>& values) const {
    std::vector<std::size_t> keep;
    std::vector<std::optional<Rational>> val(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = values.find(vars_[i]);
        if (it == values.end())
            keep.push_back(i);
        else
            val[i] = it->second;
    }
    std::vector<std::string> new_vars;
    for (std::size_t i : keep) new_vars.push_back(vars_[i]);
    MultiPoly r(new_vars);
    Exponents re(keep.size());
    for (const auto& [e, c] : terms_) {
        Rational k = c;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (val[i] && e[i] != 0) k *= val[i]->pow(e[i]);
        for (std::size_t j = 0; j < keep.size(); ++j) re[j] = e[keep[j]];
        r.add_term(re, k);
    }
    return r;
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& values) const {
    MultiPoly r = evaluated(values);
    if (!r.is_constant()) throw algebra_error("MultiPoly::evaluate: missing variable values");
    return r.constant_value();
}

MultiPoly MultiPoly::substituted(const std::vector<MultiPoly>& images) const {
    if (images.size() != vars_.size()) throw algebra_error("MultiPoly::substituted: arity");
    if (terms_.empty()) return images.empty() ? MultiPoly() : MultiPoly(images.front().vars());
    const std::vector<std::string>& tv = images.front().vars();
    MultiPoly r(tv);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = MultiPoly::constant(tv, c);
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (e[i] != 0) t = t * images[i].pow(static_cast<unsigned>(e[i]));
        r += t;
    }
    return r;
}

MultiPoly MultiPoly::embedded(const std::vector<std::string>& new_vars) const {
    std::vector<std::size_t> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
        if (it == new_vars.end())
            throw algebra_error("MultiPoly::embedded: missing variable '" + vars_[i] + "'");
        where[i] = static_cast<std::size_t>(it - new_vars.begin());
    }
    MultiPoly r(new_vars);
    Exponents re(new_vars.size());
    for (const auto& [e, c] : terms_) {
        std::fill(re.begin(), re.end(), 0);
        for (std::size_t i = 0; i < vars_.size(); ++i) re[where[i]] = e[i];
        r.add_term(re, c);
    }
    return r;
}

bool MultiPoly::depends_on(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return false;
    std::size_t vi = static_cast<std::size_t>(it - vars_.begin());
    for (const auto& [e, c] : terms_)
        if (e[vi] != 0) return true;
    return false;
}

Rational MultiPoly::content() const {
    if (terms_.empty()) return Rational(0);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    }
    Rational g{mpq_class(num_gcd, den_lcm)};
    if (terms_.begin()->second.sign() < 0) g = -g;
    return g;
}

std::optional<Rational> MultiPoly::quasi_degree(const std::vector<Rational>& weights) const {
    if (weights.size() != vars_.size()) throw algebra_error("quasi_degree: weight arity");
    std::optional<Rational> deg;
    for (const auto& [e, c] : terms_) {
        Rational d(0);
        for (std::size_t i = 0; i < e.size(); ++i) d += weights[i] * Rational(e[i]);
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg ? deg : std::optional<Rational>(Rational(0));
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print highest-degree terms first for readability.
    std::vector<const TermMap::value_type*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::stable_sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
        int da = 0, db = 0;
        for (int x : a->first) da += x;
        for (int x : b->first) db += x;
        if (da != db) return da > db;
        return a->first > b->first;
    });
    for (auto* t : ts) {
        const auto& [e, c] = *t;
        Rational a = c;
        if (!first)
            os << (a.sign() < 0 ? " - " : " + ");
        else if (a.sign() < 0)
            os << "-";
        first = false;
        a = a.abs();
        bool any_var = false;
        std::ostringstream mon;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            if (any_var) mon << "*";
            mon << vars_[i];
            if (e[i] != 1) mon << "^" << e[i];
            any_var = true;
        }
        if (!any_var) {
            os << a.str();
        } else if (a.is_one()) {
            os << mon.str();
        } else {
            os << a.str() << "*" << mon.str();
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

std::optional<MultiPoly> try_divide_exact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.vars() != b.vars()) throw algebra_error("try_divide_exact: variable list mismatch");
    MultiPoly rem = a;
    MultiPoly quot(a.vars());
    // Leading-term elimination in map order; if the division is exact this
    // terminates with zero remainder.
    const Exponents bl_exp = b.terms().rbegin()->first;
    const Rational bl_coef = b.terms().rbegin()->second;
    while (!rem.is_zero()) {
        const Exponents rl_exp = rem.terms().rbegin()->first;
        const Rational rl_coef = rem.terms().rbegin()->second;
        Exponents q(rl_exp.size());
        for (std::size_t i = 0; i < q.size(); ++i) {
            q[i] = rl_exp[i] - bl_exp[i];
            if (q[i] < 0) return std::nullopt;
        }
        MultiPoly m = MultiPoly::monomial(a.vars(), q, rl_coef / bl_coef);
        quot += m;
        rem -= m * b;
        if (!rem.is_zero() && rem.terms().rbegin()->first >= rl_exp) return std::nullopt;
    }
    return quot;
}

}  // namespace minifold
