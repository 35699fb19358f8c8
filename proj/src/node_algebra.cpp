#include "minifold/node_algebra.hpp"

namespace minifold {

std::vector<std::string> node_param_names(int p, int q) {
    std::vector<std::string> names;
    names.push_back("eps");
    for (int i = 1; i < p; ++i) names.push_back("a" + std::to_string(i));
    for (int i = 1; i < q; ++i) names.push_back("b" + std::to_string(i));
    names.push_back("c");
    return names;
}

NodeAlgebra::NodeAlgebra(int p, int q) : p_(p), q_(q) {
    if (p < 2 || q < 2) throw algebra_error("NodeAlgebra: need p, q >= 2");
    param_vars_ = node_param_names(p, q);
    ring_vars_ = {"x", "y"};
    for (const auto& v : param_vars_) ring_vars_.push_back(v);

    H_ = MultiPoly(ring_vars_);
    for (int i = 1; i < p; ++i)
        H_ += MultiPoly::variable(ring_vars_, "a" + std::to_string(i)) *
              MultiPoly::variable(ring_vars_, "x", i).scaled(Rational(i));
    H_ += MultiPoly::variable(ring_vars_, "x", p).scaled(Rational(p));
    for (int i = 1; i < q; ++i)
        H_ -= MultiPoly::variable(ring_vars_, "b" + std::to_string(i)) *
              MultiPoly::variable(ring_vars_, "y", i).scaled(Rational(i));
    H_ -= MultiPoly::variable(ring_vars_, "y", q).scaled(Rational(q));
    structure_constants();  // built eagerly; the algebra is immutable afterwards
}

MultiPoly NodeAlgebra::basis_monomial(std::size_t k) const {
    if (k == 0) return MultiPoly::constant(ring_vars_, Rational(1));
    if (k <= static_cast<std::size_t>(p_)) return MultiPoly::variable(ring_vars_, "x", static_cast<int>(k));
    std::size_t j = k - static_cast<std::size_t>(p_);
    if (j >= static_cast<std::size_t>(q_)) throw algebra_error("NodeAlgebra: basis index");
    return MultiPoly::variable(ring_vars_, "y", static_cast<int>(j));
}

std::string NodeAlgebra::basis_name(std::size_t k) const {
    if (k == 0) return "1";
    if (k <= static_cast<std::size_t>(p_))
        return k == 1 ? "x" : "x^" + std::to_string(k);
    std::size_t j = k - static_cast<std::size_t>(p_);
    return j == 1 ? "y" : "y^" + std::to_string(j);
}

void NodeAlgebra::reduce_map(std::map<std::pair<int, int>, MultiPoly>& m) const {
    auto param_var = [&](const std::string& name) { return MultiPoly::variable(param_vars_, name); };
    auto add = [&](int i, int j, const MultiPoly& coef) {
        if (coef.is_zero()) return;
        auto key = std::make_pair(i, j);
        auto it = m.find(key);
        if (it == m.end())
            m.emplace(key, coef);
        else {
            it->second += coef;
            if (it->second.is_zero()) m.erase(it);
        }
    };

    // Mixed monomials: x^i y^j -> eps^min(i,j) x^(i-m) y^(j-m).
    auto clear_mixed = [&]() {
        for (;;) {
            auto it = std::find_if(m.begin(), m.end(), [](const auto& t) {
                return t.first.first > 0 && t.first.second > 0;
            });
            if (it == m.end()) break;
            auto [ij, coef] = *it;
            m.erase(it);
            int mm = std::min(ij.first, ij.second);
            add(ij.first - mm, ij.second - mm, coef * param_var("eps").pow(static_cast<unsigned>(mm)));
        }
    };
    clear_mixed();

    // Powers x^(p+k), k >= 1, via x^k H = 0:
    //   p x^(p+k) = -sum l a_l x^(l+k) + sum l b_l x^k y^l + q x^k y^q.
    for (;;) {
        std::pair<int, int> worst{-1, -1};
        for (const auto& [ij, coef] : m)
            if (ij.second == 0 && ij.first > p_ && ij.first > worst.first) worst = ij;
        if (worst.first < 0) break;
        MultiPoly coef = m.at(worst);
        m.erase(worst);
        int k = worst.first - p_;
        MultiPoly f = coef.scaled(Rational(1, p_));
        for (int l = 1; l < p_; ++l)
            add(l + k, 0, -(f * param_var("a" + std::to_string(l)).scaled(Rational(l))));
        for (int l = 1; l < q_; ++l)
            add(k, l, f * param_var("b" + std::to_string(l)).scaled(Rational(l)));
        add(k, q_, f.scaled(Rational(q_)));
        clear_mixed();
        // Mixed clearing can reintroduce high pure y-powers only below q, and
        // x-powers strictly below worst.first, so this loop terminates.
    }

    // Powers y^(q+k), k >= 0, via y^k H = 0:
    //   q y^(q+k) = sum l a_l x^l y^k + p x^p y^k - sum l b_l y^(l+k).
    for (;;) {
        std::pair<int, int> worst{-1, -1};
        for (const auto& [ij, coef] : m)
            if (ij.first == 0 && ij.second >= q_ && ij.second > worst.second) worst = ij;
        if (worst.second < 0) break;
        MultiPoly coef = m.at(worst);
        m.erase(worst);
        int k = worst.second - q_;
        MultiPoly f = coef.scaled(Rational(1, q_));
        for (int l = 1; l < p_; ++l)
            add(l, k, f * param_var("a" + std::to_string(l)).scaled(Rational(l)));
        add(p_, k, f.scaled(Rational(p_)));
        for (int l = 1; l < q_; ++l)
            add(0, l + k, -(f * param_var("b" + std::to_string(l)).scaled(Rational(l))));
        clear_mixed();
    }
}

std::vector<MultiPoly> NodeAlgebra::normal_form(const MultiPoly& g) const {
    MultiPoly gg = g.vars() == ring_vars_ ? g : g.embedded(ring_vars_);
    // Split into (x-degree, y-degree) buckets with parameter-polynomial coefficients.
    std::map<std::pair<int, int>, MultiPoly> m;
    for (const auto& [e, c] : gg.terms()) {
        Exponents pe(param_vars_.size());
        for (std::size_t i = 2; i < e.size(); ++i) pe[i - 2] = e[i];
        auto key = std::make_pair(e[0], e[1]);
        auto it = m.find(key);
        if (it == m.end()) it = m.emplace(key, MultiPoly(param_vars_)).first;
        it->second.add_term(pe, c);
        if (it->second.is_zero()) m.erase(it);
    }
    reduce_map(m);

    std::vector<MultiPoly> out(dim(), MultiPoly(param_vars_));
    for (const auto& [ij, coef] : m) {
        auto [i, j] = ij;
        if (j == 0 && i <= p_)
            out[static_cast<std::size_t>(i)] += coef;
        else if (i == 0 && j >= 1 && j < q_)
            out[static_cast<std::size_t>(p_ + j)] += coef;
        else
            throw algebra_error("NodeAlgebra: reduction left a non-basis monomial");
    }
    return out;
}

const std::vector<std::vector<std::vector<MultiPoly>>>& NodeAlgebra::structure_constants() const {
    if (!sc_.empty()) return sc_;
    const std::size_t n = dim();
    sc_.assign(n, std::vector<std::vector<MultiPoly>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            std::vector<MultiPoly> nf = normal_form(basis_monomial(i) * basis_monomial(j));
            sc_[i][j] = nf;
            sc_[j][i] = std::move(nf);
        }
    return sc_;
}

std::vector<MultiPoly> NodeAlgebra::multiply(const std::vector<MultiPoly>& u,
                                             const std::vector<MultiPoly>& v) const {
    const auto& c = structure_constants();
    const std::size_t n = dim();
    if (u.size() != n || v.size() != n) throw algebra_error("NodeAlgebra::multiply: arity");
    std::vector<MultiPoly> w(n, MultiPoly(param_vars_));
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j].is_zero()) continue;
            MultiPoly uv = u[i] * v[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!c[i][j][k].is_zero()) w[k] += uv * c[i][j][k];
        }
    }
    return w;
}

}  // namespace minifold
