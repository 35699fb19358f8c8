#include "minifold/groebner.hpp"

#include <algorithm>
#include <deque>

#include "minifold/linalg.hpp"

namespace minifold {

bool grevlex_greater(const Exponents& a, const Exponents& b) {
    int da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

bool monomial_divides(const Exponents& d, const Exponents& m) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

namespace {

int total_deg(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

Exponents leading_exponent(const MultiPoly& p) {
    const auto& terms = p.terms();
    auto it = terms.begin();
    Exponents best = it->first;
    for (++it; it != terms.end(); ++it)
        if (grevlex_greater(it->first, best)) best = it->first;
    return best;
}

// Scale to integer coefficients with content 1 and positive leading coefficient.
MultiPoly primitive(const MultiPoly& p) {
    if (p.is_zero()) return p;
    MultiPoly q = p.scaled(p.content().inverse());
    Exponents lt = leading_exponent(q);
    if (q.coeff(lt).sign() < 0) q = -q;
    return q;
}

struct WorkPoly {
    MultiPoly poly;
    Exponents lt;
    int deg;
};

WorkPoly make_work(const MultiPoly& p) {
    MultiPoly q = primitive(p);
    Exponents lt = leading_exponent(q);
    return WorkPoly{q, lt, total_deg(lt)};
}

MultiPoly reduce_against(const MultiPoly& input, const std::vector<WorkPoly>& basis, int degree_cap) {
    MultiPoly rem(input.vars());
    MultiPoly cur = input;
    while (!cur.is_zero()) {
        Exponents lt = leading_exponent(cur);
        if (total_deg(lt) > degree_cap)
            throw certificate_error("groebner: degree cap exceeded during reduction", degree_cap);
        bool reduced = false;
        for (const WorkPoly& g : basis) {
            if (!monomial_divides(g.lt, lt)) continue;
            Exponents shift(lt.size());
            for (std::size_t i = 0; i < lt.size(); ++i) shift[i] = lt[i] - g.lt[i];
            Rational f = cur.coeff(lt) / g.poly.coeff(g.lt);
            cur -= g.poly * MultiPoly::monomial(cur.vars(), shift, f);
            reduced = true;
            break;
        }
        if (!reduced) {
            Rational c = cur.coeff(lt);
            rem.add_term(lt, c);
            cur.add_term(lt, -c);
        }
    }
    return rem;
}

}  // namespace

GroebnerBasis::GroebnerBasis(const std::vector<MultiPoly>& gens, int degree_cap) {
    if (gens.empty()) throw algebra_error("GroebnerBasis: no generators");
    vars_ = gens.front().vars();
    std::vector<WorkPoly> basis;
    for (const MultiPoly& g : gens) {
        if (g.vars() != vars_) throw algebra_error("GroebnerBasis: mixed rings");
        if (g.is_zero()) continue;
        basis.push_back(make_work(g));
    }
    if (basis.empty()) throw algebra_error("GroebnerBasis: all generators zero");

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    std::size_t steps = 0;
    while (!pairs.empty()) {
        if (++steps > 200000)
            throw certificate_error("groebner: pair budget exceeded", degree_cap);
        auto [i, j] = pairs.front();
        pairs.pop_front();
        const WorkPoly& a = basis[i];
        const WorkPoly& b = basis[j];
        // product criterion: coprime leading terms give a reducible S-poly
        bool coprime = true;
        Exponents lcm(a.lt.size());
        for (std::size_t k = 0; k < lcm.size(); ++k) {
            lcm[k] = std::max(a.lt[k], b.lt[k]);
            if (a.lt[k] > 0 && b.lt[k] > 0) coprime = false;
        }
        if (coprime) continue;
        if (total_deg(lcm) > degree_cap)
            throw certificate_error("groebner: degree cap exceeded", degree_cap);
        Exponents sa(lcm.size()), sb(lcm.size());
        for (std::size_t k = 0; k < lcm.size(); ++k) {
            sa[k] = lcm[k] - a.lt[k];
            sb[k] = lcm[k] - b.lt[k];
        }
        MultiPoly s = a.poly * MultiPoly::monomial(vars_, sa, b.poly.coeff(b.lt)) -
                      b.poly * MultiPoly::monomial(vars_, sb, a.poly.coeff(a.lt));
        MultiPoly nf = reduce_against(s, basis, degree_cap);
        if (nf.is_zero()) continue;
        basis.push_back(make_work(nf));
        for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
    }

    // Interreduce: drop elements whose LT is divisible by an earlier kept LT,
    // then fully reduce each against the rest.
    std::sort(basis.begin(), basis.end(),
              [](const WorkPoly& a, const WorkPoly& b) { return grevlex_greater(b.lt, a.lt); });
    std::vector<WorkPoly> minimal;
    for (const WorkPoly& w : basis) {
        bool redundant = false;
        for (const WorkPoly& m : minimal)
            if (monomial_divides(m.lt, w.lt)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(w);
    }
    std::vector<WorkPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<WorkPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly nf = others.empty() ? minimal[i].poly
                                      : reduce_against(minimal[i].poly, others, degree_cap);
        if (!nf.is_zero()) reduced.push_back(make_work(nf));
    }
    std::sort(reduced.begin(), reduced.end(),
              [](const WorkPoly& a, const WorkPoly& b) { return grevlex_greater(b.lt, a.lt); });
    for (WorkPoly& w : reduced) basis_.push_back(std::move(w.poly));
}

std::vector<Exponents> GroebnerBasis::leading_exponents() const {
    std::vector<Exponents> lts;
    for (const MultiPoly& g : basis_) lts.push_back(leading_exponent(g));
    return lts;
}

MultiPoly GroebnerBasis::reduce(const MultiPoly& p) const {
    if (p.vars() != vars_) throw algebra_error("GroebnerBasis::reduce: ring mismatch");
    std::vector<WorkPoly> ws;
    for (const MultiPoly& g : basis_) ws.push_back(make_work(g));
    return reduce_against(p, ws, 1 << 20);
}

QuotientBasis quotient_dimension(const std::vector<MultiPoly>& gens, int D) {
    if (gens.empty()) throw algebra_error("quotient_dimension: no generators");
    GroebnerBasis gb(gens, std::max(2 * D + 8, 24));
    std::vector<Exponents> lts = gb.leading_exponents();
    const std::size_t nv = gens.front().vars().size();

    // Unit ideal: the quotient is zero-dimensional as a vector space.
    for (const MultiPoly& g : gb.elements())
        if (g.is_constant() && !g.is_zero()) {
            QuotientBasis out;
            out.certificate.assign(nv, 0);
            return out;
        }

    QuotientBasis out;
    out.certificate.assign(nv, -1);
    for (std::size_t v = 0; v < nv; ++v) {
        for (const Exponents& lt : lts) {
            bool pure = true;
            for (std::size_t w = 0; w < nv; ++w)
                if (w != v && lt[w] != 0) pure = false;
            if (pure && lt[v] > 0) {
                if (out.certificate[v] < 0 || lt[v] < out.certificate[v])
                    out.certificate[v] = lt[v];
            }
        }
        if (out.certificate[v] < 0 || out.certificate[v] > D)
            throw certificate_error(
                "quotient_dimension: no pure power of variable '" +
                    gens.front().vars()[v] + "' of degree <= " + std::to_string(D) +
                    " in the leading-term ideal",
                D);
    }

    // Enumerate standard monomials inside the certificate box.
    std::vector<Exponents> std_mons;
    Exponents e(nv, 0);
    for (;;) {
        bool in_lt = false;
        for (const Exponents& lt : lts)
            if (monomial_divides(lt, e)) {
                in_lt = true;
                break;
            }
        if (!in_lt) std_mons.push_back(e);
        std::size_t k = 0;
        while (k < nv) {
            if (++e[k] < out.certificate[k]) break;
            e[k] = 0;
            ++k;
        }
        if (k == nv) break;
    }
    std::sort(std_mons.begin(), std_mons.end(),
              [](const Exponents& a, const Exponents& b) { return grevlex_greater(b, a); });
    out.standard_monomials = std::move(std_mons);
    out.dimension = static_cast<int>(out.standard_monomials.size());
    return out;
}

QuotientBasis quotient_dimension_retry(const std::vector<MultiPoly>& gens, int D) {
    try {
        return quotient_dimension(gens, D);
    } catch (const certificate_error&) {
        return quotient_dimension(gens, 2 * D);
    }
}

int macaulay_quotient_count(const std::vector<MultiPoly>& gens, int D) {
    if (gens.empty()) throw algebra_error("macaulay_quotient_count: no generators");
    const auto& vars = gens.front().vars();
    const std::size_t nv = vars.size();
    // all monomials of degree <= D
    std::vector<Exponents> mons;
    Exponents e(nv, 0);
    for (;;) {
        if (total_deg(e) <= D) mons.push_back(e);
        std::size_t k = 0;
        while (k < nv) {
            if (++e[k] <= D && total_deg(e) <= D) break;
            e[k] = 0;
            ++k;
        }
        if (k == nv) break;
    }
    std::sort(mons.begin(), mons.end(),
              [](const Exponents& a, const Exponents& b) { return grevlex_greater(a, b); });
    std::map<Exponents, std::size_t> col;
    for (std::size_t i = 0; i < mons.size(); ++i) col[mons[i]] = i;

    std::vector<std::vector<Rational>> rows;
    for (const MultiPoly& g : gens) {
        if (g.is_zero()) continue;
        int dg = g.total_degree();
        for (const Exponents& m : mons) {
            if (total_deg(m) + dg > D) continue;
            std::vector<Rational> row(mons.size(), Rational(0));
            for (const auto& [ge, gc] : g.terms()) {
                Exponents prod(nv);
                for (std::size_t i = 0; i < nv; ++i) prod[i] = ge[i] + m[i];
                row[col.at(prod)] = gc;
            }
            rows.push_back(std::move(row));
        }
    }
    Matrix<Rational> mat(rows.size(), mons.size(), Rational(0));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < mons.size(); ++j) mat.at(i, j) = rows[i][j];
    Echelon<Rational> ech = echelonize(mat);
    return static_cast<int>(mons.size() - ech.rank);
}

}  // namespace minifold
