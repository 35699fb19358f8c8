#include "minifold/mf_module.hpp"

#include <algorithm>
#include <functional>

#include "minifold/linalg.hpp"

namespace minifold {

namespace {

std::vector<Exponents> monomials_up_to(std::size_t nvars, int deg) {
    std::vector<Exponents> mons;
    Exponents e(nvars, 0);
    for (;;) {
        int t = 0;
        for (int x : e) t += x;
        if (t <= deg) mons.push_back(e);
        std::size_t k = 0;
        while (k < nvars) {
            ++e[k];
            int td = 0;
            for (int x : e) td += x;
            if (e[k] <= deg && td <= deg) break;
            e[k] = 0;
            ++k;
        }
        if (k == nvars) break;
    }
    return mons;
}

}  // namespace

QuotientBasis compute_Mf_spacecurve(const DeterminantalCurveFamily& fam, int degree_bound) {
    int D = degree_bound > 0 ? degree_bound : fam.p + fam.q + fam.r + 3;
    std::vector<MultiPoly> gens = fam.minors();
    for (const VectorFieldPoly& v : curve_tangent_fields(fam, false)) {
        MultiPoly der = v.apply(fam.f);
        if (!der.is_zero()) gens.push_back(der);
    }
    return quotient_dimension_retry(gens, D);
}

QuotientBasis compute_Mf_icis(const ICISFamily& fam, int degree_bound) {
    const std::size_t nk = fam.vars.size();
    const std::size_t k = fam.g.size();
    std::vector<MultiPoly> gens = fam.g;

    // Maximal minors of the (k+1) x (n+k) Jacobian of (f, g_1..g_k): these
    // are the derivatives of f along the relative fields.
    std::vector<std::vector<MultiPoly>> jac;
    {
        std::vector<MultiPoly> row;
        for (const auto& v : fam.vars) row.push_back(fam.f.partial(v));
        jac.push_back(std::move(row));
    }
    for (const auto& gi : fam.g) {
        std::vector<MultiPoly> row;
        for (const auto& v : fam.vars) row.push_back(gi.partial(v));
        jac.push_back(std::move(row));
    }
    const std::size_t m = k + 1;
    if (m > nk) throw algebra_error("compute_Mf_icis: too many equations");
    std::vector<std::size_t> sel(m);
    for (std::size_t i = 0; i < m; ++i) sel[i] = i;
    for (;;) {
        // determinant of jac restricted to columns sel
        std::vector<std::vector<MultiPoly>> sub;
        for (std::size_t r = 0; r < m; ++r) {
            std::vector<MultiPoly> row;
            for (std::size_t c = 0; c < m; ++c) row.push_back(jac[r][sel[c]]);
            sub.push_back(std::move(row));
        }
        // Laplace along the first row
        std::function<MultiPoly(const std::vector<std::vector<MultiPoly>>&)> det =
            [&](const std::vector<std::vector<MultiPoly>>& mm) -> MultiPoly {
            if (mm.size() == 1) return mm[0][0];
            MultiPoly d(mm[0][0].vars());
            for (std::size_t c = 0; c < mm.size(); ++c) {
                if (mm[0][c].is_zero()) continue;
                std::vector<std::vector<MultiPoly>> s2;
                for (std::size_t i = 1; i < mm.size(); ++i) {
                    std::vector<MultiPoly> row;
                    for (std::size_t j = 0; j < mm.size(); ++j)
                        if (j != c) row.push_back(mm[i][j]);
                    s2.push_back(std::move(row));
                }
                MultiPoly t = mm[0][c] * det(s2);
                if (c % 2 == 1) t = -t;
                d += t;
            }
            return d;
        };
        MultiPoly dd = det(sub);
        if (!dd.is_zero()) gens.push_back(dd);
        std::size_t i = m;
        bool advanced = false;
        while (i-- > 0) {
            if (sel[i] + (m - 1 - i) < nk - 1) {
                ++sel[i];
                for (std::size_t j = i + 1; j < m; ++j) sel[j] = sel[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }

    int total_deg = fam.f.total_degree();
    for (const auto& gi : fam.g) total_deg += gi.total_degree();
    int D = degree_bound > 0 ? degree_bound : total_deg + 3;
    return quotient_dimension_retry(gens, D);
}

QuotientBasis compute_Mf_node(int p, int q) {
    std::vector<std::string> xy{"x", "y"};
    MultiPoly rel = MultiPoly::variable(xy, "x", p).scaled(Rational(p)) -
                    MultiPoly::variable(xy, "y", q).scaled(Rational(q));
    std::vector<MultiPoly> gens{MultiPoly::variable(xy, "x") * MultiPoly::variable(xy, "y"), rel};
    return quotient_dimension_retry(gens, p + q + 3);
}

std::vector<VectorFieldPoly> tangent_fields_of_variety(const std::vector<MultiPoly>& ideal_gens,
                                                       int field_degree) {
    if (ideal_gens.empty()) throw algebra_error("tangent_fields_of_variety: no generators");
    const auto& vars = ideal_gens.front().vars();
    const std::size_t nv = vars.size();
    GroebnerBasis gb(ideal_gens);

    std::vector<Exponents> mons = monomials_up_to(nv, field_degree);
    std::sort(mons.begin(), mons.end(),
              [](const Exponents& a, const Exponents& b) { return grevlex_greater(b, a); });

    // Columns: candidate fields m * d/dx_k. Rows: coefficients of the normal
    // forms of v(g_i) across all generators.
    struct Col {
        std::size_t var;
        Exponents mon;
        std::vector<MultiPoly> nf;  // one per generator
    };
    std::vector<Col> cols;
    for (std::size_t k = 0; k < nv; ++k)
        for (const Exponents& m : mons) {
            Col col{k, m, {}};
            MultiPoly mono = MultiPoly::monomial(vars, m, Rational(1));
            for (const MultiPoly& g : ideal_gens) col.nf.push_back(gb.reduce(mono * g.partial(k)));
            cols.push_back(std::move(col));
        }

    // Collect the monomial support of all normal forms, per generator slot.
    std::map<std::pair<std::size_t, Exponents>, std::size_t> row_of;
    for (const Col& col : cols)
        for (std::size_t gi = 0; gi < col.nf.size(); ++gi)
            for (const auto& [e, c] : col.nf[gi].terms()) {
                auto key = std::make_pair(gi, e);
                if (!row_of.count(key)) {
                    std::size_t next = row_of.size();
                    row_of[key] = next;
                }
            }

    Matrix<Rational> A(std::max<std::size_t>(row_of.size(), 1), cols.size(), Rational(0));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t gi = 0; gi < cols[j].nf.size(); ++gi)
            for (const auto& [e, c] : cols[j].nf[gi].terms())
                A.at(row_of.at(std::make_pair(gi, e)), j) = c;

    std::vector<std::vector<Rational>> kernel = nullspace(A);
    std::vector<VectorFieldPoly> fields;
    for (const auto& vec : kernel) {
        VectorFieldPoly f{vars, std::vector<MultiPoly>(nv, MultiPoly(vars))};
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (!vec[j].is_zero())
                f.components[cols[j].var] += MultiPoly::monomial(vars, cols[j].mon, vec[j]);
        fields.push_back(std::move(f));
    }
    return fields;
}

std::vector<MultiPoly> unfolding_basis(const std::vector<MultiPoly>& ideal_gens,
                                       const MultiPoly& f, int degree_bound, int field_degree) {
    const auto& vars = f.vars();
    std::vector<VectorFieldPoly> fields = tangent_fields_of_variety(ideal_gens, field_degree);

    // Interreduce the derivative span before handing it to the Groebner
    // engine; the kernel basis is large and redundant.
    std::vector<MultiPoly> ders;
    for (const VectorFieldPoly& v : fields) {
        MultiPoly d = v.apply(f);
        if (!d.is_zero()) ders.push_back(d);
    }
    std::map<Exponents, std::size_t> col_of;
    for (const MultiPoly& d : ders)
        for (const auto& [e, c] : d.terms())
            if (!col_of.count(e)) {
                std::size_t next = col_of.size();
                col_of[e] = next;
            }
    std::vector<MultiPoly> reduced;
    if (!ders.empty()) {
        Matrix<Rational> A(ders.size(), col_of.size(), Rational(0));
        for (std::size_t i = 0; i < ders.size(); ++i)
            for (const auto& [e, c] : ders[i].terms()) A.at(i, col_of.at(e)) = c;
        Echelon<Rational> ech = echelonize(A);
        std::vector<Exponents> col_exp(col_of.size());
        for (const auto& [e, j] : col_of) col_exp[j] = e;
        for (std::size_t r = 0; r < ech.rank; ++r) {
            MultiPoly p(vars);
            for (std::size_t j = 0; j < col_of.size(); ++j)
                if (!ech.mat.at(r, j).is_zero()) p.add_term(col_exp[j], ech.mat.at(r, j));
            reduced.push_back(std::move(p));
        }
    }

    std::vector<MultiPoly> gens = ideal_gens;
    for (auto& d : reduced) gens.push_back(std::move(d));
    int D = degree_bound > 0 ? degree_bound : std::max(f.total_degree() + 4, 8);
    QuotientBasis qb = quotient_dimension_retry(gens, D);

    std::vector<Exponents> mons = qb.standard_monomials;
    std::sort(mons.begin(), mons.end(), [](const Exponents& a, const Exponents& b) {
        int da = 0, db = 0;
        for (int x : a) da += x;
        for (int x : b) db += x;
        if (da != db) return da < db;
        return a > b;  // lexicographic by variable order within a degree
    });
    std::vector<MultiPoly> out;
    for (const Exponents& e : mons) out.push_back(MultiPoly::monomial(vars, e, Rational(1)));
    return out;
}

std::vector<MultiPoly> unfolding_basis_curve(const DeterminantalCurveFamily& fam) {
    // Degree-3 field coefficients cover the tangent-module generators of the
    // axes (the toral fields are linear, the dual-module fields quadratic);
    // a missing generator would surface as a too-large basis downstream.
    return unfolding_basis(fam.minors(), fam.f, fam.p + fam.q + fam.r + 3, 3);
}

std::vector<MultiPoly> unfolding_basis_node(int p, int q) {
    std::vector<std::string> xy{"x", "y"};
    MultiPoly f = MultiPoly::variable(xy, "x", p) + MultiPoly::variable(xy, "y", q);
    std::vector<MultiPoly> gens{MultiPoly::variable(xy, "x") * MultiPoly::variable(xy, "y")};
    return unfolding_basis(gens, f, p + q + 3, 3);
}

}  // namespace minifold
