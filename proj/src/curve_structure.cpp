#include "minifold/curve_structure.hpp"

#include <algorithm>

#include "minifold/tangent_fields.hpp"

namespace minifold {

BasePoint make_curve_point(const DeterminantalCurveFamily& fam,
                           const std::vector<Rational>& values) {
    if (values.size() != fam.base_vars.size())
        throw algebra_error("make_curve_point: expected " + std::to_string(fam.base_vars.size()) +
                            " values, one per base parameter");
    BasePoint b;
    for (std::size_t i = 0; i < values.size(); ++i) b[fam.base_vars[i]] = values[i];
    return b;
}

namespace {

int total_deg(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

std::vector<Exponents> monomials_desc(std::size_t nv, int D) {
    std::vector<Exponents> mons;
    Exponents e(nv, 0);
    for (;;) {
        if (total_deg(e) <= D) mons.push_back(e);
        std::size_t k = 0;
        while (k < nv) {
            ++e[k];
            if (e[k] <= D && total_deg(e) <= D) break;
            e[k] = 0;
            ++k;
        }
        if (k == nv) break;
    }
    std::sort(mons.begin(), mons.end(),
              [](const Exponents& a, const Exponents& b) { return grevlex_greater(a, b); });
    return mons;
}

using SparseVec = std::map<std::size_t, Rational>;  // col -> value

void sparse_axpy(SparseVec& dst, const Rational& a, const SparseVec& src) {
    if (a.is_zero()) return;
    for (const auto& [c, v] : src) {
        auto it = dst.find(c);
        if (it == dst.end()) {
            dst.emplace(c, a * v);
        } else {
            it->second += a * v;
            if (it->second.is_zero()) dst.erase(it);
        }
    }
}

// Normal-form engine over the Macaulay span of the ideal generators at the
// point, with exact first derivatives in the base parameters via the tracked
// row combinations (the RREF pivot block is the inverse of the selected
// original submatrix).
struct NfEngine {
    std::vector<std::string> space_vars;
    std::vector<std::string> params;
    BasePoint point;
    int D = 0;
    std::vector<Exponents> cols;              // grevlex descending
    std::map<Exponents, std::size_t> col_of;  // exponent -> column index

    // Original rows: monomial multiples of the generators, kept symbolically
    // in the parameters for derivative evaluation.
    struct Row {
        std::map<std::size_t, MultiPoly> entries;  // col -> coefficient in params
        SparseVec at_point;
    };
    std::vector<Row> rows;

    struct Pivot {
        std::size_t col;
        SparseVec reduced;  // RREF row
        SparseVec combo;    // coordinates over original rows
    };
    std::vector<Pivot> pivots;
    std::map<std::size_t, std::size_t> pivot_of_col;
    std::vector<std::size_t> standard_cols;  // ascending grevlex (reverse column order)

    void build(const std::vector<MultiPoly>& gens, int degree_bound) {
        D = degree_bound;
        cols = monomials_desc(space_vars.size(), D);
        col_of.clear();
        for (std::size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = i;

        rows.clear();
        for (const MultiPoly& g : gens) {
            // degree in the space variables only; parameters do not count
            int dg = -1;
            for (const auto& [e, c] : g.terms()) {
                int d = 0;
                for (std::size_t i = 0; i < space_vars.size(); ++i) d += e[i];
                dg = std::max(dg, d);
            }
            if (dg < 0) continue;
            for (const Exponents& m : monomials_desc(space_vars.size(), D - dg)) {
                MultiPoly mg = g * MultiPoly::monomial(g.vars(), embed_exp(m, g.vars()), Rational(1));
                Row row;
                split_row(mg, row.entries);
                for (const auto& [c, coef] : row.entries) {
                    Rational v = coef.evaluate(point);
                    if (!v.is_zero()) row.at_point.emplace(c, v);
                }
                rows.push_back(std::move(row));
            }
        }

        pivots.clear();
        pivot_of_col.clear();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            SparseVec v = rows[r].at_point;
            SparseVec combo{{r, Rational(1)}};
            reduce_sparse(v, &combo);
            if (v.empty()) continue;
            std::size_t lead = v.begin()->first;
            Rational inv = v.begin()->second.inverse();
            for (auto& [c, x] : v) x *= inv;
            for (auto& [c, x] : combo) x *= inv;
            // keep the RREF property: clear the new pivot column upstream
            for (Pivot& pv : pivots) {
                auto it = pv.reduced.find(lead);
                if (it == pv.reduced.end()) continue;
                Rational f = it->second;
                sparse_axpy(pv.reduced, -f, v);
                sparse_axpy(pv.combo, -f, combo);
            }
            pivot_of_col[lead] = pivots.size();
            pivots.push_back(Pivot{lead, std::move(v), std::move(combo)});
        }

        standard_cols.clear();
        for (std::size_t c = cols.size(); c-- > 0;)
            if (!pivot_of_col.count(c)) standard_cols.push_back(c);
    }

    Exponents embed_exp(const Exponents& m, const std::vector<std::string>& ring) const {
        Exponents e(ring.size(), 0);
        for (std::size_t i = 0; i < space_vars.size(); ++i) e[i] = m[i];
        return e;
    }

    // Splits a full-ring polynomial into space-monomial buckets with
    // parameter-polynomial coefficients.
    void split_row(const MultiPoly& h, std::map<std::size_t, MultiPoly>& out) const {
        for (const auto& [e, c] : h.terms()) {
            Exponents se(space_vars.size());
            for (std::size_t i = 0; i < space_vars.size(); ++i) se[i] = e[i];
            auto it = col_of.find(se);
            if (it == col_of.end())
                throw certificate_error("curve normal form: monomial beyond degree bound", D);
            Exponents pe(params.size());
            for (std::size_t i = 0; i < params.size(); ++i) pe[i] = e[space_vars.size() + i];
            auto jt = out.find(it->second);
            if (jt == out.end()) jt = out.emplace(it->second, MultiPoly(params)).first;
            jt->second.add_term(pe, c);
        }
    }

    void reduce_sparse(SparseVec& v, SparseVec* combo) const {
        for (const Pivot& pv : pivots) {
            auto it = v.find(pv.col);
            if (it == v.end()) continue;
            Rational f = it->second;
            sparse_axpy(v, -f, pv.reduced);
            if (combo) sparse_axpy(*combo, -f, pv.combo);
        }
    }

    struct NfJet {
        std::vector<Rational> val;                // over standard_cols
        std::vector<std::vector<Rational>> jac;   // [standard pos][param]
    };

    // Value-only normal form of a full-ring polynomial.
    std::vector<Rational> value(const MultiPoly& h) const {
        std::map<std::size_t, MultiPoly> ent;
        split_row(h, ent);
        SparseVec v;
        for (const auto& [c, coef] : ent) {
            Rational x = coef.evaluate(point);
            if (!x.is_zero()) v.emplace(c, x);
        }
        reduce_sparse(v, nullptr);
        std::vector<Rational> out(standard_cols.size(), Rational(0));
        for (std::size_t i = 0; i < standard_cols.size(); ++i) {
            auto it = v.find(standard_cols[i]);
            if (it != v.end()) {
                out[i] = it->second;
                v.erase(it);
            }
        }
        if (!v.empty()) throw algebra_error("curve normal form: residue outside the standard span");
        return out;
    }

    NfJet jet(const MultiPoly& h) const {
        std::map<std::size_t, MultiPoly> ent;
        split_row(h, ent);
        SparseVec h0;
        for (const auto& [c, coef] : ent) {
            Rational x = coef.evaluate(point);
            if (!x.is_zero()) h0.emplace(c, x);
        }
        // alpha_i = h0[P_i]; mu over original rows; NF = h0 - sum alpha_i R_i.
        std::map<std::size_t, Rational> alpha;  // pivot index -> coefficient
        for (const auto& [c, x] : h0) {
            auto it = pivot_of_col.find(c);
            if (it != pivot_of_col.end()) alpha.emplace(it->second, x);
        }
        SparseVec nf = h0;
        SparseVec mu;  // original-row coordinates
        for (const auto& [pi, a] : alpha) {
            sparse_axpy(nf, -a, pivots[pi].reduced);
            sparse_axpy(mu, a, pivots[pi].combo);
        }

        NfJet out;
        out.val.assign(standard_cols.size(), Rational(0));
        for (std::size_t i = 0; i < standard_cols.size(); ++i) {
            auto it = nf.find(standard_cols[i]);
            if (it != nf.end()) out.val[i] = it->second;
        }
        out.jac.assign(standard_cols.size(), std::vector<Rational>(params.size(), Rational(0)));

        for (std::size_t t = 0; t < params.size(); ++t) {
            const std::string& tau = params[t];
            // h'
            SparseVec hp;
            for (const auto& [c, coef] : ent) {
                Rational x = coef.partial(tau).evaluate(point);
                if (!x.is_zero()) hp.emplace(c, x);
            }
            // A'_rho for rho with mu_rho != 0, accumulated: sum mu_rho A'_rho
            SparseVec muAp;
            for (const auto& [rho, m] : mu) {
                for (const auto& [c, coef] : rows[rho].entries) {
                    Rational x = coef.partial(tau).evaluate(point);
                    if (x.is_zero()) continue;
                    auto it = muAp.find(c);
                    if (it == muAp.end()) {
                        muAp.emplace(c, m * x);
                    } else {
                        it->second += m * x;
                        if (it->second.is_zero()) muAp.erase(it);
                    }
                }
            }
            // beta_i = (h' - sum mu A')[P_i]; NF' = h' - sum beta_i R_i - sum mu A'
            SparseVec rest = hp;
            sparse_axpy(rest, Rational(-1), muAp);
            SparseVec nfp = rest;
            std::map<std::size_t, Rational> beta;
            for (const auto& [c, x] : rest) {
                auto it = pivot_of_col.find(c);
                if (it != pivot_of_col.end()) beta.emplace(it->second, x);
            }
            for (const auto& [pi, bcoef] : beta) sparse_axpy(nfp, -bcoef, pivots[pi].reduced);
            for (std::size_t i = 0; i < standard_cols.size(); ++i) {
                auto it = nfp.find(standard_cols[i]);
                if (it != nfp.end()) {
                    out.jac[i][t] = it->second;
                    nfp.erase(it);
                }
            }
            if (!nfp.empty())
                throw algebra_error("curve normal form: derivative left the standard span");
        }
        return out;
    }
};

// Particular solution of A x = b over the rationals (A may be rectangular);
// nullopt when inconsistent. Free variables are set to zero.
std::optional<std::vector<Rational>> linsolve_any(const Matrix<Rational>& a,
                                                  const std::vector<Rational>& b) {
    const std::size_t rws = a.rows(), cls = a.cols();
    Matrix<Rational> aug(rws, cls + 1, Rational(0));
    for (std::size_t i = 0; i < rws; ++i) {
        for (std::size_t j = 0; j < cls; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, cls) = b[i];
    }
    Echelon<Rational> e = echelonize(aug);
    std::vector<Rational> x(cls, Rational(0));
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
        if (e.pivot_cols[r] == cls) return std::nullopt;  // inconsistent
        x[e.pivot_cols[r]] = e.mat.at(r, cls);
    }
    return x;
}

}  // namespace

CurveStructure build_fstructure_curve(const DeterminantalCurveFamily& fam, const BasePoint& b,
                                      bool with_jets, int degree_bound) {
    for (const auto& v : fam.base_vars)
        if (!b.count(v)) throw algebra_error("build_fstructure_curve: missing value for " + v);

    std::vector<MultiPoly> gens = fam.minors_perturbed();
    for (const VectorFieldPoly& vf : curve_tangent_fields(fam, true)) {
        MultiPoly der = vf.apply(fam.F);
        if (!der.is_zero()) gens.push_back(der);
    }

    // Expected dimension from the zero-parameter module; the point is generic
    // exactly when the pointwise algebra has the same dimension.
    int expected_dim = fam.p + fam.q + fam.r + 1;

    // Reference standard monomials from the Groebner route at the point.
    std::vector<MultiPoly> gens_at;
    for (const MultiPoly& g : gens) {
        MultiPoly ge = g.evaluated(b);
        gens_at.push_back(ge.vars() == fam.space_vars ? ge : ge.embedded(fam.space_vars));
    }
    QuotientBasis qb = quotient_dimension_retry(gens_at, fam.p + fam.q + fam.r + 3);
    if (qb.dimension != expected_dim)
        throw certificate_error("build_fstructure_curve: dimension " +
                                    std::to_string(qb.dimension) + " at this point, expected " +
                                    std::to_string(expected_dim) +
                                    " (special base point)",
                                fam.p + fam.q + fam.r + 3);

    NfEngine eng;
    eng.space_vars = fam.space_vars;
    eng.params = fam.base_vars;
    eng.point = b;

    // Largest degree the normal forms must handle: products of two basis
    // monomials, F itself, and the lift images h * dF/dx with deg h <= 3.
    int max_std_deg = 0;
    for (const Exponents& e : qb.standard_monomials) max_std_deg = std::max(max_std_deg, total_deg(e));
    int fdeg = std::max({fam.p, fam.q, fam.r});
    int d_use = std::max({2 * max_std_deg, fdeg, fdeg - 1 + 3});

    int D = std::max(degree_bound > 0 ? degree_bound : 2 * fdeg + 2, d_use);
    const int D_max = std::max(fam.p + fam.q + fam.r + 5, d_use + 6);
    for (;;) {
        eng.build(gens, D);
        // Up to degree d_use the Macaulay span must cut out exactly the
        // Groebner standard monomials; columns beyond that degree are never
        // touched by the reductions below (the order is degree compatible).
        std::vector<std::size_t> kept;
        std::vector<Exponents> mac;
        for (std::size_t c : eng.standard_cols)
            if (total_deg(eng.cols[c]) <= d_use) {
                kept.push_back(c);
                mac.push_back(eng.cols[c]);
            }
        std::vector<Exponents> ref = qb.standard_monomials;
        auto key = [](const Exponents& a, const Exponents& b2) { return a < b2; };
        std::sort(mac.begin(), mac.end(), key);
        std::sort(ref.begin(), ref.end(), key);
        if (mac == ref) {
            eng.standard_cols = kept;  // grevlex-ascending order is preserved
            break;
        }
        D += 2;
        if (D > D_max)
            throw certificate_error("build_fstructure_curve: Macaulay span did not stabilize", D);
    }

    CurveStructure cs;
    cs.point = b;
    cs.degree_bound = D;
    cs.dim = static_cast<int>(eng.standard_cols.size());
    for (std::size_t c : eng.standard_cols) cs.basis.push_back(eng.cols[c]);
    for (const auto& v : fam.base_vars) cs.frame_names.push_back("d_" + v);
    cs.with_jets = with_jets;

    const std::size_t n = static_cast<std::size_t>(cs.dim);
    const std::size_t np = fam.base_vars.size();
    if (np != n)
        throw algebra_error("build_fstructure_curve: base dimension differs from algebra rank");

    // Basis-product normal forms.
    std::vector<std::vector<NfEngine::NfJet>> table(n, std::vector<NfEngine::NfJet>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Exponents prod(fam.ring_vars.size(), 0);
            for (std::size_t k = 0; k < fam.space_vars.size(); ++k)
                prod[k] = cs.basis[i][k] + cs.basis[j][k];
            MultiPoly h = MultiPoly::monomial(fam.ring_vars, prod, Rational(1));
            NfEngine::NfJet nf = with_jets ? eng.jet(h)
                                           : NfEngine::NfJet{eng.value(h), {}};
            table[i][j] = nf;
            table[j][i] = std::move(nf);
        }

    // Frame images. The unfolding directions map to the derivatives of F;
    // the three matrix directions need lifts h with
    //   sum_k h_k dD_i/dx_k + dD_i/ds_dir in (D_1, D_2, D_3)
    // as polynomials in x at the parameter point. The tangency system is
    // kept symbolic in the parameters so the lift can be differentiated:
    // the class jet needs a first-order lift family, not just the lift at
    // the point.
    std::vector<NfEngine::NfJet> frame_imgs(np);
    if (with_jets) {
        std::vector<MultiPoly> minors = fam.minors_perturbed();
        const std::vector<std::string>& sv = fam.space_vars;
        const std::size_t nm = minors.size();
        for (int hdeg = 2;; ++hdeg) {
            if (hdeg > 3)
                throw certificate_error(
                    "build_fstructure_curve: the matrix directions are not liftable at this "
                    "point (discriminant)", hdeg);
            std::vector<Exponents> hmons = monomials_desc(sv.size(), hdeg);
            std::vector<Exponents> qmons = monomials_desc(sv.size(), hdeg - 1);
            std::vector<Exponents> eqmons = monomials_desc(sv.size(), hdeg + 1);
            std::map<Exponents, std::size_t> eqrow;
            for (const auto& e : eqmons) eqrow.emplace(e, eqrow.size());
            const std::size_t nrows = eqrow.size() * nm;
            const std::size_t h_cols = sv.size() * hmons.size();
            const std::size_t ncols = h_cols + nm * nm * qmons.size();

            // Symbolic system columns (parameter-polynomial entries).
            std::vector<std::map<std::size_t, MultiPoly>> cols_sym(ncols);
            auto row_of = [&](std::size_t mi, const Exponents& e) {
                return mi * eqrow.size() + eqrow.at(e);
            };
            auto add_sym = [&](std::size_t col, std::size_t row, const MultiPoly& v) {
                auto it = cols_sym[col].find(row);
                if (it == cols_sym[col].end())
                    cols_sym[col].emplace(row, v);
                else
                    it->second += v;
            };
            auto param_coeffs = [&](const MultiPoly& g) {
                // split a full-ring polynomial into x-monomial -> param poly
                std::map<Exponents, MultiPoly> out;
                for (const auto& [e, cc] : g.terms()) {
                    Exponents se(sv.size());
                    for (std::size_t k = 0; k < sv.size(); ++k) se[k] = e[k];
                    Exponents pe(fam.base_vars.size());
                    for (std::size_t k = 0; k < fam.base_vars.size(); ++k)
                        pe[k] = e[sv.size() + k];
                    auto it = out.find(se);
                    if (it == out.end()) it = out.emplace(se, MultiPoly(fam.base_vars)).first;
                    it->second.add_term(pe, cc);
                }
                return out;
            };
            for (std::size_t mi = 0; mi < nm; ++mi) {
                for (std::size_t k = 0; k < sv.size(); ++k) {
                    auto coeffs = param_coeffs(minors[mi].partial(sv[k]));
                    for (std::size_t hm = 0; hm < hmons.size(); ++hm)
                        for (const auto& [se, cp] : coeffs) {
                            Exponents e2(sv.size());
                            for (std::size_t kk = 0; kk < sv.size(); ++kk)
                                e2[kk] = se[kk] + hmons[hm][kk];
                            add_sym(k * hmons.size() + hm, row_of(mi, e2), cp);
                        }
                }
                for (std::size_t l = 0; l < nm; ++l) {
                    auto coeffs = param_coeffs(minors[l]);
                    for (std::size_t qm = 0; qm < qmons.size(); ++qm)
                        for (const auto& [se, cp] : coeffs) {
                            Exponents e2(sv.size());
                            for (std::size_t kk = 0; kk < sv.size(); ++kk)
                                e2[kk] = se[kk] + qmons[qm][kk];
                            add_sym(h_cols + (mi * nm + l) * qmons.size() + qm, row_of(mi, e2),
                                    -cp);
                        }
                }
            }

            auto eval_matrix = [&](const std::string* dtau) {
                Matrix<Rational> A(nrows, ncols, Rational(0));
                for (std::size_t c = 0; c < ncols; ++c)
                    for (const auto& [r, cp] : cols_sym[c]) {
                        Rational v = dtau ? cp.partial(*dtau).evaluate(b) : cp.evaluate(b);
                        if (!v.is_zero()) A.at(r, c) = v;
                    }
                return A;
            };
            Matrix<Rational> L0 = eval_matrix(nullptr);

            bool all_ok = true;
            for (std::size_t dir = 0; dir < 3 && all_ok; ++dir) {
                const std::string& svar = fam.base_vars[dir];
                std::map<std::size_t, MultiPoly> rhs_entries;
                for (std::size_t mi = 0; mi < nm; ++mi) {
                    auto coeffs = param_coeffs(-minors[mi].partial(svar));
                    for (const auto& [se, cp] : coeffs) {
                        std::size_t r = row_of(mi, se);
                        auto it = rhs_entries.find(r);
                        if (it == rhs_entries.end())
                            rhs_entries.emplace(r, cp);
                        else
                            it->second += cp;
                    }
                }
                auto eval_rhs = [&](const std::string* dtau) {
                    std::vector<Rational> v(nrows, Rational(0));
                    for (const auto& [r, cp] : rhs_entries)
                        v[r] = dtau ? cp.partial(*dtau).evaluate(b) : cp.evaluate(b);
                    return v;
                };
                std::vector<Rational> rhs0 = eval_rhs(nullptr);
                auto xi0 = linsolve_any(L0, rhs0);
                if (!xi0) {
                    all_ok = false;
                    break;
                }
                auto image_poly = [&](const std::vector<Rational>& hcoeffs) {
                    MultiPoly img(fam.ring_vars);
                    for (std::size_t k = 0; k < sv.size(); ++k) {
                        MultiPoly hk(fam.ring_vars);
                        for (std::size_t hm = 0; hm < hmons.size(); ++hm) {
                            const Rational& cc = hcoeffs[k * hmons.size() + hm];
                            if (cc.is_zero()) continue;
                            hk += MultiPoly::monomial(
                                fam.ring_vars, eng.embed_exp(hmons[hm], fam.ring_vars), cc);
                        }
                        img += hk * fam.F.partial(sv[k]);
                    }
                    return img;
                };
                MultiPoly img0 = image_poly(*xi0);
                NfEngine::NfJet jet = with_jets ? eng.jet(img0)
                                                : NfEngine::NfJet{eng.value(img0), {}};
                if (with_jets) {
                    // First-order lift correction per parameter: the class jet
                    // picks up the normal form of sum_k h1_k dF/dx_k.
                    for (std::size_t t = 0; t < np; ++t) {
                        const std::string& tau = fam.base_vars[t];
                        Matrix<Rational> Lp = eval_matrix(&tau);
                        std::vector<Rational> rhsp = eval_rhs(&tau);
                        std::vector<Rational> lp_xi = Lp.apply(*xi0);
                        for (std::size_t r = 0; r < nrows; ++r) rhsp[r] -= lp_xi[r];
                        auto xi1 = linsolve_any(L0, rhsp);
                        if (!xi1)
                            throw certificate_error(
                                "build_fstructure_curve: lift family is not differentiable "
                                "at this point", hdeg);
                        std::vector<Rational> corr = eng.value(image_poly(*xi1));
                        for (std::size_t i = 0; i < jet.jac.size(); ++i)
                            jet.jac[i][t] += corr[i];
                    }
                }
                frame_imgs[dir] = std::move(jet);
            }
            if (all_ok) break;
        }
    }
    if (with_jets)
        for (std::size_t k = 3; k < np; ++k)
            frame_imgs[k] = eng.jet(fam.F.partial(fam.base_vars[k]));

    // F-class and multiplication-by-F matrix in the monomial basis.
    NfEngine::NfJet fcl = with_jets ? eng.jet(fam.F) : NfEngine::NfJet{eng.value(fam.F), {}};
    cs.mult_by_f = Matrix<Rational>(n, n, Rational(0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            if (fcl.val[i].is_zero()) continue;
            for (std::size_t l = 0; l < n; ++l)
                cs.mult_by_f.at(l, j) += fcl.val[i] * table[i][j].val[l];
        }
    std::vector<Rational> chi = char_poly(cs.mult_by_f);
    cs.char_poly_f = Upoly(chi);
    cs.trace_f = cs.mult_by_f.trace();
    cs.char_poly_root_sum = -chi[n - 1];
    cs.semisimple = is_squarefree(cs.char_poly_f);

    if (!with_jets) return cs;

    // Transport to the frame basis with full first-order data.
    auto jet_of = [&](const NfEngine::NfJet& v, std::size_t i) {
        JetScalar s{v.val[i], std::vector<Rational>(np, Rational(0))};
        if (!v.jac.empty()) s.d = v.jac[i];
        return s;
    };
    auto jmul = [&](const JetScalar& a, const JetScalar& b2) {
        JetScalar r{a.v * b2.v, std::vector<Rational>(np, Rational(0))};
        for (std::size_t m = 0; m < np; ++m) r.d[m] = a.d[m] * b2.v + a.v * b2.d[m];
        return r;
    };
    auto jadd = [&](JetScalar a, const JetScalar& b2) {
        a.v += b2.v;
        for (std::size_t m = 0; m < np; ++m) a.d[m] += b2.d[m];
        return a;
    };

    // Phi: columns are frame images; invert with jets.
    Matrix<Rational> phi(n, n, Rational(0));
    std::vector<Matrix<Rational>> phi_d(np, Matrix<Rational>(n, n, Rational(0)));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            phi.at(i, j) = frame_imgs[j].val[i];
            for (std::size_t m = 0; m < np; ++m) phi_d[m].at(i, j) = frame_imgs[j].jac[i][m];
        }
    Matrix<Rational> phi_inv = mat_inverse(phi);
    std::vector<Matrix<Rational>> phi_inv_d;
    for (std::size_t m = 0; m < np; ++m) {
        Matrix<Rational> t = phi_inv * phi_d[m] * phi_inv;
        Matrix<Rational> neg(n, n, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) neg.at(i, j) = -t.at(i, j);
        phi_inv_d.push_back(std::move(neg));
    }
    auto apply_inv = [&](const std::vector<JetScalar>& w) {
        std::vector<JetScalar> out(n, JetScalar{Rational(0), std::vector<Rational>(np, Rational(0))});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                JetScalar pij{phi_inv.at(i, j), std::vector<Rational>(np, Rational(0))};
                for (std::size_t m = 0; m < np; ++m) pij.d[m] = phi_inv_d[m].at(i, j);
                out[i] = jadd(out[i], jmul(pij, w[j]));
            }
        return out;
    };

    JetFStructure js;
    js.base_vars = fam.base_vars;
    js.n = n;
    js.unit_index = np - 1;  // d_d
    js.frame_mult.assign(n, JetScalar{Rational(1), std::vector<Rational>(np, Rational(0))});
    js.c.assign(n, std::vector<std::vector<JetScalar>>(n));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            // product of images u, v in the algebra, with jets
            std::vector<JetScalar> w(n, JetScalar{Rational(0), std::vector<Rational>(np, Rational(0))});
            for (std::size_t i = 0; i < n; ++i) {
                JetScalar a = jet_of(frame_imgs[u], i);
                if (a.v.is_zero() &&
                    std::all_of(a.d.begin(), a.d.end(), [](const Rational& x) { return x.is_zero(); }))
                    continue;
                for (std::size_t j = 0; j < n; ++j) {
                    JetScalar b2 = jet_of(frame_imgs[v], j);
                    JetScalar ab = jmul(a, b2);
                    for (std::size_t l = 0; l < n; ++l)
                        w[l] = jadd(w[l], jmul(ab, jet_of(table[i][j], l)));
                }
            }
            js.c[u][v] = apply_inv(w);
        }
    // Euler coefficients: Phi^{-1} applied to the F class.
    {
        std::vector<JetScalar> w(n, JetScalar{Rational(0), std::vector<Rational>(np, Rational(0))});
        for (std::size_t i = 0; i < n; ++i) w[i] = jet_of(fcl, i);
        js.euler = apply_inv(w);
    }
    cs.jets = std::move(js);
    return cs;
}

}  // namespace minifold
