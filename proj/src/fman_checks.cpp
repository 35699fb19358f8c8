#include "minifold/fman_checks.hpp"

#include <algorithm>

namespace minifold {

FieldRF field_bracket(const FieldRF& u, const FieldRF& v, const std::vector<std::string>& vars) {
    const std::size_t n = vars.size();
    FieldRF out(n, RationalFunction::constant(vars, Rational(0)));
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t k = 0; k < n; ++k) {
            if (!u[k].is_zero()) out[l] += u[k] * v[l].partial(vars[k]);
            if (!v[k].is_zero()) out[l] -= v[k] * u[l].partial(vars[k]);
        }
    return out;
}

std::vector<std::vector<FieldRF>> lie_of_product(const FStructure& fs, const FieldRF& u) {
    const std::size_t n = fs.size();
    std::vector<std::vector<FieldRF>> out(n, std::vector<FieldRF>(n));
    for (std::size_t i = 0; i < n; ++i) {
        FieldRF fi = fs.frame_field(i);
        FieldRF ufi = field_bracket(u, fi, fs.base_vars);
        for (std::size_t j = i; j < n; ++j) {
            FieldRF fj = fs.frame_field(j);
            FieldRF prod = fs.star(fi, fj);
            FieldRF term = field_bracket(u, prod, fs.base_vars);
            FieldRF t2 = fs.star(ufi, fj);
            FieldRF t3 = fs.star(fi, field_bracket(u, fj, fs.base_vars));
            for (std::size_t l = 0; l < n; ++l) term[l] = term[l] - t2[l] - t3[l];
            out[i][j] = term;
            out[j][i] = std::move(term);
        }
    }
    return out;
}

AxiomReport check_axioms(const FStructure& fs) {
    AxiomReport rep;
    const std::size_t n = fs.size();
    rep.commutative = true;
    for (std::size_t i = 0; i < n && rep.commutative; ++i)
        for (std::size_t j = 0; j < n && rep.commutative; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (fs.tensor[i][j][k] != fs.tensor[j][i][k]) {
                    rep.commutative = false;
                    break;
                }
    rep.unital = true;
    for (std::size_t j = 0; j < n && rep.unital; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            RationalFunction expect = j == k ? fs.rf_one() : fs.rf_zero();
            if (fs.tensor[fs.unit_index][j][k] != expect) {
                rep.unital = false;
                break;
            }
        }
    rep.associative = true;
    for (std::size_t i = 0; i < n && rep.associative; ++i)
        for (std::size_t j = 0; j < n && rep.associative; ++j)
            for (std::size_t k = 0; k < n && rep.associative; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    RationalFunction lhs = fs.rf_zero(), rhs = fs.rf_zero();
                    for (std::size_t m = 0; m < n; ++m) {
                        if (!fs.tensor[i][j][m].is_zero())
                            lhs += fs.tensor[i][j][m] * fs.tensor[m][k][l];
                        if (!fs.tensor[j][k][m].is_zero())
                            rhs += fs.tensor[j][k][m] * fs.tensor[i][m][l];
                    }
                    if (lhs != rhs) {
                        rep.associative = false;
                        break;
                    }
                }
    return rep;
}

bool check_euler(const FStructure& fs) {
    std::vector<std::vector<FieldRF>> lie = lie_of_product(fs, fs.euler_coords);
    const std::size_t n = fs.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            FieldRF prod = fs.star(fs.frame_field(i), fs.frame_field(j));
            for (std::size_t l = 0; l < n; ++l)
                if (lie[i][j][l] != prod[l]) return false;
        }
    return true;
}

namespace {

JetScalar jet_const(const Rational& v, std::size_t n) {
    return JetScalar{v, std::vector<Rational>(n, Rational(0))};
}
JetScalar jet_add(const JetScalar& a, const JetScalar& b) {
    JetScalar r = a;
    r.v += b.v;
    for (std::size_t m = 0; m < r.d.size(); ++m) r.d[m] += b.d[m];
    return r;
}
JetScalar jet_mul(const JetScalar& a, const JetScalar& b) {
    JetScalar r{a.v * b.v, std::vector<Rational>(a.d.size(), Rational(0))};
    for (std::size_t m = 0; m < r.d.size(); ++m) r.d[m] = a.d[m] * b.v + a.v * b.d[m];
    return r;
}
JetScalar jet_div(const JetScalar& a, const JetScalar& b) {
    if (b.v.is_zero()) throw algebra_error("jet division by zero value");
    JetScalar r{a.v / b.v, std::vector<Rational>(a.d.size(), Rational(0))};
    for (std::size_t m = 0; m < r.d.size(); ++m)
        r.d[m] = (a.d[m] * b.v - a.v * b.d[m]) / (b.v * b.v);
    return r;
}

using JetField = std::vector<JetScalar>;

JetField jet_frame_field(const JetFStructure& js, std::size_t k) {
    JetField f(js.n, jet_const(Rational(0), js.n));
    f[k] = js.frame_mult[k];
    return f;
}

// Star with full first-order data.
JetField jet_star(const JetFStructure& js, const JetField& u, const JetField& v) {
    JetField out(js.n, jet_const(Rational(0), js.n));
    for (std::size_t i = 0; i < js.n; ++i) {
        JetScalar a = jet_div(u[i], js.frame_mult[i]);
        if (a.v.is_zero() && std::all_of(a.d.begin(), a.d.end(),
                                         [](const Rational& x) { return x.is_zero(); }))
            continue;
        for (std::size_t j = 0; j < js.n; ++j) {
            JetScalar b = jet_div(v[j], js.frame_mult[j]);
            if (b.v.is_zero() && std::all_of(b.d.begin(), b.d.end(),
                                             [](const Rational& x) { return x.is_zero(); }))
                continue;
            JetScalar ab = jet_mul(a, b);
            for (std::size_t k = 0; k < js.n; ++k)
                out[k] = jet_add(out[k], jet_mul(jet_mul(ab, js.c[i][j][k]), js.frame_mult[k]));
        }
    }
    return out;
}

// Value-level star (no derivative tracking) for already-evaluated fields.
std::vector<Rational> star_values(const JetFStructure& js, const std::vector<Rational>& u,
                                  const std::vector<Rational>& v) {
    std::vector<Rational> out(js.n, Rational(0));
    for (std::size_t i = 0; i < js.n; ++i) {
        Rational a = u[i] / js.frame_mult[i].v;
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < js.n; ++j) {
            Rational b = v[j] / js.frame_mult[j].v;
            if (b.is_zero()) continue;
            for (std::size_t k = 0; k < js.n; ++k)
                out[k] += a * b * js.c[i][j][k].v * js.frame_mult[k].v;
        }
    }
    return out;
}

std::vector<Rational> jet_values(const JetField& f) {
    std::vector<Rational> v;
    v.reserve(f.size());
    for (const JetScalar& s : f) v.push_back(s.v);
    return v;
}

// Value of [u, v] at the point; needs jets of both arguments.
std::vector<Rational> jet_bracket_values(const JetField& u, const JetField& v) {
    const std::size_t n = u.size();
    std::vector<Rational> out(n, Rational(0));
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t k = 0; k < n; ++k)
            out[l] += u[k].v * v[l].d[k] - v[k].v * u[l].d[k];
    return out;
}

// Value of (Lie_u star)(f_i, f_j) at the point for a jet field u.
std::vector<Rational> jet_lie_entry(const JetFStructure& js, const JetField& u, std::size_t i,
                                    std::size_t j) {
    JetField fi = jet_frame_field(js, i), fj = jet_frame_field(js, j);
    JetField prod = jet_star(js, fi, fj);
    std::vector<Rational> t1 = jet_bracket_values(u, prod);
    std::vector<Rational> bi = jet_bracket_values(u, fi);
    std::vector<Rational> bj = jet_bracket_values(u, fj);
    std::vector<Rational> t2 = star_values(js, bi, jet_values(fj));
    std::vector<Rational> t3 = star_values(js, jet_values(fi), bj);
    for (std::size_t l = 0; l < js.n; ++l) t1[l] = t1[l] - t2[l] - t3[l];
    return t1;
}

}  // namespace

JetFStructure jet_at(const FStructure& fs, const BasePoint& b) {
    JetFStructure js;
    js.base_vars = fs.base_vars;
    js.n = fs.size();
    js.unit_index = fs.unit_index;
    auto make_jet = [&](const RationalFunction& f) {
        JetScalar s{f.evaluate(b), {}};
        for (const auto& v : fs.base_vars) s.d.push_back(f.partial(v).evaluate(b));
        return s;
    };
    for (std::size_t k = 0; k < js.n; ++k) js.frame_mult.push_back(make_jet(fs.frame_multiplier[k]));
    js.c.assign(js.n, std::vector<std::vector<JetScalar>>(js.n));
    for (std::size_t i = 0; i < js.n; ++i)
        for (std::size_t j = 0; j < js.n; ++j) {
            js.c[i][j].reserve(js.n);
            for (std::size_t k = 0; k < js.n; ++k) js.c[i][j].push_back(make_jet(fs.tensor[i][j][k]));
        }
    for (std::size_t l = 0; l < js.n; ++l) js.euler.push_back(make_jet(fs.euler_coords[l]));
    return js;
}

bool jet_check_axioms(const JetFStructure& js) {
    for (std::size_t i = 0; i < js.n; ++i)
        for (std::size_t j = 0; j < js.n; ++j)
            for (std::size_t k = 0; k < js.n; ++k)
                if (js.c[i][j][k].v != js.c[j][i][k].v) return false;
    for (std::size_t j = 0; j < js.n; ++j)
        for (std::size_t k = 0; k < js.n; ++k)
            if (js.c[js.unit_index][j][k].v != (j == k ? Rational(1) : Rational(0))) return false;
    for (std::size_t i = 0; i < js.n; ++i)
        for (std::size_t j = 0; j < js.n; ++j)
            for (std::size_t k = 0; k < js.n; ++k)
                for (std::size_t l = 0; l < js.n; ++l) {
                    Rational lhs(0), rhs(0);
                    for (std::size_t m = 0; m < js.n; ++m) {
                        lhs += js.c[i][j][m].v * js.c[m][k][l].v;
                        rhs += js.c[j][k][m].v * js.c[i][m][l].v;
                    }
                    if (lhs != rhs) return false;
                }
    return true;
}

bool jet_check_integrability(const JetFStructure& js) {
    const std::size_t n = js.n;
    // Cache frame fields, their pairwise products, and Lie_{frame} tensors.
    std::vector<JetField> frames;
    for (std::size_t k = 0; k < n; ++k) frames.push_back(jet_frame_field(js, k));
    std::vector<std::vector<JetField>> prod(n, std::vector<JetField>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            prod[i][j] = jet_star(js, frames[i], frames[j]);
            prod[j][i] = prod[i][j];
        }
    auto lie_entry = [&](const JetField& u, std::size_t i, std::size_t j) {
        std::vector<Rational> t1 = jet_bracket_values(u, prod[i][j]);
        std::vector<Rational> bi = jet_bracket_values(u, frames[i]);
        std::vector<Rational> bj = jet_bracket_values(u, frames[j]);
        std::vector<Rational> t2 = star_values(js, bi, jet_values(frames[j]));
        std::vector<Rational> t3 = star_values(js, jet_values(frames[i]), bj);
        for (std::size_t l = 0; l < n; ++l) t1[l] = t1[l] - t2[l] - t3[l];
        return t1;
    };
    std::vector<std::vector<std::vector<std::vector<Rational>>>> lie_frame(n);
    for (std::size_t u = 0; u < n; ++u) {
        lie_frame[u].assign(n, std::vector<std::vector<Rational>>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                lie_frame[u][i][j] = lie_entry(frames[u], i, j);
                lie_frame[u][j][i] = lie_frame[u][i][j];
            }
    }
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u; v < n; ++v) {
            const JetField& g = prod[u][v];
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) {
                    std::vector<Rational> lhs = lie_entry(g, i, j);
                    std::vector<Rational> rhs =
                        star_values(js, lie_frame[u][i][j], jet_values(frames[v]));
                    std::vector<Rational> rhs2 =
                        star_values(js, jet_values(frames[u]), lie_frame[v][i][j]);
                    for (std::size_t l = 0; l < n; ++l)
                        if (lhs[l] != rhs[l] + rhs2[l]) return false;
                }
        }
    return true;
}

bool jet_check_euler(const JetFStructure& js) {
    JetField e(js.n);
    for (std::size_t l = 0; l < js.n; ++l) e[l] = js.euler[l];
    for (std::size_t i = 0; i < js.n; ++i)
        for (std::size_t j = i; j < js.n; ++j) {
            std::vector<Rational> lie = jet_lie_entry(js, e, i, j);
            JetField prod = jet_star(js, jet_frame_field(js, i), jet_frame_field(js, j));
            for (std::size_t l = 0; l < js.n; ++l)
                if (lie[l] != prod[l].v) return false;
        }
    return true;
}

IntegrabilityReport check_integrability(const FStructure& fs, const std::vector<BasePoint>& pts) {
    IntegrabilityReport rep;
    for (const BasePoint& b : pts) {
        if (!jet_check_integrability(jet_at(fs, b))) {
            rep.ok = false;
            rep.counterexamples.push_back(b);
        }
    }
    return rep;
}

SemisimplicityResult semisimplicity_node_at(const NodeFamily& fam, const BasePoint& b) {
    const std::size_t n = fam.algebra.dim();
    const auto& sc = fam.algebra.structure_constants();
    std::vector<Rational> fcl;
    for (const MultiPoly& e : f_class_node(fam)) fcl.push_back(e.evaluate(b));
    Matrix<Rational> m(n, n, Rational(0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            if (fcl[i].is_zero()) continue;
            for (std::size_t l = 0; l < n; ++l) {
                Rational cv = sc[i][j][l].evaluate(b);
                if (!cv.is_zero()) m.at(l, j) += fcl[i] * cv;
            }
        }
    SemisimplicityResult out;
    std::vector<Rational> chi = char_poly(m);
    out.char_poly = Upoly(chi);
    out.trace = m.trace();
    out.semisimple = is_squarefree(out.char_poly);
    return out;
}

SemisimplicityResult semisimplicity_at(const FStructure& fs, const BasePoint& b) {
    const std::size_t n = fs.size();
    // E in frame coefficients at the point.
    std::vector<Rational> e(n, Rational(0));
    for (std::size_t k = 0; k < n; ++k)
        e[k] = fs.euler_coords[k].evaluate(b) / fs.frame_multiplier[k].evaluate(b);
    Matrix<Rational> m(n, n, Rational(0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            if (e[i].is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k) {
                Rational c = fs.tensor[i][j][k].evaluate(b);
                if (!c.is_zero()) m.at(k, j) += e[i] * c;
            }
        }
    SemisimplicityResult out;
    out.char_poly = Upoly(char_poly(m));
    out.trace = m.trace();
    out.semisimple = is_squarefree(out.char_poly);
    return out;
}

StratumRestriction restrict_to_stratum(const NodeFamily& fam, const std::string& coordinate) {
    if (coordinate != "eps")
        throw algebra_error(
            "restrict_to_stratum: only the principal coordinate ideal (eps) is supported");
    const std::size_t n = fam.algebra.dim();
    std::vector<std::string> rv;  // remaining base coordinates
    for (const auto& v : fam.base_vars)
        if (v != "eps") rv.push_back(v);
    auto restrict_poly = [&](const MultiPoly& p) {
        return p.evaluated({{"eps", Rational(0)}}).embedded(rv);
    };
    RationalFunction rf0 = RationalFunction::constant(rv, Rational(0));

    // Structure constants and t'F images at eps = 0.
    const auto& sc = fam.algebra.structure_constants();
    std::vector<std::vector<std::vector<MultiPoly>>> sc0(
        n, std::vector<std::vector<MultiPoly>>(n, std::vector<MultiPoly>(n, MultiPoly(rv))));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) sc0[i][j][k] = restrict_poly(sc[i][j][k]);
    auto mult0 = [&](const std::vector<RationalFunction>& u,
                     const std::vector<RationalFunction>& v) {
        std::vector<RationalFunction> w(n, rf0);
        for (std::size_t i = 0; i < n; ++i) {
            if (u[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (v[j].is_zero()) continue;
                RationalFunction uv = u[i] * v[j];
                for (std::size_t k = 0; k < n; ++k)
                    if (!sc0[i][j][k].is_zero()) w[k] += uv * RationalFunction(sc0[i][j][k]);
            }
        }
        return w;
    };

    std::vector<RationalFunction> z0;
    for (const MultiPoly& e : tprime_node(0, fam)) z0.push_back(RationalFunction(restrict_poly(e)));

    // Ideal generated by z0: column space of multiplication by z0.
    Matrix<RationalFunction> mz(n, n, rf0);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<RationalFunction> ej(n, rf0);
        ej[j] = RationalFunction::constant(rv, Rational(1));
        std::vector<RationalFunction> col = mult0(z0, ej);
        for (std::size_t i = 0; i < n; ++i) mz.at(i, j) = col[i];
    }
    Echelon<RationalFunction> ech = echelonize(mz);
    StratumRestriction out;
    out.ideal_rank = static_cast<int>(ech.rank);
    out.dimension = static_cast<int>(n) - out.ideal_rank;

    std::vector<std::vector<RationalFunction>> ideal_basis;
    for (std::size_t c : ech.pivot_cols) {
        std::vector<RationalFunction> ej(n, rf0);
        ej[c] = RationalFunction::constant(rv, Rational(1));
        ideal_basis.push_back(mult0(z0, ej));
    }

    // Images of the surviving frame fields.
    std::vector<std::vector<RationalFunction>> images;
    for (std::size_t k = 1; k < fam.frame_size(); ++k) {
        std::vector<RationalFunction> im;
        for (const MultiPoly& e : tprime_node(k, fam)) im.push_back(RationalFunction(restrict_poly(e)));
        images.push_back(std::move(im));
    }
    const std::size_t m = images.size();
    if (ideal_basis.size() + m != n)
        throw algebra_error("restrict_to_stratum: ideal and frame images do not fill the algebra");

    Matrix<RationalFunction> B(n, n, rf0);
    for (std::size_t j = 0; j < ideal_basis.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) B.at(i, j) = ideal_basis[j][i];
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i) B.at(i, ideal_basis.size() + j) = images[j][i];
    Matrix<RationalFunction> Binv = mat_inverse(B);

    FStructure fs;
    fs.base_vars = rv;
    for (std::size_t k = 1; k < fam.frame_size(); ++k) fs.frame_names.push_back(fam.frame_name(k));
    fs.frame_multiplier.assign(m, RationalFunction::constant(rv, Rational(1)));
    fs.unit_index = m - 1;
    fs.tensor.assign(m, std::vector<std::vector<RationalFunction>>(
                            m, std::vector<RationalFunction>(m, rf0)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            std::vector<RationalFunction> w = mult0(images[i], images[j]);
            std::vector<RationalFunction> lambda = Binv.apply(w);
            std::vector<RationalFunction> coeffs(lambda.begin() + static_cast<long>(ideal_basis.size()),
                                                 lambda.end());
            fs.tensor[i][j] = coeffs;
            fs.tensor[j][i] = std::move(coeffs);
        }

    std::vector<MultiPoly> e = euler_field(fam);
    for (std::size_t k = 1; k < fam.frame_size(); ++k)
        fs.euler_coords.push_back(RationalFunction(restrict_poly(e[k])));
    out.structure = std::move(fs);
    return out;
}

}  // namespace minifold
