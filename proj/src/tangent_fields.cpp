#include "minifold/tangent_fields.hpp"

namespace minifold {

namespace {

MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    MultiPoly det(m[0][0].vars());
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<MultiPoly>> sub;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<MultiPoly> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(m[i][j]);
            sub.push_back(std::move(row));
        }
        MultiPoly term = m[0][c] * poly_det(sub);
        if (c % 2 == 1) term = -term;
        det += term;
    }
    return det;
}

}  // namespace

std::vector<VectorFieldPoly> determinantal_tangent_fields(const std::vector<MultiPoly>& minors,
                                                          const std::vector<std::string>& coords) {
    if (coords.size() != 3) throw algebra_error("determinantal_tangent_fields: ambient dimension must be 3");
    std::vector<VectorFieldPoly> fields;
    for (std::size_t i = 0; i < minors.size(); ++i)
        for (std::size_t j = i + 1; j < minors.size(); ++j) {
            std::vector<MultiPoly> gi, gj;
            for (const auto& v : coords) {
                gi.push_back(minors[i].partial(v));
                gj.push_back(minors[j].partial(v));
            }
            VectorFieldPoly f{coords, {}};
            f.components.push_back(gi[1] * gj[2] - gi[2] * gj[1]);
            f.components.push_back(-(gi[0] * gj[2] - gi[2] * gj[0]));
            f.components.push_back(gi[0] * gj[1] - gi[1] * gj[0]);
            fields.push_back(std::move(f));
        }
    return fields;
}

std::vector<VectorFieldPoly> curve_tangent_fields(const DeterminantalCurveFamily& fam,
                                                  bool perturbed) {
    return determinantal_tangent_fields(perturbed ? fam.minors_perturbed() : fam.minors(),
                                        fam.space_vars);
}

std::vector<VectorFieldPoly> icis_tangent_fields(const ICISFamily& fam, bool include_f_row) {
    const std::size_t nk = fam.vars.size();
    const std::size_t k = fam.g.size();
    const std::size_t rows = k + (include_f_row ? 1 : 0);  // gradient rows
    if (rows + 1 > nk)
        throw algebra_error("icis_tangent_fields: no maximal minors (too many equations)");

    std::vector<std::vector<MultiPoly>> grads;
    if (include_f_row) {
        std::vector<MultiPoly> gf;
        for (const auto& v : fam.vars) gf.push_back(fam.f.partial(v));
        grads.push_back(std::move(gf));
    }
    for (const auto& gi : fam.g) {
        std::vector<MultiPoly> gg;
        for (const auto& v : fam.vars) gg.push_back(gi.partial(v));
        grads.push_back(std::move(gg));
    }

    // Choose rows+1 columns; expand the (rows+1)x(rows+1) determinant along
    // the symbolic first row.
    std::vector<VectorFieldPoly> fields;
    std::vector<std::size_t> sel(rows + 1);
    for (std::size_t i = 0; i <= rows; ++i) sel[i] = i;
    for (;;) {
        VectorFieldPoly f{fam.vars, std::vector<MultiPoly>(nk, MultiPoly(fam.vars))};
        for (std::size_t t = 0; t <= rows; ++t) {
            std::vector<std::vector<MultiPoly>> sub;
            for (std::size_t r = 0; r < rows; ++r) {
                std::vector<MultiPoly> row;
                for (std::size_t u = 0; u <= rows; ++u)
                    if (u != t) row.push_back(grads[r][sel[u]]);
                sub.push_back(std::move(row));
            }
            MultiPoly cof = poly_det(sub);
            if (t % 2 == 1) cof = -cof;
            f.components[sel[t]] = cof;
        }
        fields.push_back(std::move(f));
        // next combination
        std::size_t i = rows + 1;
        while (i-- > 0) {
            if (sel[i] + (rows - i) < nk - 1) {
                ++sel[i];
                for (std::size_t j = i + 1; j <= rows; ++j) sel[j] = sel[j - 1] + 1;
                break;
            }
            if (i == 0) return fields;
        }
    }
}

}  // namespace minifold
