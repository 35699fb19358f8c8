#include "minifold/fstructure.hpp"

namespace minifold {

std::vector<RationalFunction> FStructure::frame_field(std::size_t k) const {
    std::vector<RationalFunction> f(size(), rf_zero());
    f[k] = frame_multiplier[k];
    return f;
}

std::vector<RationalFunction> FStructure::frame_coords(
    const std::vector<RationalFunction>& field) const {
    std::vector<RationalFunction> c(size(), rf_zero());
    for (std::size_t k = 0; k < size(); ++k) c[k] = field[k] / frame_multiplier[k];
    return c;
}

std::vector<RationalFunction> FStructure::star(const std::vector<RationalFunction>& u,
                                               const std::vector<RationalFunction>& v) const {
    std::vector<RationalFunction> a = frame_coords(u), b = frame_coords(v);
    std::vector<RationalFunction> out(size(), rf_zero());
    for (std::size_t i = 0; i < size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < size(); ++j) {
            if (b[j].is_zero()) continue;
            RationalFunction ab = a[i] * b[j];
            for (std::size_t k = 0; k < size(); ++k)
                if (!tensor[i][j][k].is_zero())
                    out[k] += ab * tensor[i][j][k] * frame_multiplier[k];
        }
    }
    return out;
}

FStructure build_fstructure_node(const NodeFamily& fam) {
    const std::size_t n = fam.frame_size();
    FStructure fs;
    fs.base_vars = fam.base_vars;
    for (std::size_t k = 0; k < n; ++k) fs.frame_names.push_back(fam.frame_name(k));
    fs.frame_multiplier.assign(n, fs.rf_one());
    fs.frame_multiplier[0] = RationalFunction(MultiPoly::variable(fam.base_vars, "eps"));
    fs.unit_index = n - 1;  // d_c

    // Invert t'F once over the rational-function field; for this family the
    // determinant is the nonzero constant +-p, so the inverse is polynomial
    // up to that constant.
    auto tm = tprime_matrix(fam);
    Matrix<RationalFunction> T(n, n, fs.rf_zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) T.at(i, j) = RationalFunction(tm[i][j]);
    Matrix<RationalFunction> Tinv = mat_inverse(T);

    std::vector<std::vector<MultiPoly>> images;
    for (std::size_t k = 0; k < n; ++k) images.push_back(tprime_node(k, fam));

    fs.tensor.assign(n, std::vector<std::vector<RationalFunction>>(
                            n, std::vector<RationalFunction>(n, fs.rf_zero())));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            std::vector<MultiPoly> prod = fam.algebra.multiply(images[i], images[j]);
            std::vector<RationalFunction> rhs;
            for (const MultiPoly& e : prod) rhs.push_back(RationalFunction(e));
            std::vector<RationalFunction> x = Tinv.apply(rhs);
            fs.tensor[i][j] = x;
            fs.tensor[j][i] = std::move(x);
        }

    std::vector<MultiPoly> e = euler_field(fam);
    for (const MultiPoly& comp : e) fs.euler_coords.push_back(RationalFunction(comp));
    return fs;
}

bool fstructure_node_round_trip(const NodeFamily& fam, const FStructure& fs) {
    const std::size_t n = fam.frame_size();
    std::vector<std::vector<MultiPoly>> images;
    for (std::size_t k = 0; k < n; ++k) images.push_back(tprime_node(k, fam));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            std::vector<MultiPoly> direct = fam.algebra.multiply(images[i], images[j]);
            // t'F applied to the tensor expansion of frame_i * frame_j.
            std::vector<RationalFunction> lhs(fam.algebra.dim(), fs.rf_zero());
            for (std::size_t k = 0; k < n; ++k) {
                if (fs.tensor[i][j][k].is_zero()) continue;
                for (std::size_t r = 0; r < fam.algebra.dim(); ++r)
                    lhs[r] += fs.tensor[i][j][k] * RationalFunction(images[k][r]);
            }
            for (std::size_t r = 0; r < fam.algebra.dim(); ++r)
                if (lhs[r] != RationalFunction(direct[r])) return false;
        }
    return true;
}

}  // namespace minifold
