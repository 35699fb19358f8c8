#include "minifold/families.hpp"

namespace minifold {

std::string NodeFamily::frame_name(std::size_t k) const {
    if (k == 0) return "eps*d_eps";
    return "d_" + base_vars.at(k);
}

NodeFamily build_node_family(int p, int q) {
    if (p < 2 || q < 2) throw algebra_error("build_node_family: need p, q >= 2");
    NodeFamily fam{p, q, {}, {}, MultiPoly(), MultiPoly(), MultiPoly(), NodeAlgebra(p, q)};
    fam.base_vars = node_param_names(p, q);
    fam.ring_vars = fam.algebra.ring_vars();

    const auto& rv = fam.ring_vars;
    MultiPoly F = MultiPoly::variable(rv, "c");
    for (int i = 1; i < p; ++i)
        F += MultiPoly::variable(rv, "a" + std::to_string(i)) * MultiPoly::variable(rv, "x", i);
    F += MultiPoly::variable(rv, "x", p);
    for (int i = 1; i < q; ++i)
        F += MultiPoly::variable(rv, "b" + std::to_string(i)) * MultiPoly::variable(rv, "y", i);
    F += MultiPoly::variable(rv, "y", q);
    fam.F = F;
    fam.pi1 = MultiPoly::variable(rv, "x") * MultiPoly::variable(rv, "y");
    fam.H = MultiPoly::variable(rv, "x") * F.partial("x") -
            MultiPoly::variable(rv, "y") * F.partial("y");
    if (fam.H != fam.algebra.hamiltonian())
        throw algebra_error("build_node_family: H mismatch with algebra relation");
    return fam;
}

namespace {

std::vector<MultiPoly> matrix_minors(const std::vector<std::vector<MultiPoly>>& m) {
    if (m.size() != 2 || m[0].size() != 3)
        throw algebra_error("matrix_minors: expected a 2x3 matrix");
    std::vector<MultiPoly> out;
    for (int drop = 0; drop < 3; ++drop) {
        int c0 = drop == 0 ? 1 : 0;
        int c1 = drop == 2 ? 1 : 2;
        MultiPoly det = m[0][static_cast<std::size_t>(c0)] * m[1][static_cast<std::size_t>(c1)] -
                        m[0][static_cast<std::size_t>(c1)] * m[1][static_cast<std::size_t>(c0)];
        if (drop % 2 == 1) det = -det;
        out.push_back(std::move(det));
    }
    return out;
}

}  // namespace

std::vector<MultiPoly> DeterminantalCurveFamily::minors() const { return matrix_minors(matrix); }

std::vector<MultiPoly> DeterminantalCurveFamily::minors_perturbed() const {
    return matrix_minors(matrix_perturbed);
}

DeterminantalCurveFamily build_cpqr_family(int p, int q, int r) {
    if (p < 2 || q < 2 || r < 2) throw algebra_error("build_cpqr_family: need p, q, r >= 2");
    DeterminantalCurveFamily fam;
    fam.p = p;
    fam.q = q;
    fam.r = r;
    fam.space_vars = {"x", "y", "z"};
    fam.base_vars = {"s1", "s2", "s3"};
    for (int i = 1; i < p; ++i) fam.base_vars.push_back("a" + std::to_string(i));
    for (int i = 1; i < q; ++i) fam.base_vars.push_back("b" + std::to_string(i));
    for (int i = 1; i < r; ++i) fam.base_vars.push_back("c" + std::to_string(i));
    fam.base_vars.push_back("d");
    fam.ring_vars = fam.space_vars;
    for (const auto& v : fam.base_vars) fam.ring_vars.push_back(v);

    const auto& sv = fam.space_vars;
    auto S = [&](const std::string& n) { return MultiPoly::variable(sv, n); };
    MultiPoly zero_s(sv);
    fam.matrix = {{S("x"), S("y"), zero_s}, {zero_s, S("y"), S("z")}};

    const auto& rv = fam.ring_vars;
    auto R = [&](const std::string& n) { return MultiPoly::variable(rv, n); };
    // Constant perturbations spanning the miniversal directions of the axes.
    fam.matrix_perturbed = {{R("x"), R("y"), R("s1")}, {R("s2"), R("y") + R("s3"), R("z")}};

    fam.f = MultiPoly::variable(sv, "x", p) + MultiPoly::variable(sv, "y", q) +
            MultiPoly::variable(sv, "z", r);

    MultiPoly F = fam.f.embedded(rv) + R("d");
    for (int i = 1; i < p; ++i) F += R("a" + std::to_string(i)) * R("x").pow(static_cast<unsigned>(p - i));
    for (int i = 1; i < q; ++i) F += R("b" + std::to_string(i)) * R("y").pow(static_cast<unsigned>(q - i));
    for (int i = 1; i < r; ++i) F += R("c" + std::to_string(i)) * R("z").pow(static_cast<unsigned>(r - i));
    fam.F = F;
    return fam;
}

ICISFamily build_icis_family(const std::vector<std::string>& vars, std::vector<MultiPoly> g,
                             MultiPoly f) {
    if (g.empty()) throw algebra_error("build_icis_family: need k >= 1 equations");
    for (const auto& gi : g)
        if (gi.vars() != vars) throw algebra_error("build_icis_family: ring mismatch");
    if (f.vars() != vars) throw algebra_error("build_icis_family: ring mismatch");
    if (g.size() >= vars.size())
        throw algebra_error("build_icis_family: k must be below the ambient dimension");
    return ICISFamily{vars, std::move(g), std::move(f)};
}

Json poly_to_json(const MultiPoly& p) {
    Json j;
    j["vars"] = p.vars();
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exp"] = e;
        t["coef"] = c.str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

MultiPoly poly_from_json(const Json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    MultiPoly p(vars);
    for (const auto& t : j.at("terms")) {
        Exponents e = t.at("exp").get<Exponents>();
        p.add_term(e, Rational::parse(t.at("coef").get<std::string>()));
    }
    return p;
}

Json family_to_json(const NodeFamily& fam) {
    Json j;
    j["kind"] = "node";
    j["p"] = fam.p;
    j["q"] = fam.q;
    j["variables"] = std::vector<std::string>{"x", "y"};
    j["parameters"] = fam.base_vars;
    j["F"] = poly_to_json(fam.F);
    j["pi1"] = poly_to_json(fam.pi1);
    j["H"] = poly_to_json(fam.H);
    return j;
}

Json family_to_json(const DeterminantalCurveFamily& fam) {
    Json j;
    j["kind"] = "curve";
    j["p"] = fam.p;
    j["q"] = fam.q;
    j["r"] = fam.r;
    j["variables"] = fam.space_vars;
    j["parameters"] = fam.base_vars;
    Json rows = Json::array();
    for (const auto& row : fam.matrix_perturbed) {
        Json jr = Json::array();
        for (const auto& e : row) jr.push_back(poly_to_json(e));
        rows.push_back(std::move(jr));
    }
    j["matrix_perturbed"] = std::move(rows);
    j["f"] = poly_to_json(fam.f);
    j["F"] = poly_to_json(fam.F);
    return j;
}

Json family_to_json(const ICISFamily& fam) {
    Json j;
    j["kind"] = "icis";
    j["variables"] = fam.vars;
    j["parameters"] = Json::array();
    Json gs = Json::array();
    for (const auto& gi : fam.g) gs.push_back(poly_to_json(gi));
    j["g"] = std::move(gs);
    j["f"] = poly_to_json(fam.f);
    return j;
}

NodeFamily node_family_from_json(const Json& j) {
    if (j.at("kind") != "node") throw algebra_error("node_family_from_json: wrong kind");
    NodeFamily fam = build_node_family(j.at("p").get<int>(), j.at("q").get<int>());
    if (poly_from_json(j.at("F")) != fam.F || poly_from_json(j.at("H")) != fam.H)
        throw algebra_error("node_family_from_json: polynomial data does not match (p,q)");
    return fam;
}

DeterminantalCurveFamily curve_family_from_json(const Json& j) {
    if (j.at("kind") != "curve") throw algebra_error("curve_family_from_json: wrong kind");
    DeterminantalCurveFamily fam =
        build_cpqr_family(j.at("p").get<int>(), j.at("q").get<int>(), j.at("r").get<int>());
    if (poly_from_json(j.at("F")) != fam.F)
        throw algebra_error("curve_family_from_json: unfolding mismatch");
    return fam;
}

ICISFamily icis_family_from_json(const Json& j) {
    if (j.at("kind") != "icis") throw algebra_error("icis_family_from_json: wrong kind");
    std::vector<MultiPoly> g;
    for (const auto& gi : j.at("g")) g.push_back(poly_from_json(gi));
    return build_icis_family(j.at("variables").get<std::vector<std::string>>(), std::move(g),
                             poly_from_json(j.at("f")));
}

}  // namespace minifold
