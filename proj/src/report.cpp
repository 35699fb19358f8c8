#include "minifold/report.hpp"

namespace minifold {

RunConfig config_from_json(const Json& j) {
    RunConfig cfg;
    try {
        if (j.contains("family")) cfg.family = j.at("family").get<std::string>();
        if (j.contains("p")) cfg.p = j.at("p").get<int>();
        if (j.contains("q")) cfg.q = j.at("q").get<int>();
        if (j.contains("r")) cfg.r = j.at("r").get<int>();
        if (j.contains("base"))
            for (const auto& s : j.at("base")) cfg.base.push_back(Rational::parse(s.get<std::string>()));
        if (j.contains("trunc")) cfg.trunc = j.at("trunc").get<int>();
        if (j.contains("samples")) cfg.samples = j.at("samples").get<int>();
        if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("out")) cfg.out_path = j.at("out").get<std::string>();
        if (j.contains("suite")) cfg.suite = j.at("suite").get<std::string>();
        if (j.contains("g"))
            for (const auto& s : j.at("g")) cfg.g_polys.push_back(s.get<std::string>());
        if (j.contains("f")) cfg.f_poly = j.at("f").get<std::string>();
        if (j.contains("mutate")) cfg.mutate = j.at("mutate").get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw config_error(std::string("config: ") + e.what());
    }
    return cfg;
}

Json config_to_json(const RunConfig& cfg) {
    Json j;
    j["family"] = cfg.family;
    j["p"] = cfg.p;
    j["q"] = cfg.q;
    if (cfg.family == "curve") j["r"] = cfg.r;
    Json base = Json::array();
    for (const auto& v : cfg.base) base.push_back(v.str());
    j["base"] = std::move(base);
    j["trunc"] = cfg.trunc;
    j["samples"] = cfg.samples;
    j["seed"] = cfg.seed;
    if (cfg.family == "icis") {
        j["g"] = cfg.g_polys;
        j["f"] = cfg.f_poly;
    }
    if (!cfg.suite.empty()) j["suite"] = cfg.suite;
    if (cfg.mutate) j["mutate"] = true;
    return j;
}

Json rational_to_json(const Rational& r) { return Json(r.str()); }

Json vector_to_json(const std::vector<Rational>& v) {
    Json j = Json::array();
    for (const auto& x : v) j.push_back(x.str());
    return j;
}

Json matrix_to_json(const Matrix<Rational>& m) {
    Json j = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).str());
        j.push_back(std::move(row));
    }
    return j;
}

Json upoly_to_json(const Upoly& p) {
    Json j = Json::array();
    for (const auto& c : p.coeffs()) j.push_back(c.str());
    return j;
}

Json checks_to_json(const std::vector<CheckOutcome>& checks) {
    Json j = Json::array();
    for (const auto& c : checks) {
        Json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.details.is_null()) e["details"] = c.details;
        j.push_back(std::move(e));
    }
    return j;
}

bool all_pass(const std::vector<CheckOutcome>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

}  // namespace minifold
