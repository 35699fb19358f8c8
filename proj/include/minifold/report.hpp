#ifndef MINIFOLD_REPORT_HPP
#define MINIFOLD_REPORT_HPP

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "minifold/fiber.hpp"
#include "minifold/linalg.hpp"

namespace minifold {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exit codes shared by the CLI and the drivers.
enum ExitCode : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_usage = 2,
    exit_certificate = 3,
};

struct RunConfig {
    std::string family = "node";  // node | curve | icis
    int p = 2, q = 2, r = 2;
    std::vector<Rational> base;   // base point values; empty -> family default
    int trunc = 0;                // 0 -> derived default (p+q+4)
    int samples = 5;
    std::uint64_t seed = 1;
    std::string out_path;         // empty -> stdout
    std::string suite = "all";    // for verify
    std::vector<std::string> g_polys;  // icis equations
    std::string f_poly;                // icis function
    bool mutate = false;          // negative-control hook for verify
};

RunConfig config_from_json(const Json& j);
Json config_to_json(const RunConfig& cfg);

// Exact-string JSON forms.
Json rational_to_json(const Rational& r);
Json vector_to_json(const std::vector<Rational>& v);
Json matrix_to_json(const Matrix<Rational>& m);
Json upoly_to_json(const Upoly& p);

struct CheckOutcome {
    std::string name;
    bool pass = false;
    Json details;  // may be null
};

Json checks_to_json(const std::vector<CheckOutcome>& checks);
bool all_pass(const std::vector<CheckOutcome>& checks);

}  // namespace minifold

#endif
