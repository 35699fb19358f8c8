#ifndef MINIFOLD_DRIVER_HPP
#define MINIFOLD_DRIVER_HPP

#include "minifold/report.hpp"

namespace minifold {

struct RunResult {
    Json report;
    int exit_code = exit_ok;
};

RunResult cmd_node(const RunConfig& cfg);
RunResult cmd_curve(const RunConfig& cfg);
RunResult cmd_icis(const RunConfig& cfg);
RunResult cmd_verify(const RunConfig& cfg);

// Serializes with a fixed layout so identical configs give identical bytes.
std::string report_to_string(const Json& report);

}  // namespace minifold

#endif
