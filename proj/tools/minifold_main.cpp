#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "minifold/driver.hpp"
#include "minifold/groebner.hpp"
#include "minifold/parse.hpp"

using namespace minifold;

namespace {

std::vector<Rational> parse_base(const std::string& csv) {
    try {
        std::vector<Rational> out;
        std::string cur;
        for (char c : csv) {
            if (c == ',') {
                out.push_back(Rational::parse(cur));
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        if (!cur.empty()) out.push_back(Rational::parse(cur));
        return out;
    } catch (const algebra_error& e) {
        throw parse_error(std::string("--base: ") + e.what());
    }
}

int emit(const RunResult& rr, const std::string& out_path) {
    std::string text = report_to_string(rr.report);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open " << out_path << "\n";
            return exit_usage;
        }
        f << text;
    }
    return rr.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact deformation families, residue pairings and F-manifold checks"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string base_csv, config_path;
    if (const char* env = std::getenv("MINIFOLD_TRUNC")) cfg.trunc = std::atoi(env);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--base", base_csv, "base point values, comma-separated rationals");
        sub->add_option("--trunc", cfg.trunc, "series truncation order (default p+q+4)");
        sub->add_option("--samples", cfg.samples, "number of sampled base points");
        sub->add_option("--seed", cfg.seed, "RNG seed");
        sub->add_option("--out", cfg.out_path, "write the JSON report to a file");
        sub->add_option("--config", config_path, "JSON config file (flags override it)");
    };

    CLI::App* node = app.add_subcommand("node", "double-point family checks");
    node->add_option("--p", cfg.p, "x-exponent (>= 2)");
    node->add_option("--q", cfg.q, "y-exponent (>= 2)");
    add_common(node);

    CLI::App* curve = app.add_subcommand("curve", "space-curve family checks");
    curve->add_option("--p", cfg.p, "x-exponent (>= 2)");
    curve->add_option("--q", cfg.q, "y-exponent (>= 2)");
    curve->add_option("--r", cfg.r, "z-exponent (>= 2)");
    add_common(curve);

    CLI::App* icis = app.add_subcommand("icis", "complete-intersection checks");
    icis->add_option("--g", cfg.g_polys, "defining equation (repeatable)");
    icis->add_option("--f", cfg.f_poly, "function on the intersection");
    add_common(icis);

    CLI::App* verify = app.add_subcommand("verify", "run the full invariant suite");
    verify->add_option("--suite", cfg.suite, "all | node-only | curve-only | icis-only");
    verify->add_flag("--mutate", cfg.mutate, "inject a tensor mutation (negative control)");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (!config_path.empty()) {
            std::ifstream f(config_path);
            if (!f) throw config_error("cannot read config file " + config_path);
            Json j = Json::parse(f);
            RunConfig from_file = config_from_json(j);
            // flags already parsed into cfg win for scalar fields that were set
            RunConfig merged = from_file;
            for (CLI::App* sub : {node, curve, icis, verify}) {
                if (!sub->parsed()) continue;
                auto taken = [&](const std::string& name) {
                    return sub->count(name) > 0;
                };
                if (taken("--p")) merged.p = cfg.p;
                if (taken("--q")) merged.q = cfg.q;
                if (sub == curve && taken("--r")) merged.r = cfg.r;
                if (taken("--trunc")) merged.trunc = cfg.trunc;
                if (taken("--samples")) merged.samples = cfg.samples;
                if (taken("--seed")) merged.seed = cfg.seed;
                if (taken("--out")) merged.out_path = cfg.out_path;
                if (sub == verify && taken("--suite")) merged.suite = cfg.suite;
                if (sub == icis && taken("--g")) merged.g_polys = cfg.g_polys;
                if (sub == icis && taken("--f")) merged.f_poly = cfg.f_poly;
            }
            merged.mutate = cfg.mutate || from_file.mutate;
            cfg = merged;
        }
        if (!base_csv.empty()) cfg.base = parse_base(base_csv);

        RunResult rr;
        if (node->parsed()) {
            cfg.family = "node";
            rr = cmd_node(cfg);
        } else if (curve->parsed()) {
            cfg.family = "curve";
            rr = cmd_curve(cfg);
        } else if (icis->parsed()) {
            cfg.family = "icis";
            rr = cmd_icis(cfg);
        } else {
            cfg.family = "verify";
            rr = cmd_verify(cfg);
        }
        return emit(rr, cfg.out_path);
    } catch (const certificate_error& e) {
        std::cerr << "certificate/truncation failure: " << e.what() << "\n";
        return exit_certificate;
    } catch (const truncation_error& e) {
        std::cerr << "truncation failure: " << e.what() << "\n";
        return exit_certificate;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const config_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_check_failed;
    }
}
