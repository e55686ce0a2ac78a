#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "forge/errors.hpp"
#include "forge/report.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw forge::ConfigError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const forge::RunResult& result, const std::string& report_path) {
    std::string text = result.report.dump(2);
    text.push_back('\n');
    if (report_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(report_path, std::ios::binary);
        if (!out) throw forge::ConfigError("cannot write report to " + report_path);
        out << text;
        std::cerr << "report written to " << report_path << "\n";
    }
    if (result.all_ok) {
        std::cerr << "all verdicts pass\n";
    } else {
        std::string first = "?";
        for (const auto& step : result.report["steps"]) {
            if (step.contains("verdict") && step["verdict"] == "fail") {
                first = step.value("name", "?");
                break;
            }
        }
        std::cerr << "verdict failed at step: " << first << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"forge: exact verification toolkit for graded-field deformations"};
    app.require_subcommand(1);
    app.fallthrough();

    forge::RunConfig cfg;
    std::string config_path;
    std::string report_path;
    bool max_arity_set = false;

    app.add_option("--config", config_path, "JSON config file; its values override flags");
    app.add_option("--report", report_path, "write the report to this path instead of stdout");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "grading parameter (positive even)");
        sub->add_option("--max-arity", cfg.max_arity, "verify identities through this arity")
            ->each([&](const std::string&) { max_arity_set = true; });
        sub->add_option("--order-bound", cfg.order_bound, "slot-order bound for the primitive solver");
        sub->add_option("--t-window-lo", cfg.t_window_lo, "lower t-exponent for solver coefficients");
        sub->add_option("--t-window-hi", cfg.t_window_hi, "upper t-exponent for solver coefficients");
        sub->add_option("--seed", cfg.seed, "seed for sampled checks");
        sub->add_option("--samples", cfg.sample_count, "tuples per sampled identity check");
        sub->add_option("--auts", cfg.aut_count, "number of random automorphism specs");
        sub->add_flag("--with-timings", cfg.with_timings, "include wall-clock timings in the report");
    };

    auto* demo = app.add_subcommand("demo", "full pipeline: cocycles, extension, obstructions, invariants");
    add_common(demo);
    std::vector<std::string> aut_paths;
    demo->add_option("--f1", aut_paths, "extra automorphism spec files (json)");

    auto* hh = app.add_subcommand("hh", "brute-force Hochschild table of a small graded algebra");
    std::string hh_file;
    int imax = 3;
    hh->add_option("file", hh_file, "algebra json")->required();
    hh->add_option("--imax", imax, "top cohomological degree");

    auto* kun = app.add_subcommand("kunneth", "compare HH of a tensor product against the convolution");
    std::string a_file, b_file;
    kun->add_option("a", a_file, "left algebra json")->required();
    kun->add_option("b", b_file, "right algebra json")->required();
    kun->add_option("--imax", imax, "top cohomological degree");

    auto* lau = app.add_subcommand("laurent", "Hochschild cohomology of k[t,t^-1] via the Koszul resolution");
    lau->add_option("--imax", imax, "top cohomological degree")->check(CLI::Range(2, 64));
    lau->add_option("--seed", cfg.seed, "seed for the sampled exactness checks");

    auto* obs = app.add_subcommand("obstruction", "morphism-extension obstruction certificate");
    std::string f1_file;
    obs->add_option("--f1", f1_file, "automorphism spec json")->required();
    add_common(obs);

    auto* twc = app.add_subcommand("tw", "twisted complex tools");
    auto* twcheck = twc->add_subcommand("check", "Maurer-Cartan check of a twisted complex");
    std::string tw_file;
    bool tw_deformed = false;
    twcheck->add_option("file", tw_file, "twisted complex json")->required();
    twcheck->add_flag("--deformed", tw_deformed, "check against the deformed structure instead of the strict one");
    add_common(twcheck);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (const char* env = std::getenv("FORGE_SIZE_LIMIT")) cfg.size_limit = std::stoull(env);
        if (!max_arity_set) cfg.max_arity = 2 * cfg.n + 3;
        if (!config_path.empty()) {
            cfg = forge::RunConfig::from_json(forge::Json::parse(slurp(config_path)), cfg);
        }
        for (const auto& p : aut_paths) cfg.aut_files.push_back(slurp(p));

        forge::RunResult result;
        if (*demo) {
            result = forge::cmd_demo(cfg);
        } else if (*hh) {
            result = forge::cmd_hh(slurp(hh_file), imax, cfg);
        } else if (*kun) {
            result = forge::cmd_kunneth(slurp(a_file), slurp(b_file), imax, cfg);
        } else if (*lau) {
            result = forge::cmd_laurent(imax, cfg);
        } else if (*obs) {
            result = forge::cmd_obstruction(slurp(f1_file), cfg);
        } else if (*twcheck) {
            result = forge::cmd_tw_check(slurp(tw_file), tw_deformed, cfg);
        } else {
            std::cerr << "no subcommand selected\n";
            return 2;
        }
        emit(result, report_path);
        return result.exit_code;
    } catch (const forge::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const forge::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const forge::SizeLimitExceeded& e) {
        std::cerr << "size limit: " << e.what() << "\n";
        return 2;
    } catch (const forge::InvalidAlgebra& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const forge::InvalidAutomorphism& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const forge::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
