// vexh: batch front-end for the variable-exponent harmonic analysis suites.
// Runs the selected verification suites over a deterministic generated corpus
// and writes report.json plus per-suite CSV scalars.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vexh/config.hpp"
#include "vexh/suites.hpp"

namespace {

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
    return buf;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"variable exponent Hardy space verification suites"};
    std::string config_path;
    std::string suite = "all";
    std::string out_dir;
    std::uint64_t seed = 0;
    int jobs = 0;
    double grid_scale = 1.0;

    app.add_option("--config", config_path, "config file (sectioned key = value)")->required();
    app.add_option("--suite", suite, "lebesgue|operators|halfspace|maximal|characterize|all");
    app.add_option("--seed", seed, "override [run] seed");
    app.add_option("--out", out_dir, "output directory (default $VEXH_OUT or ./out)");
    app.add_option("--jobs", jobs, "worker pool size (0 = hardware)");
    app.add_option("--grid-scale", grid_scale, "multiply grid resolution (refinement studies)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (out_dir.empty()) {
        const char* env = std::getenv("VEXH_OUT");
        out_dir = env != nullptr ? env : "out";
    }

    const std::vector<std::string> known{"lebesgue", "operators", "halfspace", "maximal",
                                         "characterize", "all"};
    if (std::find(known.begin(), known.end(), suite) == known.end()) {
        std::cerr << "usage error: unknown suite '" << suite << "'\n";
        return 2;
    }

    vexh::ConfigFile cfg;
    vexh::SuiteContext ctx;
    try {
        cfg = vexh::ConfigFile::parse_file(config_path);
        ctx = vexh::make_context(cfg, seed, jobs, grid_scale);
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    std::vector<vexh::SuiteResult> results;
    auto want = [&](const std::string& name) { return suite == "all" || suite == name; };
    try {
        if (want("lebesgue")) results.push_back(vexh::run_lebesgue_suite(ctx));
        if (want("operators")) results.push_back(vexh::run_operators_suite(ctx));
        if (want("halfspace")) results.push_back(vexh::run_halfspace_suite(ctx));
        if (want("maximal")) results.push_back(vexh::run_maximal_suite(ctx));
        if (want("characterize")) results.push_back(vexh::run_characterize_suite(ctx));
    } catch (const std::exception& e) {
        std::cerr << "suite error: " << e.what() << "\n";
        return 1;
    }

    nlohmann::ordered_json report;
    nlohmann::ordered_json header;
    header["timestamp"] = iso_timestamp();
    header["tool"] = "vexh";
    header["version"] = "0.1.0";
    header["config_path"] = config_path;
    header["suite"] = suite;
    header["seed"] = ctx.seed;
    header["jobs"] = ctx.jobs;
    header["grid_scale"] = grid_scale;
    header["grid"] = {{"dim", ctx.grid.dim},
                      {"period", ctx.grid.period},
                      {"points_per_axis", ctx.grid.points_per_axis}};
    // volatile fields (timestamp, wall clock) stay in the header so the
    // results object is byte-deterministic for a fixed config + seed
    nlohmann::ordered_json timings;
    for (const auto& r : results) timings[r.name] = r.seconds;
    header["timings"] = std::move(timings);
    header["config"] = cfg.raw_text;
    report["header"] = std::move(header);

    std::vector<std::string> all_failures;
    nlohmann::ordered_json body;
    for (const auto& r : results) {
        nlohmann::ordered_json jr;
        jr["failures"] = r.failures;
        jr["data"] = r.data;
        body[r.name] = std::move(jr);
        all_failures.insert(all_failures.end(), r.failures.begin(), r.failures.end());
    }
    body["summary"] = {{"pass", all_failures.empty()}, {"failures", all_failures}};
    report["results"] = std::move(body);

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    {
        std::ofstream out(out_dir + "/report.json");
        if (!out) {
            std::cerr << "cannot write " << out_dir << "/report.json\n";
            return 2;
        }
        out << report.dump(2) << '\n';
    }
    for (const auto& r : results) {
        std::ofstream csv(out_dir + "/" + r.name + "_scalars.csv");
        csv << "metric,kind,value\n";
        for (const auto& row : vexh::flatten_scalars(r))
            csv << row[0] << ',' << row[1] << ',' << row[2] << '\n';
    }

    std::ostringstream summary;
    summary << "vexh suite=" << suite << " grid=" << ctx.grid.dim << "d N="
            << ctx.grid.points_per_axis << " L=" << ctx.grid.period << " seed=" << ctx.seed
            << "\n";
    for (const auto& r : results)
        summary << "  " << r.name << ": " << (r.failures.empty() ? "pass" : "FAIL") << " ("
                << r.seconds << " s)\n";
    if (!all_failures.empty()) {
        summary << "failing records:\n";
        for (const auto& f : all_failures) summary << "  - " << f << "\n";
    }
    std::cout << summary.str();
    std::ofstream stxt(out_dir + "/summary.txt");
    stxt << summary.str();
    return all_failures.empty() ? 0 : 1;
}
