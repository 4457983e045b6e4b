#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "polyangle/instance.hpp"
#include "polyangle/oracle.hpp"
#include "polyangle/report.hpp"
#include "polyangle/svg.hpp"

using namespace polyangle;

namespace {

// Exit codes: 0 success, 1 bound or certification failure, 2 input error,
// 3 internal geometry diagnostic.
constexpr int kExitOk = 0;
constexpr int kExitBoundFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitGeometryDiagnostic = 3;

Shape shape_from_name(const std::string& name) {
    if (name == "random") return Shape::RandomUniform;
    if (name == "regular-center") return Shape::RegularPlusCenter;
    return Shape::RegularPlusRandomInterior;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << content;
}

int cmd_gen(const std::string& shape, int n, std::uint64_t seed, const std::string& out_path,
            int hull_k, const std::vector<double>& box) {
    InstanceSpec spec;
    spec.shape = shape_from_name(shape);
    spec.n = n;
    spec.seed = seed;
    spec.box = {box[0], box[1], box[2], box[3]};
    spec.hull_k = hull_k;
    const PointSet ps = generate(spec);
    write_points(ps, out_path);
    std::cout << "wrote " << ps.size() << " points to " << out_path << "\n";
    return kExitOk;
}

int cmd_run(const std::string& in_path, const std::string& algo, bool global_hit,
            const std::string& svg_path, const std::string& json_path, bool timings) {
    const PointSet ps = read_points(in_path);

    RunOptions opt;
    opt.edgewise = algo == "edgewise" || algo == "all";
    opt.onion = algo == "onion" || algo == "all";
    opt.oracle = algo == "oracle" || (algo == "all" && ps.size() <= 10);
    opt.onion_global = global_hit;
    opt.timings = timings;

    const RunOutcome outcome = run_instance(ps, opt, in_path);
    std::cout << human_summary(outcome.report);

    if (!json_path.empty()) write_file(json_path, outcome.report.dump(2) + "\n");
    if (!svg_path.empty()) {
        SvgOptions svg_opt;
        svg_opt.hull = true;
        svg_opt.segments = true;
        svg_opt.layers = opt.onion;
        Polygon drawn;
        if (outcome.onion) {
            drawn = outcome.onion->polygon;
        } else if (outcome.edgewise) {
            drawn = outcome.edgewise->polygon;
        } else {
            drawn = ensure_ccw(Polygon{outcome.report["oracle"]["best"].get<std::vector<int>>()}, ps);
        }
        write_file(svg_path, render_svg(ps, drawn, svg_opt));
    }
    return outcome.bounds_ok ? kExitOk : kExitBoundFailure;
}

int cmd_certify(int n_max, int trials, std::uint64_t seed) {
    int done = 0;
    for (int t = 0; t < trials; ++t) {
        InstanceSpec spec;
        spec.shape = Shape::RandomUniform;
        spec.n = 5 + static_cast<int>(static_cast<std::uint64_t>(t) % static_cast<std::uint64_t>(n_max - 4));
        spec.seed = seed * 1000003ULL + static_cast<std::uint64_t>(t);
        const PointSet ps = generate(spec);
        certify_bounds(ps); // throws CertificationFailure on any violation
        ++done;
        if (done % 50 == 0) std::cout << "certified " << done << "/" << trials << "\n";
    }
    std::cout << "certified " << done << " random instances with n in [5.." << n_max
              << "]: theta within both bounds on every one\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"angle-bounded simple polygonization of planar point sets"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate a point-set file");
    std::string gen_shape = "random";
    int gen_n = 20;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    int gen_hull = 0;
    std::vector<double> gen_box{0.0, 0.0, 1.0, 1.0};
    gen->add_option("--shape", gen_shape, "random | regular-center | regular-random")
        ->check(CLI::IsMember({"random", "regular-center", "regular-random"}));
    gen->add_option("--n", gen_n, "number of points")->required();
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--out", gen_out, "output file (.csv or .json)")->required();
    gen->add_option("--hull", gen_hull, "regular-random: hull corner count (default n/2)");
    gen->add_option("--box", gen_box, "bounding box: xmin ymin xmax ymax")->expected(4);

    auto* run = app.add_subcommand("run", "polygonize an instance and check the angle bounds");
    std::string run_in, run_algo = "all", run_svg, run_json;
    bool run_global = false, run_timings = false;
    run->add_option("--in", run_in, "input point file")->required();
    run->add_option("--algo", run_algo, "edgewise | onion | oracle | all")
        ->check(CLI::IsMember({"edgewise", "onion", "oracle", "all"}));
    run->add_flag("--onion-global-hit", run_global,
                  "also report the one-claim-per-round peeling for comparison");
    run->add_option("--svg", run_svg, "write an SVG figure");
    run->add_option("--json", run_json, "write the JSON report");
    run->add_flag("--timings", run_timings, "include wall-clock timings in the report");

    auto* cert = app.add_subcommand("certify", "brute-force bound certification on random instances");
    int cert_nmax = 9, cert_trials = 200;
    std::uint64_t cert_seed = 0;
    cert->add_option("--n-max", cert_nmax, "largest instance size")->check(CLI::Range(5, 10));
    cert->add_option("--trials", cert_trials, "number of random instances");
    cert->add_option("--seed", cert_seed, "seed for the instance sequence");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_shape, gen_n, gen_seed, gen_out, gen_hull, gen_box);
        if (run->parsed()) return cmd_run(run_in, run_algo, run_global, run_svg, run_json, run_timings);
        if (cert->parsed()) return cmd_certify(cert_nmax, cert_trials, cert_seed);
    } catch (const NoVisibleEdge& e) {
        std::cerr << "geometry diagnostic: " << e.what() << "\n";
        return kExitGeometryDiagnostic;
    } catch (const UnclaimedPoint& e) {
        std::cerr << "geometry diagnostic: " << e.what() << "\n";
        return kExitGeometryDiagnostic;
    } catch (const CertificationFailure& e) {
        std::cerr << "certification failure: " << e.what() << "\n";
        return kExitBoundFailure;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
