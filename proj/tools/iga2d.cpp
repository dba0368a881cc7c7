// Command-line front end: single runs, reference-table reproduction,
// stability verification, and field sampling.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "iga/analysis.hpp"
#include "iga/runner.hpp"

namespace {

struct CommonFlags {
    iga::RunConfig config;
};

void add_config_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--problem", flags.config.problem, "Model problem")
        ->check(CLI::IsMember({"p1", "ej"}))
        ->capture_default_str();
    cmd->add_option("--method", flags.config.method, "Variational formulation")
        ->check(CLI::IsMember({"galerkin", "ls", "gls", "supg"}))
        ->capture_default_str();
    cmd->add_option("--mesh", flags.config.mesh,
                    "Mesh spec: uniform:NX, uniform:NXxNY, refined-p1, refined-ej")
        ->capture_default_str();
    cmd->add_option("--epsilon", flags.config.epsilon, "Diffusion coefficient")
        ->capture_default_str();
    cmd->add_option("--quad", flags.config.quad_points,
                    "Quadrature points per direction (default degree+2; error norms use "
                    "at least degree+3)")
        ->check(CLI::Range(1, 8));
    cmd->add_option("--h1", flags.config.h1, "H1 error definition")
        ->check(CLI::IsMember({"full", "seminorm"}))
        ->capture_default_str();
    cmd->add_option("--supg-residual", flags.config.supg_residual,
                    "Sign convention of the SUPG strong residual")
        ->check(CLI::IsMember({"paper", "consistent"}))
        ->capture_default_str();
}

int cmd_run(const CommonFlags& flags, const std::string& format) {
    const iga::RunResult result = iga::run_single(flags.config);
    if (format == "csv")
        std::cout << iga::to_csv(result);
    else if (format == "json")
        std::cout << iga::to_json(result);
    else
        std::cout << iga::to_text(result);
    return 0;
}

int cmd_tables(const std::string& out_dir) {
    const auto tables = iga::run_tables(out_dir);
    iga::print_tables_summary(tables, std::cout);
    std::cout << "wrote " << tables.size() + 2 << " csv files to " << out_dir << "\n";
    return 0;
}

struct VerifyCase {
    std::string mesh;
    std::string beta;  // printable
    iga::StabilityReport report;
};

int cmd_verify(const std::string& format) {
    using iga::format_double;
    bool all_ok = true;
    std::vector<std::pair<std::string, iga::InverseInequality>> inverse;
    for (int n : {4, 8, 10, 16}) {
        const std::string mesh = "uniform:" + std::to_string(n);
        inverse.emplace_back(mesh, iga::verify_inverse_inequality(iga::parse_mesh(mesh)));
        all_ok = all_ok && inverse.back().second.observed <= inverse.back().second.bound;
    }
    std::vector<VerifyCase> coercivity;
    for (int n : {8, 10, 16}) {
        for (const double eps : {1e-3, 5e-4, 1e-4}) {
            for (const char* problem : {"p1", "ej"}) {
                VerifyCase vc;
                vc.mesh = "uniform:" + std::to_string(n);
                const iga::ProblemSpec spec = iga::make_problem(problem, eps);
                vc.beta = "(" + format_double(spec.beta_x) + "," + format_double(spec.beta_y) + ")";
                vc.report = iga::verify_coercivity(iga::parse_mesh(vc.mesh), spec);
                if (vc.report.condition_satisfied)
                    all_ok = all_ok && vc.report.coercivity_min_ratio >= 0.5 - 1e-8;
                all_ok = all_ok && vc.report.c_inverse_observed <= vc.report.c_inverse_bound;
                coercivity.push_back(std::move(vc));
            }
        }
    }

    if (format == "json") {
        nlohmann::ordered_json j;
        j["inverse_inequality"] = nlohmann::ordered_json::array();
        for (const auto& [mesh, inv] : inverse)
            j["inverse_inequality"].push_back(
                {{"mesh", mesh}, {"observed", inv.observed}, {"bound", inv.bound}});
        j["coercivity"] = nlohmann::ordered_json::array();
        for (const VerifyCase& vc : coercivity)
            j["coercivity"].push_back({{"mesh", vc.mesh},
                                       {"beta", vc.beta},
                                       {"epsilon", vc.report.epsilon},
                                       {"h", vc.report.h},
                                       {"c_inverse_observed", vc.report.c_inverse_observed},
                                       {"c_inverse_bound", vc.report.c_inverse_bound},
                                       {"epsilon_threshold", vc.report.epsilon_threshold},
                                       {"coercivity_min_ratio", vc.report.coercivity_min_ratio},
                                       {"condition_satisfied", vc.report.condition_satisfied}});
        j["all_ok"] = all_ok;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& [mesh, inv] : inverse)
            std::cout << "inverse-inequality " << mesh
                      << " observed=" << format_double(inv.observed)
                      << " bound=" << format_double(inv.bound)
                      << (inv.observed <= inv.bound ? " ok" : " VIOLATED") << "\n";
        for (const VerifyCase& vc : coercivity) {
            const iga::StabilityReport& r = vc.report;
            std::cout << "coercivity " << vc.mesh << " beta=" << vc.beta
                      << " epsilon=" << format_double(r.epsilon)
                      << " threshold=" << format_double(r.epsilon_threshold)
                      << " ratio=" << format_double(r.coercivity_min_ratio);
            if (!r.condition_satisfied)
                std::cout << " (condition not applicable)";
            else
                std::cout << (r.coercivity_min_ratio >= 0.5 - 1e-8 ? " ok" : " VIOLATED");
            std::cout << "\n";
        }
        std::cout << (all_ok ? "verify: all checks passed" : "verify: VIOLATIONS found") << "\n";
    }
    return all_ok ? 0 : 1;
}

int cmd_sample(const CommonFlags& flags, int nx, int ny, const std::string& out_path) {
    const iga::ProblemSpec spec = iga::make_problem(flags.config.problem, flags.config.epsilon);
    const iga::TensorMesh mesh = iga::parse_mesh(flags.config.mesh);
    iga::AssemblyOptions opts;
    opts.quad_points = flags.config.quad_points;
    opts.supg_residual = flags.config.supg_residual == "consistent"
                             ? iga::SupgResidual::consistent
                             : iga::SupgResidual::paper;
    const iga::SolutionField field =
        iga::solve(iga::parse_method(flags.config.method), mesh, spec, opts);
    const auto rows = iga::sample_field(field, spec, nx, ny);

    std::ostringstream os;
    os << "x,y,u_h,u_exact,abs_err\n";
    for (const iga::SampleRow& r : rows)
        os << iga::format_double(r.x) << ',' << iga::format_double(r.y) << ','
           << iga::format_double(r.u_h) << ',' << iga::format_double(r.u_exact) << ','
           << iga::format_double(r.abs_err) << "\n";
    if (out_path == "-") {
        std::cout << os.str();
    } else {
        std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
        if (!file) throw std::runtime_error("cannot write " + out_path);
        file << os.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tensor-product B-spline solver comparing stabilized weak forms for "
                 "advection-dominated advection-diffusion"};
    app.require_subcommand(1);

    CommonFlags run_flags;
    std::string run_format = "text";
    CLI::App* run = app.add_subcommand("run", "Solve one configuration and report errors");
    add_config_flags(run, run_flags);
    run->add_option("--format", run_format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();

    std::string tables_out = "tables";
    CLI::App* tables = app.add_subcommand("tables", "Reproduce the bundled reference tables");
    tables->add_option("--out", tables_out, "Output directory")->capture_default_str();

    std::string verify_format = "text";
    CLI::App* verify = app.add_subcommand("verify", "Check the stability bounds numerically");
    verify->add_option("--format", verify_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    CommonFlags sample_flags;
    int sample_nx = 101, sample_ny = 101;
    std::string sample_out = "-";
    CLI::App* sample = app.add_subcommand("sample", "Write solution samples on a point grid");
    add_config_flags(sample, sample_flags);
    sample->add_option("--nx", sample_nx, "Grid points in x")->check(CLI::Range(2, 100000));
    sample->add_option("--ny", sample_ny, "Grid points in y")->check(CLI::Range(2, 100000));
    sample->add_option("--out", sample_out, "Output file ('-' for stdout)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help exits clean, usage errors exit 2
    }

    try {
        if (run->parsed()) return cmd_run(run_flags, run_format);
        if (tables->parsed()) return cmd_tables(tables_out);
        if (verify->parsed()) return cmd_verify(verify_format);
        if (sample->parsed()) return cmd_sample(sample_flags, sample_nx, sample_ny, sample_out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
