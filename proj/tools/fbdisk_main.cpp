#include "fbdisk/mesh_export.hpp"
#include "fbdisk/ribbon.hpp"
#include "fbdisk/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using fbdisk::format_double;

// exit codes: 0 ok, 1 config/usage/io error, 2 validation or check failure
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailedChecks = 2;

fbdisk::RibbonSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    fbdisk::RibbonSpec spec;
    spec.u2 = j.at("u2").get<double>();
    spec.s = j.at("s").get<double>();
    spec.q = j.at("q").get<double>();
    if (j.contains("quadrature_n")) spec.quadrature_n = j.at("quadrature_n").get<int>();
    spec.validate();
    return spec;
}

bool parse_grid(const std::string& text, int& nu, int& nv) {
    const auto x = text.find('x');
    if (x == std::string::npos) return false;
    try {
        nu = std::stoi(text.substr(0, x));
        nv = std::stoi(text.substr(x + 1));
    } catch (...) {
        return false;
    }
    return nu >= 2 && nv >= 2;
}

int cmd_build(const std::string& config, const std::optional<std::string>& out) {
    fbdisk::RibbonSpec spec;
    try {
        spec = load_spec(config);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    auto result = fbdisk::build_ribbon(spec);
    if (auto* fail = std::get_if<fbdisk::ValidationFailure>(&result)) {
        std::cerr << "ribbon validation failed: " << fail->property << " (" << fail->message
                  << "; worst at u = " << format_double(fail->worst_point)
                  << ", residual = " << format_double(fail->residual) << ")\n";
        return kExitFailedChecks;
    }
    const std::string summary = fbdisk::ribbon_summary_json(std::get<fbdisk::Ribbon>(result));
    std::cout << summary << "\n";
    if (out) {
        std::ofstream f(*out);
        if (!f) {
            std::cerr << "error: cannot write " << *out << "\n";
            return kExitUsage;
        }
        f << summary << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& config, double t, int nu, int nv, int c_samples,
               const std::string& out) {
    fbdisk::RibbonSpec spec;
    try {
        spec = load_spec(config);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    auto result = fbdisk::build_ribbon(spec);
    if (auto* fail = std::get_if<fbdisk::ValidationFailure>(&result)) {
        std::cerr << "ribbon validation failed: " << fail->property << "\n";
        return kExitFailedChecks;
    }
    const auto rep =
        fbdisk::run_verification(std::get<fbdisk::Ribbon>(result), t, nu, nv, c_samples);
    std::ofstream f(out);
    if (!f) {
        std::cerr << "error: cannot write " << out << "\n";
        return kExitUsage;
    }
    f << fbdisk::report_json(rep);
    for (const auto& c : rep.checks)
        std::cout << (c.passed ? "[pass] " : "[FAIL] ") << c.name
                  << "  worst = " << format_double(c.worst_residual) << "\n";
    return rep.all_passed() ? kExitOk : kExitFailedChecks;
}

int cmd_find_t0(const std::string& config, int nu, int nv, int iters, double t_lo, double t_hi,
                int c_samples) {
    fbdisk::RibbonSpec spec;
    try {
        spec = load_spec(config);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    auto result = fbdisk::build_ribbon(spec);
    if (auto* fail = std::get_if<fbdisk::ValidationFailure>(&result)) {
        std::cerr << "ribbon validation failed: " << fail->property << "\n";
        return kExitFailedChecks;
    }
    if (nu < 32 || nv < 32)
        std::cerr << "warning: grid " << nu << "x" << nv
                  << " is coarse; the witness is only certified at this resolution\n";
    const auto& rib = std::get<fbdisk::Ribbon>(result);
    double t0 = 0.0;
    try {
        t0 = fbdisk::find_t0(rib, nu, nv, t_lo, t_hi, iters,
                             fbdisk::default_c_samples(c_samples));
    } catch (const fbdisk::NoWitnessError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailedChecks;
    }
    const double margin = fbdisk::saddle_margin(fbdisk::ScaledRibbon(rib, t0), nu, nv);
    std::cout << "{\"t0_witness\": " << format_double(t0)
              << ", \"saddle_margin\": " << format_double(margin) << ", \"grid\": [" << nu
              << ", " << nv << "], \"iters\": " << iters << ", \"c_samples\": " << c_samples
              << "}\n";
    return kExitOk;
}

int cmd_export(const std::string& config, double t, int nu, int nv, const std::string& format,
               const std::string& out) {
    fbdisk::RibbonSpec spec;
    try {
        spec = load_spec(config);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    auto result = fbdisk::build_ribbon(spec);
    if (auto* fail = std::get_if<fbdisk::ValidationFailure>(&result)) {
        std::cerr << "ribbon validation failed: " << fail->property << "\n";
        return kExitFailedChecks;
    }
    const fbdisk::ScaledRibbon rib(std::get<fbdisk::Ribbon>(result), t);
    const auto mesh = fbdisk::build_mesh(rib, nu, nv);
    try {
        if (format == "obj") {
            fbdisk::write_obj(mesh, out + ".obj");
            fbdisk::write_csv(mesh, out + ".csv");
            std::cout << "wrote " << out << ".obj and " << out << ".csv ("
                      << mesh.vertices.size() << " vertices, " << mesh.faces.size()
                      << " faces)\n";
        } else {
            fbdisk::write_csv(mesh, out + ".csv");
            std::cout << "wrote " << out << ".csv (" << mesh.vertices.size() << " vertices)\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"free boundary saddle disks in the unit ball: build ribbon curves, "
                 "verify the surface geometry, search the deformation threshold, export meshes"};
    app.require_subcommand(1);

    std::string config;
    std::string grid = "200x200";
    std::string out;
    std::string format = "obj";
    double t = 1.0;
    double t_lo = 0.01, t_hi = 1.0;
    int iters = 20;
    int c_samples = 9;

    auto* build = app.add_subcommand("build", "build a ribbon from config, print landmarks");
    build->add_option("--config", config, "ribbon config JSON")->required();
    std::string build_out;
    build->add_option("--out", build_out, "also write the summary JSON here");

    auto* verify = app.add_subcommand("verify", "run the verification battery at a fixed t");
    verify->add_option("--config", config, "ribbon config JSON")->required();
    verify->add_option("--t", t, "homothety factor in (0,1]")->check(CLI::Range(1e-9, 1.0));
    verify->add_option("--grid", grid, "scan grid NUxNV (default 200x200)");
    verify->add_option("--c-samples", c_samples, "number of horizontal levels in [-1,1]");
    verify->add_option("--out", out, "report JSON path")->default_val("report.json");

    auto* findt0 = app.add_subcommand("find-t0", "bisect for a certified saddle witness t0");
    findt0->add_option("--config", config, "ribbon config JSON")->required();
    findt0->add_option("--grid", grid, "scan grid NUxNV (default 200x200)");
    findt0->add_option("--iters", iters, "bisection steps");
    findt0->add_option("--t-lo", t_lo, "lower end of the search range");
    findt0->add_option("--t-hi", t_hi, "upper end of the search range");
    findt0->add_option("--c-samples", c_samples, "number of horizontal levels in [-1,1]");

    auto* exp = app.add_subcommand("export", "export the surface mesh and curvature table");
    exp->add_option("--config", config, "ribbon config JSON")->required();
    exp->add_option("--t", t, "homothety factor in (0,1]")->check(CLI::Range(1e-9, 1.0));
    exp->add_option("--grid", grid, "mesh grid NUxNV (default 50x50)")->default_val("50x50");
    exp->add_option("--format", format, "obj or csv")->check(CLI::IsMember({"obj", "csv"}));
    exp->add_option("--out", out, "output base path (extension appended)")->required();

    CLI11_PARSE(app, argc, argv);

    int nu = 200, nv = 200;
    if (!parse_grid(grid, nu, nv)) {
        std::cerr << "error: bad --grid, expected NUxNV\n";
        return kExitUsage;
    }

    try {
        if (build->parsed())
            return cmd_build(config, build_out.empty() ? std::nullopt
                                                       : std::optional<std::string>(build_out));
        if (verify->parsed()) return cmd_verify(config, t, nu, nv, c_samples, out);
        if (findt0->parsed()) return cmd_find_t0(config, nu, nv, iters, t_lo, t_hi, c_samples);
        if (exp->parsed()) return cmd_export(config, t, nu, nv, format, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
