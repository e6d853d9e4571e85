// czkit command line: kernel verification, operator matrices and
// compactness reports, paraproducts, the T(1) limiting functional, and
// CMO moduli.  Reports are deterministic JSON; see README for the config
// grammar and exit-code contract.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "czkit/cache.hpp"
#include "czkit/config.hpp"
#include "czkit/kernels.hpp"
#include "czkit/operators.hpp"
#include "czkit/paraproduct.hpp"
#include "czkit/parallel.hpp"
#include "czkit/report.hpp"
#include "czkit/spaces.hpp"
#include "czkit/wavelets.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct CommonArgs {
    std::string config_path;
    std::string out_path;
    std::string cache_dir;
    std::string window_override;
    std::string kernel_override;
    int threads = 0;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "run configuration file");
    cmd->add_option("--out", args.out_path, "report output path (default stdout)");
    cmd->add_option("--cache-dir", args.cache_dir, "matrix cache directory");
    cmd->add_option("--threads", args.threads, "worker threads (0 = hardware)");
    cmd->add_option("--window", args.window_override, "override window as M,R,jmin,jmax");
    cmd->add_option("--kernel", args.kernel_override, "override kernel NAME[:params]");
}

czkit::RunConfig load_config(const CommonArgs& args) {
    czkit::RunConfig cfg;
    if (!args.config_path.empty()) cfg = czkit::RunConfig::parse_file(args.config_path);
    if (!args.out_path.empty()) cfg.out_path = args.out_path;
    if (!args.cache_dir.empty()) cfg.cache_dir = args.cache_dir;
    if (cfg.cache_dir.empty()) {
        if (const char* env = std::getenv("CZKIT_CACHE_DIR")) cfg.cache_dir = env;
    }
    if (args.threads > 0) cfg.threads = args.threads;
    if (!args.kernel_override.empty()) {
        auto spec = args.kernel_override;
        if (auto colon = spec.find(':'); colon != std::string::npos &&
                                         spec.substr(0, colon) == "paraproduct") {
            cfg.kernel = "paraproduct";
            cfg.paraproduct_b = spec.substr(colon + 1);
        } else {
            cfg.kernel = spec;
        }
    }
    if (!args.window_override.empty()) {
        int m, jmin, jmax;
        double r;
        if (std::sscanf(args.window_override.c_str(), "%d,%lf,%d,%d", &m, &r, &jmin, &jmax) != 4)
            throw std::invalid_argument("bad --window, expected M,R,jmin,jmax");
        cfg.M = m;
        cfg.R = r;
        cfg.j_min = jmin;
        cfg.j_max = jmax;
    }
    czkit::set_default_threads(cfg.threads);
    return cfg;
}

void emit(const czkit::RunConfig& cfg, const json& report) {
    const std::string text = report.dump(2) + "\n";
    if (cfg.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(cfg.out_path, std::ios::binary);
        out << text;
    }
}

json window_json(const czkit::RunConfig& cfg) {
    return json{{"M", cfg.M}, {"R", cfg.R}, {"jmin", cfg.j_min}, {"jmax", cfg.j_max}};
}

struct KernelBundle {
    czkit::CZKernel kernel;
    std::shared_ptr<czkit::WaveletBasis> basis;
    std::shared_ptr<czkit::Paraproduct> para; // set when kernel = paraproduct
};

KernelBundle make_bundle(const czkit::RunConfig& cfg) {
    KernelBundle b;
    b.basis = std::make_shared<czkit::WaveletBasis>(
        czkit::build_spline_basis(cfg.basis_m, cfg.basis_K));
    if (cfg.kernel == "paraproduct") {
        auto sym = czkit::builtin_symbol(cfg.paraproduct_b, *b.basis);
        b.para = std::make_shared<czkit::Paraproduct>(
            czkit::make_paraproduct(*b.basis, cfg.window(), sym,
                                    0.25 * std::ldexp(1.0, -cfg.j_max)));
        b.kernel = czkit::as_kernel(*b.para);
        b.kernel.name = "paraproduct:" + cfg.paraproduct_b;
    } else {
        b.kernel = czkit::builtin_kernel(cfg.kernel);
    }
    return b;
}

int cmd_kernel_verify(const czkit::RunConfig& cfg) {
    auto bundle = make_bundle(cfg);
    const czkit::SampleSpec spec;
    const auto diag = czkit::verify_compact_czk(bundle.kernel, spec);
    const auto fitted = czkit::fit_admissible(bundle.kernel, spec);
    json env_l = json::array(), env_s = json::array(), env_d = json::array();
    for (double y : {0.25, 1.0, 4.0, 16.0, 256.0, 1024.0}) {
        env_l.push_back({{"x", y}, {"y", czkit::json_number(fitted.L(y))}});
        env_s.push_back({{"x", y}, {"y", czkit::json_number(fitted.S(y))}});
        env_d.push_back({{"x", y}, {"y", czkit::json_number(fitted.D(y))}});
    }
    json violations = json::array();
    for (const auto& v : diag.violations) {
        violations.push_back({{"t", v.tuple.t},
                              {"x", v.tuple.x},
                              {"tp", v.tuple.tp},
                              {"xp", v.tuple.xp},
                              {"ratio", czkit::json_number(v.ratio)},
                              {"bound", czkit::json_number(v.bound)}});
    }
    json report{{"command", "kernel-verify"},
                {"kernel", bundle.kernel.name},
                {"delta", bundle.kernel.delta},
                {"declared_constant", czkit::json_number(bundle.kernel.constant)},
                {"fitted_constant", czkit::json_number(diag.fitted_constant)},
                {"violations", violations},
                {"envelopes", json{{"L", env_l}, {"S", env_s}, {"D", env_d}}}};
    emit(cfg, report);
    return diag.violations.empty() ? kExitOk : kExitViolation;
}

int cmd_compactness(const czkit::RunConfig& cfg) {
    auto bundle = make_bundle(cfg);
    const auto window = cfg.window();
    czkit::CoefficientMatrix A;
    if (bundle.para) {
        A = czkit::paraproduct_matrix(*bundle.para);
    } else {
        czkit::AssemblyOptions opt;
        opt.threads = cfg.threads;
        opt.cache_dir = cfg.cache_dir;
        A = czkit::assemble(bundle.kernel, *bundle.basis, window, opt);
    }
    json tails = json::array();
    for (int M = 1; M <= 4; ++M)
        tails.push_back({{"M", M}, {"value", czkit::json_number(czkit::tail_norm(A, M))}});
    const auto weak = czkit::weak_compactness_scan(bundle.kernel, *bundle.basis, window,
                                                   czkit::builtin_triple("power:1"), 1e-3);
    czkit::FBound fb;
    fb.kernel_triple = bundle.kernel.triple ? *bundle.kernel.triple
                                            : czkit::builtin_triple("power:1");
    fb.weak_triple = czkit::builtin_triple("power:1");
    fb.M = weak.M_fitted;
    czkit::BoundParameters bp;
    bp.delta = bundle.kernel.delta;
    const auto p47 = czkit::prop47_bound_check(A, bp, fb, 1e-3);
    const double necessity =
        czkit::necessity_bound_check(bundle.kernel, *bundle.basis, A, 2.0, std::min(cfg.M, 4));
    json report{{"command", "compactness"},
                {"kernel", bundle.kernel.name},
                {"window", window_json(cfg)},
                {"spec_hash", czkit::hex_double(static_cast<double>(A.spec_hash))},
                {"tail_norms", tails},
                {"weak_fit",
                 json{{"M", weak.M_fitted}, {"constant", czkit::json_number(weak.weak_constant)}}},
                {"prop47_constant", czkit::json_number(p47.constant)},
                {"necessity_constant", czkit::json_number(necessity)},
                {"pv_extension_entries", A.pv_extension_entries}};
    emit(cfg, report);
    return kExitOk;
}

int cmd_paraproduct(const czkit::RunConfig& cfg) {
    czkit::RunConfig pcfg = cfg;
    pcfg.kernel = "paraproduct";
    auto bundle = make_bundle(pcfg);
    const std::vector<int> m_range{1, 2, 3, 4};
    const auto comp = czkit::paraproduct_compactness(*bundle.para, m_range);
    const auto smooth = czkit::kernel_smoothness_check(*bundle.para, 2, 512);
    json tails = json::array();
    for (std::size_t i = 0; i < m_range.size(); ++i) {
        tails.push_back({{"M", m_range[i]},
                         {"tail_norm", czkit::json_number(comp.tail_norms[i])},
                         {"pm_perp_b_bmo", czkit::json_number(comp.pm_perp_b_bmo[i])}});
    }
    json report{{"command", "paraproduct"},
                {"b", pcfg.paraproduct_b},
                {"window", window_json(pcfg)},
                {"table", tails},
                {"fitted_constant", czkit::json_number(comp.fitted_constant)},
                {"smoothness",
                 json{{"fitted_constant", czkit::json_number(smooth.fitted_constant)},
                      {"max_quotient", czkit::json_number(smooth.max_quotient)},
                      {"samples", smooth.samples}}}};
    emit(pcfg, report);
    return kExitOk;
}

int cmd_t1(const czkit::RunConfig& cfg) {
    auto bundle = make_bundle(cfg);
    // Mean-zero test profile: derivative of a smooth bump on [-1,1].
    const czkit::Interval I(0.0, 2.0);
    const auto atom = czkit::make_atom(I, 0, 2.0);
    json table = json::array();
    double prev = 0.0;
    bool have_prev = false;
    for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
        const auto s = czkit::t1_functional(bundle.kernel, atom.profile, I, k, I.center);
        json row{{"k", k},
                 {"value", czkit::json_number(s.value)},
                 {"error_bound", czkit::json_number(s.error_bound)}};
        if (have_prev) row["delta_prev"] = czkit::json_number(s.value - prev);
        table.push_back(row);
        prev = s.value;
        have_prev = true;
    }
    json report{{"command", "t1"},
                {"kernel", bundle.kernel.name},
                {"interval", json{{"center", I.center}, {"length", I.length}}},
                {"table", table}};
    emit(cfg, report);
    return kExitOk;
}

int cmd_cmo(const czkit::RunConfig& cfg) {
    auto bundle = make_bundle(cfg);
    const auto window = cfg.window();
    czkit::CoefficientMap bc;
    if (bundle.para) {
        bc = bundle.para->b_coeff;
    } else {
        // CMO moduli of the kernel's T(1) coefficients.
        bc = czkit::t1_coefficients(bundle.kernel, *bundle.basis, window);
    }
    json rows = json::array();
    const double bmo = czkit::bmo_wavelet_norm(bc, window);
    for (int M = 1; M <= 4; ++M) {
        rows.push_back(
            {{"M", M}, {"modulus", czkit::json_number(czkit::cmo_modulus(bc, M, window))}});
    }
    json report{{"command", "cmo"},
                {"kernel", bundle.kernel.name},
                {"window", window_json(cfg)},
                {"bmo_norm", czkit::json_number(bmo)},
                {"moduli", rows}};
    emit(cfg, report);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"compact Calderon-Zygmund operator toolkit"};
    app.require_subcommand(1);
    CommonArgs args;
    auto* verify = app.add_subcommand("kernel-verify", "kernel smoothness diagnostics");
    auto* compact = app.add_subcommand("compactness", "matrix assembly and tail norms");
    auto* para = app.add_subcommand("paraproduct", "paraproduct identities and tails");
    auto* t1 = app.add_subcommand("t1", "T(1) limiting functional table");
    auto* cmo = app.add_subcommand("cmo", "wavelet CMO moduli");
    for (auto* c : {verify, compact, para, t1, cmo}) add_common(c, args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitConfig;
    }

    try {
        const czkit::RunConfig cfg = load_config(args);
        if (verify->parsed()) return cmd_kernel_verify(cfg);
        if (compact->parsed()) return cmd_compactness(cfg);
        if (para->parsed()) return cmd_paraproduct(cfg);
        if (t1->parsed()) return cmd_t1(cfg);
        if (cmo->parsed()) return cmd_cmo(cfg);
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    }
}
