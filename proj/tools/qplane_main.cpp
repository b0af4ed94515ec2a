#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qplane/parse.hpp"
#include "qplane/rng.hpp"
#include "qplane/suites.hpp"

using namespace qplane;

namespace {

struct GlobalArgs {
    double gamma = 0.15;
    double alpha = 0.5;
    double tol_exact = 1e-10;
    double tol_oracle = 1e-6;
    std::string config;
    uint64_t seed = 1;
    int N = 512;
    double L = 10.0;
};

Context build_context(const GlobalArgs& g, const CLI::App& app) {
    Context ctx;
    if (!g.config.empty()) {
        std::ifstream in(g.config);
        if (!in) throw std::invalid_argument("cannot open config file '" + g.config + "'");
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        ctx = context_from_config(text);
    } else {
        ctx = make_context(g.gamma, g.alpha);
    }
    // flags override config values when given explicitly
    if (app.count("--gamma") || app.count("--alpha"))
        ctx = make_context(app.count("--gamma") ? g.gamma : ctx.gamma,
                           app.count("--alpha") ? g.alpha : ctx.alpha);
    if (app.count("--tol-exact")) ctx.tol_exact = g.tol_exact;
    if (app.count("--tol-oracle")) ctx.tol_oracle = g.tol_oracle;
    return ctx;
}

int emit_report(const SuiteReport& rep, const std::string& json_path, bool verbose) {
    report_print(rep, std::cout, verbose);
    if (!json_path.empty()) {
        std::string text = report_to_json(rep);
        if (json_path == "-") {
            std::cout << text << "\n";
        } else {
            std::ofstream out(json_path, std::ios::binary);
            out << text;
        }
    }
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic-numeric calculus on the q-deformed plane"};
    app.require_subcommand(1);

    GlobalArgs g;
    app.add_option("--gamma", g.gamma, "deformation parameter, 0 < |gamma| < 1/3");
    app.add_option("--alpha", g.alpha, "splitting alpha (beta = gamma/alpha)");
    app.add_option("--tol-exact", g.tol_exact, "tolerance for closed-form identities");
    app.add_option("--tol-oracle", g.tol_oracle, "tolerance for grid cross-checks");
    app.add_option("--config", g.config, "key = value config file");
    app.add_option("--seed", g.seed, "seed for randomized checks");
    app.add_option("--N", g.N, "grid points per axis (power of two)");
    app.add_option("--L", g.L, "grid half-width");

    std::string suite_name = "all", json_path;
    bool verbose = false;
    auto* suite_cmd = app.add_subcommand("suite", "run a verification suite");
    suite_cmd->add_option("--suite,name", suite_name, "suite name or 'all'");
    suite_cmd->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");
    suite_cmd->add_flag("--verbose", verbose, "print passing checks too");

    std::string algebra = "uq", expr, calculus = "minus";
    auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression");
    eval_cmd->add_option("--algebra", algebra, "uq | plane | w | symbol | tuple4")->required();
    eval_cmd->add_option("--expr", expr, "expression text")->required();
    eval_cmd->add_option("--calculus", calculus, "plus | minus (for plane differentials)");

    std::string fk = "0,0", fcheck = "covariance", fjson;
    auto* fun_cmd = app.add_subcommand("functionals", "covariant functional checks");
    fun_cmd->add_option("--k", fk, "index pair k1,k2");
    fun_cmd->add_option("--check", fcheck, "covariance | scalar | phi");
    fun_cmd->add_option("--json", fjson, "write the JSON report here");

    std::string ocheck = "weyl", ojson;
    auto* or_cmd = app.add_subcommand("oracle", "grid cross-checks");
    or_cmd->add_option("--check", ocheck, "weyl | shifts | rho");
    or_cmd->add_option("--json", ojson, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Context ctx = build_context(g, app);
        SuiteOptions opt{g.seed, g.N, g.L};

        if (suite_cmd->parsed()) {
            if (!is_suite_name(suite_name)) {
                std::cerr << "unknown suite '" << suite_name << "'\n";
                return 2;
            }
            return emit_report(run_suite(suite_name, ctx, opt), json_path, verbose);
        }
        if (eval_cmd->parsed()) {
            if (calculus != "plus" && calculus != "minus") {
                std::cerr << "--calculus expects plus or minus\n";
                return 2;
            }
            Calculus calc = calculus == "plus" ? Calculus::plus : Calculus::minus;
            std::cout << eval_expr(ctx, algebra, expr, calc) << "\n";
            return 0;
        }
        if (fun_cmd->parsed()) {
            int k1 = 0, k2 = 0;
            if (std::sscanf(fk.c_str(), "%d,%d", &k1, &k2) != 2) {
                std::cerr << "--k expects 'k1,k2'\n";
                return 2;
            }
            CovariantIndex k = make_index(ctx, k1, k2);
            Rng rng(g.seed);
            SuiteReport rep = run_suite("functionals", ctx, opt);
            rep.suite = "functionals:" + fcheck;
            // focused residuals at the requested index
            if (fcheck == "covariance") {
                double rc = 0.0, rt = 0.0;
                for (int i = 0; i < 10; ++i) {
                    // linear exponents centered against the h_k weight keep the
                    // integrals at machine-friendly scale
                    Symbol a = symbol_term(0, 0, rng.uniform(0.9, 2.2), rng.uniform(0.9, 2.2),
                                           -2.0 * kPi * k.alpha_k + rng.uniform_cplx(0.8),
                                           -2.0 * kPi * k.beta_k + rng.uniform_cplx(0.8), 1.0);
                    rc = std::max(rc, fn_covariance_residual(ctx, k, a));
                    rt = std::max(rt, fn_translation_residual(ctx, k, a));
                }
                rep.checks.clear();
                rep.checks.push_back({"covariance-k", "h_k(f |> a) = chi(f) h_k(a)", rc,
                                      ctx.tol_exact, rc <= ctx.tol_exact});
                rep.checks.push_back({"translation-k", "translation law at the given k", rt,
                                      ctx.tol_exact, rt <= ctx.tol_exact});
            } else if (fcheck == "scalar") {
                std::vector<CheckResult> keep;
                for (auto& c : rep.checks)
                    if (c.id.rfind("inner", 0) == 0) keep.push_back(c);
                rep.checks = keep;
            } else if (fcheck == "phi") {
                std::vector<CheckResult> keep;
                for (auto& c : rep.checks)
                    if (c.id.rfind("Phi", 0) == 0 || c.id.rfind("Psi", 0) == 0 ||
                        c.id.rfind("Ck", 0) == 0 || c.id.rfind("adjoint", 0) == 0)
                        keep.push_back(c);
                rep.checks = keep;
            } else {
                std::cerr << "unknown check '" << fcheck << "'\n";
                return 2;
            }
            return emit_report(rep, fjson, true);
        }
        if (or_cmd->parsed()) {
            SuiteReport rep = run_suite("oracle", ctx, opt);
            rep.suite = "oracle:" + ocheck;
            std::vector<CheckResult> keep;
            for (auto& c : rep.checks) {
                bool take = (ocheck == "weyl" && c.id.find("weyl") != std::string::npos) ||
                            (ocheck == "shifts" && c.id.find("expP") != std::string::npos) ||
                            (ocheck == "rho" && c.id.find("rho") != std::string::npos);
                if (take) keep.push_back(c);
            }
            if (keep.empty()) {
                std::cerr << "unknown check '" << ocheck << "'\n";
                return 2;
            }
            rep.checks = keep;
            return emit_report(rep, ojson, true);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
