// Command-line surface: special-function evaluation, semigroup evolution
// runs, spectral-region reports, chaos witnesses, verdicts, and the
// verification suite. Numeric output carries 17 significant digits.
//
// Exit codes: 0 success, 2 argument/parameter errors, 3 evaluation-envelope
// errors, 4 verification failures. SEMICHAOS_THREADS caps worker threads.

#include <CLI11.hpp>

#include <complex>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "semichaos/chaos.hpp"
#include "semichaos/dunkl.hpp"
#include "semichaos/heat.hpp"
#include "semichaos/spaces.hpp"
#include "semichaos/specfun.hpp"
#include "semichaos/verify.hpp"

using namespace semichaos;
using dunkl::MultiplicitySetup;
using dunkl::PointR;

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file: " + path);
    return file;
}

std::string utc_now() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

MultiplicitySetup setup_from(int n, std::vector<double> kappa) {
    if (kappa.empty()) kappa.assign(n, 0.0);
    return MultiplicitySetup(n, std::move(kappa));
}

spaces::NormKind norm_kind_from(const std::string& s) {
    if (s == "weighted") return spaces::NormKind::weighted_lp;
    if (s == "mixed") return spaces::NormKind::mixed_p2;
    if (s == "conjugated") return spaces::NormKind::conjugated_lp;
    if (s == "l2") return spaces::NormKind::plain_l2;
    if (s == "linf") return spaces::NormKind::l_infinity;
    throw std::invalid_argument("unknown norm kind: " + s);
}

struct SpecfunArgs {
    std::string fn;
    double nu = 0.0;
    double x = std::nan("");
    double x_min = std::nan(""), x_max = std::nan("");
    int x_count = 0;
    double lambda_re = 0.0, lambda_im = 0.0, r = 1.0;
    int quad_points = 48;
    std::string out;
};

int run_specfun(const SpecfunArgs& a) {
    using namespace specfun;
    auto eval_at = [&](double x) -> EvalResult {
        Order nu(a.nu);
        if (a.fn == "J") return bessel_j(nu, complex_t(x, 0.0));
        if (a.fn == "I") return bessel_i(nu, x);
        if (a.fn == "K") return bessel_k(nu, x);
        if (a.fn == "tildeI") return tilde_i(nu, x);
        if (a.fn == "tildeK") return tilde_k(nu, x);
        if (a.fn == "phi") return spherical_fn(complex_t(a.lambda_re, a.lambda_im), x, nu);
        if (a.fn == "phiPoisson")
            return poisson_sphfn(complex_t(a.lambda_re, a.lambda_im), x, nu, a.quad_points);
        throw std::invalid_argument("unknown --fn (use J, I, K, tildeI, tildeK, phi, phiPoisson)");
    };
    std::ofstream file;
    if (a.x_count > 0) {
        if (!(a.x_max > a.x_min)) throw std::invalid_argument("need --x-max > --x-min");
        std::ostream& os = open_sink(a.out, file);
        os << "x,value,abs_error_est\n";
        for (int k = 0; k < a.x_count; ++k) {
            double x = a.x_min + (a.x_max - a.x_min) * k / std::max(1, a.x_count - 1);
            auto res = eval_at(x);
            os << fmt17(x) << "," << fmt17(res.value.real()) << "," << fmt17(res.abs_error_est)
               << "\n";
        }
        return 0;
    }
    double x = std::isnan(a.x) ? a.r : a.x;
    auto res = eval_at(x);
    std::ostream& os = open_sink(a.out, file);
    if (res.value.imag() == 0.0)
        os << fmt17(res.value.real()) << " " << fmt17(res.abs_error_est) << "\n";
    else
        os << fmt17(res.value.real()) << " " << fmt17(res.value.imag()) << " "
           << fmt17(res.abs_error_est) << "\n";
    return 0;
}

struct EvolveArgs {
    int n = 2;
    std::vector<double> kappa;
    double p = 4.0, rho = 1.0, c = 0.0;
    std::string f = "gaussian";
    double lambda_re = 0.0, lambda_im = 0.0;
    double t_min = 0.5, t_max = 8.0;
    int t_count = 10;
    std::string norm = "weighted";
    std::string out, dump_grid, input;
    double r_max = 0.0;
    int radial_nodes = 128, angular_res = 48;
};

int run_evolve(const EvolveArgs& a) {
    MultiplicitySetup setup = setup_from(a.n, a.kappa);
    spaces::WeightedSpaceSpec space(setup, a.p, a.rho, norm_kind_from(a.norm));
    std::vector<double> tg;
    for (int k = 0; k < a.t_count; ++k)
        tg.push_back(a.t_min + (a.t_max - a.t_min) * k / std::max(1, a.t_count - 1));

    std::ofstream file;
    if (a.f == "fromfile") {
        if (a.input.empty()) throw std::invalid_argument("--f fromfile requires --input");
        double rmax = (a.r_max > 0.0) ? a.r_max : 12.0 / a.rho;
        auto grid = spaces::make_grid(setup, rmax, a.radial_nodes, a.angular_res);
        std::ifstream is(a.input);
        if (!is) throw std::invalid_argument("cannot open input file: " + a.input);
        spaces::GridFunction f0 = spaces::from_csv(is, grid);
        heat::DunklHeatKernel kern(setup);
        std::ostream& os = open_sink(a.out, file);
        os << "t,norm,log_norm\n";
        spaces::GridFunction last = f0;
        for (double t : tg) {
            last = heat::apply_Ttc(kern, {t, a.c, a.rho}, f0);
            double nv = (space.kind == spaces::NormKind::mixed_p2) ? spaces::mixed_norm(space, last)
                                                                   : spaces::lp_norm(space, last);
            os << fmt17(t) << "," << fmt17(nv) << "," << fmt17(std::log(nv)) << "\n";
        }
        if (!a.dump_grid.empty()) {
            std::ofstream gs(a.dump_grid);
            spaces::to_csv(last, gs);
        }
        return 0;
    }

    verify::DecayExperiment exp = verify::decay_experiment(
        space, a.c, a.f, tg, complex_t(a.lambda_re, a.lambda_im));
    std::ostream& os = open_sink(a.out, file);
    verify::decay_to_csv(exp, os);
    if (!a.dump_grid.empty()) {
        // sample the final-time radial evolution onto a polar grid and dump it
        double rmax = (a.r_max > 0.0) ? a.r_max : 12.0 / a.rho;
        auto grid = spaces::make_grid(setup, rmax, a.radial_nodes, a.angular_res);
        double growth = (a.f == "eigen") ? std::abs(a.lambda_im) : 0.0;
        auto integ = heat::make_radial_grid(
            setup.big_n, heat::radial_extent(rmax, a.t_max, growth), 512);
        double nu = setup.big_n / 2.0 - 1.0;
        complex_t lam(a.lambda_re, a.lambda_im);
        heat::RadialProfile prof = heat::RadialProfile::sample(integ, [&](double r) -> complex_t {
            if (a.f == "gaussian") return std::exp(-0.5 * r * r);
            if (a.f == "bump")
                return r < 3.0 ? std::exp(-1.0 / (1.0 - std::pow(r / 3.0, 2.0))) : 0.0;
            return specfun::jn(nu, lam * r);
        });
        auto eval = std::make_shared<spaces::RadialGrid>(grid->radial);
        heat::RadialProfile evolved =
            heat::radial_Ttc_apply(setup, {a.t_max, a.c, a.rho}, prof, eval);
        spaces::GridFunction gf = spaces::GridFunction::zeros(grid);
        for (std::size_t i = 0; i < grid->n_radial(); ++i)
            for (std::size_t b = 0; b < grid->n_angular(); ++b) gf.at(i, b) = evolved.v[i];
        std::ofstream gs(a.dump_grid);
        spaces::to_csv(gf, gs);
    }
    return 0;
}

struct SpectrumArgs {
    double p = 4.0, rho = 1.0;
    double c = std::nan("");
    double v_max = 2.0;
    int v_count = 65;
    std::string out;
};

int run_spectrum(const SpectrumArgs& a) {
    if (std::isinf(a.p) || !(a.p >= 1.0)) throw std::invalid_argument("need 1 <= p < inf");
    chaos::SpectralRegion reg{a.p, a.rho};
    std::ofstream file;
    std::ostream& os = open_sink(a.out, file);
    nlohmann::json j;
    j["p"] = a.p;
    j["rho"] = a.rho;
    if (reg.gamma() == 0.0) {
        j["degenerate"] = true;
        j["ray_start"] = a.rho * a.rho;
    } else {
        j["degenerate"] = false;
        os << "v,u_boundary\n";
        for (int k = 0; k < a.v_count; ++k) {
            double v = -a.v_max + 2.0 * a.v_max * k / std::max(1, a.v_count - 1);
            os << fmt17(v) << "," << fmt17(reg.boundary_u(v)) << "\n";
        }
    }
    if (!std::isnan(a.c)) {
        auto axis = chaos::ir_axis_intersection(a.p, a.rho, a.c);
        j["c"] = a.c;
        switch (axis.count) {
            case chaos::IrAxisIntersection::Count::empty: j["count"] = 0; break;
            case chaos::IrAxisIntersection::Count::single: j["count"] = 1; break;
            case chaos::IrAxisIntersection::Count::infinite: j["count"] = "infinite"; break;
        }
        j["v_max"] = axis.v_max;
    }
    std::cout << j.dump() << "\n";
    return 0;
}

struct WitnessArgs {
    std::string role;
    int n = 2;
    std::vector<double> kappa;
    double p = 4.0, rho = 1.0, c = 1.0, eps = 1e-3;
    std::string out;
};

int run_witness(const WitnessArgs& a) {
    MultiplicitySetup setup = setup_from(a.n, a.kappa);
    spaces::WeightedSpaceSpec space(setup, a.p, a.rho, spaces::NormKind::weighted_lp);
    nlohmann::json j;
    if (a.role == "periodic") {
        j = chaos::to_json(chaos::make_periodic_witness(space, a.c), "weighted_lp");
    } else if (a.role == "b0") {
        j = chaos::to_json(chaos::make_b0_witness(space, a.c), "weighted_lp");
    } else if (a.role == "binf") {
        auto bw = chaos::make_binf_witness(space, a.c, a.eps);
        j = chaos::to_json(bw.witness, "weighted_lp");
        j["t"] = bw.t;
        j["f_t_norm"] = bw.f_t_norm;
        j["eps"] = a.eps;
    } else {
        throw std::invalid_argument("witness role must be periodic, b0 or binf");
    }
    std::ofstream file;
    std::ostream& os = open_sink(a.out, file);
    os << j.dump(2) << "\n";
    return 0;
}

struct VerdictArgs {
    std::string space = "weighted";
    int n = 2;
    std::vector<double> kappa;
    double p = 4.0, rho = 1.0, c = 0.0;
    std::string out;
};

int run_verdict(const VerdictArgs& a) {
    MultiplicitySetup setup = setup_from(a.n, a.kappa);
    chaos::SpaceKind kind;
    if (a.space == "weighted") kind = chaos::SpaceKind::weighted;
    else if (a.space == "conjugated") kind = chaos::SpaceKind::conjugated;
    else if (a.space == "mixed") kind = chaos::SpaceKind::mixed;
    else if (a.space == "linf") kind = chaos::SpaceKind::l_infinity;
    else throw std::invalid_argument("unknown --space (weighted, conjugated, mixed, linf)");
    auto v = chaos::chaos_verdict(kind, setup, a.p, a.c, a.rho);
    std::ofstream file;
    std::ostream& os = open_sink(a.out, file);
    os << chaos::to_json(v, kind, setup, a.p, a.c, a.rho).dump() << "\n";
    return 0;
}

struct VerifyArgs {
    std::string profile = "quick";
    std::string out;
    std::string decay_csv;
};

int run_verify(const VerifyArgs& a) {
    std::string started = utc_now();
    auto results = verify::run_suite(a.profile);
    bool all_ok = true;
    for (const auto& r : results) {
        all_ok = all_ok && r.passed;
        std::printf("[%s] %-34s %-20s measured=%-13.4g tol=%-10.4g %ld ms\n",
                    r.passed ? "PASS" : "FAIL", r.check_id.c_str(), r.theorem_tag.c_str(),
                    r.measured, r.tolerance, r.runtime_ms);
    }
    std::printf("%zu checks, %s\n", results.size(), all_ok ? "all passed" : "FAILURES present");
    if (!a.out.empty()) {
        std::ofstream os(a.out);
        os << verify::report_json(a.profile, results, started).dump(2) << "\n";
    }
    return all_ok ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semichaos: Dunkl/Euclidean heat semigroups on weighted L^p spaces"};
    app.set_config("--config", "", "key=value file mirroring flag names (flags win)");
    app.allow_config_extras(CLI::config_extras_mode::ignore);
    app.require_subcommand(1);
    app.footer("Environment: SEMICHAOS_THREADS caps the worker-thread count.");

    SpecfunArgs sa;
    auto* sf = app.add_subcommand("specfun", "evaluate J, I, K, tildeI, tildeK or phi");
    sf->configurable(true);
    sf->fallthrough(true);
    sf->add_option("--fn", sa.fn, "function id")->required();
    sf->add_option("--nu", sa.nu, "order (>= -1/2)")->required();
    sf->add_option("--x", sa.x, "evaluation point");
    sf->add_option("--x-min", sa.x_min);
    sf->add_option("--x-max", sa.x_max);
    sf->add_option("--x-count", sa.x_count, "emit a CSV over this many points");
    sf->add_option("--lambda-re", sa.lambda_re, "Re lambda for --fn phi");
    sf->add_option("--lambda-im", sa.lambda_im, "Im lambda for --fn phi");
    sf->add_option("--r", sa.r, "radius for --fn phi");
    sf->add_option("--quad-points", sa.quad_points, "nodes for phiPoisson");
    sf->add_option("--out", sa.out, "output file (default stdout)");

    EvolveArgs ea;
    auto* ev = app.add_subcommand("evolve", "run T_t^c over a t grid, emit t,norm,log_norm");
    ev->configurable(true);
    ev->fallthrough(true);
    ev->add_option("--n", ea.n, "dimension (2 or 3)");
    ev->add_option("--kappa", ea.kappa, "multiplicity values, one per coordinate")->delimiter(',');
    ev->add_option("--p", ea.p);
    ev->add_option("--rho", ea.rho);
    ev->add_option("--c", ea.c, "spectral shift");
    ev->add_option("--f", ea.f, "gaussian | bump | eigen | fromfile");
    ev->add_option("--lambda-re", ea.lambda_re);
    ev->add_option("--lambda-im", ea.lambda_im);
    ev->add_option("--t-min", ea.t_min);
    ev->add_option("--t-max", ea.t_max);
    ev->add_option("--t-count", ea.t_count);
    ev->add_option("--norm", ea.norm, "weighted | mixed | conjugated | l2 | linf");
    ev->add_option("--out", ea.out, "CSV output file (default stdout)");
    ev->add_option("--dump-grid", ea.dump_grid, "write the final-time grid function CSV here");
    ev->add_option("--input", ea.input, "grid-function CSV for --f fromfile");
    ev->add_option("--r-max", ea.r_max, "grid extent (default 12/rho)");
    ev->add_option("--radial-nodes", ea.radial_nodes);
    ev->add_option("--angular-res", ea.angular_res);

    SpectrumArgs pa;
    auto* sp = app.add_subcommand("spectrum", "boundary samples of the spectral region");
    sp->configurable(true);
    sp->fallthrough(true);
    sp->add_option("--p", pa.p)->required();
    sp->add_option("--rho", pa.rho)->required();
    sp->add_option("--c", pa.c, "also report the imaginary-axis intersection of region - c");
    sp->add_option("--v-max", pa.v_max);
    sp->add_option("--v-count", pa.v_count);
    sp->add_option("--out", pa.out, "CSV output file (default stdout)");

    WitnessArgs wa;
    auto* wi = app.add_subcommand("witness", "construct and verify a chaos witness");
    wi->configurable(true);
    wi->fallthrough(true);
    wi->add_option("role", wa.role, "periodic | b0 | binf")->required();
    wi->add_option("--n", wa.n);
    wi->add_option("--kappa", wa.kappa)->delimiter(',');
    wi->add_option("--p", wa.p)->required();
    wi->add_option("--rho", wa.rho)->required();
    wi->add_option("--c", wa.c)->required();
    wi->add_option("--eps", wa.eps, "target norm for the binf preimage");
    wi->add_option("--out", wa.out, "JSON output file (default stdout)");

    VerdictArgs va;
    auto* vd = app.add_subcommand("verdict", "theorem-backed chaos verdict for a space");
    vd->configurable(true);
    vd->fallthrough(true);
    vd->add_option("--space", va.space, "weighted | conjugated | mixed | linf");
    vd->add_option("--n", va.n);
    vd->add_option("--kappa", va.kappa)->delimiter(',');
    vd->add_option("--p", va.p)->required();
    vd->add_option("--rho", va.rho)->required();
    vd->add_option("--c", va.c)->required();
    vd->add_option("--out", va.out, "JSON output file (default stdout)");

    VerifyArgs fa;
    auto* vf = app.add_subcommand("verify", "run the identity/property suite");
    vf->configurable(true);
    vf->fallthrough(true);
    vf->add_option("--profile", fa.profile, "quick | full");
    vf->add_option("--out", fa.out, "JSON report file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sf->parsed()) return run_specfun(sa);
        if (ev->parsed()) return run_evolve(ea);
        if (sp->parsed()) return run_spectrum(pa);
        if (wi->parsed()) return run_witness(wa);
        if (vd->parsed()) return run_verdict(va);
        if (vf->parsed()) return run_verify(fa);
    } catch (const std::overflow_error& e) {
        std::cerr << "envelope error: " << e.what() << "\n";
        return 3;
    } catch (const std::underflow_error& e) {
        std::cerr << "envelope error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
