#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isokit/io.hpp"

namespace {

using namespace isokit;

constexpr double kPi = std::numbers::pi;

struct RangeArg {
    double lo = 0.0;
    double hi = 0.0;
    bool set = false;
};

RangeArg parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw CLI::ValidationError("range", "expected lo:hi, got '" + text + "'");
    }
    RangeArg out;
    out.lo = std::stod(text.substr(0, colon));
    out.hi = std::stod(text.substr(colon + 1));
    out.set = true;
    return out;
}

std::pair<int, int> parse_counts(const std::string& text) {
    const auto x = text.find_first_of("xX");
    if (x == std::string::npos) {
        throw CLI::ValidationError("grid", "expected NxM, got '" + text + "'");
    }
    return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
}

// One bag of options for every constructible family; each family reads the
// parameters it needs and applies its own defaults for the rest.
struct FamilyOpts {
    std::string id;
    std::string u_range, v_range, grid = "51x51";

    std::optional<double> alpha, beta, pitch, K0, gamma, H0, gconst;
    std::optional<double> A, B, C, D;
    std::optional<double> a1, a2, a3, a4;
    std::optional<double> b1, b2, b3, b4, b5, b6, b8, b9;
    std::optional<double> ba, bb, bc, bd;              // bilinear factors
    std::optional<double> c1, c2, c3, c4, d1, d2;      // power/exp factors
    std::optional<double> gamma1, gamma2, eps1, eps2;  // linear-product factors
    std::optional<double> alpha1, alpha2, beta1, beta2, eps;
    bool second_type = false;
};

void add_family_params(CLI::App* cmd, FamilyOpts& o) {
    cmd->add_option("family", o.id, "family id; one of: flat-helicoidal, constantK, constantH, "
                                    "minimal, helicoid, parabolic-sphere, translation-{quad,k1,"
                                    "k2,h1,h2,h3}, homothetical-{minimal,exp,power,bilinear}")
        ->required();
    cmd->add_option("--u", o.u_range, "u range lo:hi");
    cmd->add_option("--v", o.v_range, "v range lo:hi");
    cmd->add_option("--n", o.grid, "grid size NxM (default 51x51)");
    cmd->add_flag("--second-type", o.second_type, "use the quarter-turn helicoidal chart");

    cmd->add_option("--alpha", o.alpha);
    cmd->add_option("--beta", o.beta);
    cmd->add_option("--h", o.pitch, "helicoidal pitch");
    cmd->add_option("--K0", o.K0);
    cmd->add_option("--gamma", o.gamma);
    cmd->add_option("--H0", o.H0);
    cmd->add_option("--g-const", o.gconst, "constant generator value (helicoid)");
    cmd->add_option("--A", o.A);
    cmd->add_option("--B", o.B);
    cmd->add_option("--C", o.C);
    cmd->add_option("--D", o.D);
    cmd->add_option("--a1", o.a1);
    cmd->add_option("--a2", o.a2);
    cmd->add_option("--a3", o.a3);
    cmd->add_option("--a4", o.a4);
    cmd->add_option("--b1", o.b1);
    cmd->add_option("--b2", o.b2);
    cmd->add_option("--b3", o.b3);
    cmd->add_option("--b4", o.b4);
    cmd->add_option("--b5", o.b5);
    cmd->add_option("--b6", o.b6);
    cmd->add_option("--b8", o.b8);
    cmd->add_option("--b9", o.b9);
    cmd->add_option("--a", o.ba);
    cmd->add_option("--b", o.bb);
    cmd->add_option("--c", o.bc);
    cmd->add_option("--d", o.bd);
    cmd->add_option("--c1", o.c1);
    cmd->add_option("--c2", o.c2);
    cmd->add_option("--c3", o.c3);
    cmd->add_option("--c4", o.c4);
    cmd->add_option("--d1", o.d1);
    cmd->add_option("--d2", o.d2);
    cmd->add_option("--gamma1", o.gamma1);
    cmd->add_option("--gamma2", o.gamma2);
    cmd->add_option("--eps1", o.eps1);
    cmd->add_option("--eps2", o.eps2);
    cmd->add_option("--alpha1", o.alpha1);
    cmd->add_option("--alpha2", o.alpha2);
    cmd->add_option("--beta1", o.beta1);
    cmd->add_option("--beta2", o.beta2);
    cmd->add_option("--eps", o.eps);
}

const char* kFamilyList =
    "helicoidal: flat-helicoidal, constantK, constantH, minimal, helicoid\n"
    "graphs:     parabolic-sphere, translation-quad,\n"
    "            translation-k1, translation-k2,\n"
    "            translation-h1, translation-h2, translation-h3,\n"
    "            homothetical-minimal, homothetical-exp, homothetical-power,\n"
    "            homothetical-bilinear";

bool is_helicoidal(const std::string& id) {
    return id == "flat-helicoidal" || id == "constantK" || id == "constantH" || id == "minimal" ||
           id == "helicoid";
}

ProfileFunction build_profile(const FamilyOpts& o, double* pitch_out) {
    if (o.id == "flat-helicoidal") {
        const double h = o.pitch.value_or(1.0);
        *pitch_out = h;
        return flat_helicoidal_profile(o.alpha.value_or(1.0), h);
    }
    if (o.id == "constantK") {
        const double h = o.pitch.value_or(1.0);
        *pitch_out = h;
        return constant_K_profile(o.K0.value_or(0.5), o.gamma.value_or(1.0), h);
    }
    if (o.id == "constantH") {
        *pitch_out = o.pitch.value_or(1.5);
        return constant_H_profile(o.H0.value_or(-1.0), o.alpha.value_or(1.0), o.beta.value_or(0.0));
    }
    if (o.id == "minimal") {
        *pitch_out = o.pitch.value_or(1.0);
        return log_profile(o.alpha.value_or(1.0), o.beta.value_or(0.0));
    }
    if (o.id == "helicoid") {
        *pitch_out = o.pitch.value_or(1.0);
        return profile_from(constant_fn(o.gconst.value_or(0.0)), Interval{0.0});
    }
    throw InvalidConstant("'" + o.id + "' is not a helicoidal family");
}

// Shrinks a profile's validity interval to a finite rectangle side.
std::pair<double, double> default_u_range(const ProfileFunction& p) {
    const double lo = std::max(p.valid_range.lo, 0.0);
    const double hi = std::isfinite(p.valid_range.hi) ? p.valid_range.hi : lo + 5.0;
    const double w = hi - lo;
    return {lo + 0.02 * w, hi - 0.02 * w};
}

SurfaceChart build_chart(const FamilyOpts& o, GridSpec* grid_out) {
    Rect rect;
    RangeArg u{};
    RangeArg v{};
    if (!o.u_range.empty()) u = parse_range(o.u_range);
    if (!o.v_range.empty()) v = parse_range(o.v_range);

    SurfaceChart chart;
    if (is_helicoidal(o.id)) {
        double pitch = 0.0;
        const ProfileFunction profile = build_profile(o, &pitch);
        if (!u.set) std::tie(u.lo, u.hi) = default_u_range(profile);
        if (!v.set) {
            v.lo = 0.0;
            v.hi = o.id == "flat-helicoidal" ? 4.0 * kPi : 2.0 * kPi;
        }
        rect = {u.lo, u.hi, v.lo, v.hi};
        const auto type = o.second_type ? HelicoidalType::second : HelicoidalType::first;
        chart = helicoidal_chart({profile, pitch, type}, rect);
    } else if (o.id == "parabolic-sphere") {
        rect = {u.set ? u.lo : -1.0, u.set ? u.hi : 1.0, v.set ? v.lo : -1.0, v.set ? v.hi : 1.0};
        chart = parabolic_i_sphere(o.A.value_or(1.0), o.B.value_or(0.0), o.C.value_or(0.0),
                                   o.D.value_or(0.0), rect);
    } else {
        // Remaining ids are graph families over a rectangle.
        rect = {u.set ? u.lo : -1.0, u.set ? u.hi : 1.0, v.set ? v.lo : -1.0, v.set ? v.hi : 1.0};
        if (o.id == "translation-quad") {
            const std::vector<double> alphas{o.alpha1.value_or(1.0), o.alpha2.value_or(2.0)};
            const std::vector<double> betas{o.beta1.value_or(0.0), o.beta2.value_or(0.0)};
            chart = graph_chart(translation_hypersurface(2, alphas, betas, o.eps.value_or(0.0)),
                                rect);
        } else if (o.id == "translation-k1") {
            chart = translation_constant_k_quadratic(o.a1.value_or(1.0), o.K0.value_or(1.0),
                                                     o.b1.value_or(0.0), o.b2.value_or(0.0),
                                                     o.b3.value_or(0.0), rect);
        } else if (o.id == "translation-k2") {
            const double K0 = o.K0.value_or(1.0);
            const double a2 = o.a2.value_or(1.0), a3 = o.a3.value_or(1.0),
                         a4 = o.a4.value_or(1.0);
            if (!v.set) rect = {rect.u_min, rect.u_max, K0 > 0 ? -3.0 : 0.5, K0 > 0 ? -0.5 : 3.0};
            chart = translation_constant_k_power(K0, a2, a3, a4, o.b4.value_or(0.0),
                                                 o.b5.value_or(a2 * a4), o.b6.value_or(0.0), rect);
        } else if (o.id == "translation-h1") {
            chart = translation_constant_h_translating(o.H0.value_or(0.5), o.b1.value_or(0.0),
                                                       o.b2.value_or(0.0), o.b3.value_or(0.0),
                                                       rect);
        } else if (o.id == "translation-h2") {
            chart = translation_constant_h_coupled(o.H0.value_or(0.5), o.a1.value_or(1.0),
                                                   o.a2.value_or(1.0), o.b4.value_or(0.0),
                                                   o.b5.value_or(0.0), o.b6.value_or(0.0), rect);
        } else if (o.id == "translation-h3") {
            const double a3 = o.a3.value_or(1.0);
            if (!u.set) rect = {-1.2 / std::abs(a3), 1.2 / std::abs(a3), rect.v_min, rect.v_max};
            chart = translation_constant_h_logcos(o.H0.value_or(0.5), a3, o.b8.value_or(0.0),
                                                  o.b9.value_or(0.0), rect);
        } else if (o.id == "homothetical-minimal") {
            const std::vector<double> gammas{o.gamma1.value_or(1.0), o.gamma2.value_or(1.0)};
            const std::vector<double> epsilons{o.eps1.value_or(0.0), o.eps2.value_or(0.0)};
            chart = graph_chart(homothetical_linear_product(gammas, epsilons), rect);
        } else if (o.id == "homothetical-exp") {
            chart = graph_chart(homothetical_exp_surface(o.c1.value_or(1.0), o.c2.value_or(1.0),
                                                         o.c3.value_or(-1.0)),
                                rect);
        } else if (o.id == "homothetical-power") {
            if (!u.set) rect = {0.5, 3.0, 0.5, 3.0};
            else if (!v.set) rect = {rect.u_min, rect.u_max, 0.5, 3.0};
            chart = graph_chart(
                homothetical_power_surface(o.c1.value_or(1.0), o.c2.value_or(2.0),
                                           o.c3.value_or(1.0), o.c4.value_or(2.0),
                                           o.d1.value_or(0.0), o.d2.value_or(0.0)),
                rect);
        } else if (o.id == "homothetical-bilinear") {
            chart = graph_chart(homothetical_bilinear_surface(o.ba.value_or(2.0),
                                                              o.bb.value_or(0.0),
                                                              o.bc.value_or(3.0),
                                                              o.bd.value_or(0.0)),
                                rect);
        } else {
            throw InvalidConstant("unknown family id '" + o.id + "'\nknown families:\n" +
                                  kFamilyList);
        }
    }

    if (grid_out) {
        const auto [nu, nv] = parse_counts(o.grid);
        if (nu < 2 || nv < 2) throw InvalidRange("grid must be at least 2x2");
        *grid_out = {rect, nu, nv};
    }
    return chart;
}

int run_family(const FamilyOpts& opts, const std::string& out_prefix) {
    GridSpec grid;
    const SurfaceChart chart = build_chart(opts, &grid);
    const MeshExport mesh = sample_mesh(chart, grid);

    const std::string prefix = out_prefix.empty() ? opts.id : out_prefix;
    {
        std::ofstream obj(prefix + ".obj");
        obj << to_obj(mesh);
    }
    {
        std::ofstream csv(prefix + ".csv");
        csv << to_grid_csv(mesh, grid);
    }
    std::cout << "wrote " << prefix << ".obj and " << prefix << ".csv ("
              << grid.nu << "x" << grid.nv << " grid)\n";
    return 0;
}

int run_forms(const FamilyOpts& opts, double pu, double pv) {
    const SurfaceChart chart = build_chart(opts, nullptr);
    const SymForm2 g = first_form(chart, pu, pv);
    const SymForm2 h = second_form(chart, pu, pv);
    const CurvatureSample c = curvatures(g, h);
    std::cout << "g11 = " << format_double(g.a11) << "\n"
              << "g12 = " << format_double(g.a12) << "\n"
              << "g22 = " << format_double(g.a22) << "\n"
              << "h11 = " << format_double(h.a11) << "\n"
              << "h12 = " << format_double(h.a12) << "\n"
              << "h22 = " << format_double(h.a22) << "\n"
              << "det_g = " << format_double(c.det_g) << "\n"
              << "K = " << format_double(c.K) << "\n"
              << "H_def = " << format_double(c.H) << "\n"
              << "H_s3 = " << format_double(2.0 * c.H) << "\n";
    return 0;
}

struct CurveOpts {
    FamilyOpts family;
    std::string kind = "v-const";
    double u0 = 2.0;
    double v0 = 0.0;
    double theta = 0.0;
    std::string s_range = "0:1";
    int ns = 51;
    std::string out = "curve.csv";
};

int run_curve(const CurveOpts& co) {
    double pitch = 0.0;
    const ProfileFunction profile = build_profile(co.family, &pitch);
    if (co.family.pitch) pitch = *co.family.pitch;

    ScalarFunction u_of_s, v_of_s;
    if (co.kind == "v-const") {
        u_of_s = linear_fn(1.0, co.u0);
        v_of_s = constant_fn(co.v0);
    } else if (co.kind == "u-const") {
        u_of_s = constant_fn(co.u0);
        v_of_s = linear_fn(1.0 / co.u0, co.v0);
    } else if (co.kind == "line") {
        // Straight line in the top view through the point (u0, v0), traversed
        // at unit speed; a geodesic of the induced metric.
        const double x0 = co.u0 * std::cos(co.v0);
        const double y0 = co.u0 * std::sin(co.v0);
        const double dx = std::cos(co.theta);
        const double dy = std::sin(co.theta);
        auto px = [=](double s) { return x0 + s * dx; };
        auto py = [=](double s) { return y0 + s * dy; };
        auto r2 = [=](double s) { return px(s) * px(s) + py(s) * py(s); };
        const double cross = x0 * dy - y0 * dx;
        u_of_s = {[=](double s) { return std::sqrt(r2(s)); },
                  [=](double s) { return (px(s) * dx + py(s) * dy) / std::sqrt(r2(s)); },
                  [=](double s) { return cross * cross / std::pow(r2(s), 1.5); }};
        v_of_s = {[=](double s) { return std::atan2(py(s), px(s)); },
                  [=](double s) { return cross / r2(s); },
                  [=](double s) {
                      return -2.0 * cross * (px(s) * dx + py(s) * dy) / (r2(s) * r2(s));
                  }};
    } else {
        throw InvalidConstant("unknown curve kind '" + co.kind +
                              "' (expected u-const, v-const or line)");
    }

    const RangeArg s = parse_range(co.s_range);
    if (co.ns < 2) throw InvalidRange("curve needs at least 2 samples");
    std::vector<double> s_grid(co.ns);
    for (int i = 0; i < co.ns; ++i) {
        s_grid[i] = i == co.ns - 1 ? s.hi : s.lo + (s.hi - s.lo) * i / (co.ns - 1);
    }

    const auto samples = sample_curve(profile, pitch, u_of_s, v_of_s, s_grid);
    std::ofstream csv(co.out);
    csv << to_curve_csv(samples);
    std::cout << "wrote " << co.out << " (" << samples.size() << " samples)\n";
    return 0;
}

struct VerifyOpts {
    std::vector<std::string> only;
    bool all = false;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string out;
    std::vector<std::string> tol;
    SuiteParams params;
};

int run_verify(VerifyOpts& vo) {
    if (!vo.seed_given) {
        if (const char* env = std::getenv("ISOKIT_SEED")) {
            vo.seed = std::strtoull(env, nullptr, 10);
        }
    }
    vo.params.seed = vo.seed;
    for (const auto& entry : vo.tol) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos) {
            throw InvalidConstant("tolerance override must be key=value, got '" + entry + "'");
        }
        vo.params.tolerances[entry.substr(0, eq)] = std::stod(entry.substr(eq + 1));
    }

    const std::set<std::string> selection(vo.only.begin(), vo.only.end());
    const VerificationReport report = run_theorem_suite(selection, vo.params);
    const std::string json = report_to_json(report);

    if (vo.out.empty()) {
        std::cout << json;
    } else {
        std::ofstream file(vo.out);
        file << json;
        std::cout << "wrote " << vo.out << ": " << report.claims.size() << " claims, "
                  << report.count(ClaimStatus::pass) << " pass, "
                  << report.count(ClaimStatus::discrepancy_documented)
                  << " discrepancy-documented, " << report.count(ClaimStatus::fail) << " fail\n";
    }
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"isokit: admissible-surface geometry in the isotropic 3-space"};
    app.require_subcommand(1);
    // --h is the helicoidal pitch throughout, so help stays long-form only.
    app.set_help_flag("--help", "print help and exit");

    FamilyOpts family_opts;
    std::string family_out;
    auto* family_cmd = app.add_subcommand("family", "sample a classified family to OBJ + CSV");
    family_cmd->set_help_flag("--help");
    add_family_params(family_cmd, family_opts);
    family_cmd->add_option("--out", family_out, "output file prefix (default: family id)");

    FamilyOpts forms_opts;
    double forms_u = 0.0, forms_v = 0.0;
    auto* forms_cmd = app.add_subcommand("forms", "print fundamental forms at one point");
    forms_cmd->set_help_flag("--help");
    add_family_params(forms_cmd, forms_opts);
    forms_cmd->add_option("--pu", forms_u, "u coordinate")->required();
    forms_cmd->add_option("--pv", forms_v, "v coordinate")->required();

    CurveOpts curve_opts;
    auto* curve_cmd = app.add_subcommand("curve", "classify a curve on a helicoidal surface");
    curve_cmd->set_help_flag("--help");
    add_family_params(curve_cmd, curve_opts.family);
    curve_cmd->add_option("--kind", curve_opts.kind, "u-const | v-const | line");
    curve_cmd->add_option("--u0", curve_opts.u0);
    curve_cmd->add_option("--v0", curve_opts.v0);
    curve_cmd->add_option("--theta", curve_opts.theta, "top-view direction for kind=line");
    curve_cmd->add_option("--s", curve_opts.s_range, "arc-length range lo:hi");
    curve_cmd->add_option("--ns", curve_opts.ns, "number of samples");
    curve_cmd->add_option("--out", curve_opts.out, "output CSV path");

    VerifyOpts verify_opts;
    auto* verify_cmd = app.add_subcommand("verify", "run the classification verification suite");
    verify_cmd->set_help_flag("--help");
    verify_cmd->add_flag("--all", verify_opts.all, "run every claim (default)");
    verify_cmd->add_option("--only", verify_opts.only, "claim ids to run")->delimiter(',');
    auto* seed_opt = verify_cmd->add_option("--seed", verify_opts.seed,
                                            "RNG seed (ISOKIT_SEED overrides the default)");
    verify_cmd->add_option("--out", verify_opts.out, "write the JSON report here");
    verify_cmd->add_option("--tol", verify_opts.tol, "tolerance override key=value")
        ->take_all();
    double ov_K0, ov_gamma, ov_h, ov_H0, ov_alpha;
    auto* o1 = verify_cmd->add_option("--K0", ov_K0, "override for the constant-K claim");
    auto* o2 = verify_cmd->add_option("--gamma", ov_gamma);
    auto* o3 = verify_cmd->add_option("--h", ov_h);
    auto* o4 = verify_cmd->add_option("--H0", ov_H0);
    auto* o5 = verify_cmd->add_option("--alpha", ov_alpha);

    bool list_claims = false;
    verify_cmd->add_flag("--list", list_claims, "list claim ids and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (family_cmd->parsed()) return run_family(family_opts, family_out);
        if (forms_cmd->parsed()) return run_forms(forms_opts, forms_u, forms_v);
        if (curve_cmd->parsed()) return run_curve(curve_opts);
        if (verify_cmd->parsed()) {
            if (list_claims) {
                for (const auto& id : known_claim_ids()) std::cout << id << "\n";
                return 0;
            }
            verify_opts.seed_given = seed_opt->count() > 0;
            if (o1->count()) verify_opts.params.K0 = ov_K0;
            if (o2->count()) verify_opts.params.gamma = ov_gamma;
            if (o3->count()) verify_opts.params.pitch_h = ov_h;
            if (o4->count()) verify_opts.params.H0 = ov_H0;
            if (o5->count()) verify_opts.params.alpha = ov_alpha;
            return run_verify(verify_opts);
        }
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 0;
}
