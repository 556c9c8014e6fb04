#include "contactgeo/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "contactgeo/curvature.hpp"
#include "contactgeo/immersion_lab.hpp"
#include "contactgeo/sampling.hpp"
#include "contactgeo/singular_normals.hpp"
#include "contactgeo/tube_builder.hpp"

namespace contactgeo {

double CheckReport::max_residual() const {
    double worst = 0.0;
    for (const auto& [name, value] : residuals) worst = std::max(worst, value);
    return worst;
}

void to_json(nlohmann::json& j, const CheckReport& r) {
    j = nlohmann::json{{"check_name", r.check_name}, {"params", r.params},
                       {"residuals", r.residuals},   {"tolerance", r.tolerance},
                       {"pass", r.pass},             {"runtime_ms", r.runtime_ms}};
}

void from_json(const nlohmann::json& j, CheckReport& r) {
    j.at("check_name").get_to(r.check_name);
    j.at("params").get_to(r.params);
    j.at("residuals").get_to(r.residuals);
    j.at("tolerance").get_to(r.tolerance);
    j.at("pass").get_to(r.pass);
    j.at("runtime_ms").get_to(r.runtime_ms);
}

std::string csv_header() {
    return "check_name,params,tolerance,pass,runtime_ms,max_residual,residuals";
}

std::string to_csv_row(const CheckReport& r) {
    auto join = [](const std::map<std::string, double>& m) {
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, v] : m) {
            if (!first) os << ';';
            os << k << '=' << nlohmann::json(v).dump();
            first = false;
        }
        return os.str();
    };
    std::ostringstream os;
    os << r.check_name << ",\"" << join(r.params) << "\"," << nlohmann::json(r.tolerance).dump()
       << ',' << (r.pass ? "true" : "false") << ',' << r.runtime_ms << ','
       << nlohmann::json(r.max_residual()).dump() << ",\"" << join(r.residuals) << "\"";
    return os.str();
}

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kFocalBound = M_PI / (2.0 * kSqrt2);

using Clock = std::chrono::steady_clock;
using Params = std::map<std::string, double>;
using Residuals = std::map<std::string, double>;

class SuiteBuilder {
public:
    explicit SuiteBuilder(const SuiteParams& sp) : sp_(sp) {}

    void add(const std::string& name, const Params& params, double default_tol,
             const std::function<Residuals()>& body) {
        const auto start = Clock::now();
        CheckReport report;
        report.check_name = name;
        report.params = params;
        report.tolerance = sp_.tol.value_or(default_tol);
        report.residuals = body();
        report.pass = true;
        for (const auto& [k, v] : report.residuals)
            report.pass = report.pass && (v < report.tolerance) && std::isfinite(v);
        report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                Clock::now() - start)
                                .count();
        reports_.push_back(std::move(report));
    }

    std::vector<CheckReport> take() {
        std::sort(reports_.begin(), reports_.end(),
                  [](const CheckReport& a, const CheckReport& b) {
                      if (a.check_name != b.check_name) return a.check_name < b.check_name;
                      return nlohmann::json(a.params).dump() < nlohmann::json(b.params).dump();
                  });
        return std::move(reports_);
    }

private:
    SuiteParams sp_;
    std::vector<CheckReport> reports_;
};

double margin_defect(double required, double observed) {
    return std::max(0.0, required - observed);
}

double bool_defect(bool ok) { return ok ? 0.0 : 1.0; }

std::vector<int> dims_or_default(const SuiteParams& sp, std::vector<int> defaults) {
    if (sp.n) return {*sp.n};
    return defaults;
}

// ---------------------------------------------------------------- suites --

void suite_curvature_selftest(SuiteBuilder& b, const SuiteParams& sp) {
    const int trials = sp.grid.value_or(1000);
    for (int n : dims_or_default(sp, {3, 4, 5, 6, 7, 8})) {
        for (double c : {-4.0, 0.0, 4.0}) {
            b.add("curvature-selftest-csf",
                  {{"c", c}, {"n", double(n)}, {"trials", double(trials)}, {"seed", double(sp.seed)}},
                  1e-12, [=] {
                      const auto spec = AmbientSpec::csf(ModelFrame::standard(n, false), c);
                      const CurvatureReport cr = curvature_selftest(spec, trials, sp.seed);
                      return Residuals{{"pair_symmetry", cr.residual_pair_symmetry},
                                       {"bianchi", cr.residual_bianchi},
                                       {"kahler_invariance", cr.residual_kahler_invariance},
                                       {"skew", cr.residual_skew}};
                  });
        }
        for (int eps : {+1, -1}) {
            b.add("curvature-selftest-quadric",
                  {{"epsilon", double(eps)}, {"n", double(n)}, {"trials", double(trials)},
                   {"seed", double(sp.seed)}},
                  1e-12, [=] {
                      const auto spec = AmbientSpec::quadric(ModelFrame::standard(n, true), eps);
                      const CurvatureReport cr = curvature_selftest(spec, trials, sp.seed);
                      return Residuals{{"pair_symmetry", cr.residual_pair_symmetry},
                                       {"bianchi", cr.residual_bianchi},
                                       {"kahler_invariance", cr.residual_kahler_invariance},
                                       {"skew", cr.residual_skew}};
                  });
        }
    }
}

void suite_einstein(SuiteBuilder& b, const SuiteParams& sp) {
    for (int n : dims_or_default(sp, {3, 4, 5, 6, 7, 8})) {
        const int d = 2 * n;
        for (double c : {-4.0, 0.0, 4.0}) {
            b.add("einstein-csf", {{"c", c}, {"n", double(n)}}, 1e-12, [=] {
                const auto spec = AmbientSpec::csf(ModelFrame::standard(n, false), c);
                const Mat expected = ((n + 1) * c / 2.0) * Mat::Identity(d, d);
                return Residuals{{"ricci", operator_norm(ricci_operator(spec) - expected)}};
            });
        }
        for (int eps : {+1, -1}) {
            b.add("einstein-quadric", {{"epsilon", double(eps)}, {"n", double(n)}}, 1e-12, [=] {
                const auto spec = AmbientSpec::quadric(ModelFrame::standard(n, true), eps);
                const Mat expected = (eps * 2.0 * n) * Mat::Identity(d, d);
                return Residuals{{"ricci", operator_norm(ricci_operator(spec) - expected)}};
            });
        }
    }
}

Residuals profile_contact_residuals(const PrincipalProfile& p) {
    const auto [cs, sd] = profile_shape_operator(p);
    const TraceIdentityResiduals tr = trace_identities(cs, sd, p.ambient, p.n);
    return Residuals{{"contact_defect", contact_defect(cs, sd)},
                     {"pairing", pairing_check(cs, sd)},
                     {"trace_mean", tr.mean_curvature},
                     {"trace_square", tr.square_norm}};
}

Residuals profile_exact_residuals(const PrincipalProfile& p) {
    const auto [cs, sd] = profile_shape_operator(p);
    const double eps = p.ambient.epsilon;
    Residuals res{{"alpha_rho", std::abs(p.alpha * p.rho + eps)},
                  {"hopf", hopf_data(cs, sd).defect},
                  {"asquared", asquared_residual(cs, sd, p.ambient)},
                  {"mu_minus_2rho", std::abs(p.mu - 2.0 * p.rho)},
                  {"a_principal",
                   bool_defect(classify_normal(p.ambient.frame, cs.N).cls ==
                               SingularClass::APrincipal)}};
    return res;
}

void suite_theorem1(SuiteBuilder& b, const SuiteParams& sp) {
    const std::vector<int> ns = dims_or_default(sp, {3, 4, 5});
    std::vector<double> radii;
    if (sp.r) {
        radii = {*sp.r};
    } else {
        const double lo = 0.05;
        const double hi = kFocalBound - 0.05;
        for (int i = 0; i < 20; ++i) radii.push_back(lo + i * (hi - lo) / 19.0);
    }
    for (int n : ns) {
        for (double r : radii) {
            const Params params{{"n", double(n)}, {"r", r}};
            b.add("theorem1-contact", params, 1e-10,
                  [=] { return profile_contact_residuals(tube_profile_theorem1(n, r)); });
            b.add("theorem1-exact", params, 1e-12,
                  [=] { return profile_exact_residuals(tube_profile_theorem1(n, r)); });
        }
    }
    if (!sp.n && !sp.r) {
        // Spot values at n = 3, r = 0.3, cross-checked against the ODE oracle.
        const Params params{{"n", 3.0}, {"r", 0.3}};
        b.add("theorem1-spot-oracle", params, 1e-8, [] {
            const PrincipalProfile p = tube_profile_theorem1(3, 0.3);
            const JacobiSolution tan_dir = jacobi_ode_oracle(2.0, 1.0, 0.0, 0.3, 1e-4);
            const JacobiSolution circ_dir = jacobi_ode_oracle(2.0, 0.0, 1.0, 0.3, 1e-4);
            const double mu_rk = -tan_dir.derivative / tan_dir.value;
            const double alpha_rk = -circ_dir.derivative / circ_dir.value;
            return Residuals{{"alpha_vs_ode", std::abs(p.alpha - alpha_rk)},
                             {"rho_vs_ode", std::abs(p.rho - 0.5 * mu_rk)}};
        });
        b.add("theorem1-spot-value", params, 1e-3, [] {
            const PrincipalProfile p = tube_profile_theorem1(3, 0.3);
            return Residuals{{"alpha_vs_reference", std::abs(p.alpha + 3.1309)},
                             {"rho_vs_reference", std::abs(p.rho - 0.3194)}};
        });
    }
}

void suite_theorem2(SuiteBuilder& b, const SuiteParams& sp) {
    const std::vector<int> ns = dims_or_default(sp, {3, 4});
    std::vector<int> cases = sp.case_id ? std::vector<int>{*sp.case_id}
                                        : std::vector<int>{1, 2, 3};
    const std::vector<double> radii = sp.r ? std::vector<double>{*sp.r}
                                           : std::vector<double>{0.5, 1.0, 2.0};
    for (int n : ns) {
        for (int c : cases) {
            const std::vector<double> rs =
                (c == 2) ? std::vector<double>{0.0} : radii;
            for (double r : rs) {
                Params params{{"case", double(c)}, {"n", double(n)}};
                if (c != 2) params["r"] = r;
                b.add("theorem2-contact", params, 1e-10,
                      [=] { return profile_contact_residuals(tube_profile_theorem2(c, n, r)); });
                b.add("theorem2-exact", params, 1e-12, [=] {
                    const PrincipalProfile p = tube_profile_theorem2(c, n, r);
                    Residuals res = profile_exact_residuals(p);
                    if (c == 2) {
                        const auto [cs, sd] = profile_shape_operator(p);
                        res["horosphere_trace"] = std::abs(sd.S.trace() - n * kSqrt2);
                    }
                    return res;
                });
            }
        }
    }
}

void suite_singular_sweep(SuiteBuilder& b, const SuiteParams& sp) {
    const int grid = sp.grid.value_or(100);
    const int n = sp.n.value_or(3);
    b.add("singular-sweep-defect",
          {{"grid", double(grid)}, {"n", double(n)}, {"seed", double(sp.seed)}}, 1e-10, [=] {
              const ModelFrame frame = ModelFrame::standard(n, true);
              const auto spec = AmbientSpec::quadric(frame, +1);
              VectorSampler sampler(sp.seed);
              double worst = 0.0;
              for (int i = 0; i < grid; ++i) {
                  const double t = (M_PI / 4.0) * i / (grid - 1);
                  Mat z(2 * n, 2);
                  z.col(0) = frame.v_basis() * sampler.unit_vector(n);
                  z.col(1) = frame.v_basis() * sampler.vector(n);
                  const Mat zq = orthonormalize(z);
                  const Vec nn = std::cos(t) * zq.col(0) + std::sin(t) * (frame.J() * zq.col(1));
                  worst = std::max(worst, std::abs(jn_eigen_defect(spec, nn.normalized()) -
                                                   std::abs(std::sin(4.0 * t))));
              }
              return Residuals{{"defect_vs_sin4t", worst}};
          });
    b.add("singular-sweep-classify", {{"n", double(n)}}, 1e-12, [=] {
        const ModelFrame frame = ModelFrame::standard(n, true);
        const Vec principal = frame.e(0);
        const Vec isotropic = ((frame.e(0) + frame.Je(1)) / kSqrt2).eval();
        const Vec generic =
            (std::cos(0.2) * frame.e(0) + std::sin(0.2) * frame.Je(1)).eval();
        Residuals res;
        res["principal_at_0"] =
            bool_defect(classify_normal(frame, principal).cls == SingularClass::APrincipal);
        res["isotropic_at_pi4"] =
            bool_defect(classify_normal(frame, isotropic).cls == SingularClass::AIsotropic);
        res["generic_in_between"] =
            bool_defect(classify_normal(frame, generic).cls == SingularClass::Generic);
        return res;
    });
}

void suite_jacobi_oracle(SuiteBuilder& b, const SuiteParams& sp) {
    const int trials = sp.grid.value_or(100);
    const double step = sp.h.value_or(1e-4);
    b.add("jacobi-oracle",
          {{"trials", double(trials)}, {"step", step}, {"seed", double(sp.seed)}}, 1e-8, [=] {
              VectorSampler sampler(sp.seed);
              double worst = 0.0;
              for (int i = 0; i < trials; ++i) {
                  const double kappa = sampler.uniform(-4.0, 4.0);
                  const double f0 = sampler.uniform(-2.0, 2.0);
                  const double f0p = sampler.uniform(-2.0, 2.0);
                  const double r = sampler.uniform(1e-3, 3.0);
                  const JacobiSolution closed = jacobi_solution(kappa, f0, f0p, r);
                  const JacobiSolution ode = jacobi_ode_oracle(kappa, f0, f0p, r, step);
                  worst = std::max({worst, std::abs(closed.value - ode.value),
                                    std::abs(closed.derivative - ode.derivative)});
              }
              return Residuals{{"closed_vs_ode", worst}};
          });
}

void suite_sphere(SuiteBuilder& b, const SuiteParams& sp) {
    const int n = sp.n.value_or(3);
    const double r = sp.r.value_or(2.0);
    const double h = sp.h.value_or(1e-3);
    const Params params{{"n", double(n)}, {"r", r}, {"h", h}};

    const SphereCheckResult coarse = sphere_check(n, r, h);
    const SphereCheckResult fine = sphere_check(n, r, h / 2.0);

    b.add("sphere-xi", params, 1e-8, [&] { return Residuals{{"xi_match", coarse.xi_match}}; });
    b.add("sphere-shape", params, 1e-5, [&] {
        return Residuals{{"shape_vs_minus_inv_r", coarse.shape_residual},
                         {"contact_defect", coarse.contact_defect}};
    });
    b.add("sphere-rho-constancy", params, 1e-6,
          [&] { return Residuals{{"rho_variation", coarse.rho_variation}}; });
    b.add("sphere-deta", params, 1e-5,
          [&] { return Residuals{{"deta_plus_2r_omega_rel", coarse.deta_plus_2r_omega_rel}}; });
    b.add("sphere-closedness", params, 1e-4, [&] {
        return Residuals{{"domega", coarse.domega_max}, {"dtrs_along_c", coarse.dtrs_c_max}};
    });
    b.add("sphere-convergence", params, 1e-12, [&] {
        auto conv = [](double c, double f) {
            return margin_defect(3.5, f > 0.0 ? c / f : 1e9);
        };
        Residuals res{{"conv_xi", conv(coarse.xi_match, fine.xi_match)},
                      {"conv_shape", conv(coarse.shape_residual, fine.shape_residual)},
                      {"conv_contact", conv(coarse.contact_defect, fine.contact_defect)},
                      {"conv_rho", conv(coarse.rho_variation, fine.rho_variation)},
                      {"conv_deta",
                       conv(coarse.deta_plus_2r_omega_rel, fine.deta_plus_2r_omega_rel)},
                      {"conv_domega", conv(coarse.domega_max, fine.domega_max)},
                      {"conv_dtrs", conv(coarse.dtrs_c_max, fine.dtrs_c_max)}};
        return res;
    });
    if (n == 2) {
        b.add("sphere-dim2", params, 1e-12,
              [&] { return Residuals{{"dim2_everywhere", bool_defect(coarse.dim2)}}; });
    }
}

void suite_c2_tube(SuiteBuilder& b, const SuiteParams& sp) {
    const double r = sp.r.value_or(0.5);
    const double h = sp.h.value_or(1e-3);
    const Params params{{"r", r}, {"h", h}};
    const C2TubeCheckResult res = c2_tube_check(quadratic_graph_curve(), r, h);

    b.add("c2-tube-curvatures", params, 1e-4, [&] {
        // at z = 0 the osculating radius is 1, so the pair is (1/(1-r), -1/(1+r))
        return Residuals{{"pc_match", res.pc_residual},
                         {"contact_defect", res.contact_defect},
                         {"center_upper", std::abs(res.center_pc_upper - 1.0 / (1.0 - r))},
                         {"center_lower", std::abs(res.center_pc_lower + 1.0 / (1.0 + r))}};
    });
    b.add("c2-tube-rho-inhomogeneity", params, 1e-12, [&] {
        return Residuals{{"variation_above_0p01", margin_defect(0.01, res.rho_variation)}};
    });
    b.add("c2-tube-dim2", params, 1e-12,
          [&] { return Residuals{{"dim2_everywhere", bool_defect(res.dim2_all)}}; });
}

void suite_focal(SuiteBuilder& b, const SuiteParams& sp) {
    const int n = sp.n.value_or(3);
    const auto quadric = AmbientSpec::quadric(ModelFrame::standard(n, true), +1);
    const auto dual = AmbientSpec::quadric(ModelFrame::standard(n, true), -1);

    b.add("focal-sphere-core", {{"n", double(n)}, {"r_max", 2.0}}, 1e-10, [&] {
        const auto zeros = focal_distances(quadric, {{2.0, 0.0}, {0.0, 0.0}}, 2.0);
        const double first = zeros.empty() ? std::numeric_limits<double>::infinity() : zeros.front();
        return Residuals{{"first_vs_pi_over_2sqrt2", std::abs(first - kFocalBound)}};
    });
    b.add("focal-dual-core", {{"n", double(n)}, {"r_max", 10.0}}, 1e-12, [&] {
        const auto zeros = focal_distances(dual, {{-2.0, 0.0}, {0.0, 0.0}}, 10.0);
        return Residuals{{"focal_count", double(zeros.size())}};
    });
    b.add("focal-bracketed-root", {{"kappa", 2.0}, {"s0", kSqrt2}}, 1e-10, [&] {
        const auto zeros = focal_distances(quadric, {{2.0, kSqrt2}}, 1.0);
        const double first = zeros.empty() ? std::numeric_limits<double>::infinity() : zeros.front();
        return Residuals{{"root_vs_pi_over_4sqrt2", std::abs(first - M_PI / (4.0 * kSqrt2))}};
    });
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "curvature-selftest", "einstein", "theorem1", "theorem2", "singular-sweep",
        "jacobi-oracle",      "sphere",   "c2-tube",  "focal",    "all"};
    return names;
}

std::vector<CheckReport> run_suite(const std::string& name, const SuiteParams& params) {
    SuiteBuilder builder(params);
    if (name == "curvature-selftest") {
        suite_curvature_selftest(builder, params);
    } else if (name == "einstein") {
        suite_einstein(builder, params);
    } else if (name == "theorem1") {
        suite_theorem1(builder, params);
    } else if (name == "theorem2") {
        suite_theorem2(builder, params);
    } else if (name == "singular-sweep") {
        suite_singular_sweep(builder, params);
    } else if (name == "jacobi-oracle") {
        suite_jacobi_oracle(builder, params);
    } else if (name == "sphere") {
        suite_sphere(builder, params);
    } else if (name == "c2-tube") {
        suite_c2_tube(builder, params);
    } else if (name == "focal") {
        suite_focal(builder, params);
    } else if (name == "all") {
        suite_curvature_selftest(builder, params);
        suite_einstein(builder, params);
        suite_theorem1(builder, params);
        suite_theorem2(builder, params);
        suite_singular_sweep(builder, params);
        suite_jacobi_oracle(builder, params);
        suite_sphere(builder, params);
        suite_c2_tube(builder, params);
        suite_focal(builder, params);
    } else {
        throw UsageError("unknown suite '" + name + "'");
    }
    return builder.take();
}

} // namespace contactgeo
