#include "contactgeo/tube_builder.hpp"

#include <algorithm>
#include <cmath>

namespace contactgeo {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kFocalBound = M_PI / (2.0 * kSqrt2);

PrincipalProfile assemble_profile(int n, std::optional<double> r, int epsilon, double rho) {
    PrincipalProfile p{AmbientSpec::quadric(ModelFrame::standard(n, true), epsilon),
                       n,
                       r,
                       -static_cast<double>(epsilon) / rho,
                       0.0,
                       2.0 * rho,
                       rho};
    return p;
}

} // namespace

JacobiSolution jacobi_solution(double kappa, double f0, double f0p, double r) {
    if (kappa > 0.0) {
        const double w = std::sqrt(kappa);
        return JacobiSolution{f0 * std::cos(w * r) + f0p * std::sin(w * r) / w,
                              -f0 * w * std::sin(w * r) + f0p * std::cos(w * r)};
    }
    if (kappa < 0.0) {
        const double w = std::sqrt(-kappa);
        return JacobiSolution{f0 * std::cosh(w * r) + f0p * std::sinh(w * r) / w,
                              f0 * w * std::sinh(w * r) + f0p * std::cosh(w * r)};
    }
    return JacobiSolution{f0 + f0p * r, f0p};
}

JacobiSolution jacobi_ode_oracle(double kappa, double f0, double f0p, double r, double step) {
    if (step <= 0.0) throw ParameterError("jacobi_ode_oracle: step must be positive");
    const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(r) / step)));
    const double h = r / steps;
    double f = f0;
    double g = f0p;
    for (int i = 0; i < steps; ++i) {
        const double k1f = g;
        const double k1g = -kappa * f;
        const double k2f = g + 0.5 * h * k1g;
        const double k2g = -kappa * (f + 0.5 * h * k1f);
        const double k3f = g + 0.5 * h * k2g;
        const double k3g = -kappa * (f + 0.5 * h * k2f);
        const double k4f = g + h * k3g;
        const double k4g = -kappa * (f + h * k3f);
        f += h / 6.0 * (k1f + 2.0 * k2f + 2.0 * k3f + k4f);
        g += h / 6.0 * (k1g + 2.0 * k2g + 2.0 * k3g + k4g);
    }
    return JacobiSolution{f, g};
}

PrincipalProfile tube_profile_theorem1(int n, double r) {
    if (n < 3) throw InvalidDimensionError("tube_profile_theorem1: n must be >= 3");
    if (!(r > 0.0 && r < kFocalBound))
        throw FocalRangeError("tube_profile_theorem1: radius must lie in (0, pi/(2 sqrt 2))");
    return assemble_profile(n, r, +1, std::tan(kSqrt2 * r) / kSqrt2);
}

PrincipalProfile tube_profile_theorem2(int case_id, int n, double r) {
    if (n < 3) throw InvalidDimensionError("tube_profile_theorem2: n must be >= 3");
    switch (case_id) {
        case 1:
            if (r <= 0.0) throw ParameterError("tube_profile_theorem2: case 1 needs r > 0");
            return assemble_profile(n, r, -1, std::tanh(kSqrt2 * r) / kSqrt2);
        case 2:
            return assemble_profile(n, std::nullopt, -1, 1.0 / kSqrt2);
        case 3:
            if (r <= 0.0) throw ParameterError("tube_profile_theorem2: case 3 needs r > 0");
            return assemble_profile(n, r, -1, 1.0 / (kSqrt2 * std::tanh(kSqrt2 * r)));
        default:
            throw ParameterError("tube_profile_theorem2: case must be 1, 2, or 3");
    }
}

std::pair<ContactStructure, ShapeData> profile_shape_operator(const PrincipalProfile& p) {
    const ModelFrame& frame = p.ambient.frame;
    const int n = p.n;
    const int d = 2 * n;

    const Vec normal = frame.e(0); // A-principal by construction
    ContactStructure cs = induce_contact_structure(frame, normal);

    // Diagonal in the standard basis: xi = -J e_0 = -e_n carries alpha,
    // e_1..e_{n-1} (V(A) cap C) carry mu, e_{n+1}..e_{2n-1} carry lambda.
    Vec diag = Vec::Zero(d);
    diag(n) = p.alpha;
    for (int k = 1; k < n; ++k) {
        diag(k) = p.mu;
        diag(n + k) = p.lambda;
    }
    const Mat s = diag.asDiagonal();

    return {cs, make_shape_data_with_rho(cs, s, p.rho)};
}

std::vector<double> focal_distances(const AmbientSpec& ambient,
                                    const std::vector<CorePrincipalData>& core_data,
                                    double r_max) {
    (void)ambient;
    if (r_max <= 0.0) throw ParameterError("focal_distances: r_max must be positive");

    constexpr double kBracket = 1e-3;
    constexpr double kBisectTol = 1e-12;

    std::vector<double> zeros;
    for (const CorePrincipalData& dir : core_data) {
        auto f = [&](double r) { return jacobi_solution(dir.kappa, 1.0, -dir.s0, r).value; };
        double lo = 0.0;
        double flo = f(0.0); // = 1
        while (lo < r_max) {
            const double hi = std::min(lo + kBracket, r_max);
            const double fhi = f(hi);
            if (flo == 0.0) {
                zeros.push_back(lo);
            } else if (flo * fhi < 0.0) {
                double a = lo;
                double b = hi;
                double fa = flo;
                while (b - a > kBisectTol) {
                    const double mid = 0.5 * (a + b);
                    const double fm = f(mid);
                    if (fa * fm <= 0.0) {
                        b = mid;
                    } else {
                        a = mid;
                        fa = fm;
                    }
                }
                zeros.push_back(0.5 * (a + b));
            }
            lo = hi;
            flo = fhi;
        }
    }
    std::sort(zeros.begin(), zeros.end());
    return zeros;
}

} // namespace contactgeo
