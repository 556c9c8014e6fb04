#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "contactgeo/contact_core.hpp"
#include "contactgeo/sampling.hpp"
#include "contactgeo/tube_builder.hpp"

using namespace contactgeo;

namespace {

Mat tangent_projector(const Vec& n) {
    return Mat::Identity(n.size(), n.size()) - n * n.transpose();
}

// S = rho (Id - eta otimes xi) + alpha eta otimes xi on TM, extended by zero on RN.
Mat umbilic_on_c(const ContactStructure& cs, double rho, double alpha) {
    const Mat p = tangent_projector(cs.N);
    return rho * (p - cs.xi * cs.xi.transpose()) + alpha * cs.xi * cs.xi.transpose();
}

} // namespace

TEST_CASE("induced structure satisfies the almost contact identities") {
    VectorSampler sampler(31);
    for (int n : {2, 3, 4}) {
        const ModelFrame f = ModelFrame::standard(n, false);
        const int d = 2 * n;
        for (int trial = 0; trial < 20; ++trial) {
            const Vec nvec = sampler.unit_vector(d);
            const ContactStructure cs = induce_contact_structure(f, nvec);

            CHECK(std::abs(cs.xi.norm() - 1.0) < 1e-12);
            CHECK((cs.phi * cs.xi).norm() < 1e-12);
            CHECK(std::abs(cs.eta(cs.xi) - 1.0) < 1e-12);
            CHECK((cs.phi * cs.N).norm() < 1e-12);

            // phi^2 = -Id + eta (x) xi on TM
            const Mat p = tangent_projector(nvec);
            CHECK(operator_norm(cs.phi * cs.phi + p - cs.xi * cs.xi.transpose()) < 1e-12);

            // phi restricted to C squares to -Id
            const Mat pc = cs.c_basis * cs.c_basis.transpose();
            CHECK(operator_norm(pc * (cs.phi * cs.phi + Mat::Identity(d, d)) * pc) < 1e-12);

            // omega antisymmetry / phi-compatibility
            const Vec x = sampler.vector(d);
            const Vec y = sampler.vector(d);
            CHECK(std::abs((cs.phi * x).dot(y) + x.dot(cs.phi * y)) < 1e-12);
        }
    }
}

TEST_CASE("A-principal normal pairs with its Reeb vector through A") {
    const ModelFrame f = ModelFrame::standard(3, true);
    const ContactStructure cs = induce_contact_structure(f, f.e(0));
    CHECK(std::abs((f.A() * cs.xi).dot(cs.xi) + 1.0) < 1e-14);
}

TEST_CASE("non-unit normal is rejected") {
    const ModelFrame f = ModelFrame::standard(3, false);
    CHECK_THROWS_AS(induce_contact_structure(f, Vec(2.0 * f.e(0))), NormalizationError);
}

TEST_CASE("umbilic-on-C operators are exactly contact") {
    VectorSampler sampler(37);
    const ModelFrame f = ModelFrame::standard(3, false);
    const Vec n = sampler.unit_vector(6);
    const ContactStructure cs = induce_contact_structure(f, n);

    const double rho = 0.8;
    const double alpha = -1.7;
    const ShapeData sd = make_shape_data(cs, umbilic_on_c(cs, rho, alpha), 3);

    CHECK(std::abs(sd.alpha - alpha) < 1e-12);
    CHECK(std::abs(sd.rho - rho) < 1e-12); // contact_rho inverts the construction
    CHECK(contact_defect(cs, sd) < 1e-12);
    CHECK(pairing_check(cs, sd) < 1e-12); // lambda = rho maps to 2rho - lambda = rho
    CHECK(hopf_data(cs, sd).defect < 1e-12);
}

TEST_CASE("rank-one operators violate the contact equation") {
    const ModelFrame f = ModelFrame::standard(3, false);
    const ContactStructure cs = induce_contact_structure(f, f.e(0));
    const Vec x0 = cs.c_basis.col(0);
    const ShapeData sd = make_shape_data_with_rho(cs, x0 * x0.transpose(), 1.0);
    CHECK(contact_defect(cs, sd) >= (cs.phi * x0).norm() - 1e-12);
    CHECK(contact_defect(cs, sd) > 0.5);
}

TEST_CASE("hopf data") {
    const ModelFrame f = ModelFrame::standard(3, false);
    const ContactStructure cs = induce_contact_structure(f, f.e(0));
    const int d = 6;

    const ShapeData identity = make_shape_data_with_rho(cs, tangent_projector(cs.N), 0.5);
    const HopfData hid = hopf_data(cs, identity);
    CHECK(std::abs(hid.alpha - 1.0) < 1e-12);
    CHECK(hid.defect < 1e-12);

    // off-diagonal coupling S xi = 0.3 X0 + ...
    const Vec x0 = cs.c_basis.col(0);
    Mat s = Mat::Zero(d, d);
    s += 0.3 * (x0 * cs.xi.transpose() + cs.xi * x0.transpose());
    const ShapeData sd = make_shape_data_with_rho(cs, s, 0.0);
    CHECK(hopf_data(cs, sd).defect >= 0.3 - 1e-12);
}

TEST_CASE("contact rho from the trace identity") {
    const ModelFrame f = ModelFrame::standard(3, false);
    VectorSampler sampler(41);
    const Vec n = sampler.unit_vector(6);
    const ContactStructure cs = induce_contact_structure(f, n);

    // sphere S^{2n-1}(r), outward normal: S = -(1/r) Id on TM
    const double r = 2.5;
    const Mat s = -tangent_projector(n) / r;
    const ShapeData sd = make_shape_data(cs, s, 3);
    CHECK(std::abs(sd.rho + 1.0 / r) < 1e-12);

    CHECK_THROWS_AS(contact_rho(sd, 1), InvalidDimensionError);
}

TEST_CASE("pairing check requires contact data") {
    const ModelFrame f = ModelFrame::standard(3, false);
    const ContactStructure cs = induce_contact_structure(f, f.e(0));
    const Vec x0 = cs.c_basis.col(0);
    const ShapeData bad = make_shape_data_with_rho(cs, x0 * x0.transpose(), 1.0);
    CHECK_THROWS_AS(pairing_check(cs, bad), PreconditionError);
}

TEST_CASE("square identity holds for the flat sphere and detects perturbations") {
    const ModelFrame f = ModelFrame::standard(3, false);
    const AmbientSpec flat = AmbientSpec::csf(ModelFrame::standard(3, false), 0.0);
    VectorSampler sampler(43);
    const Vec n = sampler.unit_vector(6);
    const ContactStructure cs = induce_contact_structure(f, n);

    const double r = 1.7;
    const ShapeData sphere = make_shape_data(cs, Mat(-tangent_projector(n) / r), 3);
    CHECK(asquared_residual(cs, sphere, flat) < 1e-12);

    // shift one C-eigenvalue by 0.1
    const Vec x0 = cs.c_basis.col(0);
    const Mat perturbed = sphere.S + 0.1 * x0 * x0.transpose();
    const ShapeData sd = make_shape_data_with_rho(cs, perturbed, sphere.rho);
    CHECK(asquared_residual(cs, sd, flat) > 0.01);
}

TEST_CASE("geodesic spheres in curved ambients satisfy the square identity") {
    // Umbilic-on-C Hopf spheres: lambda = cot(r), alpha = 2 cot(2r) at c = 4,
    // and the hyperbolic analogue at c = -4. Both are contact, and
    // 2(lambda^2 - 2 rho lambda + alpha rho) = -(c/2) matches the curvature side.
    VectorSampler sampler(59);
    const double r = 0.7;
    for (double c : {4.0, -4.0}) {
        const ModelFrame f = ModelFrame::standard(3, false);
        const AmbientSpec spec = AmbientSpec::csf(ModelFrame::standard(3, false), c);
        const Vec n = sampler.unit_vector(6);
        const ContactStructure cs = induce_contact_structure(f, n);

        const double lambda = (c > 0) ? 1.0 / std::tan(r) : 1.0 / std::tanh(r);
        const double alpha = (c > 0) ? 2.0 / std::tan(2.0 * r) : 2.0 / std::tanh(2.0 * r);
        const ShapeData sd = make_shape_data(cs, umbilic_on_c(cs, lambda, alpha), 3);

        CHECK(std::abs(sd.rho - lambda) < 1e-12);
        CHECK(contact_defect(cs, sd) < 1e-12);
        CHECK(pairing_check(cs, sd) < 1e-12);
        CHECK(asquared_residual(cs, sd, spec) < 1e-12);
        const TraceIdentityResiduals tr = trace_identities(cs, sd, spec, 3);
        CHECK(tr.mean_curvature < 1e-12);
        CHECK(tr.square_norm < 1e-12);
    }
}

TEST_CASE("trace identities on model profiles") {
    // tube profile, n = 3, r = 0.3
    const PrincipalProfile p = tube_profile_theorem1(3, 0.3);
    const auto [cs, sd] = profile_shape_operator(p);
    CHECK(std::abs(sd.S.trace() + 1.8533) < 1e-3); // alpha + 4 rho
    const TraceIdentityResiduals res = trace_identities(cs, sd, p.ambient, 3);
    CHECK(res.mean_curvature < 1e-10);
    CHECK(res.square_norm < 1e-10);

    // horosphere, any n: tr S = n sqrt(2)
    const PrincipalProfile horo = tube_profile_theorem2(2, 4, 0.0);
    const auto [hcs, hsd] = profile_shape_operator(horo);
    CHECK(std::abs(hsd.S.trace() - 4.0 * std::sqrt(2.0)) < 1e-12);
    const TraceIdentityResiduals hres = trace_identities(hcs, hsd, horo.ambient, 4);
    CHECK(hres.mean_curvature < 1e-12);
    CHECK(hres.square_norm < 1e-12);
}

TEST_CASE("dimension-two contact criterion") {
    const ModelFrame f = ModelFrame::standard(2, false);
    const ContactStructure cs = induce_contact_structure(f, f.e(0));
    const Vec x = cs.c_basis.col(0);
    const Vec phix = cs.phi * x;

    auto diag_op = [&](double alpha, double lam, double mu) {
        return Mat(alpha * cs.xi * cs.xi.transpose() + lam * x * x.transpose() +
                   mu * phix * phix.transpose());
    };

    // C^2 tube data at theta = 1, r = 0.5: curvatures (2, -2/3), alpha = -2
    const ShapeData tube = make_shape_data(cs, diag_op(-2.0, 2.0, -2.0 / 3.0), 2);
    CHECK(std::abs(2.0 * tube.rho - 4.0 / 3.0) < 1e-12);
    CHECK(dim2_contact_check(cs, tube));

    // minimal on C: lambda + mu = 0 is Hopf but not contact
    const ShapeData minimal = make_shape_data(cs, diag_op(0.7, 1.0, -1.0), 2);
    CHECK_FALSE(dim2_contact_check(cs, minimal));

    // tr S = alpha
    const ShapeData balanced = make_shape_data(cs, diag_op(-0.4, 1.0, -1.0), 2);
    CHECK_FALSE(dim2_contact_check(cs, balanced));

    // wrong dimension
    const ModelFrame f3 = ModelFrame::standard(3, false);
    const ContactStructure cs3 = induce_contact_structure(f3, f3.e(0));
    const ShapeData sd3 = make_shape_data(cs3, Mat(Mat::Zero(6, 6)), 3);
    CHECK_THROWS_AS(dim2_contact_check(cs3, sd3), InvalidDimensionError);

    // non-Hopf input
    Mat s = diag_op(1.0, 1.0, 2.0);
    s += 0.5 * (x * cs.xi.transpose() + cs.xi * x.transpose());
    const ShapeData nonhopf = make_shape_data(cs, s, 2);
    CHECK_THROWS_AS(dim2_contact_check(cs, nonhopf), PreconditionError);
}

TEST_CASE("contact implies Hopf on every constructed example") {
    VectorSampler sampler(47);
    const ModelFrame f = ModelFrame::standard(4, false);
    for (int trial = 0; trial < 20; ++trial) {
        const Vec n = sampler.unit_vector(8);
        const ContactStructure cs = induce_contact_structure(f, n);
        const ShapeData sd = make_shape_data(
            cs, umbilic_on_c(cs, sampler.uniform(-2.0, 2.0), sampler.uniform(-2.0, 2.0)), 4);
        REQUIRE(contact_defect(cs, sd) < 1e-10);
        CHECK(hopf_data(cs, sd).defect < 1e-9);
    }
}

TEST_CASE("C-spectrum of contact data is symmetric about rho") {
    const PrincipalProfile p = tube_profile_theorem1(4, 0.6);
    const auto [cs, sd] = profile_shape_operator(p);

    const Mat sc = cs.c_basis.transpose() * sd.S * cs.c_basis;
    Eigen::SelfAdjointEigenSolver<Mat> eig(0.5 * (sc + sc.transpose()));
    std::vector<double> evs(eig.eigenvalues().data(),
                            eig.eigenvalues().data() + eig.eigenvalues().size());
    std::vector<double> reflected;
    for (double lam : evs) reflected.push_back(2.0 * sd.rho - lam);
    std::sort(evs.begin(), evs.end());
    std::sort(reflected.begin(), reflected.end());
    for (std::size_t i = 0; i < evs.size(); ++i)
        CHECK(std::abs(evs[i] - reflected[i]) < 1e-10);
}

TEST_CASE("orientation flip negates rho and alpha, preserves the defect") {
    VectorSampler sampler(53);
    const ModelFrame f = ModelFrame::standard(3, false);
    const Vec n = sampler.unit_vector(6);

    const ContactStructure cs = induce_contact_structure(f, n);
    const ContactStructure cs_flip = induce_contact_structure(f, Vec(-n));

    CHECK(operator_norm(cs.phi - cs_flip.phi) < 1e-12);

    const Mat s = umbilic_on_c(cs, 0.9, -1.3) +
                  0.05 * (cs.c_basis.col(0) * cs.c_basis.col(0).transpose());
    const ShapeData sd = make_shape_data(cs, s, 3);
    const ShapeData sd_flip = make_shape_data(cs_flip, Mat(-s), 3);

    CHECK(std::abs(sd_flip.alpha + sd.alpha) < 1e-12);
    CHECK(std::abs(sd_flip.rho + sd.rho) < 1e-12);
    CHECK(std::abs(contact_defect(cs, sd) - contact_defect(cs_flip, sd_flip)) < 1e-12);
}

TEST_CASE("shape data rejects asymmetric operators") {
    const ModelFrame f = ModelFrame::standard(3, false);
    const ContactStructure cs = induce_contact_structure(f, f.e(0));
    Mat s = Mat::Zero(6, 6);
    s(1, 2) = 1.0; // skew on TM
    CHECK_THROWS_AS(make_shape_data(cs, s, 3), ParameterError);
}
