#include <doctest.h>

#include <cmath>

#include "contactgeo/model_frame.hpp"
#include "contactgeo/sampling.hpp"

using namespace contactgeo;

TEST_CASE("standard frame satisfies the structure equations exactly") {
    const ModelFrame f = ModelFrame::standard(3, true);
    const int d = 6;
    const Mat id = Mat::Identity(d, d);

    CHECK(operator_norm(f.J() * f.J() + id) < 1e-12);
    CHECK(operator_norm(f.A() * f.A() - id) < 1e-12);
    CHECK(operator_norm(f.A() * f.J() + f.J() * f.A()) < 1e-12);
    CHECK(operator_norm(f.J().transpose() * f.J() - id) < 1e-12);
    CHECK(operator_norm(f.A() - f.A().transpose()) < 1e-12);
}

TEST_CASE("frame without real structure rejects quadric use") {
    const ModelFrame f = ModelFrame::standard(2, false);
    CHECK_FALSE(f.has_real_structure());
    CHECK_THROWS_AS(f.A(), NoRealStructureError);
    CHECK_THROWS_AS(f.rotated_real_structure(0.5), NoRealStructureError);
    CHECK_THROWS_AS(AmbientSpec::quadric(f, +1), NoRealStructureError);
}

TEST_CASE("V(A) is totally real") {
    const ModelFrame f = ModelFrame::standard(4, true);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(std::abs((f.J() * f.e(i)).dot(f.e(j))) < 1e-15);
}

TEST_CASE("dimension below two is rejected") {
    CHECK_THROWS_AS(ModelFrame::standard(1, false), InvalidDimensionError);
    CHECK_THROWS_AS(ModelFrame::standard(0, true), InvalidDimensionError);
    CHECK_THROWS_AS(ModelFrame::standard(-3, true), InvalidDimensionError);
}

TEST_CASE("rotated real structure endpoints") {
    const ModelFrame f = ModelFrame::standard(3, true);
    CHECK(operator_norm(f.rotated_real_structure(0.0) - f.A()) < 1e-15);
    CHECK(operator_norm(f.rotated_real_structure(M_PI) + f.A()) < 1e-12);

    const Mat as = f.rotated_real_structure(M_PI / 3.0);
    CHECK(operator_norm(as * as - Mat::Identity(6, 6)) < 1e-12);
}

TEST_CASE("every rotation stays a real structure") {
    const ModelFrame f = ModelFrame::standard(3, true);
    const Mat id = Mat::Identity(6, 6);
    VectorSampler sampler(11);
    for (int trial = 0; trial < 100; ++trial) {
        const double s = sampler.uniform(-10.0, 10.0);
        const Mat as = f.rotated_real_structure(s);
        CHECK(operator_norm(as * as - id) < 1e-12);
        CHECK(operator_norm(as * f.J() + f.J() * as) < 1e-12);
        CHECK(operator_norm(as - as.transpose()) < 1e-12);
        const Vec x = sampler.vector(6);
        const Vec y = sampler.vector(6);
        CHECK(std::abs((as * x).dot(as * y) - x.dot(y)) < 1e-12);
    }
}

TEST_CASE("coordinate complement") {
    const ModelFrame f = ModelFrame::standard(3, false);
    const Mat comp = orthonormal_complement(f, {f.e(0)});
    REQUIRE(comp.cols() == 5);
    for (int i = 0; i < 5; ++i) {
        CHECK(std::abs(comp.col(i).dot(f.e(0))) < 1e-12);
        CHECK(std::abs(comp.col(i).norm() - 1.0) < 1e-12);
    }
}

TEST_CASE("complement of {N, JN} spans the maximal complex subspace") {
    const ModelFrame f = ModelFrame::standard(3, false);
    VectorSampler sampler(5);
    const Vec n = sampler.unit_vector(6);
    const Mat comp = orthonormal_complement(f, {n, f.J() * n});
    REQUIRE(comp.cols() == 4);
    CHECK((comp.transpose() * n).norm() < 1e-12);
    CHECK((comp.transpose() * (f.J() * n)).norm() < 1e-12);
}

TEST_CASE("near-dependent input is rejected") {
    const ModelFrame f = ModelFrame::standard(3, false);
    VectorSampler sampler(7);
    const Vec v = sampler.unit_vector(6);
    const Vec w = sampler.unit_vector(6);
    CHECK_THROWS_AS(orthonormal_complement(f, {v, Vec(v + 1e-12 * w)}), DegenerateInputError);
}

TEST_CASE("complement stacked with orthonormalized input is orthogonal") {
    const ModelFrame f = ModelFrame::standard(4, false);
    VectorSampler sampler(13);
    for (int k = 1; k <= 4; ++k) {
        Mat input(8, k);
        std::vector<Vec> vecs;
        for (int j = 0; j < k; ++j) {
            input.col(j) = sampler.vector(8);
            vecs.push_back(input.col(j));
        }
        const Mat q = orthonormalize(input);
        const Mat comp = orthonormal_complement(f, vecs);
        Mat full(8, 8);
        full.leftCols(k) = q;
        full.rightCols(8 - k) = comp;
        CHECK(operator_norm(full.transpose() * full - Mat::Identity(8, 8)) < 1e-10);
    }
}

TEST_CASE("ambient spec construction rules") {
    CHECK_THROWS_AS(AmbientSpec::csf(ModelFrame::standard(3, true), 4.0), WrongAmbientError);
    CHECK_THROWS_AS(AmbientSpec::quadric(ModelFrame::standard(3, true), 2), ParameterError);
    CHECK_THROWS_AS(AmbientSpec::quadric(ModelFrame::standard(3, true), 0), ParameterError);

    const AmbientSpec csf = AmbientSpec::csf(ModelFrame::standard(3, false), -4.0);
    CHECK(csf.is_csf());
    const AmbientSpec quad = AmbientSpec::quadric(ModelFrame::standard(3, true), -1);
    CHECK(quad.is_quadric());
    CHECK(quad.epsilon == -1);
}
