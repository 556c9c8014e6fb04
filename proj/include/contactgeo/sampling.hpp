#pragma once

#include <cstdint>
#include <random>

#include "contactgeo/model_frame.hpp"

namespace contactgeo {

/// Reproducible vector source: components uniform in [-1, 1] from a fixed seed.
class VectorSampler {
public:
    explicit VectorSampler(std::uint64_t seed = 0) : rng_(seed), dist_(-1.0, 1.0) {}

    Vec vector(int dim) {
        Vec v(dim);
        for (int i = 0; i < dim; ++i) v(i) = dist_(rng_);
        return v;
    }

    /// Rejects near-zero draws before normalizing.
    Vec unit_vector(int dim) {
        for (;;) {
            Vec v = vector(dim);
            const double n = v.norm();
            if (n > 1e-3) return v / n;
        }
    }

    double uniform(double lo, double hi) {
        return lo + (dist_(rng_) + 1.0) * 0.5 * (hi - lo);
    }

private:
    std::mt19937_64 rng_;
    std::uniform_real_distribution<double> dist_;
};

} // namespace contactgeo
