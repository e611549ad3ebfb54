#pragma once

#include <cstdint>
#include <random>

#include "fatpix/haar.hpp"
#include "fatpix/ifs.hpp"
#include "fatpix/image.hpp"
#include "fatpix/matrix.hpp"
#include "fatpix/wfa.hpp"

namespace fatpix {

// Deterministic generator: distributions are implemented directly on the
// mt19937_64 stream so outputs are identical across standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t bits() { return gen_(); }
    std::size_t below(std::size_t n);             // uniform in [0, n)
    double uniform(double lo, double hi);         // uniform in [lo, hi)
    double signed_uniform(double magnitude);      // uniform in [-magnitude, magnitude)

private:
    std::mt19937_64 gen_;
};

struct RandomIfsParams {
    std::size_t max_maps = 4;
    std::size_t max_range_depth = 3;
    double alpha_max = 0.9;
    double beta_max = 128.0;
};

// Rejection-samples a system passing validation (structural rules and the
// requested |alpha| bound).
QuadIfs random_quad_ifs(Rng& rng, const RandomIfsParams& params);

Image random_image(Rng& rng, std::size_t side, double lo = 0.0, double hi = 256.0);

Mat random_matrix(Rng& rng, std::size_t n, double magnitude);

// Automaton with dense-ish random matrices; entry magnitudes are kept small
// so depth-4 products stay well-conditioned.
Wfa random_wfa(Rng& rng, std::size_t n, double magnitude = 0.5);

// Taps sum to zero exactly: the last tap is the negated left-fold sum of the
// first three.
HighPassFilter random_zero_sum_filter(Rng& rng);

}  // namespace fatpix
