#include "fatpix/random_systems.hpp"

#include "fatpix/error.hpp"

namespace fatpix {

std::size_t Rng::below(std::size_t n) {
    return n == 0 ? 0 : static_cast<std::size_t>(gen_() % n);
}

double Rng::uniform(double lo, double hi) {
    double unit = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    return lo + unit * (hi - lo);
}

double Rng::signed_uniform(double magnitude) { return uniform(-magnitude, magnitude); }

QuadIfs random_quad_ifs(Rng& rng, const RandomIfsParams& params) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        QuadIfs ifs;
        std::size_t k = 1 + rng.below(params.max_maps);
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t domain_depth = rng.below(params.max_range_depth);
            QuadMap m;
            for (std::size_t d = 0; d < domain_depth; ++d) {
                m.domain = m.domain.child(static_cast<int>(rng.below(4)));
            }
            // Ranges land anywhere one level deeper, not necessarily inside
            // the domain.
            for (std::size_t d = 0; d < domain_depth + 1; ++d) {
                m.range = m.range.child(static_cast<int>(rng.below(4)));
            }
            m.alpha = rng.signed_uniform(params.alpha_max);
            m.beta = rng.uniform(0.0, params.beta_max);
            ifs.maps.push_back(std::move(m));
        }
        if (validate(ifs).empty()) return ifs;
    }
    throw StructureError("could not sample a valid IFS in 1000 attempts");
}

Image random_image(Rng& rng, std::size_t side, double lo, double hi) {
    Image img(side, 0.0);
    for (double& s : img.samples()) s = rng.uniform(lo, hi);
    return img;
}

Mat random_matrix(Rng& rng, std::size_t n, double magnitude) {
    Mat m(n, n);
    for (double& v : m.a) v = rng.signed_uniform(magnitude);
    return m;
}

Wfa random_wfa(Rng& rng, std::size_t n, double magnitude) {
    Wfa w;
    w.n = n;
    for (int q = 0; q < 4; ++q) {
        w.mats[q] = SparseMat::from_dense(random_matrix(rng, n, magnitude));
    }
    w.initial.resize(n);
    w.output.resize(n);
    for (double& v : w.initial) v = rng.signed_uniform(1.0);
    for (double& v : w.output) v = rng.signed_uniform(1.0);
    return w;
}

HighPassFilter random_zero_sum_filter(Rng& rng) {
    HighPassFilter h;
    h.name = "random";
    double partial = 0.0;
    for (int i = 0; i < 3; ++i) {
        h.taps[i] = rng.signed_uniform(1.0);
        partial += h.taps[i];
    }
    h.taps[3] = -partial;
    return h;
}

}  // namespace fatpix
