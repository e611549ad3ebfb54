#include "fatpix/exact_coder.hpp"

#include "fatpix/error.hpp"

namespace fatpix {

Wfa encode_exact(const Image& img, std::size_t state_limit) {
    std::size_t m = img.depth();
    std::size_t n = std::size_t{1} << (2 * m);  // 4^m
    if (n > state_limit) {
        throw CapacityError("exact coder needs " + std::to_string(n) +
                            " states, limit is " + std::to_string(state_limit));
    }

    Wfa w;
    w.n = n;
    w.initial.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto rect = morton_address(i, m).rect(img.side());
        w.initial[i] = img.at(rect.row0, rect.col0);
    }
    w.output.assign(n, 0.0);
    w.output[0] = 1.0;

    // Stride-4 selection with zero padding in rows j >= 4^(m-1); the padded
    // rows are never read by a depth-m render.
    std::size_t live_rows = (m == 0) ? 0 : n / 4;
    for (int q = 0; q < 4; ++q) {
        w.mats[q] = SparseMat(n);
        for (std::size_t j = 0; j < live_rows; ++j) {
            w.mats[q].set(j, 4 * j + static_cast<std::size_t>(q), 1.0);
        }
    }
    return w;
}

}  // namespace fatpix
