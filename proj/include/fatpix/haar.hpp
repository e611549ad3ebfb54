#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "fatpix/image.hpp"

namespace fatpix {

// Four filter taps assigned to the 2x2 cluster positions in quadrant order:
// h_0 lower-left, h_1 upper-left, h_2 lower-right, h_3 upper-right. High-pass
// filters must sum to zero.
struct HighPassFilter {
    std::array<double, 4> taps{};
    std::string name;

    double sum() const { return taps[0] + taps[1] + taps[2] + taps[3]; }
};

// Orthonormal 2D Haar tap sets (each step carries a factor 1/2).
HighPassFilter haar_hh();  // +1 -1 -1 +1, scaled by 1/2
HighPassFilter haar_lh();  // +1 +1 -1 -1 (left minus right column)
HighPassFilter haar_hl();  // +1 -1 +1 -1 (bottom minus top row)

enum class Band { LH, HL, HH };
const char* band_name(Band b);

// Square coefficient grid of one band at one level.
struct CoeffGrid {
    std::size_t side = 0;
    std::vector<double> v;

    CoeffGrid() = default;
    explicit CoeffGrid(std::size_t s) : side(s), v(s * s, 0.0) {}
    double& at(std::size_t r, std::size_t c) { return v[r * side + c]; }
    double at(std::size_t r, std::size_t c) const { return v[r * side + c]; }
};

// Multi-level orthonormal Haar decomposition. levels[0] is the finest level
// (level 1), each coarser level halves the side; the parent of a level-l
// coefficient at (r, c) sits at level l+1, (r/2, c/2) in the same band.
struct WaveletPyramid {
    std::size_t image_side = 0;
    std::size_t level_count = 0;

    struct Level {
        CoeffGrid lh, hl, hh;
    };
    std::vector<Level> levels;
    CoeffGrid root;  // approximation at the coarsest level

    const CoeffGrid& band(std::size_t level_index, Band b) const;
};

WaveletPyramid haar_forward(const Image& img, std::size_t level_count);
Image haar_inverse(const WaveletPyramid& pyr);

// Frozen text serialization: "PYR1", then "side levels", then per level
// (fine to coarse) the LH, HL, HH grids as one text row per coefficient row,
// root approximation last. Shortest round-trip decimal floats.
std::string write_pyramid(const WaveletPyramid& pyr);
WaveletPyramid read_pyramid(const std::string& text);

}  // namespace fatpix
