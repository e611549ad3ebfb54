#pragma once

#include <cstddef>
#include <vector>

#include "fatpix/quad.hpp"

namespace fatpix {

// Square grid of real-valued samples, side a power of two, row-major with
// row 0 at the top. Nominal brightness scale is 0-256; values are not
// clamped until image export.
class Image {
public:
    Image() : side_(0) {}
    Image(std::size_t side, double fill);

    static bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

    std::size_t side() const { return side_; }
    // Depth m with side == 2^m.
    std::size_t depth() const;

    double& at(std::size_t row, std::size_t col) { return samples_[row * side_ + col]; }
    double at(std::size_t row, std::size_t col) const { return samples_[row * side_ + col]; }

    std::vector<double>& samples() { return samples_; }
    const std::vector<double>& samples() const { return samples_; }

    bool operator==(const Image& o) const { return side_ == o.side_ && samples_ == o.samples_; }

private:
    std::size_t side_;
    std::vector<double> samples_;
};

// Pixel replication to double the side. Used for residual estimates.
Image upsample2(const Image& img);

// Largest |a - b| over pixels; images must have equal sides.
double max_abs_diff(const Image& a, const Image& b);

}  // namespace fatpix
