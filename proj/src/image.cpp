#include "fatpix/image.hpp"

#include <cmath>

#include "fatpix/error.hpp"

namespace fatpix {

Image::Image(std::size_t side, double fill) : side_(side), samples_(side * side, fill) {
    if (!is_power_of_two(side)) {
        throw StructureError("image side must be a power of two, got " + std::to_string(side));
    }
}

std::size_t Image::depth() const {
    std::size_t m = 0;
    while ((std::size_t{1} << m) < side_) ++m;
    return m;
}

Image upsample2(const Image& img) {
    Image out(img.side() * 2, 0.0);
    for (std::size_t r = 0; r < img.side(); ++r) {
        for (std::size_t c = 0; c < img.side(); ++c) {
            double v = img.at(r, c);
            out.at(2 * r, 2 * c) = v;
            out.at(2 * r, 2 * c + 1) = v;
            out.at(2 * r + 1, 2 * c) = v;
            out.at(2 * r + 1, 2 * c + 1) = v;
        }
    }
    return out;
}

double max_abs_diff(const Image& a, const Image& b) {
    if (a.side() != b.side()) throw StructureError("image size mismatch in max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.samples().size(); ++i) {
        m = std::max(m, std::fabs(a.samples()[i] - b.samples()[i]));
    }
    return m;
}

}  // namespace fatpix
