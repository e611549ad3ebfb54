#include "fatpix/ifs.hpp"

#include <cmath>

#include "fatpix/error.hpp"

namespace fatpix {

std::size_t QuadIfs::max_range_depth() const {
    std::size_t d = 0;
    for (const auto& m : maps) d = std::max(d, m.range.depth());
    return d;
}

QuadIfs QuadIfs::four_quadrant_ramp() {
    QuadIfs ifs;
    const double betas[4] = {128.0, 64.0, 64.0, 0.0};
    for (int q = 0; q < 4; ++q) {
        ifs.maps.push_back({QuadAddress{}, QuadAddress{}.child(q), 0.5, betas[q]});
    }
    return ifs;
}

QuadIfs QuadIfs::sierpinski() {
    QuadIfs ifs;
    for (int q = 0; q < 3; ++q) {
        ifs.maps.push_back({QuadAddress{}, QuadAddress{}.child(q), 1.0, 0.0});
    }
    ifs.maps.push_back({QuadAddress{}, QuadAddress{}.child(3), 0.0, 0.0});
    return ifs;
}

std::vector<IfsViolation> validate(const QuadIfs& ifs, bool strict_alpha) {
    std::vector<IfsViolation> out;
    const auto& maps = ifs.maps;

    for (std::size_t i = 0; i < maps.size(); ++i) {
        if (maps[i].range.depth() != maps[i].domain.depth() + 1) {
            out.push_back({int(i), -1, "depth",
                           "map " + std::to_string(i) + ": range " + maps[i].range.to_string() +
                               " must be exactly one level deeper than domain " +
                               maps[i].domain.to_string()});
        }
        if (strict_alpha && std::fabs(maps[i].alpha) > 1.0) {
            out.push_back({int(i), -1, "alpha",
                           "map " + std::to_string(i) + ": |alpha| = " +
                               std::to_string(std::fabs(maps[i].alpha)) + " exceeds 1"});
        }
    }

    for (std::size_t i = 0; i < maps.size(); ++i) {
        for (std::size_t j = i + 1; j < maps.size(); ++j) {
            if (maps[i].range.is_prefix_of(maps[j].range) ||
                maps[j].range.is_prefix_of(maps[i].range)) {
                out.push_back({int(i), int(j), "range-overlap",
                               "ranges " + maps[i].range.to_string() + " and " +
                                   maps[j].range.to_string() + " of maps " + std::to_string(i) +
                                   "," + std::to_string(j) + " are not disjoint"});
            }
        }
    }

    for (std::size_t i = 0; i < maps.size(); ++i) {
        for (std::size_t j = 0; j < maps.size(); ++j) {
            if (maps[j].range.is_prefix_of(maps[i].domain)) {
                out.push_back({int(i), int(j), "domain-in-range",
                               "domain " + maps[i].domain.to_string() + " of map " +
                                   std::to_string(i) + " lies inside range " +
                                   maps[j].range.to_string() + " of map " + std::to_string(j)});
            }
        }
    }
    return out;
}

void require_valid(const QuadIfs& ifs, bool strict_alpha) {
    auto violations = validate(ifs, strict_alpha);
    if (violations.empty()) return;
    std::string msg = "invalid IFS:";
    std::size_t shown = 0;
    for (const auto& v : violations) {
        msg += " [" + v.rule + "] " + v.message + ";";
        if (++shown == 3) break;
    }
    if (violations.size() > shown) {
        msg += " (+" + std::to_string(violations.size() - shown) + " more)";
    }
    throw StructureError(msg);
}

Image downsample2(const Image& img) {
    if (img.side() < 2) throw StructureError("cannot downsample a side-1 image");
    Image out(img.side() / 2, 0.0);
    for (std::size_t r = 0; r < out.side(); ++r) {
        for (std::size_t c = 0; c < out.side(); ++c) {
            out.at(r, c) = (img.at(2 * r, 2 * c) + img.at(2 * r, 2 * c + 1) +
                            img.at(2 * r + 1, 2 * c) + img.at(2 * r + 1, 2 * c + 1)) /
                           4.0;
        }
    }
    return out;
}

Image ifs_step(const QuadIfs& ifs, const Image& img) {
    std::size_t m = img.depth();
    if (ifs.max_range_depth() > m) {
        throw StructureError("image side " + std::to_string(img.side()) +
                             " too coarse: some range cell would be sub-pixel");
    }

    Image out(img.side(), 0.0);
    for (const auto& map : ifs.maps) {
        auto drect = map.domain.rect(img.side());
        Image block(drect.side, 0.0);
        for (std::size_t r = 0; r < drect.side; ++r) {
            for (std::size_t c = 0; c < drect.side; ++c) {
                block.at(r, c) = img.at(drect.row0 + r, drect.col0 + c);
            }
        }
        Image reduced = downsample2(block);

        auto rrect = map.range.rect(img.side());
        for (std::size_t r = 0; r < rrect.side; ++r) {
            for (std::size_t c = 0; c < rrect.side; ++c) {
                out.at(rrect.row0 + r, rrect.col0 + c) = map.alpha * reduced.at(r, c) + map.beta;
            }
        }
    }
    return out;
}

Image ifs_decode(const QuadIfs& ifs, std::size_t depth, std::size_t iters, double y0) {
    require_valid(ifs, /*strict_alpha=*/false);
    if (depth > 14) throw CapacityError("decode depth " + std::to_string(depth) + " too large");
    Image img(std::size_t{1} << depth, y0);
    for (std::size_t i = 0; i < iters; ++i) img = ifs_step(ifs, img);
    return img;
}

}  // namespace fatpix
