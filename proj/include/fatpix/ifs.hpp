#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fatpix/image.hpp"
#include "fatpix/quad.hpp"

namespace fatpix {

// One quadtree-aligned map: the domain cell is squeezed to half its linear
// size, brightness-adjusted as alpha*D + beta, and written into the range
// cell. The range is one level deeper than the domain.
struct QuadMap {
    QuadAddress domain;
    QuadAddress range;
    double alpha = 0.0;
    double beta = 0.0;
};

struct QuadIfs {
    std::vector<QuadMap> maps;

    std::size_t max_range_depth() const;

    // The classic four-quadrant ramp system: domain @, ranges 0..3,
    // alpha = 1/2, beta = 128, 64, 64, 0.
    static QuadIfs four_quadrant_ramp();
    // Gasket indicator: quadrants 0..2 copy the whole square, quadrant 3 is
    // erased (alpha = 0).
    static QuadIfs sierpinski();
};

struct IfsViolation {
    int map_index = -1;        // offending map
    int other_index = -1;      // second map for pairwise rules, else -1
    std::string rule;          // short rule name
    std::string message;
};

// Structural checks: range depth = domain depth + 1; ranges pairwise
// disjoint (prefix-free); no domain equal to or inside a range (such systems
// would need affine state rebasing, which this reduction does not support);
// |alpha| <= 1 unless lenient. Violations are data, not exceptions.
std::vector<IfsViolation> validate(const QuadIfs& ifs, bool strict_alpha = true);

// Throws StructureError listing the first few violations.
void require_valid(const QuadIfs& ifs, bool strict_alpha = true);

// Half-sided image; each output sample is the arithmetic mean of its 2x2
// source block.
Image downsample2(const Image& img);

// One decoding step: clear the plane to zero, then for each map extract the
// domain cell, downsample it once, scale and offset, and write into the
// range cell. Ranges are disjoint so write order does not matter.
Image ifs_step(const QuadIfs& ifs, const Image& img);

// `iters` steps from the uniform-y0 image of side 2^depth.
Image ifs_decode(const QuadIfs& ifs, std::size_t depth, std::size_t iters, double y0);

}  // namespace fatpix
