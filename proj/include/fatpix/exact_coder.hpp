#pragma once

#include <cstddef>

#include "fatpix/image.hpp"
#include "fatpix/wfa.hpp"

namespace fatpix {

// Lossless encoding of a 2^m-sided image as one fat pixel with 4^m
// components plus four stride-selection projection matrices:
//   initial = samples flattened in Morton order,
//   (C_q v)[j] = v[4j + q] for j < 4^(m-1), zero for the padding rows,
//   output selects component 0.
// render(encode_exact(img), m) reproduces img exactly; this representation
// is expansionary, not a compressor.
Wfa encode_exact(const Image& img, std::size_t state_limit = std::size_t{1} << 16);

}  // namespace fatpix
