#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fatpix/ifs.hpp"
#include "fatpix/image.hpp"
#include "fatpix/wfa.hpp"

namespace fatpix {

// WFA1: line-oriented sparse automaton file. The four projection matrices
// are stored as a weighted directed graph, one edge per nonzero entry:
//
//   WFA1
//   n <states>
//   out <n floats>
//   init <n floats>
//   edges <count>
//   <quadrant> <src> <dst> <weight>     (sorted by quadrant, src, dst)
//
// '#' starts a comment; unlisted entries are zero; duplicate (q, src, dst)
// triples are an error.
Wfa read_wfa(const std::string& text);

// paper_layout pads the automaton with duplicate constant states up to
// 2*(k+1) states for an automaton converted from a k-map system, emitting
// the identity rows explicitly; pad_to = 0 writes the automaton as is.
std::string write_wfa(const Wfa& wfa, std::size_t pad_to = 0);

// IFS1: `IFS1`, `maps <k>`, then one `map <domain> <range> <alpha> <beta>`
// line per map. Addresses are digit strings over 0-3, '@' for the root.
// Validation runs on read and violations are surfaced with map indices.
QuadIfs read_ifs(const std::string& text);
std::string write_ifs(const QuadIfs& ifs);

// PGM (P5 binary or P2 ASCII, maxval 255). Only power-of-two square sizes
// are accepted. Writing rounds half away from zero and clamps to [0, 255];
// clamped_count (if given) receives the number of clamped samples.
Image read_pgm(const std::string& bytes);
std::string write_pgm(const Image& img, std::size_t* clamped_count = nullptr);

}  // namespace fatpix
