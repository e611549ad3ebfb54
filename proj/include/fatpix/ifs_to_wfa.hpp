#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fatpix/ifs.hpp"
#include "fatpix/wfa.hpp"

namespace fatpix {

// Ordered automaton states for a converted IFS: the root cell first, then
// every retained cell address in canonical (depth, digits) order, then one
// shared constant state.
struct StateCatalog {
    std::vector<QuadAddress> addresses;  // addresses[0] is the root
    std::size_t const_state = 0;         // == addresses.size()

    std::size_t state_count() const { return addresses.size() + 1; }
    std::optional<std::size_t> index_of(const QuadAddress& addr) const;
};

// Closure of {root} and all domain addresses under: for each retained w and
// quadrant q, retain w.q when it is a proper prefix of some range address
// (and not itself a range). Every retained address is a prefix of a range or
// domain address, so the closure terminates.
StateCatalog build_state_set(const QuadIfs& ifs);

// Compile the IFS into an automaton whose renders reproduce the grid decoder
// iteration for iteration. Rows of C_q for the state at address w:
//   - w.q is the range of map j: alpha_j on the domain state, beta_j on the
//     constant state;
//   - w.q is a proper prefix of some range: unit weight on state w.q;
//   - otherwise: zero (the attractor vanishes there).
// The constant state carries a unit self-loop in all four matrices. Initial
// components of address states are warm-started from the grid decoder so
// that render(t) matches ifs_decode(t, t, y0) exactly (see equivalence_check).
Wfa convert(const QuadIfs& ifs, double y0);

struct EquivalenceReport {
    double max_deviation = 0.0;
    // First pixel where the two decoders disagree, if any.
    struct Offender {
        std::size_t level;
        QuadAddress addr;
        double wfa_value;
        double ifs_value;
    };
    std::optional<Offender> first_offender;
    std::vector<std::size_t> compared_levels;
    std::vector<std::size_t> skipped_levels;  // t where some range is sub-pixel
};

// Compares render(convert(ifs, y0), t) against ifs_decode(ifs, t, t, y0) for
// t = 1..m. Levels where a range cell would be sub-pixel are skipped and
// reported; comparison at t = 0 is undefined and always skipped.
EquivalenceReport equivalence_check(const QuadIfs& ifs, std::size_t m, double y0);

}  // namespace fatpix
