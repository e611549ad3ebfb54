#include "fatpix/ifs_to_wfa.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "fatpix/error.hpp"

namespace fatpix {

std::optional<std::size_t> StateCatalog::index_of(const QuadAddress& addr) const {
    auto it = std::lower_bound(addresses.begin(), addresses.end(), addr);
    if (it != addresses.end() && *it == addr) {
        return static_cast<std::size_t>(it - addresses.begin());
    }
    return std::nullopt;
}

StateCatalog build_state_set(const QuadIfs& ifs) {
    require_valid(ifs, /*strict_alpha=*/false);

    std::set<QuadAddress> retained;
    retained.insert(QuadAddress{});
    for (const auto& m : ifs.maps) retained.insert(m.domain);

    auto is_range = [&](const QuadAddress& a) {
        for (const auto& m : ifs.maps) {
            if (m.range == a) return true;
        }
        return false;
    };
    auto is_proper_prefix_of_range = [&](const QuadAddress& a) {
        for (const auto& m : ifs.maps) {
            if (a.is_proper_prefix_of(m.range)) return true;
        }
        return false;
    };

    std::vector<QuadAddress> worklist(retained.begin(), retained.end());
    while (!worklist.empty()) {
        QuadAddress w = worklist.back();
        worklist.pop_back();
        for (int q = 0; q < 4; ++q) {
            QuadAddress u = w.child(q);
            if (is_proper_prefix_of_range(u) && !is_range(u) && !retained.count(u)) {
                retained.insert(u);
                worklist.push_back(u);
            }
        }
    }

    StateCatalog cat;
    cat.addresses.assign(retained.begin(), retained.end());  // set order is canonical
    cat.const_state = cat.addresses.size();
    return cat;
}

// Initial component for the state at address w: pixel w of the |w|-th grid
// iterate, mean-downsampled to side 2^|w|. This is exactly the value the
// grid decoder would read at the step where the automaton product bottoms
// out in that state, which makes the per-iteration equivalence exact even
// for ranges deeper than one level.
static std::vector<double> warm_start_components(const QuadIfs& ifs, const StateCatalog& cat,
                                                 double y0) {
    std::size_t max_rd = ifs.max_range_depth();
    std::size_t max_state_depth = 0;
    for (const auto& a : cat.addresses) max_state_depth = std::max(max_state_depth, a.depth());

    std::vector<Image> iterates;
    iterates.emplace_back(std::size_t{1} << max_rd, y0);
    for (std::size_t s = 1; s <= max_state_depth; ++s) {
        iterates.push_back(ifs_step(ifs, iterates.back()));
    }

    std::vector<double> values(cat.addresses.size(), 0.0);
    for (std::size_t i = 0; i < cat.addresses.size(); ++i) {
        const QuadAddress& w = cat.addresses[i];
        Image img = iterates[w.depth()];
        while (img.side() > (std::size_t{1} << w.depth())) img = downsample2(img);
        auto rect = w.rect(img.side());
        values[i] = img.at(rect.row0, rect.col0);
    }
    return values;
}

Wfa convert(const QuadIfs& ifs, double y0) {
    StateCatalog cat = build_state_set(ifs);
    std::size_t n = cat.state_count();
    std::size_t const_state = cat.const_state;

    Wfa w;
    w.n = n;
    for (int q = 0; q < 4; ++q) w.mats[q] = SparseMat(n);

    for (std::size_t si = 0; si < cat.addresses.size(); ++si) {
        for (int q = 0; q < 4; ++q) {
            QuadAddress u = cat.addresses[si].child(q);

            const QuadMap* hit = nullptr;
            for (const auto& map : ifs.maps) {
                if (map.range == u) {
                    hit = &map;
                    break;
                }
            }
            if (hit != nullptr) {
                auto dom = cat.index_of(hit->domain);
                if (!dom) throw StructureError("domain state missing from catalog");
                if (hit->alpha != 0.0) w.mats[q].set(si, *dom, hit->alpha);
                if (hit->beta != 0.0) w.mats[q].set(si, const_state, hit->beta);
                continue;
            }
            if (auto idx = cat.index_of(u)) {
                w.mats[q].set(si, *idx, 1.0);
            }
            // Otherwise the attractor is zero below u: leave the row empty.
        }
    }
    for (int q = 0; q < 4; ++q) w.mats[q].set(const_state, const_state, 1.0);

    w.initial = warm_start_components(ifs, cat, y0);
    bool root_is_domain = false;
    for (const auto& map : ifs.maps) {
        if (map.domain.empty()) root_is_domain = true;
    }
    if (!root_is_domain && !w.initial.empty()) w.initial[0] = 0.0;
    w.initial.push_back(1.0);  // constant state

    w.output.assign(n, 0.0);
    w.output[0] = 1.0;
    return w;
}

EquivalenceReport equivalence_check(const QuadIfs& ifs, std::size_t m, double y0) {
    std::size_t max_rd = ifs.max_range_depth();
    if (m < max_rd) {
        throw StructureError("comparison depth " + std::to_string(m) +
                             " below the deepest range (" + std::to_string(max_rd) + ")");
    }
    Wfa wfa = convert(ifs, y0);

    EquivalenceReport rep;
    for (std::size_t t = 1; t <= m; ++t) {
        if (t < max_rd) {
            rep.skipped_levels.push_back(t);
            continue;
        }
        Image a = render(wfa, t);
        Image b = ifs_decode(ifs, t, t, y0);
        rep.compared_levels.push_back(t);
        for (std::size_t r = 0; r < a.side(); ++r) {
            for (std::size_t c = 0; c < a.side(); ++c) {
                double dev = std::fabs(a.at(r, c) - b.at(r, c));
                if (dev > rep.max_deviation) rep.max_deviation = dev;
                if (dev != 0.0 && !rep.first_offender) {
                    // Recover the address from the pixel position.
                    std::vector<uint8_t> digits(t);
                    std::size_t rr = r, cc = c;
                    for (std::size_t i = t; i-- > 0;) {
                        int q;
                        bool bottom = (rr & 1) != 0, right = (cc & 1) != 0;
                        if (bottom) q = right ? 2 : 0;
                        else q = right ? 3 : 1;
                        digits[i] = static_cast<uint8_t>(q);
                        rr >>= 1;
                        cc >>= 1;
                    }
                    rep.first_offender = EquivalenceReport::Offender{
                        t, QuadAddress(std::move(digits)), a.at(r, c), b.at(r, c)};
                }
            }
        }
    }
    return rep;
}

}  // namespace fatpix
