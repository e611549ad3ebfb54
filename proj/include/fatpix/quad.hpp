#pragma once

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace fatpix {

// Quadrant numbering, shared by every module:
//   0 = lower-left, 1 = upper-left, 2 = lower-right, 3 = upper-right.
// Images are stored row-major with row 0 at the top, so quadrants 0 and 2
// occupy the bottom half.

inline bool quadrant_is_bottom(int q) { return q == 0 || q == 2; }
inline bool quadrant_is_right(int q) { return q == 2 || q == 3; }

// Address of a dyadic cell: quadrant digits, coarsest first. The empty
// address is the whole square.
class QuadAddress {
public:
    QuadAddress() = default;
    explicit QuadAddress(std::vector<uint8_t> digits);

    // Parses "@" (root) or a string of digits 0-3, e.g. "031".
    static QuadAddress parse(const std::string& text);

    std::size_t depth() const { return digits_.size(); }
    bool empty() const { return digits_.empty(); }
    uint8_t digit(std::size_t i) const { return digits_[i]; }
    const std::vector<uint8_t>& digits() const { return digits_; }

    QuadAddress child(int quadrant) const;
    bool is_prefix_of(const QuadAddress& other) const;          // includes equality
    bool is_proper_prefix_of(const QuadAddress& other) const;

    // Pixel coordinates of the cell's top-left corner and its side, inside
    // a square image of side `image_side` (must be >= 2^depth).
    struct CellRect {
        std::size_t row0, col0, side;
    };
    CellRect rect(std::size_t image_side) const;

    std::string to_string() const;  // "@" for the root

    bool operator==(const QuadAddress& o) const { return digits_ == o.digits_; }
    // Canonical order: by depth, then lexicographic on digits.
    bool operator<(const QuadAddress& o) const;

private:
    std::vector<uint8_t> digits_;
};

// Morton (Z-order) layout between depth-m addresses and flat indices in
// [0, 4^m): index = sum of digit_j * 4^(m-1-j), coarsest digit most
// significant.
std::size_t morton_index(const QuadAddress& addr, std::size_t depth);
QuadAddress morton_address(std::size_t index, std::size_t depth);

}  // namespace fatpix
