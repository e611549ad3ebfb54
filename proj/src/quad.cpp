#include "fatpix/quad.hpp"

#include "fatpix/error.hpp"

namespace fatpix {

QuadAddress::QuadAddress(std::vector<uint8_t> digits) : digits_(std::move(digits)) {
    for (uint8_t d : digits_) {
        if (d > 3) throw FormatError("quadrant digit out of range: " + std::to_string(int(d)));
    }
}

QuadAddress QuadAddress::parse(const std::string& text) {
    if (text == "@") return QuadAddress{};
    std::vector<uint8_t> digits;
    digits.reserve(text.size());
    for (char c : text) {
        if (c < '0' || c > '3') {
            throw FormatError("bad quadrant address '" + text + "': digit '" +
                              std::string(1, c) + "' not in 0-3");
        }
        digits.push_back(static_cast<uint8_t>(c - '0'));
    }
    if (digits.empty()) throw FormatError("empty address (use '@' for the root)");
    return QuadAddress(std::move(digits));
}

QuadAddress QuadAddress::child(int quadrant) const {
    if (quadrant < 0 || quadrant > 3) {
        throw FormatError("quadrant out of range: " + std::to_string(quadrant));
    }
    std::vector<uint8_t> d = digits_;
    d.push_back(static_cast<uint8_t>(quadrant));
    return QuadAddress(std::move(d));
}

bool QuadAddress::is_prefix_of(const QuadAddress& other) const {
    if (depth() > other.depth()) return false;
    for (std::size_t i = 0; i < depth(); ++i) {
        if (digits_[i] != other.digits_[i]) return false;
    }
    return true;
}

bool QuadAddress::is_proper_prefix_of(const QuadAddress& other) const {
    return depth() < other.depth() && is_prefix_of(other);
}

QuadAddress::CellRect QuadAddress::rect(std::size_t image_side) const {
    std::size_t side = image_side;
    std::size_t r0 = 0, c0 = 0;
    for (uint8_t d : digits_) {
        if (side < 2) throw StructureError("cell below pixel resolution at " + to_string());
        side /= 2;
        if (quadrant_is_bottom(d)) r0 += side;
        if (quadrant_is_right(d)) c0 += side;
    }
    return {r0, c0, side};
}

std::string QuadAddress::to_string() const {
    if (digits_.empty()) return "@";
    std::string s;
    s.reserve(digits_.size());
    for (uint8_t d : digits_) s.push_back(static_cast<char>('0' + d));
    return s;
}

bool QuadAddress::operator<(const QuadAddress& o) const {
    if (depth() != o.depth()) return depth() < o.depth();
    return digits_ < o.digits_;
}

std::size_t morton_index(const QuadAddress& addr, std::size_t depth) {
    if (addr.depth() != depth) {
        throw FormatError("address depth " + std::to_string(addr.depth()) +
                          " does not match layout depth " + std::to_string(depth));
    }
    std::size_t idx = 0;
    for (std::size_t i = 0; i < depth; ++i) idx = idx * 4 + addr.digit(i);
    return idx;
}

QuadAddress morton_address(std::size_t index, std::size_t depth) {
    std::size_t cells = std::size_t{1} << (2 * depth);
    if (index >= cells) {
        throw FormatError("Morton index " + std::to_string(index) +
                          " out of range for depth " + std::to_string(depth));
    }
    std::vector<uint8_t> digits(depth);
    for (std::size_t i = depth; i-- > 0;) {
        digits[i] = static_cast<uint8_t>(index & 3);
        index >>= 2;
    }
    return QuadAddress(std::move(digits));
}

}  // namespace fatpix
