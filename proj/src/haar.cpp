#include "fatpix/haar.hpp"

#include <sstream>

#include "fatpix/error.hpp"
#include "fatpix/text.hpp"

namespace fatpix {

HighPassFilter haar_hh() { return {{0.5, -0.5, -0.5, 0.5}, "HH"}; }
HighPassFilter haar_lh() { return {{0.5, 0.5, -0.5, -0.5}, "LH"}; }
HighPassFilter haar_hl() { return {{0.5, -0.5, 0.5, -0.5}, "HL"}; }

const char* band_name(Band b) {
    switch (b) {
        case Band::LH: return "LH";
        case Band::HL: return "HL";
        case Band::HH: return "HH";
    }
    return "?";
}

const CoeffGrid& WaveletPyramid::band(std::size_t level_index, Band b) const {
    const Level& lv = levels.at(level_index);
    switch (b) {
        case Band::LH: return lv.lh;
        case Band::HL: return lv.hl;
        case Band::HH: return lv.hh;
    }
    return lv.hh;
}

WaveletPyramid haar_forward(const Image& img, std::size_t level_count) {
    if (level_count > img.depth()) {
        throw StructureError("requested " + std::to_string(level_count) +
                             " levels but image depth is " + std::to_string(img.depth()));
    }

    WaveletPyramid pyr;
    pyr.image_side = img.side();
    pyr.level_count = level_count;

    CoeffGrid approx(img.side());
    approx.v = img.samples();
    for (std::size_t l = 0; l < level_count; ++l) {
        std::size_t half = approx.side / 2;
        WaveletPyramid::Level level{CoeffGrid(half), CoeffGrid(half), CoeffGrid(half)};
        CoeffGrid next(half);
        for (std::size_t r = 0; r < half; ++r) {
            for (std::size_t c = 0; c < half; ++c) {
                // Cluster positions in quadrant order 0..3.
                double ll = approx.at(2 * r + 1, 2 * c);
                double ul = approx.at(2 * r, 2 * c);
                double lr = approx.at(2 * r + 1, 2 * c + 1);
                double ur = approx.at(2 * r, 2 * c + 1);
                next.at(r, c) = (ll + ul + lr + ur) / 2.0;
                level.lh.at(r, c) = (ll + ul - lr - ur) / 2.0;
                level.hl.at(r, c) = (ll - ul + lr - ur) / 2.0;
                level.hh.at(r, c) = (ll - ul - lr + ur) / 2.0;
            }
        }
        pyr.levels.push_back(std::move(level));
        approx = std::move(next);
    }
    pyr.root = std::move(approx);
    return pyr;
}

Image haar_inverse(const WaveletPyramid& pyr) {
    CoeffGrid approx = pyr.root;
    for (std::size_t l = pyr.level_count; l-- > 0;) {
        const auto& level = pyr.levels[l];
        std::size_t half = approx.side;
        if (level.lh.side != half) throw StructureError("pyramid level size mismatch");
        CoeffGrid next(half * 2);
        for (std::size_t r = 0; r < half; ++r) {
            for (std::size_t c = 0; c < half; ++c) {
                double a = approx.at(r, c);
                double lh = level.lh.at(r, c);
                double hl = level.hl.at(r, c);
                double hh = level.hh.at(r, c);
                next.at(2 * r + 1, 2 * c) = (a + lh + hl + hh) / 2.0;      // LL
                next.at(2 * r, 2 * c) = (a + lh - hl - hh) / 2.0;          // UL
                next.at(2 * r + 1, 2 * c + 1) = (a - lh + hl - hh) / 2.0;  // LR
                next.at(2 * r, 2 * c + 1) = (a - lh - hl + hh) / 2.0;      // UR
            }
        }
        approx = std::move(next);
    }
    Image img(approx.side, 0.0);
    img.samples() = approx.v;
    return img;
}

static void write_grid(std::ostringstream& out, const CoeffGrid& g) {
    for (std::size_t r = 0; r < g.side; ++r) {
        for (std::size_t c = 0; c < g.side; ++c) {
            if (c) out << ' ';
            out << format_double(g.at(r, c));
        }
        out << '\n';
    }
}

std::string write_pyramid(const WaveletPyramid& pyr) {
    std::ostringstream out;
    out << "PYR1\n" << pyr.image_side << ' ' << pyr.level_count << '\n';
    for (const auto& level : pyr.levels) {
        write_grid(out, level.lh);
        write_grid(out, level.hl);
        write_grid(out, level.hh);
    }
    write_grid(out, pyr.root);
    return out.str();
}

namespace {

struct LineReader {
    std::istringstream in;
    std::size_t line_no = 0;

    explicit LineReader(const std::string& text) : in(text) {}

    std::string next() {
        std::string line;
        if (!std::getline(in, line)) throw FormatError("unexpected end of pyramid data");
        ++line_no;
        return line;
    }
};

void read_grid(LineReader& rd, CoeffGrid& g) {
    for (std::size_t r = 0; r < g.side; ++r) {
        std::istringstream row(rd.next());
        std::string tok;
        for (std::size_t c = 0; c < g.side; ++c) {
            if (!(row >> tok)) {
                throw FormatError("line " + std::to_string(rd.line_no) + ": expected " +
                                  std::to_string(g.side) + " coefficients");
            }
            g.at(r, c) = parse_double(tok);
        }
        if (row >> tok) {
            throw FormatError("line " + std::to_string(rd.line_no) + ": trailing token '" +
                              tok + "'");
        }
    }
}

}  // namespace

WaveletPyramid read_pyramid(const std::string& text) {
    LineReader rd(text);
    if (rd.next() != "PYR1") throw FormatError("bad magic, expected PYR1");
    std::istringstream header(rd.next());
    std::size_t side = 0, levels = 0;
    if (!(header >> side >> levels) || !Image::is_power_of_two(side)) {
        throw FormatError("bad pyramid header");
    }

    WaveletPyramid pyr;
    pyr.image_side = side;
    pyr.level_count = levels;
    std::size_t s = side;
    for (std::size_t l = 0; l < levels; ++l) {
        if (s < 2) throw FormatError("more levels than the side allows");
        s /= 2;
        WaveletPyramid::Level level{CoeffGrid(s), CoeffGrid(s), CoeffGrid(s)};
        read_grid(rd, level.lh);
        read_grid(rd, level.hl);
        read_grid(rd, level.hh);
        pyr.levels.push_back(std::move(level));
    }
    pyr.root = CoeffGrid(s);
    read_grid(rd, pyr.root);
    return pyr;
}

}  // namespace fatpix
