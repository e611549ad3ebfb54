#include "fatpix/formats.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "fatpix/error.hpp"
#include "fatpix/text.hpp"

namespace fatpix {

namespace {

// Splits a line-oriented file into significant token rows, dropping blank
// lines and '#' comments.
struct TokenLines {
    std::vector<std::vector<std::string>> lines;
    std::vector<std::size_t> numbers;  // original 1-based line numbers
    std::size_t pos = 0;

    explicit TokenLines(const std::string& text) {
        std::istringstream in(text);
        std::string raw;
        std::size_t no = 0;
        while (std::getline(in, raw)) {
            ++no;
            auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            std::istringstream ls(raw);
            std::vector<std::string> toks;
            std::string t;
            while (ls >> t) toks.push_back(t);
            if (!toks.empty()) {
                lines.push_back(std::move(toks));
                numbers.push_back(no);
            }
        }
    }

    bool done() const { return pos >= lines.size(); }

    const std::vector<std::string>& next(const char* what) {
        if (done()) throw FormatError(std::string("unexpected end of file, expected ") + what);
        return lines[pos++];
    }

    std::string where() const {
        std::size_t i = pos == 0 ? 0 : pos - 1;
        return "line " + std::to_string(i < numbers.size() ? numbers[i] : 0);
    }
};

}  // namespace

Wfa read_wfa(const std::string& text) {
    TokenLines tl(text);

    auto magic = tl.next("magic");
    if (magic.size() != 1 || magic[0] != "WFA1") {
        throw FormatError(tl.where() + ": bad magic, expected WFA1");
    }

    auto nline = tl.next("state count");
    if (nline.size() != 2 || nline[0] != "n") {
        throw FormatError(tl.where() + ": expected 'n <count>'");
    }
    long long n_ll = parse_int(nline[1]);
    if (n_ll <= 0) throw FormatError(tl.where() + ": state count must be positive");
    std::size_t n = static_cast<std::size_t>(n_ll);

    auto read_vector = [&](const char* key) {
        auto line = tl.next(key);
        if (line.empty() || line[0] != key) {
            throw FormatError(tl.where() + ": expected '" + key + " <" + std::to_string(n) +
                              " floats>'");
        }
        if (line.size() != n + 1) {
            throw FormatError(tl.where() + ": '" + key + "' needs " + std::to_string(n) +
                              " values, got " + std::to_string(line.size() - 1));
        }
        std::vector<double> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = parse_double(line[i + 1]);
        return v;
    };

    Wfa w;
    w.n = n;
    w.output = read_vector("out");
    w.initial = read_vector("init");
    for (int q = 0; q < 4; ++q) w.mats[q] = SparseMat(n);

    auto eline = tl.next("edge count");
    if (eline.size() != 2 || eline[0] != "edges") {
        throw FormatError(tl.where() + ": expected 'edges <count>'");
    }
    long long edges = parse_int(eline[1]);
    if (edges < 0) throw FormatError(tl.where() + ": negative edge count");

    for (long long i = 0; i < edges; ++i) {
        auto line = tl.next("edge");
        if (line.size() != 4) {
            throw FormatError(tl.where() + ": edge needs '<q> <src> <dst> <weight>'");
        }
        long long q = parse_int(line[0]);
        long long src = parse_int(line[1]);
        long long dst = parse_int(line[2]);
        double weight = parse_double(line[3]);
        if (q < 0 || q > 3) throw FormatError(tl.where() + ": quadrant must be 0-3");
        if (src < 0 || src >= n_ll || dst < 0 || dst >= n_ll) {
            throw FormatError(tl.where() + ": edge index out of range for n=" +
                              std::to_string(n));
        }
        auto s = static_cast<std::size_t>(src);
        auto d = static_cast<std::size_t>(dst);
        for (const auto& e : w.mats[q].row[s]) {
            if (e.col == d) {
                throw FormatError(tl.where() + ": duplicate edge (" + line[0] + " " + line[1] +
                                  " " + line[2] + ")");
            }
        }
        w.mats[q].set(s, d, weight);
    }
    if (!tl.done()) {
        tl.next("");  // advance so where() points at the extra line
        throw FormatError(tl.where() + ": trailing content after the edge list");
    }
    w.check_well_formed();
    return w;
}

std::string write_wfa(const Wfa& wfa, std::size_t pad_to) {
    wfa.check_well_formed();
    Wfa padded;
    const Wfa* src = &wfa;
    if (pad_to > wfa.n) {
        // Extra constant states: unit self-loops in every matrix, initial
        // component 1, not visible through the output functional.
        padded = wfa;
        padded.n = pad_to;
        padded.initial.resize(pad_to, 1.0);
        padded.output.resize(pad_to, 0.0);
        for (int q = 0; q < 4; ++q) {
            padded.mats[q].n = pad_to;
            padded.mats[q].row.resize(pad_to);
            for (std::size_t s = wfa.n; s < pad_to; ++s) padded.mats[q].set(s, s, 1.0);
        }
        src = &padded;
    }

    std::ostringstream out;
    out << "WFA1\n";
    out << "n " << src->n << '\n';
    out << "out";
    for (double v : src->output) out << ' ' << format_double(v);
    out << '\n';
    out << "init";
    for (double v : src->initial) out << ' ' << format_double(v);
    out << '\n';

    std::size_t edges = 0;
    for (int q = 0; q < 4; ++q) edges += src->mats[q].nonzeros();
    out << "edges " << edges << '\n';
    for (int q = 0; q < 4; ++q) {
        for (std::size_t r = 0; r < src->n; ++r) {
            for (const auto& e : src->mats[q].row[r]) {
                out << q << ' ' << r << ' ' << e.col << ' ' << format_double(e.weight) << '\n';
            }
        }
    }
    return out.str();
}

QuadIfs read_ifs(const std::string& text) {
    TokenLines tl(text);

    auto magic = tl.next("magic");
    if (magic.size() != 1 || magic[0] != "IFS1") {
        throw FormatError(tl.where() + ": bad magic, expected IFS1");
    }
    auto kline = tl.next("map count");
    if (kline.size() != 2 || kline[0] != "maps") {
        throw FormatError(tl.where() + ": expected 'maps <count>'");
    }
    long long k = parse_int(kline[1]);
    if (k < 0) throw FormatError(tl.where() + ": negative map count");

    QuadIfs ifs;
    for (long long i = 0; i < k; ++i) {
        auto line = tl.next("map");
        if (line.size() != 5 || line[0] != "map") {
            throw FormatError(tl.where() + ": expected 'map <domain> <range> <alpha> <beta>'");
        }
        QuadMap m;
        try {
            m.domain = QuadAddress::parse(line[1]);
            m.range = QuadAddress::parse(line[2]);
        } catch (const FormatError& e) {
            throw FormatError(tl.where() + ": " + e.what());
        }
        m.alpha = parse_double(line[3]);
        m.beta = parse_double(line[4]);
        ifs.maps.push_back(std::move(m));
    }
    if (!tl.done()) {
        tl.next("");
        throw FormatError(tl.where() + ": trailing content after the map list");
    }

    auto violations = validate(ifs);
    if (!violations.empty()) {
        std::string msg = "IFS fails validation:";
        for (const auto& v : violations) msg += " [" + v.rule + "] " + v.message + ";";
        throw StructureError(msg);
    }
    return ifs;
}

std::string write_ifs(const QuadIfs& ifs) {
    std::ostringstream out;
    out << "IFS1\n";
    out << "maps " << ifs.maps.size() << '\n';
    for (const auto& m : ifs.maps) {
        out << "map " << m.domain.to_string() << ' ' << m.range.to_string() << ' '
            << format_double(m.alpha) << ' ' << format_double(m.beta) << '\n';
    }
    return out.str();
}

Image read_pgm(const std::string& bytes) {
    std::size_t pos = 0;
    auto next_token = [&]() -> std::string {
        while (pos < bytes.size()) {
            char c = bytes[pos];
            if (c == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                ++pos;
            } else {
                break;
            }
        }
        std::size_t start = pos;
        while (pos < bytes.size() && !std::isspace(static_cast<unsigned char>(bytes[pos]))) ++pos;
        if (start == pos) throw FormatError("truncated PGM header");
        return bytes.substr(start, pos - start);
    };

    std::string magic = next_token();
    if (magic != "P5" && magic != "P2") throw FormatError("bad PGM magic '" + magic + "'");
    long long width = parse_int(next_token());
    long long height = parse_int(next_token());
    long long maxval = parse_int(next_token());
    if (width <= 0 || height <= 0) throw FormatError("bad PGM dimensions");
    if (width != height) {
        throw FormatError("image must be square, got " + std::to_string(width) + "x" +
                          std::to_string(height));
    }
    if (!Image::is_power_of_two(static_cast<std::size_t>(width))) {
        throw FormatError("image side must be a power of two, got " + std::to_string(width));
    }
    if (maxval != 255) throw FormatError("only maxval 255 is supported, got " +
                                         std::to_string(maxval));

    std::size_t side = static_cast<std::size_t>(width);
    Image img(side, 0.0);
    if (magic == "P5") {
        ++pos;  // single whitespace byte after maxval
        if (bytes.size() - pos < side * side) throw FormatError("truncated P5 payload");
        for (std::size_t i = 0; i < side * side; ++i) {
            img.samples()[i] = static_cast<double>(static_cast<unsigned char>(bytes[pos + i]));
        }
    } else {
        for (std::size_t i = 0; i < side * side; ++i) {
            long long v = parse_int(next_token());
            if (v < 0 || v > 255) throw FormatError("P2 sample out of range");
            img.samples()[i] = static_cast<double>(v);
        }
    }
    return img;
}

std::string write_pgm(const Image& img, std::size_t* clamped_count) {
    if (img.side() == 0) throw StructureError("cannot write an empty image");
    std::ostringstream out;
    out << "P5\n" << img.side() << ' ' << img.side() << "\n255\n";
    std::size_t clamped = 0;
    std::string payload;
    payload.reserve(img.samples().size());
    for (double v : img.samples()) {
        double r = std::round(v);  // rounds half away from zero
        if (r < 0.0) {
            r = 0.0;
            ++clamped;
        } else if (r > 255.0) {
            r = 255.0;
            ++clamped;
        }
        payload.push_back(static_cast<char>(static_cast<unsigned char>(r)));
    }
    if (clamped_count) *clamped_count = clamped;
    out << payload;
    return out.str();
}

}  // namespace fatpix
