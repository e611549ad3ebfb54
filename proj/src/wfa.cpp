#include "fatpix/wfa.hpp"

#include <algorithm>
#include <cmath>

#include "fatpix/error.hpp"

namespace fatpix {

void SparseMat::set(std::size_t r, std::size_t c, double w) {
    if (r >= n || c >= n) throw StructureError("sparse entry out of range");
    auto& entries = row[r];
    auto it = std::lower_bound(entries.begin(), entries.end(), c,
                               [](const Entry& e, std::size_t col) { return e.col < col; });
    if (it != entries.end() && it->col == c) {
        it->weight = w;
    } else {
        entries.insert(it, Entry{c, w});
    }
}

double SparseMat::get(std::size_t r, std::size_t c) const {
    if (r >= n || c >= n) throw StructureError("sparse entry out of range");
    for (const Entry& e : row[r]) {
        if (e.col == c) return e.weight;
    }
    return 0.0;
}

std::size_t SparseMat::nonzeros() const {
    std::size_t total = 0;
    for (const auto& r : row) total += r.size();
    return total;
}

void SparseMat::apply(const double* x, double* y) const {
    for (std::size_t r = 0; r < n; ++r) {
        double s = 0.0;
        for (const Entry& e : row[r]) s += e.weight * x[e.col];
        y[r] = s;
    }
}

FatPixel SparseMat::apply(const FatPixel& x) const {
    if (x.size() != n) throw StructureError("sparse apply: vector length mismatch");
    FatPixel y(n, 0.0);
    apply(x.data(), y.data());
    return y;
}

double SparseMat::inf_norm() const {
    double norm = 0.0;
    for (const auto& r : row) {
        double s = 0.0;
        for (const Entry& e : r) s += std::fabs(e.weight);
        norm = std::max(norm, s);
    }
    return norm;
}

double SparseMat::inf_norm_excluding_column(std::size_t col) const {
    double norm = 0.0;
    for (const auto& r : row) {
        double s = 0.0;
        for (const Entry& e : r) {
            if (e.col != col) s += std::fabs(e.weight);
        }
        norm = std::max(norm, s);
    }
    return norm;
}

Mat SparseMat::to_dense() const {
    Mat m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (const Entry& e : row[r]) m.at(r, e.col) = e.weight;
    }
    return m;
}

SparseMat SparseMat::from_dense(const Mat& m, double drop_below) {
    if (m.rows != m.cols) throw StructureError("from_dense expects a square matrix");
    SparseMat s(m.rows);
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t c = 0; c < m.cols; ++c) {
            double w = m.at(r, c);
            if (w != 0.0 && std::fabs(w) > drop_below) s.set(r, c, w);
        }
    }
    return s;
}

void Wfa::check_well_formed() const {
    if (initial.size() != n) throw StructureError("initial vector length != state count");
    if (output.size() != n) throw StructureError("output vector length != state count");
    for (int q = 0; q < 4; ++q) {
        if (mats[q].n != n || mats[q].row.size() != n) {
            throw StructureError("projection matrix " + std::to_string(q) + " is not n x n");
        }
        for (const auto& r : mats[q].row) {
            for (const auto& e : r) {
                if (e.col >= n) throw StructureError("projection matrix column out of range");
            }
        }
    }
}

Wfa Wfa::sierpinski() {
    Wfa w;
    w.n = 1;
    w.initial = {1.0};
    w.output = {1.0};
    for (int q = 0; q < 4; ++q) w.mats[q] = SparseMat(1);
    for (int q = 0; q < 3; ++q) w.mats[q].set(0, 0, 1.0);
    return w;
}

Wfa Wfa::diagonal_ramp() {
    Wfa w;
    w.n = 2;
    w.initial = {128.0, 256.0};
    w.output = {1.0, 0.0};
    for (int q = 0; q < 4; ++q) {
        w.mats[q] = SparseMat(2);
        w.mats[q].set(0, 0, 0.5);
        w.mats[q].set(1, 1, 1.0);
    }
    w.mats[0].set(0, 1, 0.5);
    w.mats[1].set(0, 1, 0.25);
    w.mats[2].set(0, 1, 0.25);
    return w;
}

double visible_value(const Wfa& wfa, const FatPixel& state) {
    if (state.size() != wfa.n) throw StructureError("fat pixel length != state count");
    double s = 0.0;
    for (std::size_t i = 0; i < wfa.n; ++i) s += wfa.output[i] * state[i];
    return s;
}

FatPixel state_vector(const Wfa& wfa, const QuadAddress& addr) {
    wfa.check_well_formed();
    FatPixel v = wfa.initial;
    // Innermost factor is the deepest digit, so apply digits in reverse.
    for (std::size_t i = addr.depth(); i-- > 0;) {
        v = wfa.mats[addr.digit(i)].apply(v);
    }
    return v;
}

double pixel_value(const Wfa& wfa, const QuadAddress& addr) {
    return visible_value(wfa, state_vector(wfa, addr));
}

Image render(const Wfa& wfa, std::size_t depth, std::size_t element_limit) {
    wfa.check_well_formed();
    if (depth > 15) throw CapacityError("render depth " + std::to_string(depth) + " too large");
    std::size_t cells = std::size_t{1} << (2 * depth);
    if (wfa.n != 0 && cells > element_limit / wfa.n) {
        throw CapacityError("render would need " + std::to_string(cells) + " x " +
                            std::to_string(wfa.n) + " elements (limit " +
                            std::to_string(element_limit) + ")");
    }

    // Level-k array holds 4^k fat pixels in Morton cell order, so quadrant q
    // of level k+1 is the contiguous block [q*4^k, (q+1)*4^k).
    std::vector<double> level = wfa.initial;
    for (std::size_t k = 0; k < depth; ++k) {
        std::size_t count = std::size_t{1} << (2 * k);
        std::vector<double> next(count * 4 * wfa.n);
        for (int q = 0; q < 4; ++q) {
            for (std::size_t i = 0; i < count; ++i) {
                wfa.mats[q].apply(level.data() + i * wfa.n,
                                  next.data() + (q * count + i) * wfa.n);
            }
        }
        level.swap(next);
    }

    Image img(std::size_t{1} << depth, 0.0);
    for (std::size_t i = 0; i < cells; ++i) {
        double s = 0.0;
        const double* v = level.data() + i * wfa.n;
        for (std::size_t j = 0; j < wfa.n; ++j) s += wfa.output[j] * v[j];
        auto rect = morton_address(i, depth).rect(img.side());
        img.at(rect.row0, rect.col0) = s;
    }
    return img;
}

static ContractivityReport report_from_norms(std::array<double, 4> norms, double tolerance) {
    ContractivityReport rep;
    rep.norms = norms;
    rep.pass = true;
    for (double v : norms) {
        if (v > 1.0 + tolerance) rep.pass = false;
    }
    rep.status = rep.pass ? "pass" : "inconclusive";
    return rep;
}

ContractivityReport check_contractivity(const Wfa& wfa, double tolerance) {
    wfa.check_well_formed();
    std::array<double, 4> norms{};
    for (int q = 0; q < 4; ++q) norms[q] = wfa.mats[q].inf_norm();
    return report_from_norms(norms, tolerance);
}

ContractivityReport check_contractivity_linear_part(const Wfa& wfa, std::size_t const_state,
                                                    double tolerance) {
    wfa.check_well_formed();
    if (const_state >= wfa.n) throw StructureError("constant state index out of range");
    std::array<double, 4> norms{};
    for (int q = 0; q < 4; ++q) {
        norms[q] = wfa.mats[q].inf_norm_excluding_column(const_state);
    }
    return report_from_norms(norms, tolerance);
}

}  // namespace fatpix
