#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "fatpix/image.hpp"
#include "fatpix/matrix.hpp"
#include "fatpix/quad.hpp"

namespace fatpix {

// A fat pixel is a state vector; component 0 is conventionally the visible
// brightness, the rest are hidden components revealed by further projection.
using FatPixel = std::vector<double>;

// Sparse square matrix stored as per-row edge lists. Projection matrices of
// converted and exactly-coded automata are extremely sparse, which is the
// whole point of the edge-list file format.
struct SparseMat {
    struct Entry {
        std::size_t col;
        double weight;
    };

    std::size_t n = 0;
    std::vector<std::vector<Entry>> row;  // row[r] sorted by col, no duplicates

    SparseMat() = default;
    explicit SparseMat(std::size_t dim) : n(dim), row(dim) {}

    void set(std::size_t r, std::size_t c, double w);
    double get(std::size_t r, std::size_t c) const;
    std::size_t nonzeros() const;

    // y = M * x
    void apply(const double* x, double* y) const;
    FatPixel apply(const FatPixel& x) const;

    // Max absolute row sum.
    double inf_norm() const;
    // Same, ignoring the given column (used to judge the linear part of
    // affine rows, where that column is the constant state).
    double inf_norm_excluding_column(std::size_t col) const;

    Mat to_dense() const;
    static SparseMat from_dense(const Mat& m, double drop_below = 0.0);
};

// Fat-pixel automaton: one initial fat pixel, four projection matrices
// indexed by quadrant, and an output functional giving the visible value.
struct Wfa {
    std::size_t n = 0;
    FatPixel initial;
    std::array<SparseMat, 4> mats;
    std::vector<double> output;

    // Throws StructureError when vector/matrix dimensions disagree with n.
    void check_well_formed() const;

    static Wfa sierpinski();     // 1 state, C_0=C_1=C_2=[1], C_3=[0]
    static Wfa diagonal_ramp();  // 2 states, the classic 2x2 ramp matrices
};

double visible_value(const Wfa& wfa, const FatPixel& state);

// Full product vector C_{a1} * ... * C_{am} * initial, coarsest digit as the
// leftmost (outermost) factor.
FatPixel state_vector(const Wfa& wfa, const QuadAddress& addr);

// output . state_vector
double pixel_value(const Wfa& wfa, const QuadAddress& addr);

// Image of side 2^depth whose sample at address a is pixel_value(wfa, a).
// Implemented as iterated whole-array projection: quadrant q of the level
// k+1 array is C_q applied to every fat pixel of the level-k array.
// Throws CapacityError when 4^depth * n exceeds element_limit.
Image render(const Wfa& wfa, std::size_t depth,
             std::size_t element_limit = std::size_t{1} << 26);

struct ContractivityReport {
    std::array<double, 4> norms{};         // induced inf-norm per matrix
    bool pass = false;                     // all norms <= 1 + tolerance
    std::string status;                    // "pass" or "inconclusive"
    // The inf-norm bound is sufficient, not necessary, so exceeding 1 is
    // reported as inconclusive rather than fail (no joint spectral radius
    // computation here).
};

ContractivityReport check_contractivity(const Wfa& wfa, double tolerance = 1e-12);

// Variant for automata with a designated constant state: norms of the linear
// part only (constant column excluded). An affine brightness map x -> ax+b is
// a contraction whenever |a| <= 1 regardless of b.
ContractivityReport check_contractivity_linear_part(const Wfa& wfa, std::size_t const_state,
                                                    double tolerance = 1e-12);

}  // namespace fatpix
