#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fatpix/haar.hpp"
#include "fatpix/ifs.hpp"
#include "fatpix/matrix.hpp"
#include "fatpix/wfa.hpp"

namespace fatpix {

// Block vector of the four fat pixels of one 2x2 cluster, quadrant order,
// stored as a flat 4n vector.
struct FatCluster {
    std::size_t n = 0;
    std::vector<double> v;  // blocks [q*n, (q+1)*n)
};

// diag(C, C, C, C): projects each fat pixel of a cluster independently.
Mat block_projection(const Mat& c);

// 4n x 4n filter matrix (I I I I)' (h_0 I  h_1 I  h_2 I  h_3 I); every block
// row is identical and its rank is at most n. Rejects filters whose taps do
// not sum to zero.
Mat block_filter(const HighPassFilter& h, std::size_t n);

// Max absolute entry of H*diag4(C) - diag4(C)*H. The block identity predicts
// exactly zero for every C, contractive or not.
double commutation_check(const Mat& c, const HighPassFilter& h);

// Fat wavelet coefficient of the kid cluster reached from cluster_addr by
// descending `path`, computed both as filter-first and filter-last products;
// the two orderings must agree (block filters commute with block
// projections).
struct FatCoefficient {
    FatCluster value;        // the common value (filter-last ordering)
    double ordering_gap;     // max abs difference between the two orderings
};
FatCoefficient child_fat_coefficient(const Wfa& wfa, const QuadAddress& cluster_addr,
                                     const QuadAddress& path, const HighPassFilter& h,
                                     double agreement_tol = 1e-12);

// A coefficient within tau whose descendant cone contains a coefficient
// above tau*(1+slack) breaks the zerotree property at this threshold.
struct ZerotreeViolation {
    Band band;
    std::size_t level;       // 1-based; violations occur at levels >= 2
    std::size_t row, col;
    double parent_magnitude;
    double max_descendant;
};

std::vector<ZerotreeViolation> zerotree_scan(const WaveletPyramid& pyr, double tau,
                                             const std::vector<Band>& bands,
                                             double slack = 0.0);

// Renders the system through the automaton pipeline at depth m, builds the
// full pyramid, and scans every requested band. Slack is derived from an
// empirical convergence residual so that a finite render of a contractive
// system is judged fairly; exact self-similar renders get slack zero.
struct CertificateReport {
    bool pass = false;
    bool rejected = false;        // expanding system, nothing scanned
    std::string reject_reason;
    std::size_t depth = 0;
    double tau = 0.0;
    double alpha_max = 0.0;
    double residual = 0.0;        // max |render(m) - upsample(render(m-1))|
    double rho = 0.0;             // geometric tail bound on render-vs-attractor
    double slack = 0.0;
    bool strict = false;          // rho < tau/10: slack is negligible
    std::vector<ZerotreeViolation> violations;
    std::string to_text() const;
};

CertificateReport theorem_certificate(const QuadIfs& ifs, std::size_t m, double tau,
                                      const std::vector<Band>& bands = {Band::LH, Band::HL,
                                                                        Band::HH},
                                      double y0 = 128.0);

}  // namespace fatpix
