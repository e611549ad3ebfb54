#include "fatpix/zerotree.hpp"

#include <cmath>
#include <sstream>

#include "fatpix/error.hpp"
#include "fatpix/ifs_to_wfa.hpp"
#include "fatpix/text.hpp"

namespace fatpix {

Mat block_projection(const Mat& c) {
    if (c.rows != c.cols) throw StructureError("block projection expects a square matrix");
    std::size_t n = c.rows;
    Mat out(4 * n, 4 * n);
    for (int b = 0; b < 4; ++b) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                out.at(b * n + i, b * n + j) = c.at(i, j);
            }
        }
    }
    return out;
}

Mat block_filter(const HighPassFilter& h, std::size_t n) {
    if (std::fabs(h.sum()) > 1e-15) {
        throw StructureError("filter taps must sum to zero, got " + format_double(h.sum()));
    }
    Mat out(4 * n, 4 * n);
    for (int br = 0; br < 4; ++br) {
        for (int bc = 0; bc < 4; ++bc) {
            for (std::size_t i = 0; i < n; ++i) {
                out.at(br * n + i, bc * n + i) = h.taps[bc];
            }
        }
    }
    return out;
}

double commutation_check(const Mat& c, const HighPassFilter& h) {
    Mat hh = block_filter(h, c.rows);
    Mat d4 = block_projection(c);
    return max_abs_diff(hh * d4, d4 * hh);
}

FatCoefficient child_fat_coefficient(const Wfa& wfa, const QuadAddress& cluster_addr,
                                     const QuadAddress& path, const HighPassFilter& h,
                                     double agreement_tol) {
    wfa.check_well_formed();
    std::size_t n = wfa.n;

    FatCluster f;
    f.n = n;
    f.v.resize(4 * n);
    for (int q = 0; q < 4; ++q) {
        FatPixel s = state_vector(wfa, cluster_addr.child(q));
        for (std::size_t i = 0; i < n; ++i) f.v[q * n + i] = s[i];
    }

    Mat hh = block_filter(h, n);
    std::vector<double> filter_last = f.v;
    std::vector<double> filter_first = hh * f.v;
    // Outermost path digit is the leftmost factor, so apply right to left.
    for (std::size_t i = path.depth(); i-- > 0;) {
        Mat d4 = block_projection(wfa.mats[path.digit(i)].to_dense());
        filter_last = d4 * filter_last;
        filter_first = d4 * filter_first;
    }
    filter_last = hh * filter_last;

    double gap = 0.0;
    for (std::size_t i = 0; i < 4 * n; ++i) {
        gap = std::max(gap, std::fabs(filter_last[i] - filter_first[i]));
    }
    if (gap > agreement_tol) {
        throw StructureError("filter/projection orderings disagree by " + format_double(gap));
    }

    FatCoefficient out;
    out.value.n = n;
    out.value.v = std::move(filter_last);
    out.ordering_gap = gap;
    return out;
}

std::vector<ZerotreeViolation> zerotree_scan(const WaveletPyramid& pyr, double tau,
                                             const std::vector<Band>& bands, double slack) {
    if (tau < 0.0) throw StructureError("tau must be nonnegative");
    std::vector<ZerotreeViolation> out;
    double limit = tau * (1.0 + slack);

    for (Band b : bands) {
        // desc_max[l] = per-position max magnitude over the subtree rooted
        // there, built bottom-up from the finest level.
        std::vector<CoeffGrid> desc_max(pyr.level_count);
        for (std::size_t l = 0; l < pyr.level_count; ++l) {
            const CoeffGrid& g = pyr.band(l, b);
            desc_max[l] = CoeffGrid(g.side);
            for (std::size_t r = 0; r < g.side; ++r) {
                for (std::size_t c = 0; c < g.side; ++c) {
                    double m = std::fabs(g.at(r, c));
                    if (l > 0) {
                        for (int dr = 0; dr < 2; ++dr) {
                            for (int dc = 0; dc < 2; ++dc) {
                                m = std::max(m, desc_max[l - 1].at(2 * r + dr, 2 * c + dc));
                            }
                        }
                    }
                    desc_max[l].at(r, c) = m;
                }
            }
        }

        for (std::size_t l = 1; l < pyr.level_count; ++l) {
            const CoeffGrid& g = pyr.band(l, b);
            for (std::size_t r = 0; r < g.side; ++r) {
                for (std::size_t c = 0; c < g.side; ++c) {
                    double parent = std::fabs(g.at(r, c));
                    if (parent > tau) continue;
                    double kids = 0.0;
                    for (int dr = 0; dr < 2; ++dr) {
                        for (int dc = 0; dc < 2; ++dc) {
                            kids = std::max(kids, desc_max[l - 1].at(2 * r + dr, 2 * c + dc));
                        }
                    }
                    if (kids > limit) {
                        out.push_back({b, l + 1, r, c, parent, kids});
                    }
                }
            }
        }
    }
    return out;
}

std::string CertificateReport::to_text() const {
    std::ostringstream os;
    os << "certificate: " << (rejected ? "rejected" : (pass ? "pass" : "fail")) << '\n';
    if (rejected) {
        os << "reason: " << reject_reason << '\n';
        return os.str();
    }
    os << "depth: " << depth << '\n';
    os << "tau: " << format_double(tau) << '\n';
    os << "alpha_max: " << format_double(alpha_max) << '\n';
    os << "residual: " << format_double(residual) << '\n';
    os << "rho: " << format_double(rho) << '\n';
    os << "slack: " << format_double(slack) << '\n';
    os << "strict: " << (strict ? "yes" : "no") << '\n';
    os << "violations: " << violations.size() << '\n';
    std::size_t shown = 0;
    for (const auto& v : violations) {
        os << "violation: band=" << band_name(v.band) << " level=" << v.level << " row=" << v.row
           << " col=" << v.col << " parent=" << format_double(v.parent_magnitude)
           << " max_descendant=" << format_double(v.max_descendant) << '\n';
        if (++shown == 20) {
            os << "(further violations omitted)\n";
            break;
        }
    }
    return os.str();
}

CertificateReport theorem_certificate(const QuadIfs& ifs, std::size_t m, double tau,
                                      const std::vector<Band>& bands, double y0) {
    require_valid(ifs, /*strict_alpha=*/false);

    CertificateReport rep;
    rep.depth = m;
    rep.tau = tau;
    for (const auto& map : ifs.maps) {
        rep.alpha_max = std::max(rep.alpha_max, std::fabs(map.alpha));
    }
    if (rep.alpha_max > 1.0) {
        rep.rejected = true;
        rep.reject_reason =
            "expanding system: max |alpha| = " + format_double(rep.alpha_max) + " > 1";
        return rep;
    }
    if (m < 1 || m < ifs.max_range_depth()) {
        throw StructureError("certificate depth too small for this system");
    }

    Wfa wfa = convert(ifs, y0);
    Image fine = render(wfa, m);
    Image coarse = render(wfa, m - 1);
    rep.residual = max_abs_diff(fine, upsample2(coarse));

    // Successive renders contract by alpha_max, so the distance to the
    // attractor is bounded by residual * a/(1-a). At the non-expanding
    // boundary no bound exists; such renders are scanned raw, which is the
    // exact regime for self-similar indicators like the gasket.
    if (rep.alpha_max < 1.0 && rep.residual > 0.0) {
        rep.rho = rep.residual * rep.alpha_max / (1.0 - rep.alpha_max);
    }
    rep.strict = rep.rho < tau / 10.0;
    double levels_gain = static_cast<double>(std::size_t{2} << m);  // 2^(L+1) with L = m
    rep.slack = (tau > 0.0) ? (levels_gain * rep.rho) / tau : 0.0;

    WaveletPyramid pyr = haar_forward(fine, m);
    rep.violations = zerotree_scan(pyr, tau, bands, rep.slack);
    rep.pass = rep.violations.empty();
    return rep;
}

}  // namespace fatpix
