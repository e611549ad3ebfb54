// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fatpix/exact_coder.hpp"
#include "fatpix/formats.hpp"
#include "fatpix/ifs_to_wfa.hpp"
#include "fatpix/random_systems.hpp"
#include "fatpix/zerotree.hpp"

using namespace fatpix;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, double time_limit_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
        ok = false;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= time_limit_s) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    if (!ok) ++failures;
    std::printf("[%s] %2d. %s (%s%s%.2fs < %.0fs)\n", ok ? "PASS" : "FAIL", number, label.c_str(),
                detail.c_str(), detail.empty() ? "" : "; ", secs, time_limit_s);
}

const double kRampGrid[4][4] = {{128, 96, 64, 32},
                                {160, 128, 96, 64},
                                {192, 160, 128, 96},
                                {224, 192, 160, 128}};

bool wfa_identical(const Wfa& a, const Wfa& b) {
    if (a.n != b.n || a.initial != b.initial || a.output != b.output) return false;
    for (int q = 0; q < 4; ++q) {
        for (std::size_t r = 0; r < a.n; ++r) {
            const auto& ra = a.mats[q].row[r];
            const auto& rb = b.mats[q].row[r];
            if (ra.size() != rb.size()) return false;
            for (std::size_t i = 0; i < ra.size(); ++i) {
                if (ra[i].col != rb[i].col || ra[i].weight != rb[i].weight) return false;
            }
        }
    }
    return true;
}

}  // namespace

int main() {
    // Shared corpus for criteria 3 and 10: fifty seeded random systems and
    // their converted automata.
    std::vector<QuadIfs> systems;
    std::vector<Wfa> converted;

    criterion(1, "ramp render at depth 2 matches the reference grid", 1.0, [](std::string& d) {
        Image img = render(Wfa::diagonal_ramp(), 2);
        for (std::size_t r = 0; r < 4; ++r) {
            for (std::size_t c = 0; c < 4; ++c) {
                if (std::llround(img.at(r, c)) != (long long)kRampGrid[r][c]) {
                    d = "mismatch at " + std::to_string(r) + "," + std::to_string(c);
                    return false;
                }
            }
        }
        return true;
    });

    criterion(2, "four-quadrant system: automaton renders equal grid decodes, depth 1-6", 5.0,
              [](std::string& d) {
                  QuadIfs ifs = QuadIfs::four_quadrant_ramp();
                  Wfa wfa = convert(ifs, 128.0);
                  double worst = 0.0;
                  for (std::size_t t = 1; t <= 6; ++t) {
                      worst = std::max(worst,
                                       max_abs_diff(render(wfa, t), ifs_decode(ifs, t, t, 128.0)));
                  }
                  d = "max deviation " + std::to_string(worst);
                  return worst == 0.0;
              });

    criterion(3, "50 random systems: reduction equivalence to depth 5 within 1e-9", 60.0,
              [&](std::string& d) {
                  Rng rng(20260809);
                  double worst = 0.0;
                  for (int i = 0; i < 50; ++i) {
                      QuadIfs ifs = random_quad_ifs(rng, {});
                      auto rep = equivalence_check(ifs, 5, 128.0);
                      worst = std::max(worst, rep.max_deviation);
                      systems.push_back(ifs);
                      converted.push_back(convert(ifs, 128.0));
                  }
                  std::ostringstream ss;
                  ss << "max deviation " << worst;
                  d = ss.str();
                  return worst < 1e-9;
              });

    criterion(4, "100 random images, sides 2-16: exact coder round trip is bitwise", 30.0,
              [](std::string& d) {
                  Rng rng(4242);
                  const std::size_t sides[4] = {2, 4, 8, 16};
                  for (int i = 0; i < 100; ++i) {
                      Image img = random_image(rng, sides[i % 4]);
                      Wfa wfa = encode_exact(img);
                      if (render(wfa, img.depth()).samples() != img.samples()) {
                          d = "round trip differs at trial " + std::to_string(i);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(5, "100 random 5x5 matrices: filter/projection commutation below 1e-13", 30.0,
              [](std::string& d) {
                  Rng rng(555);
                  double worst = 0.0;
                  for (int i = 0; i < 100; ++i) {
                      Mat c = random_matrix(rng, 5, 1.0);
                      for (const auto& h : {haar_lh(), haar_hl(), haar_hh()}) {
                          worst = std::max(worst, commutation_check(c, h));
                      }
                  }
                  std::ostringstream ss;
                  ss << "max deviation " << worst;
                  d = ss.str();
                  return worst < 1e-13;
              });

    criterion(6, "100 random automata: filter-first vs filter-last below 1e-12", 30.0,
              [](std::string& d) {
                  Rng rng(66066);
                  double worst = 0.0;
                  for (int i = 0; i < 100; ++i) {
                      Wfa w = random_wfa(rng, 2 + rng.below(5));
                      HighPassFilter h = random_zero_sum_filter(rng);
                      QuadAddress cluster;
                      for (std::size_t k = rng.below(3); k-- > 0;) {
                          cluster = cluster.child(int(rng.below(4)));
                      }
                      QuadAddress path;
                      for (std::size_t k = 1 + rng.below(4); k-- > 0;) {
                          path = path.child(int(rng.below(4)));
                      }
                      auto fc = child_fat_coefficient(w, cluster, path, h);
                      worst = std::max(worst, fc.ordering_gap);
                  }
                  std::ostringstream ss;
                  ss << "max gap " << worst;
                  d = ss.str();
                  return worst < 1e-12;
              });

    criterion(7, "zerotree certificates: ramp HH, gasket all bands, 25 random systems", 120.0,
              [](std::string& d) {
                  auto ramp = theorem_certificate(QuadIfs::four_quadrant_ramp(), 6, 1e-9,
                                                  {Band::HH});
                  if (!ramp.pass) {
                      d = "ramp certificate failed";
                      return false;
                  }
                  auto gasket = theorem_certificate(QuadIfs::sierpinski(), 6, 1e-9,
                                                    {Band::LH, Band::HL, Band::HH}, 1.0);
                  if (!gasket.pass) {
                      d = "gasket certificate failed";
                      return false;
                  }
                  Rng rng(700700);
                  RandomIfsParams params;
                  params.alpha_max = 0.8;
                  for (int i = 0; i < 25; ++i) {
                      QuadIfs ifs = random_quad_ifs(rng, params);
                      for (double tau : {1e-9, 1e-3}) {
                          auto rep = theorem_certificate(ifs, 6, tau);
                          if (!rep.pass) {
                              std::ostringstream ss;
                              ss << "system " << i << " tau " << tau << ": "
                                 << rep.violations.size() << " violation(s)";
                              d = ss.str();
                              return false;
                          }
                      }
                  }
                  return true;
              });

    criterion(8, "Haar perfect reconstruction up to side 64 within 1e-12", 30.0,
              [](std::string& d) {
                  Rng rng(888);
                  double worst = 0.0;
                  for (std::size_t side : {2, 4, 8, 16, 32, 64}) {
                      for (int i = 0; i < 3; ++i) {
                          Image img = random_image(rng, side);
                          WaveletPyramid pyr = haar_forward(img, img.depth());
                          worst = std::max(worst, max_abs_diff(img, haar_inverse(pyr)));
                      }
                  }
                  std::ostringstream ss;
                  ss << "max error " << worst;
                  d = ss.str();
                  return worst < 1e-12;
              });

    criterion(9, "constructed counterexample yields exactly one violation", 10.0,
              [](std::string& d) {
                  WaveletPyramid pyr;
                  pyr.image_side = 8;
                  pyr.level_count = 2;
                  pyr.levels.push_back({CoeffGrid(4), CoeffGrid(4), CoeffGrid(4)});
                  pyr.levels.push_back({CoeffGrid(2), CoeffGrid(2), CoeffGrid(2)});
                  pyr.root = CoeffGrid(2);
                  pyr.levels[0].hh.at(3, 1) = 5.0;
                  Image img = haar_inverse(pyr);
                  auto violations = zerotree_scan(haar_forward(img, 2), 0.0,
                                                  {Band::LH, Band::HL, Band::HH});
                  if (violations.size() != 1) {
                      d = std::to_string(violations.size()) + " violations";
                      return false;
                  }
                  const auto& v = violations[0];
                  if (v.band != Band::HH || v.level != 2 || v.row != 1 || v.col != 0) {
                      d = "violation at unexpected coordinates";
                      return false;
                  }
                  return true;
              });

    criterion(10, "criterion-3 corpus: sparsity bound and exact file round trips", 30.0,
               [&](std::string& d) {
                   if (systems.size() != 50) {
                       d = "corpus missing (criterion 3 did not run)";
                       return false;
                   }
                   for (std::size_t i = 0; i < systems.size(); ++i) {
                       const Wfa& w = converted[i];
                       std::size_t nnz = 0;
                       for (int q = 0; q < 4; ++q) nnz += w.mats[q].nonzeros();
                       if (nnz > 4 * w.n + 2 * systems[i].maps.size()) {
                           d = "edge count " + std::to_string(nnz) + " exceeds bound at system " +
                               std::to_string(i);
                           return false;
                       }
                       if (!wfa_identical(read_wfa(write_wfa(w)), w)) {
                           d = "file round trip not exact at system " + std::to_string(i);
                           return false;
                       }
                   }
                   return true;
               });

    if (failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
}
