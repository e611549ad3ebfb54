// fpx: command-line front end for the fat-pixel automaton / quadtree IFS /
// Haar zerotree toolkit. Exit codes: 0 success, 1 verification failure,
// 2 usage or format error, 3 capacity error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fatpix/error.hpp"
#include "fatpix/exact_coder.hpp"
#include "fatpix/formats.hpp"
#include "fatpix/ifs_to_wfa.hpp"
#include "fatpix/random_systems.hpp"
#include "fatpix/text.hpp"
#include "fatpix/zerotree.hpp"

namespace {

using namespace fatpix;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write '" + path + "'");
    out << bytes;
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        spill(path, text);
    }
}

std::vector<Band> parse_bands(const std::string& name) {
    if (name == "all") return {Band::LH, Band::HL, Band::HH};
    if (name == "lh") return {Band::LH};
    if (name == "hl") return {Band::HL};
    if (name == "hh") return {Band::HH};
    throw FormatError("unknown band '" + name + "' (expected all, lh, hl or hh)");
}

int cmd_render(const std::string& wfa_path, std::size_t depth, const std::string& out_path) {
    Wfa wfa = read_wfa(slurp(wfa_path));
    Image img = render(wfa, depth);
    std::size_t clamped = 0;
    std::string bytes = write_pgm(img, &clamped);
    if (clamped > 0) {
        std::cerr << "warning: " << clamped << " sample(s) clamped to [0,255]\n";
    }
    spill(out_path, bytes);
    return kExitOk;
}

int cmd_ifs_decode(const std::string& ifs_path, std::size_t depth, long long iters, double y0,
                   const std::string& out_path) {
    QuadIfs ifs = read_ifs(slurp(ifs_path));
    std::size_t steps = iters < 0 ? depth : static_cast<std::size_t>(iters);
    Image img = ifs_decode(ifs, depth, steps, y0);
    std::size_t clamped = 0;
    std::string bytes = write_pgm(img, &clamped);
    if (clamped > 0) {
        std::cerr << "warning: " << clamped << " sample(s) clamped to [0,255]\n";
    }
    spill(out_path, bytes);
    return kExitOk;
}

int cmd_ifs2wfa(const std::string& ifs_path, const std::string& out_path, bool paper_layout,
                double y0) {
    QuadIfs ifs = read_ifs(slurp(ifs_path));
    Wfa wfa = convert(ifs, y0);
    std::size_t pad_to = paper_layout ? 2 * (ifs.maps.size() + 1) : 0;
    spill(out_path, write_wfa(wfa, pad_to));
    return kExitOk;
}

int cmd_verify(const std::string& ifs_path, std::size_t depth, double tol, double y0,
               const std::string& wfa_path) {
    QuadIfs ifs = read_ifs(slurp(ifs_path));

    EquivalenceReport rep;
    if (wfa_path.empty()) {
        rep = equivalence_check(ifs, depth, y0);
    } else {
        // Verify a claimed automaton file against the grid decoder.
        Wfa wfa = read_wfa(slurp(wfa_path));
        std::size_t max_rd = ifs.max_range_depth();
        for (std::size_t t = 1; t <= depth; ++t) {
            if (t < max_rd) {
                rep.skipped_levels.push_back(t);
                continue;
            }
            Image a = render(wfa, t);
            Image b = ifs_decode(ifs, t, t, y0);
            rep.compared_levels.push_back(t);
            double dev = max_abs_diff(a, b);
            if (dev > rep.max_deviation) rep.max_deviation = dev;
        }
    }

    std::ostringstream out;
    out << "verify\n";
    out << "levels_compared: " << rep.compared_levels.size() << '\n';
    out << "levels_skipped: " << rep.skipped_levels.size() << '\n';
    out << "max_deviation: " << format_double(rep.max_deviation) << '\n';
    out << "tolerance: " << format_double(tol) << '\n';
    bool ok = rep.max_deviation <= tol;
    if (rep.first_offender) {
        out << "first_offender: level=" << rep.first_offender->level
            << " addr=" << rep.first_offender->addr.to_string()
            << " wfa=" << format_double(rep.first_offender->wfa_value)
            << " ifs=" << format_double(rep.first_offender->ifs_value) << '\n';
    }
    out << "result: " << (ok ? "pass" : "fail") << '\n';
    std::cout << out.str();
    return ok ? kExitOk : kExitVerifyFail;
}

int cmd_zerotree(const std::string& image_path, const std::string& ifs_path, std::size_t depth,
                 double tau, const std::string& band, double y0, const std::string& out_path,
                 const std::string& pyramid_path, uint64_t seed, bool seeded,
                 std::size_t count) {
    std::vector<Band> bands = parse_bands(band);

    if (seeded) {
        // Batch mode: certify `count` random contractive systems.
        Rng rng(seed);
        RandomIfsParams params;
        params.alpha_max = 0.8;
        std::ostringstream out;
        out << "zerotree-batch\nseed: " << seed << "\ncount: " << count << '\n';
        std::size_t failures = 0;
        for (std::size_t i = 0; i < count; ++i) {
            QuadIfs ifs = random_quad_ifs(rng, params);
            auto rep = theorem_certificate(ifs, depth, tau, bands, y0);
            if (!rep.pass) ++failures;
            out << "system " << i << ": " << (rep.pass ? "pass" : "fail")
                << " alpha_max=" << format_double(rep.alpha_max)
                << " violations=" << rep.violations.size() << '\n';
        }
        out << "failures: " << failures << '\n';
        out << "result: " << (failures == 0 ? "pass" : "fail") << '\n';
        emit(out_path, out.str());
        return failures == 0 ? kExitOk : kExitVerifyFail;
    }

    if (!ifs_path.empty()) {
        QuadIfs ifs = read_ifs(slurp(ifs_path));
        auto rep = theorem_certificate(ifs, depth, tau, bands, y0);
        if (!pyramid_path.empty()) {
            Image img = render(convert(ifs, y0), depth);
            spill(pyramid_path, write_pyramid(haar_forward(img, depth)));
        }
        emit(out_path, rep.to_text());
        if (rep.rejected) return kExitUsage;
        return rep.pass ? kExitOk : kExitVerifyFail;
    }

    Image img = read_pgm(slurp(image_path));
    WaveletPyramid pyr = haar_forward(img, img.depth());
    if (!pyramid_path.empty()) spill(pyramid_path, write_pyramid(pyr));
    auto violations = zerotree_scan(pyr, tau, bands);
    std::ostringstream out;
    out << "zerotree-scan\n";
    out << "side: " << img.side() << '\n';
    out << "levels: " << img.depth() << '\n';
    out << "tau: " << format_double(tau) << '\n';
    out << "band: " << band << '\n';
    out << "violations: " << violations.size() << '\n';
    for (const auto& v : violations) {
        out << "violation: band=" << band_name(v.band) << " level=" << v.level
            << " row=" << v.row << " col=" << v.col
            << " parent=" << format_double(v.parent_magnitude)
            << " max_descendant=" << format_double(v.max_descendant) << '\n';
    }
    out << "result: " << (violations.empty() ? "pass" : "fail") << '\n';
    emit(out_path, out.str());
    return violations.empty() ? kExitOk : kExitVerifyFail;
}

int cmd_commute(const std::string& wfa_path, const std::string& band, double tol, uint64_t seed,
                bool seeded, std::size_t n, std::size_t count) {
    std::vector<HighPassFilter> filters;
    if (band == "all") {
        filters = {haar_lh(), haar_hl(), haar_hh()};
    } else {
        for (Band b : parse_bands(band)) {
            filters.push_back(b == Band::LH ? haar_lh() : b == Band::HL ? haar_hl() : haar_hh());
        }
    }

    double worst = 0.0;
    if (seeded) {
        Rng rng(seed);
        for (std::size_t i = 0; i < count; ++i) {
            Mat c = random_matrix(rng, n, 1.0);
            for (const auto& f : filters) worst = std::max(worst, commutation_check(c, f));
            worst = std::max(worst, commutation_check(c, random_zero_sum_filter(rng)));
        }
    } else {
        Wfa wfa = read_wfa(slurp(wfa_path));
        for (int q = 0; q < 4; ++q) {
            Mat c = wfa.mats[q].to_dense();
            for (const auto& f : filters) worst = std::max(worst, commutation_check(c, f));
        }
    }
    std::cout << "commute\nmax_deviation: " << format_double(worst) << "\ntolerance: "
              << format_double(tol) << "\nresult: " << (worst <= tol ? "pass" : "fail") << '\n';
    return worst <= tol ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fat-pixel automata, quadtree IFS and Haar zerotree toolkit"};
    app.require_subcommand(1);

    // render
    auto* render_cmd = app.add_subcommand("render", "render an automaton file to PGM");
    std::string r_wfa, r_out;
    std::size_t r_depth = 0;
    render_cmd->add_option("--wfa", r_wfa, "WFA1 input file")->required();
    render_cmd->add_option("--depth", r_depth, "render depth m (side 2^m)")->required();
    render_cmd->add_option("-o,--output", r_out, "output PGM path")->required();

    // ifs-decode
    auto* decode_cmd = app.add_subcommand("ifs-decode", "decode an IFS file to PGM");
    std::string d_ifs, d_out;
    std::size_t d_depth = 0;
    long long d_iters = -1;
    double d_init = 128.0;
    decode_cmd->add_option("--ifs", d_ifs, "IFS1 input file")->required();
    decode_cmd->add_option("--depth", d_depth, "grid depth m (side 2^m)")->required();
    decode_cmd->add_option("--iters", d_iters, "iteration count (default: depth)");
    decode_cmd->add_option("--init", d_init, "uniform starting brightness (default 128)");
    decode_cmd->add_option("-o,--output", d_out, "output PGM path")->required();

    // ifs2wfa
    auto* conv_cmd = app.add_subcommand("ifs2wfa", "compile an IFS into an automaton file");
    std::string c_ifs, c_out;
    bool c_paper = false;
    double c_init = 128.0;
    conv_cmd->add_option("--ifs", c_ifs, "IFS1 input file")->required();
    conv_cmd->add_option("-o,--output", c_out, "output WFA1 path")->required();
    conv_cmd->add_flag("--paper-layout", c_paper,
                       "pad with duplicate constant states to 2(k+1) states");
    conv_cmd->add_option("--init", c_init, "starting brightness baked into the initial vector");

    // verify
    auto* verify_cmd =
        app.add_subcommand("verify", "check automaton renders against the grid decoder");
    std::string v_ifs, v_wfa;
    std::size_t v_depth = 0;
    double v_tol = 1e-9, v_init = 128.0;
    verify_cmd->add_option("--ifs", v_ifs, "IFS1 input file")->required();
    verify_cmd->add_option("--depth", v_depth, "compare levels 1..m")->required();
    verify_cmd->add_option("--tol", v_tol, "max allowed deviation (default 1e-9)");
    verify_cmd->add_option("--init", v_init, "uniform starting brightness (default 128)");
    verify_cmd->add_option("--wfa", v_wfa, "verify this automaton file instead of converting");

    // zerotree
    auto* zt_cmd = app.add_subcommand("zerotree", "zerotree scan / theorem certificate");
    std::string z_image, z_ifs, z_out, z_band = "all", z_pyr;
    std::size_t z_depth = 6, z_count = 25;
    double z_tau = 1e-9, z_init = 128.0;
    uint64_t z_seed = 0;
    zt_cmd->add_option("--image", z_image, "scan a PGM image");
    zt_cmd->add_option("--ifs", z_ifs, "certify an IFS1 system");
    zt_cmd->add_option("--depth", z_depth, "render depth for certificates (default 6)");
    zt_cmd->add_option("--tau", z_tau, "significance threshold (default 1e-9)");
    zt_cmd->add_option("--band", z_band, "all, lh, hl or hh (default all)");
    zt_cmd->add_option("--init", z_init, "starting brightness for certificates");
    zt_cmd->add_option("-o,--output", z_out, "report path (default stdout)");
    zt_cmd->add_option("--dump-pyramid", z_pyr, "write the PYR1 coefficient dump here");
    zt_cmd->add_option("--seed", z_seed, "batch mode: certify random contractive systems");
    zt_cmd->add_option("--count", z_count, "batch mode: number of systems (default 25)");

    // commute
    auto* comm_cmd = app.add_subcommand("commute", "filter/projection commutation deviation");
    std::string m_wfa, m_band = "all";
    double m_tol = 1e-12;
    uint64_t m_seed = 0;
    std::size_t m_n = 5, m_count = 100;
    comm_cmd->add_option("--wfa", m_wfa, "WFA1 input file");
    comm_cmd->add_option("--band", m_band, "all, lh, hl or hh (default all)");
    comm_cmd->add_option("--tol", m_tol, "pass threshold (default 1e-12)");
    comm_cmd->add_option("--seed", m_seed, "random-matrix mode seed");
    comm_cmd->add_option("--n", m_n, "random matrix dimension (default 5)");
    comm_cmd->add_option("--count", m_count, "random matrix count (default 100)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (render_cmd->parsed()) return cmd_render(r_wfa, r_depth, r_out);
        if (decode_cmd->parsed()) return cmd_ifs_decode(d_ifs, d_depth, d_iters, d_init, d_out);
        if (conv_cmd->parsed()) return cmd_ifs2wfa(c_ifs, c_out, c_paper, c_init);
        if (verify_cmd->parsed()) return cmd_verify(v_ifs, v_depth, v_tol, v_init, v_wfa);
        if (zt_cmd->parsed()) {
            bool z_seeded = zt_cmd->count("--seed") > 0;
            if (z_image.empty() && z_ifs.empty() && !z_seeded) {
                std::cerr << "error[usage]: zerotree needs --image, --ifs or --seed\n";
                return kExitUsage;
            }
            return cmd_zerotree(z_image, z_ifs, z_depth, z_tau, z_band, z_init, z_out, z_pyr,
                                z_seed, z_seeded, z_count);
        }
        if (comm_cmd->parsed()) {
            bool seeded = comm_cmd->count("--seed") > 0;
            if (m_wfa.empty() && !seeded) {
                std::cerr << "error[usage]: commute needs --wfa or --seed\n";
                return kExitUsage;
            }
            return cmd_commute(m_wfa, m_band, m_tol, m_seed, seeded, m_n, m_count);
        }
    } catch (const CapacityError& e) {
        std::cerr << "error[capacity]: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const FormatError& e) {
        std::cerr << "error[format]: " << e.what() << '\n';
        return kExitUsage;
    } catch (const StructureError& e) {
        std::cerr << "error[structure]: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error[internal]: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
