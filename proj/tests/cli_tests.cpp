// End-to-end checks of the fpx binary: spawns the tool, captures its exit
// code and stdout, and inspects the files it writes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "fatpix/formats.hpp"
#include "fatpix/haar.hpp"

using namespace fatpix;

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(FPX_BINARY) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

std::string data(const std::string& name) { return std::string(FPX_DATA_DIR) + "/" + name; }

std::string tmp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("render: gasket depth 5 has 3^5 bright pixels") {
    std::string out = tmp_path("fpx_gasket.pgm");
    auto res = run("render --wfa " + data("sierpinski.wfa") + " --depth 5 -o " + out);
    REQUIRE(res.exit_code == 0);
    Image img = read_pgm(slurp(out));
    CHECK(img.side() == 32);
    std::size_t nonzero = 0;
    for (double v : img.samples()) {
        if (v != 0.0) ++nonzero;
    }
    CHECK(nonzero == 243);
}

TEST_CASE("render: ramp depth 2 reproduces the reference grid") {
    std::string out = tmp_path("fpx_ramp.pgm");
    auto res = run("render --wfa " + data("ramp.wfa") + " --depth 2 -o " + out);
    REQUIRE(res.exit_code == 0);
    Image img = read_pgm(slurp(out));
    const double expect[4][4] = {{128, 96, 64, 32},
                                 {160, 128, 96, 64},
                                 {192, 160, 128, 96},
                                 {224, 192, 160, 128}};
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) CHECK(img.at(r, c) == expect[r][c]);
    }
}

TEST_CASE("render: depth 0 is the initial visible value") {
    std::string out = tmp_path("fpx_one.pgm");
    auto res = run("render --wfa " + data("ramp.wfa") + " --depth 0 -o " + out);
    REQUIRE(res.exit_code == 0);
    Image img = read_pgm(slurp(out));
    CHECK(img.side() == 1);
    CHECK(img.at(0, 0) == 128.0);
}

TEST_CASE("ifs-decode matches render and honours --iters") {
    std::string out = tmp_path("fpx_dec.pgm");
    auto res = run("ifs-decode --ifs " + data("ramp.ifs") + " --depth 2 -o " + out);
    REQUIRE(res.exit_code == 0);
    Image img = read_pgm(slurp(out));
    CHECK(img.at(3, 0) == 224.0);

    res = run("ifs-decode --ifs " + data("ramp.ifs") + " --depth 2 --iters 1 -o " + out);
    REQUIRE(res.exit_code == 0);
    Image one = read_pgm(slurp(out));
    // One step: four uniform quadrants.
    CHECK(one.at(0, 0) == 128.0);
    CHECK(one.at(0, 1) == 128.0);
    CHECK(one.at(0, 2) == 64.0);
    CHECK(one.at(2, 0) == 192.0);
    CHECK(one.at(2, 2) == 128.0);
}

TEST_CASE("broken input files exit with the format code") {
    std::string bad = tmp_path("fpx_bad.ifs");
    std::ofstream(bad) << "IFS1\nmaps 1\nmap 04 0 0.5 1\n";
    auto res = run("ifs-decode --ifs " + bad + " --depth 2 -o " + tmp_path("x.pgm"));
    CHECK(res.exit_code == 2);
}

TEST_CASE("ifs2wfa emits the compact and padded layouts") {
    std::string out = tmp_path("fpx_conv.wfa");
    auto res = run("ifs2wfa --ifs " + data("ramp.ifs") + " -o " + out);
    REQUIRE(res.exit_code == 0);
    Wfa w = read_wfa(slurp(out));
    CHECK(w.n == 2);

    res = run("ifs2wfa --ifs " + data("ramp.ifs") + " --paper-layout -o " + out);
    REQUIRE(res.exit_code == 0);
    Wfa padded = read_wfa(slurp(out));
    CHECK(padded.n == 10);  // 2(k+1) for k = 4

    res = run("ifs2wfa --ifs " + data("single_map.ifs") + " -o " + out);
    REQUIRE(res.exit_code == 0);
    CHECK(read_wfa(slurp(out)).n == 3);
}

TEST_CASE("verify passes the shipped systems and fails corrupted automata") {
    auto res = run("verify --ifs " + data("ramp.ifs") + " --depth 5");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("max_deviation: 0\n") != std::string::npos);
    CHECK(res.output.find("result: pass") != std::string::npos);

    res = run("verify --ifs " + data("mutual.ifs") + " --depth 5");
    CHECK(res.exit_code == 0);

    // Corrupt one weight of a converted automaton and verify against it.
    std::string good = tmp_path("fpx_good.wfa");
    REQUIRE(run("ifs2wfa --ifs " + data("ramp.ifs") + " -o " + good).exit_code == 0);
    Wfa w = read_wfa(slurp(good));
    w.mats[0].set(0, 0, 0.75);
    std::string broken = tmp_path("fpx_broken.wfa");
    std::ofstream(broken) << write_wfa(w);
    res = run("verify --ifs " + data("ramp.ifs") + " --depth 4 --wfa " + broken);
    CHECK(res.exit_code == 1);
    CHECK(res.output.find("result: fail") != std::string::npos);
}

TEST_CASE("zerotree certifies the ramp and flags constructed violations") {
    auto res = run("zerotree --ifs " + data("ramp.ifs") + " --depth 6 --tau 1e-9 --band hh");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("certificate: pass") != std::string::npos);

    res = run("zerotree --ifs " + data("sierpinski.ifs") +
              " --depth 6 --tau 1e-9 --band all --init 1");
    CHECK(res.exit_code == 0);

    // An image with one orphaned fine HH coefficient: build it by inverting
    // a hand-made pyramid.
    WaveletPyramid pyr;
    pyr.image_side = 8;
    pyr.level_count = 2;
    pyr.levels.push_back({CoeffGrid(4), CoeffGrid(4), CoeffGrid(4)});
    pyr.levels.push_back({CoeffGrid(2), CoeffGrid(2), CoeffGrid(2)});
    pyr.root = CoeffGrid(2);
    for (double& v : pyr.root.v) v = 400.0;  // pixel base 100, inside 0..255
    pyr.levels[0].hh.at(3, 1) = 4.0;         // pixel offsets +-2 stay integral
    std::string img_path = tmp_path("fpx_violation.pgm");
    std::ofstream(img_path, std::ios::binary) << write_pgm(haar_inverse(pyr));

    res = run("zerotree --image " + img_path + " --tau 0");
    CHECK(res.exit_code == 1);
    CHECK(res.output.find("violations: 1") != std::string::npos);
    CHECK(res.output.find("band=HH level=2 row=1 col=0") != std::string::npos);
}

TEST_CASE("commute reports zero deviation for shipped automata") {
    auto res = run("commute --wfa " + data("ramp.wfa"));
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("max_deviation: 0\n") != std::string::npos);

    res = run("commute --seed 7 --n 5 --count 20");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("result: pass") != std::string::npos);
}

TEST_CASE("seeded runs are byte-identical") {
    auto a = run("zerotree --seed 11 --count 3 --depth 5 --tau 1e-3");
    auto b = run("zerotree --seed 11 --count 3 --depth 5 --tau 1e-3");
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.output == b.output);
    CHECK(!a.output.empty());
}

TEST_CASE("missing subcommand inputs exit with the usage code") {
    CHECK(run("zerotree").exit_code == 2);
    CHECK(run("commute").exit_code == 2);
    CHECK(run("render --wfa /nonexistent.wfa --depth 2 -o /tmp/x.pgm").exit_code == 2);
}
