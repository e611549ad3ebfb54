#include <algorithm>
#include <vector>

#include "doctest.h"

#include "fatpix/error.hpp"
#include "fatpix/exact_coder.hpp"
#include "fatpix/random_systems.hpp"

using namespace fatpix;

TEST_CASE("one-pixel image") {
    Image img(1, 7.0);
    Wfa w = encode_exact(img);
    CHECK(w.n == 1);
    CHECK(w.initial == FatPixel{7.0});
    Image back = render(w, 0);
    CHECK(back == img);
}

TEST_CASE("2x2 images round-trip for every label placement") {
    std::vector<double> labels = {1.0, 2.0, 3.0, 4.0};
    std::sort(labels.begin(), labels.end());
    do {
        Image img(2, 0.0);
        img.samples() = labels;
        Wfa w = encode_exact(img);
        CHECK(w.n == 4);
        CHECK(render(w, 1) == img);
    } while (std::next_permutation(labels.begin(), labels.end()));
}

TEST_CASE("4x4 image of 16 labels decodes in place") {
    Image img(4, 0.0);
    for (std::size_t i = 0; i < 16; ++i) img.samples()[i] = double(i + 1);
    Wfa w = encode_exact(img);
    CHECK(w.n == 16);
    CHECK(render(w, 2) == img);
}

TEST_CASE("random images of sides 2-16 round-trip bitwise") {
    Rng rng(42);
    for (std::size_t side : {2, 4, 8, 16}) {
        for (int trial = 0; trial < 5; ++trial) {
            Image img = random_image(rng, side);
            Wfa w = encode_exact(img);
            Image back = render(w, img.depth());
            CHECK(back.samples() == img.samples());
        }
    }
}

TEST_CASE("selection matrices are sub-permutations") {
    Rng rng(5);
    Image img = random_image(rng, 8);
    Wfa w = encode_exact(img);
    for (int q = 0; q < 4; ++q) {
        for (const auto& row : w.mats[q].row) {
            CHECK(row.size() <= 1);
            for (const auto& e : row) CHECK(e.weight == 1.0);
        }
    }
    CHECK(check_contractivity(w).pass);
}

TEST_CASE("state limit") {
    Image img(16, 0.0);
    CHECK_THROWS_AS(encode_exact(img, /*state_limit=*/64), CapacityError);
}
