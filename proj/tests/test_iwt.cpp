#include <doctest.h>

#include <cstdlib>
#include <random>
#include <stdexcept>

#include "rwm/iwt.hpp"
#include "testutil.hpp"

using namespace rwm;

TEST_CASE("lifting step on one pair") {
    const LiftPair f = lift_forward(100, 102);
    CHECK(f.s == 101);
    CHECK(f.d == 2);

    const SamplePair b = lift_inverse(101, 2);
    CHECK(b.x0 == 100);
    CHECK(b.x1 == 102);
}

TEST_CASE("floor division rounds toward negative infinity") {
    CHECK(floor_half(5) == 2);
    CHECK(floor_half(-1) == -1);
    CHECK(floor_half(-5) == -3);
    CHECK(floor_half(0) == 0);
}

TEST_CASE("lifting is invertible on random pairs") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int32_t> dist(-100000, 100000);
    for (int i = 0; i < 20000; ++i) {
        const std::int32_t x0 = dist(rng);
        const std::int32_t x1 = dist(rng);
        const LiftPair f = lift_forward(x0, x1);
        const SamplePair b = lift_inverse(f.s, f.d);
        CHECK(b.x0 == x0);
        CHECK(b.x1 == x1);
    }
}

TEST_CASE("2x2 decomposition lands in the right quadrants") {
    IntPlane p(2, 2);
    p.at(0, 0) = 100;
    p.at(0, 1) = 102;
    p.at(1, 0) = 104;
    p.at(1, 1) = 110;

    const CoeffPlane c = forward_iwt(p);
    CHECK(c.coeff(Subband::LL, 0, 0) == 104);
    CHECK(c.coeff(Subband::HL, 0, 0) == 4);
    CHECK(c.coeff(Subband::LH, 0, 0) == 6);
    CHECK(c.coeff(Subband::HH, 0, 0) == 4);

    // Quadrant layout: LL top-left, HL top-right, LH bottom-left.
    CHECK(c.at(0, 0) == 104);
    CHECK(c.at(0, 1) == 4);
    CHECK(c.at(1, 0) == 6);
    CHECK(c.at(1, 1) == 4);

    CHECK(inverse_iwt(c) == p);
}

TEST_CASE("constant image has zero detail coefficients") {
    IntPlane p(8, 6);
    for (auto& v : p.data) v = 77;
    const CoeffPlane c = forward_iwt(p);
    for (int r = 0; r < c.sub_height(); ++r) {
        for (int col = 0; col < c.sub_width(); ++col) {
            CHECK(c.coeff(Subband::LL, r, col) == 77);
            CHECK(c.coeff(Subband::LH, r, col) == 0);
            CHECK(c.coeff(Subband::HL, r, col) == 0);
            CHECK(c.coeff(Subband::HH, r, col) == 0);
        }
    }
}

TEST_CASE("odd or non-positive dimensions are rejected") {
    CHECK_THROWS_AS(forward_iwt(IntPlane(3, 4)), std::invalid_argument);
    CHECK_THROWS_AS(forward_iwt(IntPlane(4, 5)), std::invalid_argument);
    CHECK_THROWS_AS(forward_iwt(IntPlane(0, 4)), std::invalid_argument);
    CHECK_THROWS_AS(inverse_iwt(CoeffPlane(4, 7)), std::invalid_argument);
}

TEST_CASE("inverse after forward is the identity, including out-of-range values") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<std::int32_t> dist(-4000, 4000);
    std::uniform_int_distribution<int> half(1, 16);
    for (int trial = 0; trial < 200; ++trial) {
        IntPlane p(2 * half(rng), 2 * half(rng));
        for (auto& v : p.data) v = dist(rng);
        CHECK(inverse_iwt(forward_iwt(p)) == p);
    }
}

TEST_CASE("forward after inverse is the identity on coefficient planes") {
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<std::int32_t> dist(-4000, 4000);
    std::uniform_int_distribution<int> half(1, 16);
    for (int trial = 0; trial < 200; ++trial) {
        CoeffPlane c(2 * half(rng), 2 * half(rng));
        for (auto& v : c.data) v = dist(rng);
        CHECK(forward_iwt(inverse_iwt(c)) == c);
    }
}

TEST_CASE("gray image overload matches the plane route") {
    std::mt19937_64 rng(23);
    const GrayImage img = testutil::rand_image(rng, 32, 20);
    CHECK(forward_iwt(img) == forward_iwt(to_plane(img)));
}

TEST_CASE("parallel kernels match the serial reference bit for bit") {
    std::mt19937_64 rng(24);
    std::uniform_int_distribution<std::int32_t> dist(-300, 600);
    std::uniform_int_distribution<int> half(1, 40);
    for (int trial = 0; trial < 40; ++trial) {
        IntPlane p(2 * half(rng), 2 * half(rng));
        for (auto& v : p.data) v = dist(rng);
        const CoeffPlane c = forward_iwt(p);
        CHECK(c == serial::forward_iwt(p));
        CHECK(inverse_iwt(c) == serial::inverse_iwt(c));
    }
}

TEST_CASE("a single +/-2 detail change moves pixels by a bounded amount") {
    std::mt19937_64 rng(25);
    const GrayImage img = testutil::rand_image(rng, 16, 16);
    const IntPlane base = to_plane(img);
    const IntPlane base_px = inverse_iwt(forward_iwt(base));
    REQUIRE(base_px == base);

    int observed_max = 0;
    for (Subband b : {Subband::LH, Subband::HL, Subband::HH}) {
        for (int delta : {2, -2}) {
            CoeffPlane c = forward_iwt(base);
            c.coeff(b, 3, 5) += delta;
            const IntPlane perturbed = inverse_iwt(c);
            for (std::size_t i = 0; i < perturbed.data.size(); ++i) {
                const int diff = std::abs(perturbed.data[i] - base.data[i]);
                observed_max = std::max(observed_max, diff);
            }
            // Round trip stays exact on the perturbed plane.
            CHECK(forward_iwt(perturbed) == c);
        }
    }
    CHECK(observed_max >= 1);
    CHECK(observed_max <= 4);
    MESSAGE("max pixel change from one +/-2 coefficient delta: ", observed_max);
}
