#include <gtest/gtest.h>

#include "support.hpp"

using namespace toric;
using namespace toric::testing;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::ParseError;
}

}  // namespace

TEST(Probes, Reach) {
    // from the middle of the bottom edge of CP^2 straight up
    Probe up{1, iv({0, 1}), rv({R(0), R(-1)})};
    EXPECT_EQ(probe_reach(simplex(2), up), 2);
    Probe diag{0, iv({1, 1}), rv({R(-1), R(-1, 2)})};
    EXPECT_EQ(probe_reach(simplex(2), diag), R(5, 4));
}

TEST(Probes, Errors) {
    EXPECT_EQ(code_of([] { probe_reach(simplex(2), {1, iv({1, 2}), rv({R(0), R(-1)})}); }), ErrorCode::NotTransverse);
    EXPECT_EQ(code_of([] { probe_reach(simplex(2), {1, iv({0, 1}), rv({R(0), R(0)})}); }), ErrorCode::NotOnFacet);
    EXPECT_EQ(code_of([] { probe_reach(simplex(2), {1, iv({0, 1}), rv({R(-1), R(-1)})}); }), ErrorCode::NotOnFacet);
    EXPECT_EQ(code_of([] { probe_reach(simplex(2), {7, iv({0, 1}), rv({R(0), R(-1)})}); }), ErrorCode::NotOnFacet);
    EXPECT_EQ(code_of([] { probe_reach(o_minus_one(), {0, iv({1, 0}), rv({R(-1), R(1)})}); }),
              ErrorCode::UnboundedProbe);
    EXPECT_EQ(code_of([] { probe_reach(simplex(2), {1, iv({0, 1, 0}), rv({R(0), R(-1)})}); }),
              ErrorCode::DimensionMismatch);
}

TEST(Probes, Displaceability) {
    Probe up{1, iv({0, 1}), rv({R(0), R(-1)})};
    EXPECT_TRUE(is_displaceable_by_probe(simplex(2), rv({R(0), R(-1, 2)}), up));  // t = 1/2 < 1
    EXPECT_FALSE(is_displaceable_by_probe(simplex(2), rv({R(0), R(0)}), up));     // t = 1, the midpoint
    EXPECT_FALSE(is_displaceable_by_probe(simplex(2), rv({R(1, 2), R(0)}), up));  // off the probe
    EXPECT_FALSE(is_displaceable_by_probe(simplex(2), rv({R(0), R(-1)}), up));    // t = 0
}

TEST(Probes, CentresSurvive) {
    EXPECT_FALSE(probe_scan(simplex(2), RatVec(2), 3));
    EXPECT_FALSE(probe_scan(hexagon(), RatVec(2), 3));
    EXPECT_FALSE(probe_scan(cube(3), RatVec(3), 2));
    for (auto lam : {R(5, 4), R(3, 2), R(7, 4)}) EXPECT_FALSE(probe_scan(mcduff_target(), rv({lam, R(0)}), 3));
}

TEST(Probes, OffCentrePointsAreDisplaced) {
    for (const auto& u : {rv({R(1, 2), R(0)}), rv({R(-1, 2), R(-1, 2)}), rv({R(1, 5), R(1, 7)})}) {
        auto hit = probe_scan(simplex(2), u, 3);
        ASSERT_TRUE(hit) << to_string(u);
        ASSERT_TRUE(hit->reach);
        EXPECT_LT(2 * hit->t, *hit->reach);
        EXPECT_EQ(probe_reach(simplex(2), hit->probe), *hit->reach);
        EXPECT_TRUE(is_displaceable_by_probe(simplex(2), u, hit->probe));
    }
}

TEST(Probes, ScanAgreesWithPointwiseCheck) {
    // every hit, for a grid of points in the square, re-checks through the
    // single-probe predicate
    auto sq = cube(2);
    int hits = 0;
    for (int i = -3; i <= 3; ++i)
        for (int j = -3; j <= 3; ++j) {
            RatVec u{R(i, 4), R(j, 4)};
            auto hit = probe_scan(sq, u, 2);
            if (i == 0 && j == 0) {
                EXPECT_FALSE(hit);
                continue;
            }
            ASSERT_TRUE(hit) << to_string(u);
            ++hits;
            EXPECT_TRUE(is_displaceable_by_probe(sq, u, hit->probe));
        }
    EXPECT_EQ(hits, 48);
}

TEST(Probes, UnboundedDirections) {
    auto hit = probe_scan(o_minus_one(), rv({R(1), R(1)}), 1);
    ASSERT_TRUE(hit);
    EXPECT_FALSE(hit->reach);
    EXPECT_EQ(hit->probe.direction, iv({1, 0}));
    // the equidistant fiber of the unit model has no probe at all
    EXPECT_FALSE(probe_scan(o_minus_one(), rv({R(0), R(0)}), 3));
}
