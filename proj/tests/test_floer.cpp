#include <gtest/gtest.h>

#include "dense_gf2.hpp"
#include "support.hpp"

using namespace toric;
using namespace toric::testing;

namespace {

std::vector<std::vector<bool>> odd_patterns(const Polytope& p) {
    std::vector<std::vector<bool>> out;
    for (const auto& f : p.facets()) {
        std::vector<bool> row;
        for (const auto& x : f.normal) row.push_back(x % 2 != 0);
        out.push_back(row);
    }
    return out;
}

}  // namespace

TEST(Floer, ParityMask) {
    EXPECT_EQ(parity_mask(iv({1, 0, -1})), 0b101u);
    EXPECT_EQ(parity_mask(iv({2, -3, 4, 7})), 0b1010u);
    EXPECT_EQ(parity_mask(iv({0, 0})), 0u);
}

TEST(Floer, ExampleValues) {
    EXPECT_EQ(hf(cp1()), 2);
    EXPECT_EQ(hf(simplex(2)), 2);
    auto rn = rank_gf2(boundary_op(product(simplex(2), simplex(2))));
    EXPECT_EQ(rn.nullity, 10u);
    EXPECT_EQ(rn.rank, 6u);
    EXPECT_EQ(hf_even(product(simplex(2), simplex(2))), 4);
    EXPECT_EQ(hf(cube(2)), 4);
    EXPECT_EQ(hf(cube(3)), 8);
    EXPECT_EQ(hf(reduce(cube(3), AffineReduction::linear(im({{1, 0}, {0, 1}, {1, 1}})))), 4);
}

TEST(Floer, SymmetricEvenGivesFullRank) {
    for (std::size_t n = 1; n <= 5; ++n) {
        EXPECT_TRUE(boundary_op(cube(n)).is_zero());
        EXPECT_EQ(hf_even(cube(n)), 1LL << n);
    }
}

TEST(Floer, OddPolytopeNeedsSquare) {
    try {
        hf_even(simplex(2));
        FAIL() << "expected OddPolytope";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::OddPolytope);
    }
    auto report = floer_report(simplex(2));
    EXPECT_TRUE(report.via_square);
    EXPECT_EQ(report.hf, 2);
}

TEST(Floer, DimensionLimit) {
    try {
        rank_gf2(boundary_op(cube(4)), 3);
        FAIL() << "expected DimensionLimit";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionLimit);
    }
}

TEST(Floer, MatchesDenseOracle) {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + trial % 5;
        auto p = random_polytope(rng, n, n + 1 + trial % 5, 3);
        DenseOracle oracle(n, odd_patterns(p));
        auto rn = rank_gf2(boundary_op(p));
        EXPECT_EQ(rn.rank, oracle.rank());
        EXPECT_EQ(rn.rank + rn.nullity, std::uint64_t{1} << n);
    }
}

TEST(Floer, ApplyMatchesDenseOracle) {
    auto p = product(simplex(2), cp1());
    auto op = boundary_op(p);
    DenseOracle oracle(3, odd_patterns(p));
    for (std::size_t col = 0; col < 8; ++col) {
        auto image = op.apply(CFVector::basis(3, oracle.to_mask(col)));
        for (std::size_t row = 0; row < 8; ++row)
            EXPECT_EQ(image.coefficient(oracle.to_mask(row)), oracle.entry(row, col));
    }
}

TEST(Floer, SquareIsZeroOrIdentity) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + trial % 4;
        auto p = random_polytope(rng, n, n + 1 + trial % 6);
        auto op = boundary_op(p);
        for (std::uint32_t eps = 0; eps < (1u << n); ++eps) {
            auto v = CFVector::basis(n, eps);
            auto twice = op.apply(op.apply(v));
            if (p.facet_count() % 2 == 0)
                EXPECT_TRUE(twice.is_zero());
            else
                EXPECT_EQ(twice, v);
        }
    }
}

TEST(Floer, Kunneth) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n1 = 1 + trial % 3, n2 = 1 + (trial / 3) % 3;
        auto a = random_even_polytope(rng, n1, 8);
        auto b = random_even_polytope(rng, n2, 8);
        EXPECT_EQ(hf_even(product(a, b)), hf_even(a) * hf_even(b));
    }
}

TEST(Floer, InvariantUnderOffsetsAndBasisChange) {
    std::mt19937_64 rng(91);
    const IntMat shear = im({{1, 1}, {0, 1}});
    for (int trial = 0; trial < 20; ++trial) {
        auto p = random_even_polytope(rng, 2, 8);
        std::vector<Facet> moved, sheared;
        for (const auto& f : p.facets()) {
            moved.push_back({f.normal, f.offset + 5});
            sheared.push_back({shear * f.normal, f.offset});
        }
        EXPECT_EQ(hf_even(Polytope(2, moved)), hf_even(p));
        EXPECT_EQ(hf_even(Polytope(2, sheared)), hf_even(p));
    }
}

TEST(Floer, OddAndEvenDefinitionsAgree) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        auto p = random_even_polytope(rng, 1 + trial % 3, 8);
        EXPECT_EQ(hf(p), hf_even(p));
    }
}
