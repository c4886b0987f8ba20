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

// Column j of `b` is an integral combination of the columns of `a`.
bool columns_in_lattice(const IntMat& a, const IntMat& b) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
        auto x = solve_unique(to_rational(a), to_rational(b.col(j)));
        if (!x) return false;
        for (const auto& c : *x)
            if (boost::multiprecision::denominator(c) != 1) return false;
    }
    return true;
}

}  // namespace

TEST(Reduction, SliceValidation) {
    EXPECT_EQ(code_of([] { AffineReduction(im({{1}, {0}}), rv({R(0)})); }), ErrorCode::InvalidSlice);
    EXPECT_EQ(code_of([] { AffineReduction::linear(im({{1, 2}, {2, 4}, {0, 0}})); }), ErrorCode::InvalidSlice);
    EXPECT_EQ(code_of([] { AffineReduction::linear(im({{2}, {0}})); }), ErrorCode::InvalidSlice);
    EXPECT_NO_THROW(AffineReduction::linear(im({{2}, {3}})));
}

TEST(Reduction, PointMaps) {
    AffineReduction s(im({{1, 0}, {0, 1}, {1, 1}}), rv({R(0), R(0), R(1, 2)}));
    EXPECT_EQ(s.map_point(rv({R(1), R(2)})), rv({R(1), R(2), R(7, 2)}));
    EXPECT_EQ(s.preimage(rv({R(1), R(2), R(7, 2)})), rv({R(1), R(2)}));
    EXPECT_FALSE(s.preimage(rv({R(1), R(2), R(3)})));
    EXPECT_EQ(s.pull_back_normal(iv({0, 0, 1})), iv({1, 1}));
    auto k = s.subtorus().col(0);
    EXPECT_TRUE(k == iv({1, 1, -1}) || k == iv({-1, -1, 1}));
}

TEST(Reduction, LevelPairsBaseWithSubtorus) {
    AffineReduction s(im({{1, 0}, {0, 1}, {1, 1}}), rv({R(0), R(0), R(1, 2)}));
    auto k = s.subtorus();
    ASSERT_EQ(k.cols(), 1u);
    Rational expected = dot(k.col(0), rv({R(0), R(0), R(1, 2)}));
    EXPECT_EQ(s.level(), rv({expected}));
    EXPECT_EQ(abs(expected), R(1, 2));
}

TEST(Reduction, FoooSubtorusLattice) {
    auto k = fooo_slice().subtorus();
    ASSERT_EQ(k.rows(), 4u);
    ASSERT_EQ(k.cols(), 2u);
    IntMat expected(4, 2);
    const long cols[2][4] = {{0, -1, 1, 0}, {-1, -1, 0, 1}};
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t i = 0; i < 4; ++i) expected(i, j) = cols[j][i];
    EXPECT_TRUE(columns_in_lattice(k, expected));
    EXPECT_TRUE(columns_in_lattice(expected, k));
}

TEST(Reduction, GoldenCubeToHexagon) {
    EXPECT_EQ(reduce(cube(3), AffineReduction::linear(im({{1, 0}, {0, 1}, {1, 1}}))), canonical_form(hexagon()));
}

TEST(Reduction, GoldenSimplexSlices) {
    EXPECT_EQ(reduce(simplex(3), AffineReduction::linear(im({{1, 0}, {0, 1}, {0, 0}}))), canonical_form(simplex(2)));
    IntMat a(6, 5);
    for (std::size_t i = 0; i < 5; ++i) a(i, i) = 1;
    EXPECT_EQ(reduce(simplex(6), AffineReduction::linear(a)), canonical_form(simplex(5)));
}

TEST(Reduction, GoldenWeightedToBlowup) {
    auto p = reduce(weighted_projective(iv({1, 1, 1, 2})), AffineReduction::linear(im({{1, 0}, {0, 1}, {-1, -1}})));
    EXPECT_EQ(p, canonical_form(cp2_blowup1()));
}

TEST(Reduction, GoldenHirzebruch) {
    auto amb = product(weighted_projective(iv({1, 1, 2})), cp1(R(1, 2), R(1, 2)));
    auto p = reduce(amb, AffineReduction::linear(im({{1, 0}, {0, 1}, {0, 1}})));
    Polytope h2(2, {fct({1, 0}, 1), fct({0, 1}, R(1, 2)), fct({0, -1}, R(1, 2)), fct({-1, -2}, 1)});
    EXPECT_EQ(p, canonical_form(h2));
    EXPECT_TRUE(is_delzant(p));
}

TEST(Reduction, GoldenFooo) {
    auto trace = reduce_traced(fooo_ambient(R(1, 4), R(1, 4)), fooo_slice());
    EXPECT_EQ(trace.reduced, canonical_form(fooo_target(R(1, 4))));
    EXPECT_TRUE(trace.regular_level());
}

TEST(Reduction, GoldenMcduff) {
    auto trace = reduce_traced(mcduff_ambient(R(3, 2)), mcduff_slice());
    EXPECT_EQ(trace.reduced, canonical_form(mcduff_target()));
    EXPECT_TRUE(trace.regular_level());
}

TEST(Reduction, SingularLevels) {
    for (auto lam : {R(1), R(2)}) {
        auto trace = reduce_traced(mcduff_ambient(lam), mcduff_slice());
        EXPECT_FALSE(trace.regular_level()) << to_string(lam);
    }
    EXPECT_FALSE(reduce_traced(fooo_ambient(R(3, 8), R(1, 4)), fooo_slice()).regular_level());
    EXPECT_TRUE(reduce_traced(fooo_ambient(R(5, 16), R(1, 4)), fooo_slice()).regular_level());
    // the slice x_3 = 0 of CP^3 stays away from the dropped facet
    EXPECT_TRUE(reduce_traced(simplex(3), AffineReduction::linear(im({{1, 0}, {0, 1}, {0, 0}}))).regular_level());
}

TEST(Reduction, TraceRecordsDefiningFacets) {
    auto trace = reduce_traced(cube(3), AffineReduction::linear(im({{1, 0}, {0, 1}, {1, 1}})));
    std::size_t defined = 0;
    for (const auto& d : trace.defines) defined += d.has_value();
    EXPECT_EQ(defined, 6u);
    for (std::size_t i = 0; i < trace.defines.size(); ++i) {
        ASSERT_TRUE(trace.defines[i]);
        auto img = AffineReduction::linear(im({{1, 0}, {0, 1}, {1, 1}})).pull_back_normal(cube(3).facet(i).normal);
        EXPECT_EQ(trace.reduced.facet(*trace.defines[i]).normal, img);
    }
}

TEST(Reduction, Errors) {
    AffineReduction far(im({{1}, {0}}), rv({R(0), R(5)}));
    EXPECT_EQ(code_of([&] { reduce(cube(2), far); }), ErrorCode::SliceOutsidePolytope);
    EXPECT_EQ(code_of([] { reduce(cube(2), AffineReduction::linear(im({{1}, {2}}))); }), ErrorCode::NonPrimitiveImage);
    EXPECT_EQ(code_of([] { reduce(cube(3), AffineReduction::linear(im({{1}, {0}}))); }), ErrorCode::DimensionMismatch);
}

TEST(Reduction, InStages) {
    IntMat a1(4, 3), a2 = im({{1, 0}, {0, 1}, {1, 0}});
    for (std::size_t i = 0; i < 3; ++i) a1(i, i) = 1;
    a1(3, 0) = 1;
    a1(3, 1) = 1;
    auto s1 = AffineReduction::linear(a1), s2 = AffineReduction::linear(a2);
    auto staged = reduce(reduce(cube(4, 2), s1), s2);
    EXPECT_EQ(staged, reduce(cube(4, 2), s1.then(s2)));

    AffineReduction t1(im({{1, 0}, {0, 1}, {0, 0}}), rv({R(0), R(0), R(1, 3)}));
    AffineReduction t2(im({{1}, {-1}}), rv({R(1, 5), R(0)}));
    EXPECT_EQ(reduce(reduce(simplex(3, 2), t1), t2), reduce(simplex(3, 2), t1.then(t2)));
    EXPECT_EQ(t1.then(t2).map_point(rv({R(1)})), t1.map_point(t2.map_point(rv({R(1)}))));
}

TEST(Reduction, Models) {
    EXPECT_EQ(weighted_projective(iv({1, 1, 1})), simplex(2));
    EXPECT_EQ(code_of([] { weighted_projective(iv({2, 1})); }), ErrorCode::InvalidPolytope);
    EXPECT_EQ(cube(2).facet_count(), 4u);
    EXPECT_EQ(cube(2).facet(1), fct({-1, 0}, 1));
    EXPECT_EQ(o_minus_one().facet(2), fct({1, 1}, 1));
}

TEST(Reduction, WeightLemmaBlowup) {
    auto w = monotone_weights(cp2_blowup1());
    EXPECT_EQ(w.m, iv({1, 1, 2, 1}));
    ASSERT_TRUE(w.pivot);
    EXPECT_EQ(*w.pivot, 3u);
    EXPECT_EQ(w.others(), iv({1, 1, 2}));
}

TEST(Reduction, WeightLemmaZeroSum) {
    for (const auto& p : {simplex(3), cube(2), hexagon()}) {
        auto w = monotone_weights(p);
        EXPECT_EQ(w.m, IntVec(p.facet_count(), Integer(1)));
        EXPECT_EQ(*w.pivot, p.facet_count() - 1);
    }
}

TEST(Reduction, WeightsBalanceNormals) {
    Polytope h2(2, {fct({1, 0}, 1), fct({0, 1}, R(1, 2)), fct({0, -1}, R(1, 2)), fct({-1, -2}, 1)});
    Polytope h1(2, {fct({1, 0}, 1), fct({0, 1}, 1), fct({-1, -1}, 2), fct({0, -1}, 1)});
    for (const auto& p : {cp2_blowup1(), h2, h1, fooo_target(R(1, 4)), mcduff_target(), product(simplex(2), cp1())}) {
        auto w = monotone_weights(p);
        IntVec sum(p.dim());
        for (std::size_t j = 0; j < p.facet_count(); ++j) {
            EXPECT_GE(w.m[j], 1);
            for (std::size_t c = 0; c < p.dim(); ++c) sum[c] += w.m[j] * p.facet(j).normal[c];
        }
        EXPECT_TRUE(is_zero(sum));
        ASSERT_TRUE(w.pivot);
        EXPECT_EQ(w.m[*w.pivot], 1);
        // the remaining normals still span the lattice
        IntMat rows(p.facet_count() - 1, p.dim());
        for (std::size_t j = 0, r = 0; j < p.facet_count(); ++j) {
            if (j == *w.pivot) continue;
            for (std::size_t c = 0; c < p.dim(); ++c) rows(r, c) = p.facet(j).normal[c];
            ++r;
        }
        EXPECT_TRUE(is_surjective_onto_lattice(rows));
    }
}

TEST(Reduction, WeightLemmaErrors) {
    EXPECT_EQ(code_of([] { monotone_weights(weighted_projective(iv({1, 1, 2}))); }), ErrorCode::NotDelzant);
    EXPECT_EQ(code_of([] { monotone_weights(o_minus_one()); }), ErrorCode::NotCompact);
}

TEST(Reduction, VertexConeCoordinates) {
    auto c = vertex_cone_coords(cp2_blowup1(), iv({-1, -1}));
    ASSERT_TRUE(c);
    IntVec rebuilt(2);
    for (std::size_t k = 0; k < c->coefficients.size(); ++k)
        for (std::size_t j = 0; j < 2; ++j)
            rebuilt[j] += c->coefficients[k] * cp2_blowup1().facet(c->vertex.active_facets[k]).normal[j];
    EXPECT_EQ(rebuilt, iv({-1, -1}));
}
