#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace quiverlab;
namespace cat = quiverlab::catalog;

namespace {

GentlePresentation two_loop_gentle()
{
    Quiver q({"1", "2"}, {{"b1", 0, 0, 0}, {"b2", 1, 1, 0}, {"a", 1, 0, 0}});
    return {q, {{"b1", "b1"}, {"b2", "b2"}}};
}

CanonicalSpec canonical(std::vector<unsigned> w, std::vector<long> lambdas = {})
{
    CanonicalSpec s{std::move(w), {}};
    for (long l : lambdas) s.lambdas.emplace_back(l);
    return s;
}

void expect_valid(const SCAlgebra& a)
{
    EXPECT_EQ(check_vertex_compatibility(a), std::nullopt);
    EXPECT_EQ(check_idempotents(a), std::nullopt);
    EXPECT_EQ(check_associativity(a), std::nullopt);
    EXPECT_EQ(check_degree_additivity(a), std::nullopt);
    const RatMatrix c = cartan_matrix(a);
    Rational total = 0;
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) total += c(i, j);
    EXPECT_EQ(total, static_cast<long>(a.dim()));
}

} // namespace

TEST(PathAlgebra, DimensionIsPathCount)
{
    EXPECT_EQ(path_algebra(cat::linear(2)).dim(), 3u);
    EXPECT_EQ(path_algebra(cat::kronecker(2)).dim(), 4u);
    for (const auto& q : {cat::linear(6), cat::dynkin_e(8), cat::kronecker(3), cat::affine_e6(), cat::cycle(5)}) {
        const SCAlgebra a = path_algebra(q);
        EXPECT_EQ(static_cast<long>(a.dim()), oracle::count_all_paths(q));
        EXPECT_EQ(cartan_matrix(a), cartan_path_algebra(q));
        expect_valid(a);
    }
    EXPECT_THROW(path_algebra(cat::cycle(3, true)), Error);
}

TEST(PathAlgebra, DegreesAddUp)
{
    const Quiver q({"1", "2", "3"}, {{"a", 0, 1, 2}, {"b", 1, 2, -5}});
    const SCAlgebra a = path_algebra(q);
    const auto ba = a.find("ba");
    ASSERT_TRUE(ba);
    EXPECT_EQ(a.basis(*ba).degree, -3);
    expect_valid(a);
}

TEST(Gentle, TwoLoopExample)
{
    const SCAlgebra a = gentle_algebra(two_loop_gentle());
    EXPECT_EQ(a.dim(), 8u);
    for (const char* label : {"e1", "e2", "b1", "b2", "a", "b1a", "ab2", "b1ab2"}) EXPECT_TRUE(a.find(label)) << label;
    EXPECT_EQ(cartan_matrix(a), RatMatrix::from_rows({{2, 4}, {0, 2}}));
    expect_valid(a);
}

TEST(Gentle, CompositeRelation)
{
    const SCAlgebra a = gentle_algebra({cat::linear(3), {{"a1", "a2"}}});
    EXPECT_EQ(a.dim(), 5u);
    expect_valid(a);
}

TEST(Gentle, AxiomViolations)
{
    const Quiver three_out({"1", "2", "3", "4"}, {{"a", 0, 1, 0}, {"b", 0, 2, 0}, {"c", 0, 3, 0}});
    EXPECT_THROW(gentle_algebra({three_out, {}}), Error);
    // two free continuations of a
    const Quiver fork({"1", "2", "3", "4"}, {{"a", 0, 1, 0}, {"b", 1, 2, 0}, {"c", 1, 3, 0}});
    EXPECT_THROW(gentle_algebra({fork, {}}), Error);
    // relation-free loop: infinite dimensional
    EXPECT_THROW(gentle_algebra({Quiver({"1"}, {{"b", 0, 0, 0}}), {}}), Error);
    EXPECT_THROW(gentle_algebra({cat::linear(3), {{"a2", "a1"}}}), Error);
}

TEST(Canonical, Examples)
{
    const SCAlgebra k = canonical_algebra(canonical({1, 1}));
    EXPECT_EQ(k.dim(), 4u);
    EXPECT_EQ(cartan_matrix(k), RatMatrix::from_rows({{1, 0}, {2, 1}}));
    EXPECT_EQ(canonical_algebra(canonical({2, 2, 2}, {1})).dim(), 13u);
    EXPECT_THROW(canonical_algebra(canonical({2, 2, 2}, {0})), Error);
    EXPECT_THROW(canonical_algebra(canonical({2, 2, 2, 2}, {1, 1})), Error);
    EXPECT_THROW(canonical_algebra(canonical({2})), Error);
    EXPECT_THROW(canonical_algebra(canonical({2, 3, 5})), Error);
}

TEST(Canonical, AllBuildersValid)
{
    for (const auto& s : {canonical({2, 3, 5}, {1}), canonical({2, 2, 2, 2}, {1, -1}), canonical({3, 3, 3}, {2}),
                          canonical({4, 1, 2}, {3}), canonical({2, 3})})
        expect_valid(canonical_algebra(s));
}

TEST(Canonical, CartanIndependentOfLambda)
{
    EXPECT_EQ(cartan_matrix(canonical_algebra(canonical({2, 3, 4, 2}, {1, 2}))),
              cartan_matrix(canonical_algebra(canonical({2, 3, 4, 2}, {-5, 7}))));
}

TEST(Canonical, RelationRewritesFullArm)
{
    const SCAlgebra a = canonical_algebra(canonical({2, 2, 2}, {3}));
    // x3_2 x3_1 = (arm 2) - 3 (arm 1)
    const auto x31 = a.find("x3_1"), x32 = a.find("x3_2"), arm1 = a.find("x1_2x1_1"), arm2 = a.find("x2_2x2_1");
    ASSERT_TRUE(x31 && x32 && arm1 && arm2);
    const LinComb p = a.product(*x32, *x31);
    EXPECT_EQ(sparse_get(p, static_cast<Index>(*arm2)), 1);
    EXPECT_EQ(sparse_get(p, static_cast<Index>(*arm1)), -3);
}

TEST(SCAlgebra, DetectsBrokenTable)
{
    const SCAlgebra a = path_algebra(cat::linear(3));
    const std::size_t n = a.dim();
    auto table_of = [&] {
        std::vector<LinComb> t;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) t.push_back(a.product(i, j));
        return t;
    };
    const auto a1 = *a.find("a1"), a2 = *a.find("a2"), a2a1 = *a.find("a2a1");
    EXPECT_EQ(check_associativity(a), std::nullopt);

    // a2 * a1 = a2a1 + a1: then (e3 a2) a1 != e3 (a2 a1)
    auto t = table_of();
    t[a2 * n + a1] = sparse_from_terms<Rational>({{static_cast<Index>(a2a1), 1}, {static_cast<Index>(a1), 1}});
    const SCAlgebra non_assoc(a.vertices(), a.basis(), a.idempotents(), t);
    EXPECT_NE(check_associativity(non_assoc), std::nullopt);
    EXPECT_NE(check_vertex_compatibility(non_assoc), std::nullopt);

    t = table_of();
    t[a.idempotent(1) * n + a1].clear();
    EXPECT_NE(check_idempotents(SCAlgebra(a.vertices(), a.basis(), a.idempotents(), t)), std::nullopt);

    t = table_of();
    EXPECT_THROW(SCAlgebra(a.vertices(), a.basis(), a.idempotents(), std::vector<LinComb>(t.begin(), t.end() - 1)), Error);
}
