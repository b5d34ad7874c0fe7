#include "quiverlab/io.hpp"
#include "quiverlab/catalog.hpp"

#include <gtest/gtest.h>

using namespace quiverlab;

TEST(Io, ParseQuiver)
{
    const Quiver q = parse_quiver(R"({"vertices":["1","2"],"arrows":[{"id":"a","from":"1","to":"2","degree":3}]})");
    EXPECT_EQ(q.vertex_count(), 2u);
    ASSERT_EQ(q.arrow_count(), 1u);
    EXPECT_EQ(q.arrows()[0].source, 0u);
    EXPECT_EQ(q.arrows()[0].target, 1u);
    EXPECT_EQ(q.arrows()[0].degree, 3);

    const Quiver ints = parse_quiver(R"({"vertices":[1,2],"arrows":[{"id":"a","from":2,"to":1}]})");
    EXPECT_EQ(ints.vertices()[1], "2");
    EXPECT_EQ(ints.arrows()[0].source, 1u);
}

TEST(Io, QuiverErrors)
{
    EXPECT_THROW(parse_quiver("{"), Error);
    EXPECT_THROW(parse_quiver(R"({"vertices":["1"]})"), Error);
    EXPECT_THROW(parse_quiver(R"({"vertices":["1"],"arrows":[{"id":"a","from":"1","to":"9"}]})"), Error);
    EXPECT_THROW(parse_quiver(R"({"vertices":["1","2"],"arrows":[{"id":"a","from":"1","to":"2","degree":"x"}]})"), Error);
    try {
        parse_quiver(R"({"vertices":["1"],"arrows":[{"id":"a","from":"1","to":"9"}]})");
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("unknown vertex '9'"), std::string::npos);
    }
}

TEST(Io, ParseAlgebraKinds)
{
    auto a = parse_algebra(R"({"vertices":[1,2],"arrows":[{"id":"b1","from":1,"to":1},{"id":"b2","from":2,"to":2},
                              {"id":"a","from":2,"to":1}],"relations":[["b1","b1"],["b2","b2"]]})");
    EXPECT_EQ(a.kind, "gentle");
    EXPECT_EQ(a.algebra.dim(), 8u);
    a = parse_algebra(R"({"weights":[2,2,2],"lambdas":["1/2"]})");
    EXPECT_EQ(a.kind, "canonical");
    EXPECT_EQ(a.algebra.dim(), 13u);
    EXPECT_FALSE(a.quiver);
    a = parse_algebra(R"({"vertices":["x"],"arrows":[]})");
    EXPECT_EQ(a.kind, "path");
    EXPECT_EQ(a.algebra.dim(), 1u);
    EXPECT_THROW(parse_canonical(R"({"weights":[2,3,5]})"), Error);
    EXPECT_THROW(parse_canonical(R"({"weights":[2,0,5],"lambdas":[1]})"), Error);
}

TEST(Io, ParseMatrix)
{
    const RatMatrix m = parse_matrix(R"([["1","-1/2"],[0,3]])");
    EXPECT_EQ(m(0, 1), Rational(-1, 2));
    EXPECT_EQ(m(1, 1), 3);
    EXPECT_THROW(parse_matrix("[[1,2],[3]]"), Error);
    EXPECT_THROW(parse_matrix("[]"), Error);
    EXPECT_THROW(parse_matrix(R"([["1/0"]])"), Error);
}

TEST(Io, JsonRoundTrip)
{
    const RatMatrix m = parse_matrix(R"([["1","-1/2"],[0,3]])");
    EXPECT_EQ(to_json(m).dump(), R"([[1,"-1/2"],[0,3]])");
    EXPECT_EQ(parse_matrix(to_json(m).dump()), m);
}

TEST(Io, ApproximateValuesAreMarked)
{
    const Json j = approx_json(1.924847300000001, 1e-4);
    EXPECT_EQ(j["exact"], false);
    EXPECT_EQ(j["value"], 1.924847);
    EXPECT_EQ(j["tol"], 1e-4);
    EXPECT_FALSE(approx_json(0.5, 0).contains("tol"));
}

TEST(Io, DigestIsStable)
{
    EXPECT_EQ(input_digest(""), "fnv1a64:cbf29ce484222325");
    EXPECT_EQ(input_digest("a"), "fnv1a64:af63dc4c8601ec8c");
    EXPECT_NE(input_digest("ab"), input_digest("ba"));
}

TEST(Io, VerdictJson)
{
    const Json j = to_json(SerreVerdict{SerreCyclotomic{2, 30, 30, "delta < 0"}});
    EXPECT_EQ(j.dump(), R"({"kind":"serre-cyclotomic","l":2,"m":30,"n":30,"reason":"delta < 0"})");
    const Json u = to_json(SerreVerdict{UnknownVerdict{"x"}});
    EXPECT_EQ(u.dump(), R"({"kind":"unknown","reason":"x"})");
}

TEST(Io, ProfileJson)
{
    const Json j = to_json(cyclotomic_profile(coxeter_matrix(cartan_path_algebra(catalog::kronecker(2)))));
    EXPECT_EQ(j["is_cyclotomic"], true);
    EXPECT_EQ(j["periodic"], false);
    EXPECT_TRUE(j["period"].is_null());
    EXPECT_EQ(j["witness"]["n"], 1);
    EXPECT_EQ(j["witness"]["l"], 2);
}
