#include "uinv/errors.hpp"
#include "uinv/io.hpp"
#include "uinv/random.hpp"

#include <gtest/gtest.h>

namespace uinv {
namespace {

using io::Json;

TEST(PolyJson, RoundTrip) {
    const int n = 3;
    const Poly p = build_J(3, 1, n);
    const Json j = io::poly_to_json(p);
    EXPECT_EQ(io::poly_from_json(j, n), p);
    EXPECT_EQ(io::poly_from_json(Json::parse(j.dump()), n), p);
    EXPECT_EQ(io::poly_to_json(Poly()), Json::array());
}

TEST(PolyJson, Shape) {
    const Poly p = Poly(Rational(-3, 2)) * pow(Poly::var(VarId::entry(2, 1, 2)), 2) + Poly(1);
    const Json j = io::poly_to_json(p);
    ASSERT_EQ(j.size(), 2u);
    EXPECT_EQ(j[0]["coeff"], "-3/2");
    EXPECT_EQ(j[0]["exps"], Json::parse(R"([["x[2][1]", 2]])"));
    EXPECT_EQ(j[1]["coeff"], "1");
    EXPECT_EQ(j[1]["exps"], Json::array());
}

TEST(PolyJson, Errors) {
    EXPECT_THROW(io::poly_from_json(Json::object(), 2), ParseError);
    EXPECT_THROW(io::poly_from_json(Json::parse(R"([{"coeff": "1", "exps": [["y", 1]]}])"), 2), ParseError);
    EXPECT_THROW(io::poly_from_json(Json::parse(R"([{"coeff": "1/0", "exps": []}])"), 2), ParseError);
}

TEST(MatrixJson, RoundTripSymbolicAndNumeric) {
    const PolyMatrix xs = build_Xstar(3);
    EXPECT_EQ(io::poly_matrix_from_json(io::matrix_to_json(xs)), xs);
    Sampler rng(derive_seed(81, 0));
    for (int n = 1; n <= 6; ++n) {
        const RatMatrix m = rng.matrix(n);
        const Json j = io::matrix_to_json(m);
        EXPECT_EQ(j["n"], n);
        EXPECT_EQ(io::matrix_from_json(Json::parse(j.dump())), m);
    }
}

TEST(MatrixJson, AcceptsIntegersAndStrings) {
    const RatMatrix m = io::matrix_from_json(Json::parse(R"({"n": 2, "entries": [[1, "2/4"], ["-3", 0]]})"));
    EXPECT_EQ(m(0, 1), Rational(1, 2));
    EXPECT_EQ(m(1, 0), Rational(-3));
}

TEST(MatrixJson, Errors) {
    EXPECT_THROW(io::matrix_from_json(Json::parse(R"({"entries": [[1]]})")), ParseError);
    EXPECT_THROW(io::matrix_from_json(Json::parse(R"({"n": 2, "entries": [[1, 2]]})")), ParseError);
    EXPECT_THROW(io::matrix_from_json(Json::parse(R"({"n": 2, "entries": [[1, 2], [3]]})")), ParseError);
    EXPECT_THROW(io::matrix_from_json(Json::parse(R"({"n": 1, "entries": [["x[1][1]"]]})")), ParseError);
    EXPECT_THROW(io::matrix_from_json(Json::parse(R"({"n": 1, "entries": [[1.5]]})")), ParseError);
}

TEST(MatrixCsv, Parses) {
    const RatMatrix m = io::matrix_from_csv("1, 2/3\n# comment\n-4,5\n");
    EXPECT_EQ(m(0, 1), Rational(2, 3));
    EXPECT_EQ(m(1, 0), Rational(-4));
    EXPECT_THROW(io::matrix_from_csv("1,2\n3\n"), ParseError);
    EXPECT_THROW(io::matrix_from_csv(""), ParseError);
    EXPECT_THROW(io::matrix_from_csv("1,a\n2,3\n"), ParseError);
}

TEST(ReadMatrices, AllContainerShapes) {
    const std::string one = R"({"n": 1, "entries": [["7"]]})";
    EXPECT_EQ(io::read_matrices(one).size(), 1u);
    EXPECT_EQ(io::read_matrices("[" + one + ", " + one + "]").size(), 2u);
    EXPECT_EQ(io::read_matrices(R"({"matrices": [)" + one + "]}").size(), 1u);
    EXPECT_EQ(io::read_matrices("1,2\n3,4\n\n5\n").size(), 2u);
    EXPECT_TRUE(io::read_matrices("  \n").empty());
    EXPECT_TRUE(io::read_matrices("[]").empty());
    EXPECT_THROW(io::read_matrices("{not json"), ParseError);
}

TEST(FingerprintJson, RoundTripAndKeys) {
    Sampler rng(derive_seed(82, 0));
    const Fingerprint fp = invariant_fingerprint(rng.omega_matrix(3));
    const Json j = io::fingerprint_to_json(fp);
    EXPECT_EQ(j["n"], 3);
    EXPECT_TRUE(j["values"].contains("J[3][2]"));
    EXPECT_EQ(io::fingerprint_from_json(Json::parse(j.dump())), fp);
    Json missing = j;
    missing["values"].erase("J[2][1]");
    EXPECT_THROW(io::fingerprint_from_json(missing), ParseError);
    Json extra = j;
    extra["values"]["J[9][9]"] = "1";
    EXPECT_THROW(io::fingerprint_from_json(extra), ParseError);
}

TEST(SlicePointJson, RoundTrip) {
    Sampler rng(derive_seed(83, 0));
    const SlicePoint p = SlicePoint::from_matrix(rng.slice_matrix(4));
    const Json j = io::slice_point_to_json(p);
    EXPECT_TRUE(j["coords"].contains("s[4][1]"));
    EXPECT_EQ(io::slice_point_from_json(Json::parse(j.dump())), p);
}

TEST(GensetJson, Fields) {
    const GenSet g = generator_set(2);
    const Json j = io::genset_to_json(g);
    ASSERT_EQ(j.size(), 3u);
    EXPECT_EQ(j[0]["k"], 1);
    EXPECT_EQ(j[0]["i"], 0);
    EXPECT_EQ(j[0]["n"], 2);
    EXPECT_EQ(j[0]["poly"], "x[2][1]");
    EXPECT_EQ(j[2]["degree"], 2);
    EXPECT_EQ(j[2]["terms"], 2);
    EXPECT_FALSE(j[0].contains("restricted"));
}

}  // namespace
}  // namespace uinv
