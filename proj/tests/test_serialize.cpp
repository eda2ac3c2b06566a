#include <gtest/gtest.h>

#include "jfusion/enumerate.hpp"
#include "jfusion/schemes.hpp"
#include "jfusion/serialize.hpp"

using namespace jfusion;

namespace {

std::string data(const std::string& name) { return std::string(JFUSION_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Json, PartitionRoundTrip) {
    for (const auto& f : enumerate_fusions(2, 2).fusions) {
        const auto j = to_json(f.partition);
        EXPECT_EQ(partition_from_json(json::parse(j.dump())), f.partition);
    }
    const auto s = read_partition_file(data("wreath.json"));
    EXPECT_EQ(to_json(s).dump(), R"({"cells":[[[0,0]],[[0,1],[1,1]],[[1,0]]],"d":2,"k":1})");
}

TEST(Json, SchemaErrors) {
    EXPECT_THROW(read_partition_file(data("malformed.json")), std::invalid_argument);
    EXPECT_THROW(read_partition_file(data("missing.json")), std::invalid_argument);
    EXPECT_THROW(partition_from_json(json::parse(R"({"k":1,"cells":[]})")), std::invalid_argument);
    EXPECT_THROW(partition_from_json(json::parse(R"({"k":"1","d":2,"cells":[]})")), std::invalid_argument);
    EXPECT_THROW(partition_from_json(json::parse(R"({"k":1,"d":2,"cells":[[[0,0]],[[1,0],[0,1],[1,1.5]]]})")),
                 std::invalid_argument);
    EXPECT_THROW(partition_from_json(json::parse(R"({"k":1,"d":2,"cells":[[[0,0]],[[1,0],[0,1]]]})")),
                 std::invalid_argument);
}

TEST(Json, PolynomialAndVector) {
    const auto p = RationalPolynomial::binomial_in_m(-4, 2);
    EXPECT_EQ(to_json(p).dump(), R"(["10/1","-9/2","1/2"])");
    EXPECT_EQ(polynomial_from_json(to_json(p)), p);
    EXPECT_EQ(to_json(IndexVector{1, 0, 2}).dump(), "[1,0,2]");
    EXPECT_THROW(polynomial_from_json(json::parse("[1,2]")), std::invalid_argument);
}

TEST(Json, Classification) {
    const auto s = read_partition_file(data("hamming_1_4.json"));
    const auto j = to_json(classify(StructureTable(1, 4), s));
    EXPECT_EQ(j["verdict"], "hamming");
    EXPECT_EQ(j["e"], 2);
    EXPECT_EQ(j["blocks"], json::parse("[[1,2],[3,4]]"));
    EXPECT_EQ(j["cameron"], false);
}

TEST(Json, ReportsAreReproducible) {
    EnumerationOptions a;
    EnumerationOptions b;
    b.workers = 2;
    EXPECT_EQ(to_json(enumerate_fusions(1, 3, a)).dump(), to_json(enumerate_fusions(1, 3, b)).dump());
    const auto j = to_json(verify_theorem(1, 2));
    EXPECT_EQ(j["passed"], true);
    EXPECT_EQ(j["valid"], 5);
    EXPECT_FALSE(j.contains("seconds"));
}
