#include <doctest.h>

#include "dets2/io.hpp"
#include "dets2/random.hpp"

using namespace dets2;

TEST_SUITE("io") {

TEST_CASE("instance round-trip, both fields") {
    SeededRng rng(109);
    {
        const auto t = random_tensor(rng, 3, RationalField{});
        const auto back = parse_instance(instance_json(t));
        REQUIRE(std::holds_alternative<EdgeTensor<Rational>>(back));
        CHECK(std::get<EdgeTensor<Rational>>(back) == t);
    }
    {
        const auto t = random_tensor(rng, 2, PrimeField(32003));
        const auto back = parse_instance(instance_json(t));
        REQUIRE(std::holds_alternative<EdgeTensor<Fp>>(back));
        CHECK(std::get<EdgeTensor<Fp>>(back) == t);
        CHECK(std::get<EdgeTensor<Fp>>(back).field().p == 32003);
    }
}

TEST_CASE("partition and points round-trips") {
    SeededRng rng(113);
    const Partition p = random_partition(rng, 3);
    CHECK(parse_partition(partition_json(p)) == p);

    const auto c = random_points(rng, 2, RationalField{});
    const auto back = parse_points(points_json(c));
    REQUIRE(std::holds_alternative<PointConfig<Rational>>(back));
    CHECK(std::get<PointConfig<Rational>>(back).points == c.points);
}

TEST_CASE("instance validation names the offending key") {
    json good = instance_json(canonical_tensor(2, RationalField{}));

    SUBCASE("missing vector slot") {
        json j = good;
        j["vectors"].erase("2,3");
        CHECK_THROWS_WITH_AS(parse_instance(j), "missing vector for edge \"2,3\"", InputError);
    }
    SUBCASE("unknown edge key") {
        json j = good;
        j["vectors"]["5,1"] = {"1", "0"};
        CHECK_THROWS_AS(parse_instance(j), InputError);
    }
    SUBCASE("wrong vector length") {
        json j = good;
        j["vectors"]["1,2"] = {"1"};
        CHECK_THROWS_WITH_AS(parse_instance(j),
                             "vector \"1,2\" must be an array of 2 scalar strings", InputError);
    }
    SUBCASE("bad scalar") {
        json j = good;
        j["vectors"]["1,3"][0] = "x";
        try {
            parse_instance(j);
            FAIL("expected InputError");
        } catch (const InputError& e) {
            CHECK(std::string(e.what()).find("1,3") != std::string::npos);
        }
    }
    SUBCASE("missing d") {
        json j = good;
        j.erase("d");
        CHECK_THROWS_WITH_AS(parse_instance(j), "missing key \"d\"", InputError);
    }
    SUBCASE("non-prime modulus") {
        json j = good;
        j["field"] = {{"prime", 32004}};
        CHECK_THROWS_WITH_AS(parse_instance(j), "modulus 32004 is not prime", InputError);
    }
    SUBCASE("bad field spec") {
        json j = good;
        j["field"] = "real";
        CHECK_THROWS_AS(parse_instance(j), InputError);
    }
}

TEST_CASE("partition validation") {
    json good = partition_json(Partition(2, {1, 2, 1, 1, 2, 2}));
    SUBCASE("missing edge") {
        json j = good;
        j["colors"].erase("1,4");
        CHECK_THROWS_WITH_AS(parse_partition(j), "missing color for edge \"1,4\"", InputError);
    }
    SUBCASE("color out of range") {
        json j = good;
        j["colors"]["1,2"] = 3;
        CHECK_THROWS_WITH_AS(parse_partition(j),
                             "color 3 for edge \"1,2\" out of range 1..2", InputError);
    }
}

TEST_CASE("points validation") {
    SeededRng rng(127);
    json good = points_json(random_points(rng, 2, RationalField{}));
    SUBCASE("wrong point count") {
        json j = good;
        j["points"].erase(3);
        CHECK_THROWS_WITH_AS(parse_points(j), "key \"points\" must be an array of 4 points",
                             InputError);
    }
    SUBCASE("wrong coordinate count") {
        json j = good;
        j["points"][1] = {"1"};
        CHECK_THROWS_WITH_AS(parse_points(j), "point 2 must be an array of 2 scalar strings",
                             InputError);
    }
}

TEST_CASE("matrix dump format") {
    const auto t = canonical_tensor(2, RationalField{});
    const json j = matrix_json(reduced_matrix(t, 2));
    CHECK(j["rows"] == 6);
    CHECK(j["cols"] == 6);
    CHECK(j["row_blocks"] == json({1, 3, 4}));
    CHECK(j["rows_per_block"] == 2);
    CHECK(j["col_edges"][0] == "1,2");
    CHECK(j["col_edges"][5] == "3,4");
    CHECK(j["entries"].size() == 6);
    CHECK(j["entries"][0].size() == 6);
    // first displayed row: +v12 in column 1, -v13 in column 2
    CHECK(j["entries"][0][0] == "1");
    CHECK(j["entries"][1][1] == "-1");
}

TEST_CASE("edge keys") {
    CHECK(edge_key(Edge{3, 11}) == "3,11");
    CHECK(parse_edge_key("2,4", 2) == Edge{2, 4});
    CHECK_THROWS_AS(parse_edge_key("4,2", 2), InputError);
    CHECK_THROWS_AS(parse_edge_key("1;2", 2), InputError);
    CHECK_THROWS_AS(parse_edge_key("1,2,3", 2), InputError);
    CHECK_THROWS_AS(parse_edge_key("1,9", 2), InputError);
}

TEST_CASE("golden file round-trip") {
    GoldenValues g;
    g.canonical_det = {{2, "1"}, {3, "1"}};
    g.d2_cycle_free = 12;
    CHECK(parse_golden(golden_json(g)) == g);
}

} // TEST_SUITE
