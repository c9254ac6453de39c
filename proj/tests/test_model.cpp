#include "doctest.h"

#include <cmath>

#include "thop/generator.hpp"
#include "thop/model.hpp"
#include "thop/rng.hpp"

#include "helpers.hpp"

using namespace thop;
using namespace thop::test;

namespace {

Instance coord_instance(const std::vector<Point>& pts) {
    Instance inst;
    inst.name = "coords";
    inst.n = static_cast<int>(pts.size());
    inst.m = 0;
    inst.edge_type = EdgeWeightType::Ceil2D;
    inst.coords = pts;
    inst.capacity = 1;
    inst.max_time = 1;
    inst.v_min = 0.1;
    inst.v_max = 1.0;
    detail::build_distance_matrix(inst);
    validate_instance(inst);
    detail::index_items(inst);
    return inst;
}

}  // namespace

TEST_CASE("distance: ceiled Euclidean") {
    Instance inst = coord_instance({{0, 0}, {3, 4}, {1, 1}});
    CHECK(inst.distance(1, 2) == 5);
    CHECK(inst.distance(1, 3) == 2);  // ceil(sqrt(2))
    CHECK(inst.distance(2, 2) == 0);
    CHECK(inst.distance(2, 1) == inst.distance(1, 2));
    CHECK_THROWS_AS(inst.distance(0, 1), InputError);
    CHECK_THROWS_AS(inst.distance(1, 4), InputError);
}

TEST_CASE("distance: ceiling preserves the triangle inequality") {
    Rng rng(42);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Point> pts;
        for (int i = 0; i < 3; ++i)
            pts.push_back({rng.uniform01() * 100.0, rng.uniform01() * 100.0});
        Instance inst = coord_instance(pts);
        CHECK(inst.distance(1, 3) <= inst.distance(1, 2) + inst.distance(2, 3));
    }
}

TEST_CASE("speed: boundary values and the worked trace") {
    Instance inst = fig1();  // v_min 0.1, v_max 1.0, W 3
    CHECK(inst.speed(0) == doctest::Approx(1.0));
    CHECK(inst.speed(3) == doctest::Approx(0.1));
    CHECK(inst.speed(2) == doctest::Approx(0.4));
    CHECK_THROWS_AS(inst.speed(4), CapacityError);
}

TEST_CASE("speed: exact endpoints and linearity") {
    Instance inst = fig1();
    CHECK(inst.speed(0) == inst.v_max);
    CHECK(inst.speed(inst.capacity) == inst.v_min);
    // linearity over the integer grid: v(w1) + v(w2) == 2 v((w1+w2)/2)
    CHECK(inst.speed(1) + inst.speed(3) == doctest::Approx(2.0 * inst.speed(2)).epsilon(1e-9));
}

TEST_CASE("parse_instance: minimal two-city instance") {
    Instance inst = parse_instance(
        "PROBLEM NAME: tiny\n"
        "DIMENSION: 2\n"
        "NUMBER OF ITEMS: 0\n"
        "CAPACITY OF KNAPSACK: 1\n"
        "MAX TIME: 10\n"
        "MIN SPEED: 0.1\n"
        "MAX SPEED: 1\n"
        "EDGE_WEIGHT_TYPE: CEIL_2D\n"
        "NODE_COORD_SECTION (INDEX, X, Y):\n"
        "1 0 0\n"
        "2 3 4\n");
    CHECK(inst.n == 2);
    CHECK(inst.m == 0);
    CHECK(inst.distance(1, 2) == 5);
}

TEST_CASE("parse_instance: figure reconstruction fixture") {
    Instance inst = fig1();
    CHECK(inst.n == 4);
    CHECK(inst.m == 5);
    CHECK(inst.capacity == 3);
    CHECK(inst.max_time == 75.0);
    CHECK(inst.distance(1, 2) == 5);
    CHECK(inst.distance(2, 3) == 8);
    CHECK(inst.distance(3, 4) == 5);
    CHECK(inst.distance(1, 3) == 6);
    CHECK(inst.distance(2, 4) == 6);
    CHECK(inst.item(3).profit == 100);
    CHECK(inst.item(3).city == 3);
    CHECK(inst.items_at[2].size() == 2);
    CHECK(inst.items_at[3].size() == 3);
}

TEST_CASE("parse_instance: serialize round-trip is the identity") {
    for (const char* name : {"fig1.thop", "fig1_t20.thop"}) {
        Instance a = load_fixture(name);
        Instance b = parse_instance(serialize_instance(a));
        CHECK(a == b);
        CHECK(serialize_instance(a) == serialize_instance(b));
    }
}

TEST_CASE("parse_instance: descriptive failures") {
    std::string good = read_file(fixture_path("fig1.thop"));

    SUBCASE("missing header") {
        std::string text = good;
        text.erase(text.find("CAPACITY OF KNAPSACK: 3\n"), 24);
        CHECK_THROWS_WITH_AS(parse_instance(text), doctest::Contains("CAPACITY OF KNAPSACK"),
                             ParseError);
    }
    SUBCASE("item at an endpoint city") {
        std::string text = good;
        text.replace(text.find("1 20 2 2"), 8, "1 20 2 1");
        CHECK_THROWS_WITH_AS(parse_instance(text), doctest::Contains("item 1"), ParseError);
    }
    SUBCASE("non-numeric field") {
        std::string text = good;
        text.replace(text.find("MAX TIME: 75"), 12, "MAX TIME: soon");
        CHECK_THROWS_AS(parse_instance(text), ParseError);
    }
    SUBCASE("inconsistent counts") {
        std::string text = good;
        text.erase(text.find("5 40 1 3\n"), 9);
        CHECK_THROWS_AS(parse_instance(text), ParseError);
    }
    SUBCASE("asymmetric explicit matrix") {
        std::string text = good;
        text.replace(text.find("5 0 8 6"), 7, "4 0 8 6");
        CHECK_THROWS_WITH_AS(parse_instance(text), doctest::Contains("symmetric"), ParseError);
    }
}

TEST_CASE("generator: deterministic, valid, round-trippable") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        GenConfig cfg;
        cfg.n = 4 + static_cast<int>(seed % 5);
        cfg.items_per_city = 1 + static_cast<int>(seed % 3);
        cfg.seed = seed;
        Instance a = generate_instance(cfg);
        Instance b = generate_instance(cfg);
        CHECK(a == b);
        CHECK(serialize_instance(a) == serialize_instance(b));
        Instance c = parse_instance(serialize_instance(a));
        CHECK(a.dist == c.dist);
        CHECK(a.items == c.items);
    }
    GenConfig two_cities;
    two_cities.n = 2;
    two_cities.items_per_city = 0;
    Instance t = generate_instance(two_cities);
    CHECK(t.n == 2);
    CHECK(t.m == 0);
    CHECK_THROWS_AS(generate_instance(GenConfig{.profit_min = 0}), InputError);
}
