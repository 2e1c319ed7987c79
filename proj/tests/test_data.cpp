#include "doctest.h"
#include "penrose/data.hpp"

using namespace penrose;

TEST_CASE("partition loads as 26 strictly convex tiles") {
    auto part = loadPartition();
    REQUIRE(part.poly.size() == 27);  // 1-based with padding slot 0
    for (int t = 1; t <= 26; ++t) {
        CHECK(part.poly[t].size() >= 3);
        CHECK(areaTimes2(RatPolygon::from(part.poly[t])).sign() > 0);
        CHECK(part.raw[t].size() == part.poly[t].size());
    }
    // The tiles partition a unit-area fundamental domain: areas sum to 1.
    GoldenRat total(0);
    for (int t = 1; t <= 26; ++t) total += areaTimes2(RatPolygon::from(part.poly[t]));
    CHECK(total == GoldenRat(2));
}

TEST_CASE("dynamical polygons load") {
    auto dyn = loadDynPolygons();
    REQUIRE(dyn.poly.size() == 75);
    for (const auto& p : dyn.poly) {
        CHECK(p.size() >= 3);
        CHECK(p.size() <= 4);
        CHECK(areaTimes2(RatPolygon::from(p)).sign() > 0);
    }
}

TEST_CASE("gene centers load") {
    auto centers = loadGeneCenters();
    REQUIRE(centers.size() == 75);
    CHECK(centers[0] == std::pair<long, long>(3, 4));
    CHECK(centers[25] == std::pair<long, long>(12, 50));
    CHECK(centers[74] == std::pair<long, long>(86, 279));
}

TEST_CASE("shadow strand triples load") {
    auto tris = loadShadowTriples();
    REQUIRE(tris.size() == 75);
    CHECK(tris[0].end1 == std::pair<long, long>(9, 17));
    CHECK(tris[0].center == std::pair<long, long>(11, 17));
    CHECK(tris[0].end2 == std::pair<long, long>(15, 22));
    for (const auto& t : tris) {
        CHECK(t.end1 != t.center);
        CHECK(t.end2 != t.center);
    }
}

TEST_CASE("manifest covers the shipped assets") {
    CHECK(verifyManifest(dataDir()) >= 4);
}
