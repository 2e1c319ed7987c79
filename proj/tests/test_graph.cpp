#include "doctest.h"
#include "penrose/graph.hpp"

#include <algorithm>
#include <set>

using namespace penrose;

namespace {

const PolygonSet& partition() {
    static PolygonSet p = loadPartition();
    return p;
}

const TypeTable& table() {
    static TypeTable t = buildTypeTable(partition(), 30);
    return t;
}

std::set<EdgeVec> edgeSet(int type) {
    const auto& e = table()[type].edges;
    return {e.begin(), e.end()};
}

}  // namespace

TEST_CASE("fundamental map") {
    // T(0,0) = (1 - A)/2 = phi^-2.
    CHECK(fundamentalT(0, 0) == GoldenReal(2, -1));
    // T is affine with the golden slopes 2A and 2.
    CHECK(fundamentalT(1, 0) - fundamentalT(0, 0) == GoldenReal(-6, 4));
    CHECK(fundamentalT(0, 1) - fundamentalT(0, 0) == GoldenReal(2));
    CHECK(inHalfPlaneH(0, 0));
    CHECK(!inHalfPlaneH(0, -10));
    CHECK(heightAboveH(0, 0) == GoldenReal(2, -1).half());
}

TEST_CASE("psi lands in the fundamental square") {
    GoldenReal hf = GoldenReal(1, 0, 1);
    int ties = 0;
    for (long x = -8; x <= 8; ++x)
        for (long y = -8; y <= 8; ++y) {
            GoldenPoint q;
            try {
                q = psiPoint(x, y);
            } catch (const BoundaryTie&) {
                // Points on the line y = 3x - 1 hit the square's edge exactly.
                CHECK(y == 3 * x - 1);
                ++ties;
                continue;
            }
            CHECK(q.x >= -hf);
            CHECK(q.x < hf);
            CHECK(q.y >= -hf);
            CHECK(q.y < hf);
            // The lift and the reduction differ by a lattice translation.
            GoldenPoint lift = psiLift(x, y);
            CHECK((lift.x - q.x).isInteger());
            CHECK((lift.y - q.y).isInteger());
        }
    CHECK(ties > 0);
}

TEST_CASE("classification is a total map on the window") {
    for (long x = -12; x <= 12; ++x)
        for (long y = -12; y <= 12; ++y) {
            int t = classify(partition(), x, y);
            CHECK(t >= 1);
            CHECK(t <= 26);
        }
}

TEST_CASE("the origin strand") {
    CHECK(classify(partition(), 0, 0) == 3);
    CHECK(edgeSet(3) == std::set<EdgeVec>{{-1, 1}, {1, 1}});
    auto fwd = traceGamma0(partition(), table(), 3, +1);
    REQUIRE(fwd.size() == 4);
    CHECK(fwd[0] == LatticePoint(0, 0));
    CHECK(fwd[1] == LatticePoint(1, 1));
}

TEST_CASE("strands from the first gene center") {
    // The two non-backtracking three-step arcs leaving (3,4): one runs through
    // types 11, 9, 23 with displacements (1,1), (0,1), (0,1); the other
    // through 11, 14, 10 with displacements (-1,0), (-1,-1), (0,-1).
    CHECK(classify(partition(), 3, 4) == 11);
    auto a = strandOrbit(partition(), table(), {3, 4}, 0, 3);
    auto b = strandOrbit(partition(), table(), {3, 4}, 1, 3);
    REQUIRE(a.size() == 3);
    REQUIRE(b.size() == 3);
    auto types = [](const std::vector<StrandStep>& s) {
        std::vector<int> t;
        for (const auto& x : s) t.push_back(x.type);
        return t;
    };
    auto edges = [](const std::vector<StrandStep>& s) {
        std::vector<EdgeVec> e;
        for (const auto& x : s) e.push_back(x.edge);
        return e;
    };
    std::vector<int> ta = types(a), tb = types(b);
    std::vector<EdgeVec> ea = edges(a), eb = edges(b);
    if (ea[0] != EdgeVec{1, 1}) {
        std::swap(ta, tb);
        std::swap(ea, eb);
    }
    CHECK(ta == std::vector<int>{11, 9, 23});
    CHECK(ea == std::vector<EdgeVec>{{1, 1}, {0, 1}, {0, 1}});
    CHECK(tb == std::vector<int>{11, 14, 10});
    CHECK(eb == std::vector<EdgeVec>{{-1, 0}, {-1, -1}, {0, -1}});
}

TEST_CASE("table edges agree with direct dynamics") {
    // Spot check beyond the window the table was built from.
    for (long x = 31; x <= 36; ++x)
        for (long y = -3; y <= 3; ++y) {
            if (!inHalfPlaneH(x, y)) continue;
            int t = classify(partition(), x, y);
            std::set<EdgeVec> got;
            for (int eps : {1, -1}) {
                Partner pr = partnerByDynamics(x, y, eps);
                if (pr.point != LatticePoint{x, y}) {
                    got.insert(EdgeVec{int(pr.point.first - x), int(pr.point.second - y)});
                }
            }
            CHECK(got == edgeSet(t));
        }
}

TEST_CASE("embedding on a small window") {
    auto rep = checkEmbedding(partition(), table(), 20);
    CHECK(rep.ok());
    CHECK(rep.verticesChecked > 0);
    CHECK(rep.edges > 0);
}
