// The 4-torus compactification of the return dynamics: the embedding of the
// return line into (R/8Z)^4, the piecewise-affine extensions of the four
// strip maps, the 832 lifted partition tiles, itineraries, and the sweep
// establishing that each tile carries a single well-defined itinerary.

#pragma once

#include "penrose/graph.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace penrose {

// Raised when an extension map is evaluated, without a branch choice, at a
// point whose determiner value sits exactly on a dividing point.
struct OnBreakpoint : std::runtime_error {
    explicit OnBreakpoint(const std::string& what) : std::runtime_error(what) {}
};

// A point of R^4 over the golden ring.  Used both for planar (unreduced)
// polygon lifts and, after reduce8(), for points of the torus (R/8Z)^4 with
// every coordinate in [-4, 4).
struct Vec4 {
    std::array<GoldenReal, 4> c;

    Vec4() = default;
    Vec4(GoldenReal a, GoldenReal b, GoldenReal d, GoldenReal e)
        : c{std::move(a), std::move(b), std::move(d), std::move(e)} {}

    GoldenReal& operator[](int i) { return c[i]; }
    const GoldenReal& operator[](int i) const { return c[i]; }

    Vec4 operator+(const Vec4& o) const;
    Vec4 operator-(const Vec4& o) const;
    bool operator==(const Vec4& o) const { return c == o.c; }

    GoldenReal normSq() const;
};

// Componentwise a/phi + b/phi^2 (the same interior-point rule used for the
// planar edge probes).
Vec4 interpolate(const Vec4& a, const Vec4& b);

// Componentwise reduction mod 8 into [-4, 4).  Total: a coordinate exactly
// congruent to 4 reduces to -4 (the half-open fundamental domain keeps its
// left face).
Vec4 reduce8(const Vec4& v);

using Torus8Point = Vec4;

// The embedding (x+y, x-y, (x+y)/phi, (x-y)/phi) reduced mod 8.
Torus8Point psiTilde(const GoldenPoint& p);

// The projection ((c3+c4)/4, (c1+c2)/4) back to the unit torus (as an
// unreduced lift; callers compare mod Z^2).  Left-inverse of psiTilde in the
// sense zetaTilde(psiTilde(x, y)) = (x/(2 phi), x/2) + (y-coupled terms that
// vanish mod Z^2 for y = +-1).
GoldenPoint zetaTilde(const Torus8Point& t);

// One extension map: affine on each determiner interval.  The undefined set
// Y is the union of the parallel 3-tori where the determiner is congruent to
// a breakpoint mod 8; its complement has exactly two components, and the
// intervals alternate between them.
struct ExtensionMap {
    std::array<std::array<GoldenReal, 4>, 4> L;
    std::array<GoldenReal, 4> dCoef;
    GoldenReal dConst;
    std::vector<GoldenReal> breaks;                 // 2 or 4 dividing points
    std::vector<std::array<GoldenReal, 4>> offset;  // one per interval
    std::vector<int> componentLabel;                // 0/1 per interval

    GoldenReal determiner(const Torus8Point& t) const;
    // Interval index of the determiner value, or -1 on a dividing point.
    int interval(const Torus8Point& t) const;
    // Component of the complement of Y containing t (0 or 1), or -1 on Y.
    int componentOf(const Torus8Point& t) const;

    Vec4 linear(const Vec4& v) const;

    // L(t) + offset(interval), reduced.  Throws OnBreakpoint on Y.
    Torus8Point apply(const Torus8Point& t) const;
    // The continuous extension from the closure of component `branch`: on a
    // dividing point the offset of the adjacent interval lying in that
    // component is used.  Interior points apply as usual.
    Torus8Point applyExtended(const Torus8Point& t, int branch) const;
};

// The four extension maps, loaded once from the bundled table and verified
// against the strip maps by the tests.
const std::array<ExtensionMap, 4>& extensionMaps();

// One lifted partition tile: base tile 1..26, planar translate
// (eps1, eps2) in {0,1,2,3}^2, and the sign of the return line branch
// (+1 or -1).  `lift` holds the planar (unreduced) R^4 vertices.
struct LiftedTile {
    int base = 0;
    int eps1 = 0, eps2 = 0;
    int sign = +1;
    std::vector<Vec4> lift;
};

// The lift of one planar tile vertex v + (eps1, eps2):
//   sign +1: (2y+1, 2y-1, 2x+1/phi, 2x-1/phi)
//   sign -1: (2y-1, 2y+1, 2x-1/phi, 2x+1/phi)
// where (x, y) = v + (eps1, eps2).  These are exactly the maps carrying the
// doubled planar partition onto the torus partition: applied to
// (t/(2 phi), t/2) they reproduce psiTilde(t, +-1) on the nose.
Vec4 muLift(const GoldenPoint& v, int eps1, int eps2, int sign);

// All 26 x 16 x 2 = 832 lifted tiles.
std::vector<LiftedTile> liftedTiles(const PolygonSet& partition);

// `rounds` rounds of midpoint insertion: each round doubles the vertex count
// by inserting interpolate(v_i, v_{i+1}) between cyclic neighbours.
std::vector<Vec4> subdividePolygon(std::vector<Vec4> poly, int rounds);

// An interior point of the polygon: interpolate(v3, interpolate(v1, v2)).
Vec4 tracePoint(const std::vector<Vec4>& poly);

// The branch sequence of the eight-step composition (maps 1..8 are the four
// extension maps applied twice over).
struct TileItinerary {
    std::array<int, 8> eps{};
};

// Strict itinerary of a torus point: records the component before each step.
// Throws OnBreakpoint if any intermediate point lands on an undefined set.
TileItinerary getItinerary(const Torus8Point& t);

// True iff the orbit of t under the branch-extended maps stays in the closed
// components named by the itinerary.  If stretchSq is given, it is raised to
// the largest squared torus distance seen between images of `prev` and t at
// any step (used by the tile sweep to bound sample gaps).
bool verifyItinerary(const TileItinerary& it, Torus8Point t);

// The per-tile verification sweep.
struct TileReport {
    int index = 0;  // position in liftedTiles() order
    bool itineraryDefined = false;
    bool verticesOk = false;    // all subdivided vertices share the itinerary
    TileItinerary itinerary;
    GoldenReal maxGapSq;        // largest consecutive-image gap, squared
    bool ok() const { return itineraryDefined && verticesOk; }
};

struct PartitionReport {
    int tilesChecked = 0;
    int tilesOk = 0;
    // Distance between the two components of each undefined set is >= 2*sqrt(2).
    bool componentGapOk = false;
    // Largest consecutive-image gap over all tiles stays below 2*sqrt(2), so
    // the vertex checks control the whole tile.
    bool stretchOk = false;
    GoldenReal maxGapSq;
    // Base tiles sharing a boundary segment have distinct branch-edge pairs.
    bool adjacentPairsOk = false;
    // Per-type planar return displacements match the branch-edge table.
    bool displacementsOk = false;
    bool ok() const {
        return tilesChecked == tilesOk && componentGapOk && stretchOk && adjacentPairsOk &&
               displacementsOk;
    }
};

// Verifies a single lifted tile at the given subdivision depth.
TileReport verifyTile(const LiftedTile& tile, int rounds);

// Full sweep over all 832 tiles plus the geometric premises.  `jobs` worker
// threads split the tile list.
PartitionReport verifyPartition(const PolygonSet& partition, const TypeTable& table,
                                int rounds = 10, int jobs = 1);

// Exact squared distance between the two components of the undefined set of
// extension map j (0..3), times the squared norm of the determiner normal:
// returns the pair (16, |coef|^2) so callers can check 16 >= 8 * |coef|^2.
std::pair<long, long> componentGapData(int j);

}  // namespace penrose
