// Convex polygons with exact golden-ring vertices, the point-in-polygon
// predicates used by the torus classifier, and an exact half-plane clipper
// over the field Q(phi) for intersecting translated tiles.

#pragma once

#include "penrose/golden.hpp"

#include <vector>

namespace penrose {

struct ConvexPolygon {
    // CCW vertex list (enforced by normalize()).
    std::vector<GoldenPoint> v;

    std::size_t size() const { return v.size(); }
    const GoldenPoint& operator[](std::size_t i) const { return v[i]; }

    // Reorders to counterclockwise and checks convexity (throws on failure).
    void normalize();

    GoldenPoint centroidTimes(long n) const;  // n * centroid to stay in the ring
    // Bounding box as doubles (for candidate-translate searches only; all
    // accept/reject decisions are exact).
    void bboxApprox(double& x0, double& y0, double& x1, double& y1) const;
};

// Strict interior / closed containment, exact.
bool containsOpen(const ConvexPolygon& poly, const GoldenPoint& p);
bool containsClosed(const ConvexPolygon& poly, const GoldenPoint& p);

// Does some integer translate p + (i, j), |i|, |j| <= range, lie in the
// polygon?  This is how torus membership is tested against a fixed lift.
bool latticeContainsOpen(const ConvexPolygon& poly, const GoldenPoint& p, int range = 3);
bool latticeContainsClosed(const ConvexPolygon& poly, const GoldenPoint& p, int range = 3);

// ---------------------------------------------------------------------------
// Exact clipping over Q(phi).
// ---------------------------------------------------------------------------

struct RatPolygon {
    std::vector<RatPoint> v;  // CCW

    std::size_t size() const { return v.size(); }
    bool empty() const { return v.size() < 3; }

    static RatPolygon from(const ConvexPolygon& p);
    // Back to ring coordinates; throws if a vertex needs a non-power-of-two
    // denominator.
    ConvexPolygon toGolden() const;
};

// Intersection of two convex polygons (Sutherland–Hodgman with exact
// line-segment intersections).  Degenerate results (area zero) come back
// empty.
RatPolygon intersect(const RatPolygon& a, const RatPolygon& b);

GoldenRat areaTimes2(const RatPolygon& p);

// Translate helpers.
ConvexPolygon translated(const ConvexPolygon& p, const GoldenPoint& t);
RatPolygon translated(const RatPolygon& p, const RatPoint& t);

// Exact squared distance from a point to a closed convex polygon (0 if
// inside).
GoldenRat distanceSq(const RatPolygon& poly, const RatPoint& p);

}  // namespace penrose
