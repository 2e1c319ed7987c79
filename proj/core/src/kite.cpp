#include "penrose/kite.hpp"

namespace penrose {

GoldenReal kiteA() { return GoldenReal(-3, 2); }

const std::array<GoldenPoint, 4>& kiteVertices() {
    static const std::array<GoldenPoint, 4> verts = {
        GoldenPoint(GoldenReal(0), GoldenReal(1)),
        GoldenPoint(GoldenReal(-1), GoldenReal(0)),
        GoldenPoint(GoldenReal(0), GoldenReal(-1)),
        GoldenPoint(kiteA(), GoldenReal(0)),
    };
    return verts;
}

RatPoint outerStep(const RatPoint& p) {
    const auto& verts = kiteVertices();
    for (int i = 0; i < 4; ++i) {
        RatPoint v(verts[i].x, verts[i].y);
        GoldenRat dx = v.x - p.x;
        GoldenRat dy = v.y - p.y;
        bool allRight = true;
        bool touched = false;
        for (int j = 0; j < 4 && allRight; ++j) {
            if (j == i) continue;
            RatPoint w(verts[j].x, verts[j].y);
            // cross(v - p, w - p); the kite must be strictly to the right.
            int s = (dx * (w.y - p.y) - dy * (w.x - p.x)).sign();
            if (s > 0) allRight = false;
            if (s == 0) touched = true;
        }
        if (allRight) {
            if (touched) {
                throw UndefinedPoint("outerStep: tangent line through an edge of the kite");
            }
            // Reflect through v.
            return RatPoint(v.x + v.x - p.x, v.y + v.y - p.y);
        }
    }
    throw UndefinedPoint("outerStep: no tangent vertex (point not strictly outside the kite)");
}

RatPoint upsilon(const RatPoint& p) { return outerStep(outerStep(p)); }

namespace {

bool onC(const RatPoint& p) {
    return (p.y == GoldenRat(1) || p.y == GoldenRat(-1)) && p.x.sign() > 0;
}

}  // namespace

RatPoint returnMap(const RatPoint& p, long maxIter) {
    if (!onC(p)) throw UndefinedPoint("returnMap: point not on C");
    RatPoint q = p;
    for (long i = 0; i < maxIter; ++i) {
        q = upsilon(q);
        if (onC(q)) return q;
    }
    throw UndefinedPoint("returnMap: iteration cap reached");
}

GoldenRat StripMap::f(const RatPoint& p) const {
    return GoldenRat(a1) * p.x + GoldenRat(a2) * p.y + GoldenRat(a3);
}

RatPoint StripMap::apply(const RatPoint& p) const {
    GoldenRat fp = f(p);
    BigInt n = fp.floor();
    if (fp == GoldenRat(n, 0, 1)) {
        throw UndefinedPoint("StripMap: point on a strip boundary");
    }
    GoldenRat gn(n, 0, 1);
    return RatPoint(p.x - gn * GoldenRat(V.x), p.y - gn * GoldenRat(V.y));
}

const std::array<StripMap, 4>& pinwheelStrips() {
    // alpha_j = (a1, a2, a3), V_j; see the factored return map.
    static const std::array<StripMap, 4> strips = {
        StripMap{GoldenReal(-1, 0, 2), GoldenReal(1, 0, 2), GoldenReal(3, 0, 2),
                 GoldenPoint(GoldenReal(0), GoldenReal(4))},
        StripMap{GoldenReal(0, -1, 2), GoldenReal(2, -1, 2), GoldenReal(2, -1, 2),
                 GoldenPoint(GoldenReal(-2), GoldenReal(2))},
        // The third strip's y-coefficient is phi/4 - 1/2: its boundary lines
        // run parallel to the kite edge from (A,0) to (0,1) (slope -phi^3);
        // any other sign choice puts the strip where the orbit never goes.
        StripMap{GoldenReal(0, -1, 2), GoldenReal(-2, 1, 2), GoldenReal(2, -1, 2),
                 GoldenPoint(GoldenReal(4, -4), GoldenReal(0))},
        StripMap{GoldenReal(-1, 0, 2), GoldenReal(-1, 0, 2), GoldenReal(3, 0, 2),
                 GoldenPoint(GoldenReal(-2), GoldenReal(-2))},
    };
    return strips;
}

RatPoint zeta(const RatPoint& p) {
    // y = 1 + 4k -> 1;  y = -1 + 4k -> -1.
    GoldenRat t = (p.y - GoldenRat(1)) * GoldenRat(BigInt(1), BigInt(0), BigInt(4));
    if (t == GoldenRat(t.floor(), 0, 1)) return RatPoint(p.x, GoldenRat(1));
    t = (p.y + GoldenRat(1)) * GoldenRat(BigInt(1), BigInt(0), BigInt(4));
    if (t == GoldenRat(t.floor(), 0, 1)) return RatPoint(p.x, GoldenRat(-1));
    throw UndefinedPoint("zeta: y is not congruent to +-1 mod 4");
}

RatPoint pinwheel(const RatPoint& p) {
    RatPoint q = p;
    const auto& strips = pinwheelStrips();
    for (int round = 0; round < 2; ++round) {
        for (const auto& e : strips) q = e.apply(q);
    }
    return zeta(q);
}

}  // namespace penrose
