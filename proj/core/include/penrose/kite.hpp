// Outer billiards on the Penrose kite: the squared map, the first-return map
// on the distinguished horizontal lines y = +-1, the four strip maps, and the
// pinwheel factorization of the return map.
//
// All dynamics run over Q(phi) (RatPoint) so that rational sample points and
// golden-ring lattice data share one code path; every branch decision is an
// exact sign test.

#pragma once

#include "penrose/golden.hpp"

#include <array>
#include <stdexcept>

namespace penrose {

// A point where the dynamics is undefined (tangency through an edge, strip
// boundary, iteration cap).  Callers that sweep sample sets treat this as a
// hard failure unless stated otherwise.
struct UndefinedPoint : std::runtime_error {
    explicit UndefinedPoint(const std::string& what) : std::runtime_error(what) {}
};

// The kite S: vertices (0,1), (-1,0), (0,-1), (A,0) with A = phi^-3.
const std::array<GoldenPoint, 4>& kiteVertices();
GoldenReal kiteA();  // phi^-3 = -3 + 2 phi

// One step of the outer billiards map: reflect p through the unique vertex v
// of S such that S lies to the right of the ray p -> v.  Throws
// UndefinedPoint when the tangent line meets S in an edge (or p is not
// strictly outside).
RatPoint outerStep(const RatPoint& p);

// Upsilon: the square of the outer billiards map (preserves the half-planes
// above/below the kite's axis).
RatPoint upsilon(const RatPoint& p);

// First return of Upsilon to C = {(x, y) : y = +-1, x > 0}.  p itself must be
// on C.  maxIter caps the orbit length.
RatPoint returnMap(const RatPoint& p, long maxIter = 1000000);

// A strip map E(p) = p - floor(f(p)) V with f(x,y) = a1 x + a2 y + a3.
struct StripMap {
    GoldenReal a1, a2, a3;
    GoldenPoint V;

    GoldenRat f(const RatPoint& p) const;
    RatPoint apply(const RatPoint& p) const;  // throws UndefinedPoint if f in Z
};

// The four pinwheel strips (index 0..3 for E1..E4).
const std::array<StripMap, 4>& pinwheelStrips();

// zeta: (x, +-1 + 4k) -> (x, +-1); throws if y is not odd.
RatPoint zeta(const RatPoint& p);

// pinwheel = zeta o (E4 E3 E2 E1)^2.  Agrees with returnMap on C.
RatPoint pinwheel(const RatPoint& p);

}  // namespace penrose
