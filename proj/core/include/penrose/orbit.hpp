// Structure of the unbounded orbits: the binary coding of basepoints along
// the backward strand, the pair of Cantor contractions acting on the torus,
// the gap check keeping the return coordinate clear of the corner tile, the
// descent argument excluding even ring points from the Cantor set, and the
// rising profile measuring excursion heights between basepoints.

#pragma once

#include "penrose/graph.hpp"

#include <string>
#include <vector>

namespace penrose {

// Value of a binary code string by standard place value: "11001" -> 25.
long codeValue(const std::string& beta);
// Number of trailing zeros of the code: "11000" -> 3.
int codeNu(const std::string& beta);
// 2-adic valuation of n >= 1 (the trailing-zero count of its binary form).
int nuOf(long n);
// Binary form of n, zero-padded on the left to at least `len` digits.
std::string codeOf(long n, int len);

// v(p): vertical distance from p to the line through the origin parallel to
// the boundary of the half plane H.  v(0, m) = m.
GoldenReal heightV(long x, long y);

// A basepoint is a lattice point with T(X) in (0, 2 phi^-3); such points
// automatically have type 3.
bool isBasepoint(long x, long y);

// The two contractions generating the Cantor structure inside the corner
// parallelogram K (torus tile 3).  gamma0 is the similarity with multiplier
// -phi^-3 fixing the canonical lift of Psi(0, 0); gamma1 = (translation by
// -V0) o gamma0, so that K1 = gamma1(K) has (0, 0) as a vertex.
struct CantorCells {
    GoldenPoint fixedPoint;  // canonical lift of Psi(0,0), inside K
    GoldenPoint V0;          // exact translation between the two sub-cells
    ConvexPolygon K;         // the ambient parallelogram (canonical lift)

    // gamma_j(z), j in {0, 1}.
    GoldenPoint applyGamma(int j, const GoldenPoint& z) const;

    // The cell K_beta: appending a digit j to beta applies gamma_j to the
    // parent cell, K_{beta j} = gamma_j(K_beta).
    ConvexPolygon cell(const std::string& beta) const;
};

CantorCells cantorContractions(const PolygonSet& partition);

struct Basepoint {
    long n = 0;     // encounter index along the backward trace
    long step = 0;  // position in the trace
    LatticePoint X{0, 0};
};

// All basepoints on the given backward strand of Gamma_0, in encounter
// order.  The trace must start at the origin.
std::vector<Basepoint> enumerateBasepoints(const std::vector<LatticePoint>& backwardTrace);

// Does Psi(X_n) lie (closed, mod Z^2) in the cell K_beta for every code beta
// of value n with length at most maxLen?
bool basepointInCells(const CantorCells& cells, const Basepoint& bp, int maxLen);

// ---------------------------------------------------------------------------
// Gap check.
// ---------------------------------------------------------------------------

struct GapReport {
    int pointsChecked = 0;
    bool psiImagesClear = false;  // every sample further than 1/10^4 from K
    GoldenRat minDistSq;          // smallest exact squared torus distance seen
    long type3Checked = 0;
    bool heightGapOk = false;  // no traced type-3 vertex has v in [phi^-3, 7)
    bool diagonalOk = false;   // psi([0, 2 phi^-3]) spans K's long diagonal
    bool ok() const { return psiImagesClear && heightGapOk && diagonalOk; }
};

// Exact check that the psi-image of [2, 16], sampled at `samples` evenly
// spaced points (endpoints included), keeps squared torus distance greater
// than 10^-8 from the corner tile K; plus the height-gap corollary over the
// supplied trace and the long-diagonal identification.
GapReport gapCheck(const PolygonSet& partition, const std::vector<LatticePoint>& trace,
                   int samples = 2000);

// ---------------------------------------------------------------------------
// Descent.
// ---------------------------------------------------------------------------

struct DescentReport {
    long pairsTested = 0;
    long windowHits = 0;      // candidates starting inside (0, 2 phi^-3)
    long survivors = 0;       // candidates the descent failed to exclude
    long maxIterations = 0;   // deepest descent chain seen
    bool ok() const { return survivors == 0; }
};

// Exact descent for x = a + b phi: repeatedly expand the half of the Cantor
// window containing x (x -> phi^3 x on the left copy, x -> 2 - phi^3 x on
// the right) until x leaves [0, 2 phi^-3] or lands in the middle gap.
// Returns true when x is excluded from C*; iterations reports the chain
// length.  x = 0 and the window endpoints are gap points, excluded by
// definition.
bool descentExcludes(const GoldenReal& x, int* iterations = nullptr);

// Runs descentExcludes over every x = a + b phi with even |a|, |b| <= bound.
DescentReport descentCheck(long bound);

// ---------------------------------------------------------------------------
// Rising profile.
// ---------------------------------------------------------------------------

struct Excursion {
    long n = 0;          // index of the arriving basepoint
    int nu = 0;          // 2-adic valuation of n
    long steps = 0;      // trace steps from basepoint n-1 to basepoint n
    GoldenReal height;   // max of v over the connecting segment
    long prefixMatch = 0;  // strand edges from X_n matching the forward strand
};

// Per-basepoint excursion data over the backward trace.  The forward trace
// (from the origin) is used to measure how long an initial portion of the
// strand leaving each basepoint repeats the strand leaving the origin.
std::vector<Excursion> risingProfile(const std::vector<LatticePoint>& backwardTrace,
                                     const std::vector<LatticePoint>& forwardTrace);

}  // namespace penrose
