// The arithmetic graph: the fundamental map T from lattice points to return
// line coordinates, the torus map Psi, classification of lattice points into
// the 26 local types, reconstruction of the type -> edge table from the
// return-map dynamics, strand tracing, and the embedding checks.

#pragma once

#include "penrose/data.hpp"
#include "penrose/kite.hpp"
#include "penrose/polygon.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace penrose {

using LatticePoint = std::pair<long, long>;
using EdgeVec = std::pair<int, int>;  // entries in {-1, 0, 1}

// T(x, y) = 2 A x + 2 y + (1 - A)/2 with A = phi^-3.  T(0,0) = phi^-2.
GoldenReal fundamentalT(long x, long y);
GoldenReal fundamentalT(const GoldenReal& x, const GoldenReal& y);

// Whether the lattice point lies in the open half-plane H = {T > 0}.
bool inHalfPlaneH(long x, long y);

// Vertical distance from p to the boundary line of H; equals T(p)/2.
GoldenReal heightAboveH(long x, long y);

// Psi(x, y) = [(T/(2 phi), T/2)] reduced into [-1/2, 1/2)^2.
GoldenPoint psiPoint(long x, long y);
// The un-reduced lift (T/(2 phi), T/2).
GoldenPoint psiLift(long x, long y);

// Which open partition tile contains Psi(x, y)?  Returns 1..26; throws if the
// point lands on a tile boundary or in several tiles (cannot happen for
// lattice input).
int classify(const PolygonSet& partition, long x, long y);

// Partner of p under the return map started on the epsilon line (+1 or -1):
// the lattice point p' with T(p') the first coordinate of the return image.
// Also reports the sign of the landing line.
struct Partner {
    LatticePoint point;
    int landingSign;
};
// Computed with the strip-map factorization (fast, exact).
Partner partnerByDynamics(long x, long y, int epsilon);
// Same map computed by running the raw return orbit of the billiard.  Slow;
// used as the independent oracle in the classification check.
Partner partnerByReturnOrbit(long x, long y, int epsilon);

// The edge table reconstructed from the dynamics: for each type 1..26, the
// unordered set of displacement vectors produced by the two return branches.
// Which branch (start line y = +1 or y = -1) yields which edge varies from
// point to point within a type, so only the edge set is type-invariant.
struct TypeTable {
    struct Entry {
        // Distinct nonzero edge vectors, sorted lexicographically.
        std::vector<EdgeVec> edges;
        LatticePoint sample{0, 0};  // a witness lattice point of this type in H
        bool haveSample = false;
    };
    std::array<Entry, 27> entry;  // 1-based

    const Entry& operator[](int t) const { return entry[t]; }
};

// Builds the table by sampling lattice points in H inside |x|,|y| <= window
// and cross-checking that every sample of a type reports identical branches.
// Throws if a type never appears or samples disagree.
TypeTable buildTypeTable(const PolygonSet& partition, int window = 30);

// Strand following.  From `start`, take the edge produced by the direct
// dynamics on the line y = +1 (branch 0) or y = -1 (branch 1), then continue
// without backtracking.  Returns the type of each point left behind and the
// displacement taken from it.
struct StrandStep {
    int type;        // type of the point the step leaves
    EdgeVec edge;    // the displacement taken
};
std::vector<StrandStep> strandOrbit(const PolygonSet& partition, const TypeTable& table,
                                    LatticePoint start, int branch, int steps);

// Trace of Gamma_0 from the origin.  dir = +1 follows the branch whose first
// edge is (1,1) (into the positive quadrant), dir = -1 the other branch.
// Returns origin followed by `steps` vertices.
std::vector<LatticePoint> traceGamma0(const PolygonSet& partition, const TypeTable& table,
                                      int steps, int dir);

// Embedding checks over the window |x|,|y| <= window:
//  - the forbidden adjacent-type pairs never occur;
//  - no two distinct graph edges cross (exact segment test, bucketed).
struct EmbeddingReport {
    long verticesChecked = 0;
    long edges = 0;
    bool forbiddenPairFree = true;
    bool crossingFree = true;
    bool ok() const { return forbiddenPairFree && crossingFree; }
};
EmbeddingReport checkEmbedding(const PolygonSet& partition, const TypeTable& table, int window);

}  // namespace penrose
