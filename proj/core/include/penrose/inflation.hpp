// The inflation structure on the arithmetic graph: dynamical translations,
// strand itineraries, dynamical polygons (verified and independently
// recomputed), the special similarities gamma with multiplier -phi^-3, the
// shadowing and coherence verifications, and the gene census.

#pragma once

#include "penrose/graph.hpp"

#include <set>
#include <string>
#include <vector>

namespace penrose {

// The torus translation carried by a graph edge (x, y), as the exact lift
// (x phi^-4 + y phi^-1, x phi^-3) in half-integer coordinates.
GoldenPoint dynamicalTranslation(const EdgeVec& e);

using StrandArray = std::vector<StrandStep>;

// The two arrays (L from the y = +1 branch, R from y = -1) generated by the
// sequence generator from p.
struct Itinerary {
    StrandArray L, R;
};
Itinerary itinerary(const PolygonSet& partition, const TypeTable& table, LatticePoint p,
                    int length);

// Does the lift s follow the dynamical sequence A?  At each step the
// (translated) point must lie in some integer translate of the partition tile
// of that step's type -- strictly inside (open) or in the closure (closed).
bool matchOrbit(const PolygonSet& partition, const GoldenPoint& s, const StrandArray& A,
                bool open, int range = 3);

// The floor-reduced lift of Psi(p) (always defined, in [0,1)^2).
GoldenPoint psiLiftReduced(long x, long y);

// The lift of Psi(p) lying inside the open polygon P, found by a correction
// vector in {-7..7}^2.  Throws if no correction works.
GoldenPoint canonicalPsi(LatticePoint p, const ConvexPolygon& P);

// The three-step dynamical-polygon check for gene j: every vertex of the
// stored polygon follows both sequences closed, and every edge's interpolate
// point fails at least one sequence open.
struct DynPolyReport {
    bool verticesClosedOk = false;
    bool edgesOpenOk = false;
    bool ok() const { return verticesClosedOk && edgesOpenOk; }
};
DynPolyReport verifyDynPolygon(const PolygonSet& partition, const TypeTable& table,
                               const PolygonSet& dyn,
                               const std::vector<std::pair<long, long>>& centers, int j);

// Independent route: intersect the translated partition tiles along both
// sequences, seeded at the reduced lift of Psi(center).  Returns the exact
// convex intersection, translated by an integer vector to overlap the stored
// lift's position when `alignTo` is given.
ConvexPolygon computeDynPolygon(const PolygonSet& partition, const Itinerary& it,
                                const GoldenPoint& seed, const ConvexPolygon* alignTo = nullptr);

// gamma = gamma0 + [(m phi^-4 + n phi^-1, 0)], gamma0(x,y) = -phi^-3 (x,y).
// As a torus map the offset depends on m, n only through q = n - 3m, since
// m phi^-4 + n phi^-1 = (n - 3m) phi (mod Z).  gamma0 is lift-sensitive, so
// the map also records which integer sheet of the polygon lift it acts on
// (the shipped polygon lifts are not always the sheet the similarity needs).
struct InflationMap {
    int m = 0, n = 0;
    int sheet = 0;  // the lift is shifted by (0, sheet) before applying gamma0

    int q() const { return n - 3 * m; }
    GoldenPoint apply(const GoldenPoint& z) const;
};

// Reconstructs the two dynamical sequences of the shadow strand from its
// stored triple (center out to the two endpoints).
Itinerary shadowArrays(const PolygonSet& partition, const TypeTable& table,
                       const ShadowTriple& tri);

// Finds the similarity (|m|,|n| <= 7, |sheet| <= 7) mapping the canonical
// lift of Psi(center_j) onto a point following the shadow strand's
// sequences.  The effective torus map (q, sheet) must be unique; throws if
// none or several work.
InflationMap findGamma(const PolygonSet& partition, const TypeTable& table, const PolygonSet& dyn,
                       const std::vector<std::pair<long, long>>& centers,
                       const std::vector<ShadowTriple>& triples, int j);

// gamma(P_j) follows the shadow sequences (closed, every vertex), and the
// shadow strand's endpoints lie within 3 units of phi^3 times the gene-core
// endpoints.
struct ShadowReport {
    bool containmentOk = false;
    bool endpointOk = false;
    bool ok() const { return containmentOk && endpointOk; }
};
ShadowReport verifyShadowing(const PolygonSet& partition, const TypeTable& table,
                             const PolygonSet& dyn,
                             const std::vector<std::pair<long, long>>& centers,
                             const std::vector<ShadowTriple>& triples, int j);

// Canonical translation-equivalence key of the length-k arc whose edges are
// given in traversal order: the lexicographic minimum of the sequence and its
// reversal with negated entries.
std::string arcKey(const std::vector<EdgeVec>& edges);
// Same, refined by the partition-tile types of the arc's central vertices
// (one for even-length arcs, two for odd), listed in traversal order.  This
// is the key that separates all 75 gene classes (the edge sequence alone
// does not).
std::string arcKey(const std::vector<int>& centerTypes, const std::vector<EdgeVec>& edges);

// The gene index (0..74) whose central arc is translation equivalent to the
// 6-edge arc centered at the given trace position; -1 if none matches.
class GeneIndex {
public:
    GeneIndex(const PolygonSet& partition, const TypeTable& table,
              const std::vector<std::pair<long, long>>& centers);

    int lookup(const std::string& key) const;
    const std::string& keyOf(int j) const { return keys_[j]; }

private:
    std::vector<std::string> keys_;
};

// Coherence: for the first `count` points g_j along the forward trace, find
// g'_j within 3 units of phi^3 g_j whose centered gene matches the shadow
// center's gene and which satisfies Psi(g'_j) = gamma_k(Psi(g_j)) exactly
// (mod Z^2); check the g'_j occur in order along the trace.
struct CoherenceReport {
    long checked = 0;
    bool pairsOk = false;
    bool orderOk = false;
    std::vector<std::pair<LatticePoint, LatticePoint>> firstPairs;  // (g_j, g'_j)
    bool ok() const { return pairsOk && orderOk; }
};
CoherenceReport verifyCoherence(const PolygonSet& partition, const TypeTable& table,
                                const PolygonSet& dyn,
                                const std::vector<std::pair<long, long>>& centers,
                                const std::vector<ShadowTriple>& triples, int count = 1024);

// Census of translation classes of length-6 (gene) and length-7 (extended)
// subarcs of the traced portion of Gamma_0.
struct CensusResult {
    std::set<std::string> genes;
    std::set<std::string> extended;
};
CensusResult geneCensus(const PolygonSet& partition, const TypeTable& table, int depth, int dir);
CensusResult censusOfTrace(const PolygonSet& partition, const std::vector<LatticePoint>& trace);

}  // namespace penrose
