#include "penrose/inflation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace penrose {

namespace {

const GoldenReal kPhiCubed(1, 2);  // phi^3 = 1 + 2 phi

GoldenPoint goldenOf(LatticePoint p) { return {GoldenReal(p.first), GoldenReal(p.second)}; }

}  // namespace

GoldenPoint dynamicalTranslation(const EdgeVec& e) {
    long x = e.first, y = e.second;
    // (x phi^-4 + y phi^-1, x phi^-3) written over the common denominator 2.
    return {GoldenReal(BigInt(10 * x - 2 * y), BigInt(-6 * x + 2 * y), 1),
            GoldenReal(BigInt(-6 * x), BigInt(4 * x), 1)};
}

Itinerary itinerary(const PolygonSet& partition, const TypeTable& table, LatticePoint p,
                    int length) {
    return Itinerary{strandOrbit(partition, table, p, 0, length),
                     strandOrbit(partition, table, p, 1, length)};
}

bool matchOrbit(const PolygonSet& partition, const GoldenPoint& s, const StrandArray& A,
                bool open, int range) {
    GoldenPoint cur = s;
    for (const auto& step : A) {
        const ConvexPolygon& tile = partition.poly[step.type];
        // Reduce mod Z^2 so the translate search window stays sufficient no
        // matter how far the accumulated translation has drifted.
        GoldenPoint red{cur.x - GoldenReal(cur.x.floor(), 0), cur.y - GoldenReal(cur.y.floor(), 0)};
        bool in = open ? latticeContainsOpen(tile, red, range)
                       : latticeContainsClosed(tile, red, range);
        if (!in) return false;
        cur = cur + dynamicalTranslation(step.edge);
    }
    return true;
}

GoldenPoint psiLiftReduced(long x, long y) {
    GoldenPoint lift = psiLift(x, y);
    return {lift.x - GoldenReal(BigInt(lift.x.floor()), 0),
            lift.y - GoldenReal(BigInt(lift.y.floor()), 0)};
}

GoldenPoint canonicalPsi(LatticePoint p, const ConvexPolygon& P) {
    GoldenPoint z = psiLiftReduced(p.first, p.second);
    for (long i = -7; i <= 7; ++i) {
        for (long j = -7; j <= 7; ++j) {
            GoldenPoint cand{z.x + GoldenReal(i), z.y + GoldenReal(j)};
            if (containsOpen(P, cand)) return cand;
        }
    }
    throw std::runtime_error("canonicalPsi: no correction vector in {-7..7}^2 works");
}

DynPolyReport verifyDynPolygon(const PolygonSet& partition, const TypeTable& table,
                               const PolygonSet& dyn,
                               const std::vector<std::pair<long, long>>& centers, int j) {
    DynPolyReport rep;
    Itinerary it = itinerary(partition, table, centers[j], 3);
    const auto& verts = dyn.raw[j];

    rep.verticesClosedOk = true;
    for (const auto& v : verts) {
        if (!matchOrbit(partition, v, it.L, false) || !matchOrbit(partition, v, it.R, false)) {
            rep.verticesClosedOk = false;
        }
    }
    rep.edgesOpenOk = true;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        GoldenPoint mid = interpolate(verts[i], verts[(i + 1) % verts.size()]);
        bool insideBoth =
            matchOrbit(partition, mid, it.L, true) && matchOrbit(partition, mid, it.R, true);
        if (insideBoth) rep.edgesOpenOk = false;
    }
    return rep;
}

ConvexPolygon computeDynPolygon(const PolygonSet& partition, const Itinerary& it,
                                const GoldenPoint& seed, const ConvexPolygon* alignTo) {
    // Each step of each sequence constrains the seed's cell: after the
    // accumulated translation w, the point must lie in some integer translate
    // of the step's tile.  The translate is pinned down by the seed itself.
    std::optional<RatPolygon> cell;
    for (const StrandArray* arr : {&it.L, &it.R}) {
        GoldenPoint w{GoldenReal(0), GoldenReal(0)};
        for (const auto& step : *arr) {
            const ConvexPolygon& tile = partition.poly[step.type];
            GoldenPoint moved = seed + w;
            bool pinned = false;
            for (long i = -4; i <= 4 && !pinned; ++i) {
                for (long j = -4; j <= 4 && !pinned; ++j) {
                    GoldenPoint cand{moved.x + GoldenReal(i), moved.y + GoldenReal(j)};
                    if (!containsOpen(tile, cand)) continue;
                    pinned = true;
                    // Constraint in seed coordinates: tile - (i,j) - w.
                    ConvexPolygon movedTile =
                        translated(tile, GoldenPoint{GoldenReal(-i) - w.x, GoldenReal(-j) - w.y});
                    RatPolygon rp = RatPolygon::from(movedTile);
                    cell = cell ? intersect(*cell, rp) : rp;
                }
            }
            if (!pinned) {
                throw std::runtime_error("computeDynPolygon: seed escapes a sequence tile");
            }
            if (cell && cell->empty()) {
                throw std::runtime_error("computeDynPolygon: empty intersection");
            }
            w = w + dynamicalTranslation(step.edge);
        }
    }
    ConvexPolygon out = cell->toGolden();
    if (alignTo != nullptr) {
        // Translate by the integer vector matching the stored lift.
        long n = static_cast<long>(out.v.size());
        GoldenPoint cOut = out.centroidTimes(n);
        GoldenPoint cRef = alignTo->centroidTimes(n);
        GoldenPoint diff{cRef.x - cOut.x, cRef.y - cOut.y};
        // diff = n * (integer vector); verify and divide.
        GoldenRat rx = GoldenRat(diff.x) / GoldenRat(n);
        GoldenRat ry = GoldenRat(diff.y) / GoldenRat(n);
        if (rx != GoldenRat(rx.floor(), 0, 1) || ry != GoldenRat(ry.floor(), 0, 1)) {
            throw std::runtime_error("computeDynPolygon: stored lift differs by a non-integer");
        }
        out = translated(out, GoldenPoint{GoldenReal(rx.floor(), 0),
                                          GoldenReal(ry.floor(), 0)});
    }
    return out;
}

GoldenPoint InflationMap::apply(const GoldenPoint& z) const {
    const GoldenReal phiInv3(-3, 2);  // phi^-3
    GoldenReal off = GoldenReal(5 * m, -3 * m) + GoldenReal(-n, n);  // m phi^-4 + n phi^-1
    return {-(phiInv3 * z.x) + off, -(phiInv3 * (z.y + GoldenReal(sheet)))};
}

namespace {

// getOrbit variant: walk from `start` on the given branch until the current
// point is one of the stops; the stop's own column is not recorded.
StrandArray walkUntil(const PolygonSet& partition, const TypeTable& table, LatticePoint start,
                      int branch, const std::vector<LatticePoint>& stops, int cap) {
    StrandArray out;
    LatticePoint cur = start;
    std::optional<EdgeVec> lastEdge;
    for (int i = 0; i < cap; ++i) {
        if (std::find(stops.begin(), stops.end(), cur) != stops.end()) return out;
        int t = classify(partition, cur.first, cur.second);
        EdgeVec e;
        if (i == 0) {
            Partner p = partnerByDynamics(cur.first, cur.second, branch == 0 ? 1 : -1);
            long dx = p.point.first - cur.first;
            long dy = p.point.second - cur.second;
            if (dx == 0 && dy == 0) throw std::runtime_error("walkUntil: trivial branch");
            e = EdgeVec{static_cast<int>(dx), static_cast<int>(dy)};
        } else {
            EdgeVec back{-lastEdge->first, -lastEdge->second};
            const auto& edges = table[t].edges;
            if (edges.size() != 2) throw std::runtime_error("walkUntil: dead end");
            if (edges[0] == back) {
                e = edges[1];
            } else if (edges[1] == back) {
                e = edges[0];
            } else {
                throw std::runtime_error("walkUntil: strand does not connect");
            }
        }
        out.push_back(StrandStep{t, e});
        cur = {cur.first + e.first, cur.second + e.second};
        lastEdge = e;
    }
    throw std::runtime_error("walkUntil: no endpoint within cap");
}

}  // namespace

Itinerary shadowArrays(const PolygonSet& partition, const TypeTable& table,
                       const ShadowTriple& tri) {
    std::vector<LatticePoint> stops{tri.end1, tri.end2};
    return Itinerary{walkUntil(partition, table, tri.center, 0, stops, 64),
                     walkUntil(partition, table, tri.center, 1, stops, 64)};
}

InflationMap findGamma(const PolygonSet& partition, const TypeTable& table, const PolygonSet& dyn,
                       const std::vector<std::pair<long, long>>& centers,
                       const std::vector<ShadowTriple>& triples, int j) {
    GoldenPoint y = canonicalPsi(centers[j], dyn.poly[j]);
    Itinerary shadow = shadowArrays(partition, table, triples[j]);
    std::optional<InflationMap> found;
    for (int q = -28; q <= 28; ++q) {
        // A representative (m, n) with n - 3m = q and |m|, |n| <= 7.
        int m = std::clamp((-q + (q < 0 ? -1 : 1)) / 3, -7, 7);
        int n = q + 3 * m;
        if (n < -7 || n > 7) throw std::logic_error("findGamma: bad representative");
        for (int sheet = -7; sheet <= 7; ++sheet) {
            InflationMap g{m, n, sheet};
            GoldenPoint z = g.apply(y);
            // The similarity must carry the gene center's torus point to the
            // shadow center's torus point exactly...
            GoldenPoint sc = psiLift(triples[j].center.first, triples[j].center.second);
            if (!(z.x - sc.x).isInteger() || !(z.y - sc.y).isInteger()) continue;
            // ...and land inside the shadow polygon (open sequences).
            if (matchOrbit(partition, z, shadow.L, true) &&
                matchOrbit(partition, z, shadow.R, true)) {
                if (found) {
                    throw std::runtime_error("findGamma: similarity not unique for gene " +
                                             std::to_string(j));
                }
                found = g;
            }
        }
    }
    if (!found) {
        throw std::runtime_error("findGamma: no similarity works for gene " + std::to_string(j));
    }
    return *found;
}

ShadowReport verifyShadowing(const PolygonSet& partition, const TypeTable& table,
                             const PolygonSet& dyn,
                             const std::vector<std::pair<long, long>>& centers,
                             const std::vector<ShadowTriple>& triples, int j) {
    ShadowReport rep;
    InflationMap gamma = findGamma(partition, table, dyn, centers, triples, j);
    Itinerary shadow = shadowArrays(partition, table, triples[j]);

    rep.containmentOk = true;
    for (const auto& v : dyn.raw[j]) {
        GoldenPoint z = gamma.apply(v);
        if (!matchOrbit(partition, z, shadow.L, false) ||
            !matchOrbit(partition, z, shadow.R, false)) {
            rep.containmentOk = false;
        }
    }

    // The shadow strand's endpoints lie within 3 units of phi^3 times the
    // gene-core endpoints (the center's two neighbours along the gene).
    Itinerary gene = itinerary(partition, table, centers[j], 1);
    auto neighbour = [&](const StrandArray& arm) {
        return LatticePoint{centers[j].first + arm[0].edge.first,
                            centers[j].second + arm[0].edge.second};
    };
    LatticePoint c1 = neighbour(gene.L), c2 = neighbour(gene.R);
    auto distSqLt9 = [&](LatticePoint e, LatticePoint c) {
        GoldenReal dx = GoldenReal(e.first) - kPhiCubed * GoldenReal(c.first);
        GoldenReal dy = GoldenReal(e.second) - kPhiCubed * GoldenReal(c.second);
        return (dx * dx + dy * dy) < GoldenReal(9);
    };
    bool pairingA = distSqLt9(triples[j].end1, c1) && distSqLt9(triples[j].end2, c2);
    bool pairingB = distSqLt9(triples[j].end1, c2) && distSqLt9(triples[j].end2, c1);
    rep.endpointOk = pairingA || pairingB;
    return rep;
}

namespace {

std::string serializeArc(const std::vector<int>& types, const std::vector<EdgeVec>& edges) {
    std::ostringstream os;
    for (int t : types) os << t << '.';
    os << '|';
    for (const auto& e : edges) os << e.first << ',' << e.second << ';';
    return os.str();
}

}  // namespace

std::string arcKey(const std::vector<EdgeVec>& edges) {
    return arcKey(std::vector<int>{}, edges);
}

std::string arcKey(const std::vector<int>& centerTypes, const std::vector<EdgeVec>& edges) {
    std::vector<int> rt(centerTypes.rbegin(), centerTypes.rend());
    std::vector<EdgeVec> re(edges.rbegin(), edges.rend());
    for (auto& e : re) e = EdgeVec{-e.first, -e.second};
    return std::min(serializeArc(centerTypes, edges), serializeArc(rt, re));
}

namespace {

// The 6-edge arc centered at p, as edges in one traversal order.
std::vector<EdgeVec> centeredArcEdges(const PolygonSet& partition, const TypeTable& table,
                                      LatticePoint p, int halfLength) {
    auto left = strandOrbit(partition, table, p, 1, halfLength);
    auto right = strandOrbit(partition, table, p, 0, halfLength);
    std::vector<EdgeVec> edges;
    for (auto it = left.rbegin(); it != left.rend(); ++it) {
        edges.push_back(EdgeVec{-it->edge.first, -it->edge.second});
    }
    for (const auto& s : right) edges.push_back(s.edge);
    return edges;
}

// Canonical key of the gene centered at p.
std::string centeredGeneKey(const PolygonSet& partition, const TypeTable& table, LatticePoint p) {
    return arcKey({classify(partition, p.first, p.second)}, centeredArcEdges(partition, table, p, 3));
}

}  // namespace

GeneIndex::GeneIndex(const PolygonSet& partition, const TypeTable& table,
                     const std::vector<std::pair<long, long>>& centers) {
    keys_.reserve(centers.size());
    for (const auto& c : centers) {
        keys_.push_back(centeredGeneKey(partition, table, c));
    }
}

int GeneIndex::lookup(const std::string& key) const {
    for (std::size_t i = 0; i < keys_.size(); ++i) {
        if (keys_[i] == key) return static_cast<int>(i);
    }
    return -1;
}

CoherenceReport verifyCoherence(const PolygonSet& partition, const TypeTable& table,
                                const PolygonSet& dyn,
                                const std::vector<std::pair<long, long>>& centers,
                                const std::vector<ShadowTriple>& triples, int count) {
    CoherenceReport rep;
    GeneIndex genes(partition, table, centers);

    // Forward trace long enough to carry both the g_j and (for the order
    // check) their images g'_j, plus a short backward tail for the arcs
    // centered near the origin.
    int forwardLen = count * 8 + 64;
    auto fwd = traceGamma0(partition, table, forwardLen, +1);
    std::map<LatticePoint, long> traceIndex;
    for (std::size_t i = 0; i < fwd.size(); ++i) traceIndex[fwd[i]] = static_cast<long>(i);

    // Cached per-gene data.
    std::vector<std::optional<InflationMap>> gammaOf(centers.size());
    std::vector<std::optional<std::string>> shadowKeyOf(centers.size());

    bool allPairs = true;
    std::vector<long> shadowOrder;
    for (int j = 1; j <= count; ++j) {
        LatticePoint g = fwd[j];
        int k = genes.lookup(centeredGeneKey(partition, table, g));
        if (k < 0) {
            allPairs = false;
            continue;
        }
        if (!gammaOf[k]) {
            gammaOf[k] = findGamma(partition, table, dyn, centers, triples, k);
        }
        if (!shadowKeyOf[k]) {
            shadowKeyOf[k] = centeredGeneKey(partition, table, triples[k].center);
        }
        GoldenPoint y = canonicalPsi(g, dyn.poly[k]);
        GoldenPoint z = gammaOf[k]->apply(y);

        // Candidates within 3 units of phi^3 g.
        double cx = 4.2360679774997896 * double(g.first);
        double cy = 4.2360679774997896 * double(g.second);
        std::vector<LatticePoint> hits;
        long x0 = static_cast<long>(std::floor(cx)) - 3, x1 = static_cast<long>(std::ceil(cx)) + 3;
        long y0 = static_cast<long>(std::floor(cy)) - 3, y1 = static_cast<long>(std::ceil(cy)) + 3;
        for (long x = x0; x <= x1; ++x) {
            for (long y2 = y0; y2 <= y1; ++y2) {
                GoldenReal dx = GoldenReal(x) - kPhiCubed * GoldenReal(g.first);
                GoldenReal dy = GoldenReal(y2) - kPhiCubed * GoldenReal(g.second);
                if (!((dx * dx + dy * dy) < GoldenReal(9))) continue;
                // Exact conjugacy Psi(candidate) = gamma(Psi(g)) mod Z^2.
                GoldenPoint lift = psiLift(x, y2);
                if (!(z.x - lift.x).isInteger() || !(z.y - lift.y).isInteger()) continue;
                // Same gene as the shadow strand's center.
                try {
                    if (centeredGeneKey(partition, table, {x, y2}) != *shadowKeyOf[k]) {
                        continue;
                    }
                } catch (const std::exception&) {
                    continue;
                }
                hits.push_back({x, y2});
            }
        }
        if (hits.size() != 1) {
            allPairs = false;
            continue;
        }
        LatticePoint gp = hits.front();
        if (rep.firstPairs.size() < 4) rep.firstPairs.emplace_back(g, gp);
        auto it = traceIndex.find(gp);
        if (it == traceIndex.end()) {
            allPairs = false;
            continue;
        }
        shadowOrder.push_back(it->second);
        ++rep.checked;
    }
    rep.pairsOk = allPairs && rep.checked == count;
    rep.orderOk = std::is_sorted(shadowOrder.begin(), shadowOrder.end()) &&
                  std::adjacent_find(shadowOrder.begin(), shadowOrder.end()) == shadowOrder.end();
    return rep;
}

CensusResult censusOfTrace(const PolygonSet& partition, const std::vector<LatticePoint>& trace) {
    CensusResult out;
    std::vector<EdgeVec> edges;
    std::vector<int> types;
    edges.reserve(trace.size());
    types.reserve(trace.size());
    for (const auto& p : trace) types.push_back(classify(partition, p.first, p.second));
    for (std::size_t i = 0; i + 1 < trace.size(); ++i) {
        edges.push_back(EdgeVec{static_cast<int>(trace[i + 1].first - trace[i].first),
                                static_cast<int>(trace[i + 1].second - trace[i].second)});
    }
    for (std::size_t i = 0; i + 6 <= edges.size(); ++i) {
        out.genes.insert(arcKey({types[i + 3]}, {edges.begin() + i, edges.begin() + i + 6}));
    }
    for (std::size_t i = 0; i + 7 <= edges.size(); ++i) {
        out.extended.insert(
            arcKey({types[i + 3], types[i + 4]}, {edges.begin() + i, edges.begin() + i + 7}));
    }
    return out;
}

CensusResult geneCensus(const PolygonSet& partition, const TypeTable& table, int depth, int dir) {
    auto trace = traceGamma0(partition, table, 1 << depth, dir);
    return censusOfTrace(partition, trace);
}

}  // namespace penrose
