#include "penrose/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace penrose {

GoldenReal fundamentalT(const GoldenReal& x, const GoldenReal& y) {
    // 2 A x + 2 y + (1 - A)/2, A = -3 + 2 phi; (1 - A)/2 = 2 - phi.
    return GoldenReal(-6, 4) * x + GoldenReal(2) * y + GoldenReal(2, -1);
}

GoldenReal fundamentalT(long x, long y) {
    return fundamentalT(GoldenReal(x), GoldenReal(y));
}

bool inHalfPlaneH(long x, long y) { return fundamentalT(x, y).sign() > 0; }

GoldenReal heightAboveH(long x, long y) { return fundamentalT(x, y).half(); }

GoldenPoint psiLift(long x, long y) {
    GoldenReal t = fundamentalT(x, y);
    return GoldenPoint(t.divPhi().half(), t.half());
}

GoldenPoint psiPoint(long x, long y) {
    GoldenPoint lift = psiLift(x, y);
    return GoldenPoint(lift.x.dec(), lift.y.dec());
}

int classify(const PolygonSet& partition, long x, long y) {
    // Reduce the lift by floor (total, unlike dec: lattice points do land on
    // the centered square's boundary, e.g. (1,2)), then let the tile search
    // scan integer translates.
    GoldenPoint lift = psiLift(x, y);
    GoldenPoint z(lift.x - GoldenReal(BigInt(lift.x.floor()), 0),
                  lift.y - GoldenReal(BigInt(lift.y.floor()), 0));
    int found = 0;
    for (int t = 1; t <= 26; ++t) {
        if (latticeContainsOpen(partition.poly[t], z)) {
            if (found != 0) {
                throw std::runtime_error("classify: point in two tiles (types " +
                                         std::to_string(found) + ", " + std::to_string(t) + ")");
            }
            found = t;
        }
    }
    if (found == 0) {
        throw std::runtime_error("classify: (" + std::to_string(x) + "," + std::to_string(y) +
                                 ") lies in no open tile");
    }
    return found;
}

namespace {

// Decode the landing point of the return dynamics back to the lattice.
Partner decodePartner(const RatPoint& q) {
    // Solve T(x', y') = q.x over the lattice.  Writing T's value as
    // (u + v phi)/2 we must have u = 4 - 12 x' + 4 y', v = 8 x' - 2.
    auto g = q.x.toGoldenReal();
    if (!g || g->k() > 1) throw std::runtime_error("partnerByDynamics: image not in (1/2)Z[phi]");
    BigInt u = g->a() << (1 - g->k());
    BigInt v = g->b() << (1 - g->k());
    BigInt vx = v + 2;
    if (vx % 8 != 0) throw std::runtime_error("partnerByDynamics: image x not on lattice");
    BigInt px = vx / 8;
    BigInt ux = u - 4 + 12 * px;
    if (ux % 4 != 0) throw std::runtime_error("partnerByDynamics: image y not on lattice");
    BigInt py = ux / 4;
    Partner out;
    out.point = {px.convert_to<long>(), py.convert_to<long>()};
    out.landingSign = (q.y == GoldenRat(1)) ? 1 : -1;
    return out;
}

}  // namespace

Partner partnerByDynamics(long x, long y, int epsilon) {
    if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("partnerByDynamics: epsilon");
    GoldenReal t = fundamentalT(x, y);
    if (t.sign() <= 0) throw UndefinedPoint("partnerByDynamics: point not in H");
    return decodePartner(pinwheel(RatPoint(GoldenRat(t), GoldenRat(epsilon))));
}

Partner partnerByReturnOrbit(long x, long y, int epsilon) {
    if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("partnerByReturnOrbit: epsilon");
    GoldenReal t = fundamentalT(x, y);
    if (t.sign() <= 0) throw UndefinedPoint("partnerByReturnOrbit: point not in H");
    return decodePartner(returnMap(RatPoint(GoldenRat(t), GoldenRat(epsilon))));
}

TypeTable buildTypeTable(const PolygonSet& partition, int window) {
    TypeTable table;
    const int samplesWanted = 3;
    std::array<int, 27> samplesSeen{};
    auto done = [&] {
        for (int t = 1; t <= 26; ++t) {
            if (samplesSeen[t] < samplesWanted) return false;
        }
        return true;
    };
    for (int r = 0; r <= window && !done(); ++r) {
        for (long x = -r; x <= r; ++x) {
            for (long y = -r; y <= r; ++y) {
                if (std::max(std::abs(x), std::abs(y)) != r) continue;  // shell scan
                if (!inHalfPlaneH(x, y)) continue;
                int t = classify(partition, x, y);
                if (samplesSeen[t] >= samplesWanted) continue;
                std::vector<EdgeVec> edges;
                for (int bi = 0; bi < 2; ++bi) {
                    Partner p = partnerByDynamics(x, y, bi == 0 ? 1 : -1);
                    long dx = p.point.first - x;
                    long dy = p.point.second - y;
                    if (std::abs(dx) > 1 || std::abs(dy) > 1) {
                        throw std::runtime_error("buildTypeTable: long edge at (" +
                                                 std::to_string(x) + "," + std::to_string(y) + ")");
                    }
                    if (dx != 0 || dy != 0) {
                        EdgeVec ev{static_cast<int>(dx), static_cast<int>(dy)};
                        if (std::find(edges.begin(), edges.end(), ev) == edges.end()) {
                            edges.push_back(ev);
                        }
                    }
                }
                std::sort(edges.begin(), edges.end());
                auto& e = table.entry[t];
                if (!e.haveSample) {
                    e.edges = std::move(edges);
                    e.sample = {x, y};
                    e.haveSample = true;
                } else if (e.edges != edges) {
                    throw std::runtime_error("buildTypeTable: inconsistent edge set for type " +
                                             std::to_string(t));
                }
                ++samplesSeen[t];
            }
        }
    }
    for (int t = 1; t <= 26; ++t) {
        if (!table.entry[t].haveSample) {
            throw std::runtime_error("buildTypeTable: type " + std::to_string(t) +
                                     " not found in window " + std::to_string(window));
        }
    }
    return table;
}

namespace {

// The two graph edges at a vertex of the given type; throws if the type is
// trivial (no edges) when an edge is required.
std::vector<EdgeVec> edgesOf(const TypeTable& table, int type) {
    return table[type].edges;
}

}  // namespace

std::vector<StrandStep> strandOrbit(const PolygonSet& partition, const TypeTable& table,
                                    LatticePoint start, int branch, int steps) {
    std::vector<StrandStep> out;
    LatticePoint cur = start;
    std::optional<EdgeVec> lastEdge;
    for (int i = 0; i < steps; ++i) {
        int t = classify(partition, cur.first, cur.second);
        EdgeVec e;
        if (i == 0) {
            Partner p = partnerByDynamics(cur.first, cur.second, branch == 0 ? 1 : -1);
            long dx = p.point.first - cur.first;
            long dy = p.point.second - cur.second;
            if (dx == 0 && dy == 0) {
                throw std::runtime_error("strandOrbit: branch has no edge at start");
            }
            e = EdgeVec{static_cast<int>(dx), static_cast<int>(dy)};
        } else {
            // Continue without backtracking: take the edge that is not the
            // negation of the previous one.
            EdgeVec back{-lastEdge->first, -lastEdge->second};
            auto edges = edgesOf(table, t);
            if (edges.size() != 2) {
                throw std::runtime_error("strandOrbit: dead end at type " + std::to_string(t));
            }
            if (edges[0] == back) {
                e = edges[1];
            } else if (edges[1] == back) {
                e = edges[0];
            } else {
                throw std::runtime_error("strandOrbit: strand does not connect");
            }
        }
        out.push_back(StrandStep{t, e});
        cur = {cur.first + e.first, cur.second + e.second};
        lastEdge = e;
    }
    return out;
}

std::vector<LatticePoint> traceGamma0(const PolygonSet& partition, const TypeTable& table,
                                      int steps, int dir) {
    // At the origin the two edges are (1,1) and (-1,1); dir = +1 selects
    // (1,1).  Find which return branch produces that edge here.
    int branch = -1;
    for (int bi = 0; bi < 2; ++bi) {
        Partner p = partnerByDynamics(0, 0, bi == 0 ? 1 : -1);
        if (p.point != LatticePoint{0, 0} && ((dir > 0) == (p.point.first > 0))) branch = bi;
    }
    if (branch < 0) throw std::runtime_error("traceGamma0: no branch in requested direction");
    auto strand = strandOrbit(partition, table, {0, 0}, branch, steps);
    std::vector<LatticePoint> out;
    out.reserve(steps + 1);
    LatticePoint cur{0, 0};
    out.push_back(cur);
    for (const auto& s : strand) {
        cur = {cur.first + s.edge.first, cur.second + s.edge.second};
        out.push_back(cur);
    }
    return out;
}

EmbeddingReport checkEmbedding(const PolygonSet& partition, const TypeTable& table, int window) {
    EmbeddingReport rep;
    // Forbidden neighbouring type pairs (a at (x,y), b at (x+1,y)).
    const std::set<int> aSet{4, 6, 8};
    const std::set<int> bSet{2, 4, 9, 12, 14};

    std::map<LatticePoint, int> typeAt;
    for (long x = -window; x <= window; ++x) {
        for (long y = -window; y <= window; ++y) {
            if (!inHalfPlaneH(x, y)) continue;
            typeAt[{x, y}] = classify(partition, x, y);
            ++rep.verticesChecked;
        }
    }
    for (const auto& [p, t] : typeAt) {
        if (aSet.count(t)) {
            auto it = typeAt.find({p.first + 1, p.second});
            if (it != typeAt.end() && bSet.count(it->second)) rep.forbiddenPairFree = false;
        }
    }

    // Collect edges (each once) and bucket them by lattice cell.
    std::set<std::pair<LatticePoint, LatticePoint>> edges;
    for (const auto& [p, t] : typeAt) {
        for (const auto& e : table[t].edges) {
            LatticePoint q{p.first + e.first, p.second + e.second};
            if (!typeAt.count(q)) continue;  // partner outside window
            auto edge = std::minmax(p, q);
            edges.insert({edge.first, edge.second});
        }
    }
    rep.edges = static_cast<long>(edges.size());

    std::map<LatticePoint, std::vector<const std::pair<LatticePoint, LatticePoint>*>> buckets;
    for (const auto& e : edges) buckets[e.first].push_back(&e);

    auto properCross = [](const LatticePoint& a, const LatticePoint& b, const LatticePoint& c,
                          const LatticePoint& d) {
        auto orient = [](const LatticePoint& o, const LatticePoint& p, const LatticePoint& q) {
            long v = (p.first - o.first) * (q.second - o.second) -
                     (p.second - o.second) * (q.first - o.first);
            return (v > 0) - (v < 0);
        };
        int o1 = orient(a, b, c), o2 = orient(a, b, d);
        int o3 = orient(c, d, a), o4 = orient(c, d, b);
        if (o1 * o2 < 0 && o3 * o4 < 0) return true;  // proper crossing
        // Collinear overlap along more than a point counts as a crossing too,
        // unless the edges only share an endpoint.
        auto shareEndpoint = (a == c || a == d || b == c || b == d);
        if (o1 == 0 && o2 == 0 && !shareEndpoint) {
            // Both segments on one line; with unit-length edges this means
            // they overlap iff they share a point other than endpoints.
            return true;
        }
        return false;
    };

    for (const auto& e1 : edges) {
        for (int dx = -1; dx <= 1; ++dx) {
            for (int dy = -1; dy <= 1; ++dy) {
                auto it = buckets.find({e1.first.first + dx, e1.first.second + dy});
                if (it == buckets.end()) continue;
                for (const auto* e2 : it->second) {
                    if (*e2 <= e1) continue;
                    if (properCross(e1.first, e1.second, e2->first, e2->second)) {
                        rep.crossingFree = false;
                    }
                }
            }
        }
    }
    return rep;
}

}  // namespace penrose
