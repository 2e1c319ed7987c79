#include "penrose/torus4.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <thread>

namespace penrose {

namespace {

const GoldenReal kQuarter(1, 0, 2);    // 1/4
const GoldenReal kEighth(1, 0, 3);     // 1/8
const GoldenReal kPhiInv(-1, 1);       // 1/phi
const GoldenReal kTwoPhiInv3(-6, 4);   // 2/phi^3

GoldenReal reduce8Scalar(const GoldenReal& x) {
    // Total version of the mod-8 reduction: representative in [-4, 4).
    BigInt f = ((x + GoldenReal(4)) * kEighth).floor();
    return x - GoldenReal(8 * f, 0);
}

}  // namespace

Vec4 Vec4::operator+(const Vec4& o) const {
    return Vec4(c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]);
}

Vec4 Vec4::operator-(const Vec4& o) const {
    return Vec4(c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]);
}

GoldenReal Vec4::normSq() const {
    return c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3];
}

Vec4 interpolate(const Vec4& a, const Vec4& b) {
    return Vec4(interpolate(a.c[0], b.c[0]), interpolate(a.c[1], b.c[1]),
                interpolate(a.c[2], b.c[2]), interpolate(a.c[3], b.c[3]));
}

Vec4 reduce8(const Vec4& v) {
    return Vec4(reduce8Scalar(v.c[0]), reduce8Scalar(v.c[1]), reduce8Scalar(v.c[2]),
                reduce8Scalar(v.c[3]));
}

Torus8Point psiTilde(const GoldenPoint& p) {
    GoldenReal s = p.x + p.y;
    GoldenReal d = p.x - p.y;
    return reduce8(Vec4(s, d, s.divPhi(), d.divPhi()));
}

GoldenPoint zetaTilde(const Torus8Point& t) {
    return GoldenPoint((t.c[2] + t.c[3]) * kQuarter, (t.c[0] + t.c[1]) * kQuarter);
}

GoldenReal ExtensionMap::determiner(const Torus8Point& t) const {
    GoldenReal v = dConst;
    for (int i = 0; i < 4; ++i) v += dCoef[i] * t.c[i];
    return v;
}

int ExtensionMap::interval(const Torus8Point& t) const {
    GoldenReal v = determiner(t);
    int idx = 0;
    for (const GoldenReal& b : breaks) {
        if (v == b) return -1;
        if (v > b) ++idx;
    }
    return idx;
}

int ExtensionMap::componentOf(const Torus8Point& t) const {
    int i = interval(t);
    return i < 0 ? -1 : componentLabel[i];
}

Vec4 ExtensionMap::linear(const Vec4& v) const {
    Vec4 out;
    for (int r = 0; r < 4; ++r) {
        GoldenReal acc;
        for (int c = 0; c < 4; ++c) acc += L[r][c] * v.c[c];
        out.c[r] = acc;
    }
    return out;
}

Torus8Point ExtensionMap::apply(const Torus8Point& t) const {
    int i = interval(t);
    if (i < 0) throw OnBreakpoint("extension map evaluated on its undefined set");
    Vec4 out = linear(t);
    for (int r = 0; r < 4; ++r) out.c[r] += offset[i][r];
    return reduce8(out);
}

Torus8Point ExtensionMap::applyExtended(const Torus8Point& t, int branch) const {
    int i = interval(t);
    if (i < 0) {
        // On the dividing point between intervals j and j+1: take the side
        // whose component is the requested branch (they always differ).
        GoldenReal v = determiner(t);
        for (std::size_t j = 0; j < breaks.size(); ++j) {
            if (v == breaks[j]) {
                i = (componentLabel[j] == branch) ? static_cast<int>(j)
                                                  : static_cast<int>(j) + 1;
                break;
            }
        }
    }
    Vec4 out = linear(t);
    for (int r = 0; r < 4; ++r) out.c[r] += offset[i][r];
    return reduce8(out);
}

namespace {

GoldenReal readPair(std::istringstream& in, const std::string& what) {
    long a, b;
    if (!(in >> a >> b)) throw DataError("extmaps.dat: truncated " + what);
    return GoldenReal(a, b);
}

std::array<ExtensionMap, 4> loadExtensionMaps() {
    std::ifstream file(dataDir() / "extmaps.dat");
    if (!file) throw DataError("cannot open extmaps.dat");
    std::array<ExtensionMap, 4> maps;
    int cur = -1;
    int lRow = 0;
    std::string line;
    while (std::getline(file, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream in(line);
        std::string tag;
        in >> tag;
        if (tag == "map") {
            in >> cur;
            lRow = 0;
        } else if (tag == "L") {
            for (int c = 0; c < 4; ++c) maps[cur].L[lRow][c] = readPair(in, "linear row");
            ++lRow;
        } else if (tag == "d") {
            for (int c = 0; c < 4; ++c) maps[cur].dCoef[c] = readPair(in, "determiner");
            std::string ctag;
            in >> ctag;
            if (ctag != "c") throw DataError("extmaps.dat: malformed determiner line");
            maps[cur].dConst = readPair(in, "determiner constant");
        } else if (tag == "breaks") {
            long b;
            while (in >> b) maps[cur].breaks.push_back(GoldenReal(b));
        } else if (tag == "off") {
            std::array<GoldenReal, 4> v;
            for (int c = 0; c < 4; ++c) v[c] = readPair(in, "offset");
            maps[cur].offset.push_back(v);
        } else {
            throw DataError("extmaps.dat: unknown tag '" + tag + "'");
        }
    }
    for (auto& m : maps) {
        if (m.offset.size() != m.breaks.size() + 1) {
            throw DataError("extmaps.dat: interval/offset count mismatch");
        }
        // Component 0 is the one containing the zero-offset interval; the
        // intervals alternate between the two components.
        int zero = -1;
        for (std::size_t i = 0; i < m.offset.size(); ++i) {
            bool allZero = true;
            for (const auto& e : m.offset[i]) allZero = allZero && e.isZero();
            if (allZero) zero = static_cast<int>(i);
        }
        if (zero < 0) throw DataError("extmaps.dat: no zero-offset interval");
        m.componentLabel.resize(m.offset.size());
        for (std::size_t i = 0; i < m.offset.size(); ++i) {
            m.componentLabel[i] = static_cast<int>((static_cast<int>(i) - zero) & 1);
        }
    }
    return maps;
}

}  // namespace

const std::array<ExtensionMap, 4>& extensionMaps() {
    static const std::array<ExtensionMap, 4> maps = loadExtensionMaps();
    return maps;
}

Vec4 muLift(const GoldenPoint& v, int eps1, int eps2, int sign) {
    GoldenReal x2 = (v.x + GoldenReal(eps1)) + (v.x + GoldenReal(eps1));
    GoldenReal y2 = (v.y + GoldenReal(eps2)) + (v.y + GoldenReal(eps2));
    if (sign > 0) {
        return Vec4(y2 + GoldenReal(1), y2 - GoldenReal(1), x2 + kPhiInv, x2 - kPhiInv);
    }
    return Vec4(y2 - GoldenReal(1), y2 + GoldenReal(1), x2 - kPhiInv, x2 + kPhiInv);
}

std::vector<LiftedTile> liftedTiles(const PolygonSet& partition) {
    std::vector<LiftedTile> tiles;
    tiles.reserve(832);
    for (int k = 1; k <= 26; ++k) {
        for (int e1 = 0; e1 < 4; ++e1) {
            for (int e2 = 0; e2 < 4; ++e2) {
                for (int sign : {+1, -1}) {
                    LiftedTile t;
                    t.base = k;
                    t.eps1 = e1;
                    t.eps2 = e2;
                    t.sign = sign;
                    for (const GoldenPoint& v : partition.raw[k]) {
                        t.lift.push_back(muLift(v, e1, e2, sign));
                    }
                    tiles.push_back(std::move(t));
                }
            }
        }
    }
    return tiles;
}

std::vector<Vec4> subdividePolygon(std::vector<Vec4> poly, int rounds) {
    for (int r = 0; r < rounds; ++r) {
        std::vector<Vec4> next;
        next.reserve(poly.size() * 2);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const Vec4& a = poly[i];
            const Vec4& b = poly[(i + 1) % poly.size()];
            next.push_back(a);
            next.push_back(interpolate(a, b));
        }
        poly = std::move(next);
    }
    return poly;
}

Vec4 tracePoint(const std::vector<Vec4>& poly) {
    return interpolate(poly[2], interpolate(poly[0], poly[1]));
}

TileItinerary getItinerary(const Torus8Point& t) {
    const auto& maps = extensionMaps();
    TileItinerary it;
    Torus8Point cur = t;
    for (int k = 0; k < 8; ++k) {
        const ExtensionMap& m = maps[k % 4];
        int comp = m.componentOf(cur);
        if (comp < 0) throw OnBreakpoint("itinerary point on an undefined set");
        it.eps[k] = comp;
        cur = m.apply(cur);
    }
    return it;
}

bool verifyItinerary(const TileItinerary& it, Torus8Point t) {
    const auto& maps = extensionMaps();
    for (int k = 0; k < 8; ++k) {
        const ExtensionMap& m = maps[k % 4];
        int comp = m.componentOf(t);
        if (comp >= 0 && comp != it.eps[k]) return false;
        t = m.applyExtended(t, it.eps[k]);
    }
    return true;
}

TileReport verifyTile(const LiftedTile& tile, int rounds) {
    TileReport rep;
    Torus8Point probe = reduce8(tracePoint(tile.lift));
    try {
        rep.itinerary = getItinerary(probe);
        rep.itineraryDefined = true;
    } catch (const OnBreakpoint&) {
        return rep;
    }

    std::vector<Vec4> planar = subdividePolygon(tile.lift, rounds);
    std::vector<Torus8Point> pts;
    pts.reserve(planar.size());
    for (const Vec4& v : planar) pts.push_back(reduce8(v));

    const auto& maps = extensionMaps();
    rep.verticesOk = true;
    for (int k = 0; k <= 8; ++k) {
        // Largest gap between consecutive sample images at this stage.
        for (std::size_t i = 0; i < pts.size(); ++i) {
            GoldenReal gap = reduce8(pts[i] - pts[(i + 1) % pts.size()]).normSq();
            if (gap > rep.maxGapSq) rep.maxGapSq = gap;
        }
        if (k == 8) break;
        const ExtensionMap& m = maps[k % 4];
        for (Torus8Point& p : pts) {
            int comp = m.componentOf(p);
            if (comp >= 0 && comp != rep.itinerary.eps[k]) {
                rep.verticesOk = false;
                return rep;
            }
            p = m.applyExtended(p, rep.itinerary.eps[k]);
        }
    }
    return rep;
}

std::pair<long, long> componentGapData(int j) {
    const ExtensionMap& m = extensionMaps()[j];
    long normSq = 0;
    for (const GoldenReal& c : m.dCoef) {
        long a = static_cast<long>(c.a());
        normSq += a * a;
    }
    return {16, normSq};
}

namespace {

// Do polygons a and b share a boundary segment of positive length?
bool edgeAdjacent(const ConvexPolygon& a, const ConvexPolygon& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        GoldenPoint p = a[i];
        GoldenPoint q = a[(i + 1) % a.size()];
        GoldenPoint d = q - p;
        for (std::size_t j = 0; j < b.size(); ++j) {
            GoldenPoint r = b[j];
            GoldenPoint s = b[(j + 1) % b.size()];
            if (orientation(p, q, r) != 0 || orientation(p, q, s) != 0) continue;
            // Collinear: compare parameter intervals along d.
            GoldenReal tr = (r.x - p.x) * d.x + (r.y - p.y) * d.y;
            GoldenReal ts = (s.x - p.x) * d.x + (s.y - p.y) * d.y;
            GoldenReal lo = std::min(tr, ts);
            GoldenReal hi = std::max(tr, ts);
            GoldenReal end = d.x * d.x + d.y * d.y;
            if (std::max(lo, GoldenReal(0)) < std::min(hi, end)) return true;
        }
    }
    return false;
}

}  // namespace

PartitionReport verifyPartition(const PolygonSet& partition, const TypeTable& table, int rounds,
                                int jobs) {
    PartitionReport rep;
    std::vector<LiftedTile> tiles = liftedTiles(partition);
    rep.tilesChecked = static_cast<int>(tiles.size());

    std::vector<TileReport> results(tiles.size());
    if (jobs < 1) jobs = 1;
    std::vector<std::thread> workers;
    std::size_t chunk = (tiles.size() + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
        std::size_t lo = w * chunk;
        std::size_t hi = std::min(tiles.size(), lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) {
                results[i] = verifyTile(tiles[i], rounds);
                results[i].index = static_cast<int>(i);
            }
        });
    }
    for (auto& t : workers) t.join();

    for (const TileReport& r : results) {
        if (r.ok()) ++rep.tilesOk;
        if (r.maxGapSq > rep.maxGapSq) rep.maxGapSq = r.maxGapSq;
    }
    rep.stretchOk = rep.maxGapSq < GoldenReal(8);

    rep.componentGapOk = true;
    for (int j = 0; j < 4; ++j) {
        auto [num, den] = componentGapData(j);
        // gap^2 = num / den must be at least 8.
        if (num < 8 * den) rep.componentGapOk = false;
    }

    rep.adjacentPairsOk = true;
    for (int a = 1; a <= 26; ++a) {
        for (int b = a + 1; b <= 26; ++b) {
            bool adjacent = false;
            for (int i = -1; i <= 1 && !adjacent; ++i) {
                for (int j = -1; j <= 1 && !adjacent; ++j) {
                    ConvexPolygon moved =
                        translated(partition.poly[b], GoldenPoint(GoldenReal(i), GoldenReal(j)));
                    adjacent = edgeAdjacent(partition.poly[a], moved);
                }
            }
            if (adjacent && table[a].edges == table[b].edges) rep.adjacentPairsOk = false;
        }
    }

    rep.displacementsOk = true;
    for (int t = 1; t <= 26; ++t) {
        if (!table[t].haveSample) {
            rep.displacementsOk = false;
            continue;
        }
        auto [sx, sy] = table[t].sample;
        GoldenReal tv = fundamentalT(sx, sy);
        std::vector<GoldenRat> expect;
        for (const EdgeVec& e : table[t].edges) {
            expect.push_back(GoldenRat(kTwoPhiInv3 * GoldenReal(e.first) + GoldenReal(2 * e.second)));
        }
        // Fixed types: both branches return to the same point.
        if (expect.empty()) expect.push_back(GoldenRat(0));
        for (int sign : {+1, -1}) {
            RatPoint start{GoldenRat(tv), GoldenRat(sign)};
            RatPoint image = pinwheel(start);
            GoldenRat v = image.x - start.x;
            bool found = false;
            for (const GoldenRat& ex : expect) found = found || v == ex;
            if (!found) rep.displacementsOk = false;
        }
    }

    return rep;
}

}  // namespace penrose
