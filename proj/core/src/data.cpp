#include "penrose/data.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace penrose {

namespace fs = std::filesystem;

fs::path dataDir() {
    if (const char* env = std::getenv("PENROSE_DATA")) {
        return fs::path(env);
    }
#ifdef PENROSE_SOURCE_DATA_DIR
    fs::path src(PENROSE_SOURCE_DATA_DIR);
    if (fs::exists(src / "partition26.dat")) return src;
#endif
    return fs::path("data");
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw DataError("cannot open " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

GoldenPoint rowToPoint(long a0, long a1, long a2, long a3) {
    return GoldenPoint(GoldenReal(a0, a1, 1), GoldenReal(a2, a3, 1));
}

PolygonSet loadPolygonFile(const std::string& name, int firstIndex, int count) {
    fs::path path = dataDir() / name;
    std::istringstream in(slurp(path));
    PolygonSet out;
    out.raw.resize(firstIndex + count);
    out.poly.resize(firstIndex + count);
    std::string line;
    int seen = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        int idx, nv;
        if (!(ls >> tag >> idx >> nv) || tag != "poly") {
            throw DataError(name + ": malformed header line '" + line + "'");
        }
        if (idx < firstIndex || idx >= firstIndex + count) {
            throw DataError(name + ": polygon index out of range");
        }
        std::vector<GoldenPoint> verts;
        for (int i = 0; i < nv; ++i) {
            long a0, a1, a2, a3;
            if (!(in >> a0 >> a1 >> a2 >> a3)) {
                throw DataError(name + ": truncated vertex row");
            }
            verts.push_back(rowToPoint(a0, a1, a2, a3));
        }
        std::getline(in, line);  // consume rest of the last vertex line
        out.raw[idx] = verts;
        ConvexPolygon cp;
        cp.v = verts;
        cp.normalize();
        out.poly[idx] = std::move(cp);
        ++seen;
    }
    if (seen != count) {
        throw DataError(name + ": expected " + std::to_string(count) + " polygons, found " +
                        std::to_string(seen));
    }
    return out;
}

}  // namespace

int verifyManifest(const fs::path& dir) {
    fs::path mpath = dir / "MANIFEST";
    if (!fs::exists(mpath)) return 0;
    std::istringstream in(slurp(mpath));
    std::string hex, name;
    int checked = 0;
    while (in >> hex >> name) {
        std::uint64_t want = std::stoull(hex, nullptr, 16);
        std::uint64_t got = fnv1a64(slurp(dir / name));
        if (want != got) {
            throw DataError("checksum mismatch for " + name);
        }
        ++checked;
    }
    return checked;
}

PolygonSet loadPartition() { return loadPolygonFile("partition26.dat", 1, 26); }

PolygonSet loadDynPolygons() { return loadPolygonFile("dynpoly75.dat", 0, 75); }

std::vector<std::pair<long, long>> loadGeneCenters() {
    std::istringstream in(slurp(dataDir() / "gene_centers.dat"));
    std::vector<std::pair<long, long>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        long x, y;
        if (!(ls >> x >> y)) throw DataError("gene_centers.dat: bad line '" + line + "'");
        out.emplace_back(x, y);
    }
    if (out.size() != 75) throw DataError("gene_centers.dat: expected 75 centers");
    return out;
}

std::vector<ShadowTriple> loadShadowTriples() {
    std::istringstream in(slurp(dataDir() / "shadow_triples.dat"));
    std::vector<ShadowTriple> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        long x0, y0, x1, y1, x2, y2;
        if (!(ls >> x0 >> y0 >> x1 >> y1 >> x2 >> y2)) {
            throw DataError("shadow_triples.dat: bad line '" + line + "'");
        }
        out.push_back(ShadowTriple{{x0, y0}, {x1, y1}, {x2, y2}});
    }
    if (out.size() != 75) throw DataError("shadow_triples.dat: expected 75 triples");
    return out;
}

}  // namespace penrose
