// Locating and loading the bundled data assets: the 26-tile torus partition,
// the 75 dynamical polygons, the 75 gene centers and the 75 shadow strand
// triples, plus the derived 4-torus extension-map table.  A manifest with
// FNV-1a checksums guards against silent corruption.

#pragma once

#include "penrose/polygon.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace penrose {

struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Resolution order: PENROSE_DATA environment variable, the source-tree data
// directory baked in at configure time, then ./data.
std::filesystem::path dataDir();

std::uint64_t fnv1a64(const std::string& bytes);

// Verifies every file listed in MANIFEST (if present) against its checksum.
// Throws DataError on mismatch; returns the number of files checked.
int verifyManifest(const std::filesystem::path& dir);

struct PolygonSet {
    // raw[i] = vertex rows exactly as shipped (the canonical lift);
    // poly[i] = same vertices as a normalized (CCW, strictly convex) polygon.
    std::vector<std::vector<GoldenPoint>> raw;
    std::vector<ConvexPolygon> poly;
};

// 1-based tiles: index 0 is unused padding so tile k sits at [k].
PolygonSet loadPartition();
// 0-based, indices 0..74.
PolygonSet loadDynPolygons();

std::vector<std::pair<long, long>> loadGeneCenters();

struct ShadowTriple {
    std::pair<long, long> end1, center, end2;
};
std::vector<ShadowTriple> loadShadowTriples();

}  // namespace penrose
