// Deterministic SVG figure emitters: the torus partition, a window of the
// lattice graph, the dynamical-polygon overlay, and a gene with its shadow
// strand.  All emitters are pure functions of their inputs; running them
// twice yields byte-identical output.

#pragma once

#include "penrose/data.hpp"
#include "penrose/graph.hpp"

#include <string>
#include <vector>

namespace penrose {

// The 26 partition tiles reduced into the unit torus cell, color-coded.
std::string renderTorusPartition(const PolygonSet& partition);

// The graph edges at every lattice point of H with |x|, |y| <= window; the
// origin is marked with a dot.
std::string renderGraphWindow(const PolygonSet& partition, const TypeTable& table, int window);

// The 75 dynamical polygons (dark) drawn over the partition tiles (light).
std::string renderDynPolyOverlay(const PolygonSet& partition, const PolygonSet& dyn);

// Gene j's core arc (dark polyline) and the strand that shadows it (light
// polyline), in lattice coordinates.
std::string renderGeneShadow(const PolygonSet& partition, const TypeTable& table,
                             const std::vector<std::pair<long, long>>& centers,
                             const std::vector<ShadowTriple>& triples, int j);

}  // namespace penrose
