#pragma once

#include <optional>
#include <string>

#include "cqs/divisor.hpp"

namespace cqs {

// Which region of the divisor to draw.
enum class RegionKind { polyhedron, below, abelow, link };

std::optional<RegionKind> region_kind_from_name(const std::string& name);

/*
 * Deterministic lattice pictures: integer grid (one lattice unit = 20px in
 * SVG, 0.5cm in TikZ), x to the right and y upward, the boundary rays of the
 * section polyhedron, the staircase strip of the region with open edges
 * dashed and closed edges solid, generator dots, and the region's lattice
 * points.  All coordinates are computed in exact arithmetic and printed with
 * three fixed decimals, so repeated calls are byte-identical.
 */
std::string render_svg(const Cqs& c, RegionKind kind, const WeilDivisor& d);
std::string render_tikz(const Cqs& c, RegionKind kind, const WeilDivisor& d);

}  // namespace cqs
