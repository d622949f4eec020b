#pragma once

#include <string>

#include "a1kit/invariants.hpp"
#include "a1kit/module.hpp"
#include "a1kit/resolution.hpp"

namespace a1kit {

/// Cell diagram, one line per degree: cells as 'o', followed by the Sq1 and
/// Sq2 edge lists. Cells are addressed as degree:index.
std::string render_module_ascii(const A1Module& m);

/// Cell diagram as SVG: circles at height proportional to degree (degree
/// increases downward), straight segments for Sq1, arcs for Sq2.
std::string render_module_svg(const A1Module& m);

/// Adams-style grid: stem (t - s) horizontal, filtration s vertical, counts
/// as digits, '.' for empty positions and '?' outside the reliable window.
std::string render_chart_ascii(const ExtChart& chart);

/// Dot chart as SVG; the unreliable region is shaded.
std::string render_chart_svg(const ExtChart& chart);

/// JSON dump of a chart: {"module", "max_s", "max_t", "reliable_max_t",
/// "counts": [{"s","t","n","dim"}...]} with counts sorted by (s, t).
std::string chart_json(const ExtChart& chart, const std::string& module_name);

/// "{d1:n1, d2:n2, ...}".
std::string graded_dims_str(const GradedDims& dims);

/// Per-stage generator degree table of a resolution.
std::string render_resolution(const Resolution& r);

}  // namespace a1kit
