#pragma once

#include <string>
#include <utility>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

enum class DiagramKind { Linear, Planar };

/// Geometry shared by both renderers. Linear diagrams mark the 2-descents
/// with boxes and join every 2-inversion with an arc; planar diagrams place
/// the word on a height profile that follows its ascents and descents and
/// circle the exceedance positions.
struct Diagram {
    DiagramKind kind = DiagramKind::Linear;
    int n = 0;
    std::vector<int> values;
    std::vector<int> boxed;                  // linear only
    std::vector<std::pair<int, int>> arcs;   // linear only
    std::vector<int> circled;                // planar only
    std::vector<int> heights;                // planar only, one per position
};

Diagram build_linear_diagram(const Permutation& p);
Diagram build_planar_diagram(const Permutation& p);

/// Standalone SVG document. Boxes render as rect elements, arcs as path
/// elements, circled vertices as circle elements, so element counts mirror
/// the diagram counts.
std::string render_svg(const Diagram& d);

/// Monospace rendering. Linear: one row per arc above the word, boxed
/// values in brackets. Planar: three text rows per height level with slope
/// connectors, circled values in parentheses. The value row(s) parse back
/// to the word.
std::string render_ascii(const Diagram& d);

} // namespace permstat
