#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "twinfoam/diagram.hpp"

namespace twinfoam {

enum class ComponentType { CirclePos, CircleNeg, BiWeb };

const char* to_string(ComponentType t); // "0+", "0-", "1"

struct WebVertex {
    bool is_sink = false;   // both incident arcs enter; otherwise both leave
    bool prefers_next = false; // the preferred edge is the entry after this vertex
};

struct WebEntry {
    int arc = -1;        // diagram arc index
    bool forward = true; // the traversal runs along the arc's own orientation
};

// One component of a resolved diagram: a cyclic arc sequence with bivalent
// vertices between consecutive entries. Orientation reverses exactly at
// vertices; vertices alternate sink/source around the cycle.
struct WebComponent {
    std::vector<WebEntry> cycle;
    std::vector<std::optional<WebVertex>> vertex_after; // between cycle[i] and cycle[i+1]
    std::vector<int> origin_arcs;                       // sorted diagram arc indices
    std::optional<int> free_loop;                       // crossingless loop component
    bool loop_ccw = false;

    int vertex_count() const;
    int min_arc_id(const LinkDiagram& d) const;
    std::string to_string(const LinkDiagram& d) const;
};

// Which incident edge a singular resolution marks as preferred. The two
// equivalence classes of conventions differ by the relative choice at
// positive versus negative crossings; the shipped defaults are the ones under
// which vertex-pair reduction terminates on Reidemeister-II diagrams (the
// opposite relative choice strands 4-vertex components).
struct VertexConvention {
    bool pos_prefer_under = true;
    bool neg_prefer_under = true;
};

struct ResolveOptions {
    VertexConvention convention{};
    bool force_neg_circles = false; // experiment: classify every circle as 0-
};

struct Resolution {
    std::uint32_t J = 0;
    std::vector<WebComponent> components; // reduced, canonically ordered
    std::vector<ComponentType> type_sequence;
};

// The J-resolution: bit k of J set gives crossing k its 1-resolution
// (oriented for positive crossings, singular for negative ones), clear gives
// the 0-resolution. Components come back reduced, classified, and ordered by
// ascending minimal contained arc id with free loops last.
Resolution resolve(const LinkDiagram& d, std::uint32_t J, const ResolveOptions& opts = {});

// Removes same-type adjacent vertex pairs until none remain; the result has
// 0 or 2 vertices or the call throws IrreducibleWebError. `pick` selects
// among the currently removable pairs (used to test confluence); the default
// takes the first.
WebComponent reduce(WebComponent c, const std::function<size_t(size_t)>& pick = {});

// Type of a reduced component. Circles are 0+ when counterclockwise, decided
// by whether the designated outer face lies in the region on the circle's
// right-hand side.
ComponentType classify(const WebComponent& c, const LinkDiagram& d, std::uint32_t J,
                       const ResolveOptions& opts = {});

// Number of components of the J-resolution (free loops included); ignores
// vertex and orientation data entirely.
int count_components(const LinkDiagram& d, std::uint32_t J);

// Debug dump: one line per component,
// "J=<bits> comp<l> type=<0+|0-|1> arcs={...} verts=<count>".
std::string dump_resolution(const Resolution& r, const LinkDiagram& d);

} // namespace twinfoam
