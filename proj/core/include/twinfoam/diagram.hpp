#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twinfoam/errors.hpp"

namespace twinfoam {

struct ArcEnd {
    int crossing = -1;
    int slot = -1; // 0..3, counterclockwise from the incoming under-strand

    friend bool operator==(const ArcEnd&, const ArcEnd&) = default;
};

struct Crossing {
    std::array<int, 4> arc{}; // arc indices at slots 0..3
    int sign = 0;             // +1 or -1

    // The under-strand always runs slot 0 -> slot 2. A crossing is positive
    // exactly when the over-strand enters at slot 3.
    int over_in_slot() const { return sign > 0 ? 3 : 1; }
    int over_out_slot() const { return sign > 0 ? 1 : 3; }
};

struct FreeLoop {
    int id = 0; // order of appearance among U tokens
    bool ccw = false;
};

struct Face {
    int id = 0;
    std::vector<int> darts; // boundary walk; the face lies on the left of each dart
};

// Oriented link diagram built from a PD code plus crossingless loop tokens.
//
// Input grammar: whitespace-separated tokens, '#' starts a comment to end of
// line. "X[a,b,c,d]" lists the four arc labels counterclockwise starting at
// the incoming under-strand; "U+" / "U-" add a counterclockwise / clockwise
// crossingless loop. Arc orientations are inferred, crossing signs derived,
// and the rotation system is validated against the sphere Euler formula.
//
// Darts: 2*arc + t is the traversal of `arc` that arrives at ends(arc)[t].
class LinkDiagram {
public:
    static LinkDiagram parse(std::string_view text);

    int crossing_count() const { return int(crossings_.size()); }
    int arc_count() const { return int(arc_ids_.size()); }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    const std::vector<FreeLoop>& free_loops() const { return free_loops_; }

    int n_plus() const { return n_plus_; }
    int n_minus() const { return n_minus_; }

    int arc_id(int index) const { return arc_ids_[index]; }
    const std::array<ArcEnd, 2>& arc_ends(int index) const { return ends_[index]; }
    int tail_end(int index) const { return tail_end_[index]; }
    int head_end(int index) const { return 1 - tail_end_[index]; }

    // (arc index, end index) occupying a crossing slot.
    std::pair<int, int> end_at(int crossing, int slot) const { return end_at_[crossing][slot]; }

    // Number of connected strands, free loops included.
    int link_component_count() const { return link_components_; }

    int face_count() const { return int(faces_.size()); }
    const std::vector<Face>& faces() const { return faces_; }
    int face_of_dart(int dart) const { return face_of_dart_[dart]; }
    static int reverse_dart(int dart) { return dart ^ 1; }

    // Face at the corner between slot s and slot (s+1)%4 of a crossing.
    int corner_face(int crossing, int slot) const;

    // Deterministic default: the face whose boundary contains the side of the
    // smallest arc id traversed against that arc's orientation.
    int default_outer_face() const { return default_outer_face_; }
    int outer_face() const { return outer_face_; }
    void set_outer_face(int face_id);

    // PD text that parses back to an identical diagram.
    std::string render() const;

    // Same diagram with crossings listed in a different order; perm[i] is the
    // current index of the crossing placed at position i.
    LinkDiagram with_crossing_order(const std::vector<int>& perm) const;

private:
    std::vector<Crossing> crossings_;
    std::vector<int> arc_ids_;                        // index -> external label
    std::vector<std::array<ArcEnd, 2>> ends_;         // per arc, in order of appearance
    std::vector<int> tail_end_;                       // which end the arc leaves from
    std::vector<std::array<std::pair<int, int>, 4>> end_at_;
    std::vector<FreeLoop> free_loops_;
    std::vector<Face> faces_;
    std::vector<int> face_of_dart_;
    int n_plus_ = 0;
    int n_minus_ = 0;
    int link_components_ = 0;
    int default_outer_face_ = -1;
    int outer_face_ = -1;

    void infer_orientations();
    void compute_faces();
    void validate_planarity() const;
};

} // namespace twinfoam
