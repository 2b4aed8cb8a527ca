#include "twinfoam/webs.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace twinfoam {

const char* to_string(ComponentType t) {
    switch (t) {
        case ComponentType::CirclePos: return "0+";
        case ComponentType::CircleNeg: return "0-";
        case ComponentType::BiWeb: return "1";
    }
    return "?";
}

int WebComponent::vertex_count() const {
    int n = 0;
    for (const auto& v : vertex_after)
        if (v) ++n;
    return n;
}

int WebComponent::min_arc_id(const LinkDiagram& d) const {
    int best = -1;
    for (int e : origin_arcs) {
        int id = d.arc_id(e);
        if (best < 0 || id < best) best = id;
    }
    return best;
}

std::string WebComponent::to_string(const LinkDiagram& d) const {
    std::ostringstream os;
    if (free_loop) {
        os << "loop U" << *free_loop << (loop_ccw ? "+" : "-");
        return os.str();
    }
    for (size_t i = 0; i < cycle.size(); ++i) {
        if (i) os << ' ';
        os << (cycle[i].forward ? "" : "~") << d.arc_id(cycle[i].arc);
        if (vertex_after[i])
            os << (vertex_after[i]->is_sink ? " >sink" : " >source")
               << (vertex_after[i]->prefers_next ? "(next)" : "(prev)") << ' ';
    }
    return os.str();
}

namespace {

struct SlotPairing {
    // pair_with[s]: the slot s reconnects to under this resolution
    std::array<int, 4> pair_with{};
    // vertex on the pair containing slot s (shared object for both slots)
    std::array<std::optional<WebVertex>, 4> vertex{};
    // preferred slot of the pair containing s, when a vertex is present
    std::array<int, 4> preferred_slot{};
};

SlotPairing smooth(const Crossing& c, bool bit, const VertexConvention& conv) {
    SlotPairing sp;
    if (bit) {
        sp.pair_with = {1, 0, 3, 2}; // pairs (0,1) and (2,3)
    } else {
        sp.pair_with = {3, 2, 1, 0}; // pairs (1,2) and (3,0)
    }
    bool singular = (c.sign > 0) == !bit;
    if (!singular) return sp;

    bool prefer_under = c.sign > 0 ? conv.pos_prefer_under : conv.neg_prefer_under;
    // The sink joins the two incoming ends (the pair through slot 0), the
    // source the two outgoing ends (the pair through slot 2).
    int sink_pref = prefer_under ? 0 : c.over_in_slot();
    int source_pref = prefer_under ? 2 : c.over_out_slot();
    for (int s : {0, sp.pair_with[0]}) {
        sp.vertex[s] = WebVertex{true, false};
        sp.preferred_slot[s] = sink_pref;
    }
    for (int s : {2, sp.pair_with[2]}) {
        sp.vertex[s] = WebVertex{false, false};
        sp.preferred_slot[s] = source_pref;
    }
    return sp;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<SlotPairing> all_pairings(const LinkDiagram& d, std::uint32_t J,
                                      const VertexConvention& conv) {
    std::vector<SlotPairing> out;
    out.reserve(d.crossing_count());
    for (int k = 0; k < d.crossing_count(); ++k)
        out.push_back(smooth(d.crossings()[k], (J >> k) & 1u, conv));
    return out;
}

} // namespace

Resolution resolve(const LinkDiagram& d, std::uint32_t J, const ResolveOptions& opts) {
    Resolution res;
    res.J = J;
    auto pairings = all_pairings(d, J, opts.convention);

    std::vector<bool> visited(d.arc_count(), false);
    for (int e0 = 0; e0 < d.arc_count(); ++e0) {
        if (visited[e0]) continue;
        WebComponent comp;
        int arc = e0;
        int leave_end = d.tail_end(e0);
        do {
            visited[arc] = true;
            comp.cycle.push_back(WebEntry{arc, leave_end == d.tail_end(arc)});
            comp.origin_arcs.push_back(arc);
            ArcEnd at = d.arc_ends(arc)[1 - leave_end];
            const SlotPairing& sp = pairings[at.crossing];
            int s2 = sp.pair_with[at.slot];
            if (sp.vertex[at.slot]) {
                WebVertex v = *sp.vertex[at.slot];
                v.prefers_next = sp.preferred_slot[at.slot] == s2;
                comp.vertex_after.emplace_back(v);
            } else {
                comp.vertex_after.emplace_back(std::nullopt);
            }
            auto [e2, t2] = d.end_at(at.crossing, s2);
            arc = e2;
            leave_end = t2;
        } while (!(arc == e0 && leave_end == d.tail_end(e0)));
        std::sort(comp.origin_arcs.begin(), comp.origin_arcs.end());
        res.components.push_back(std::move(comp));
    }

    std::sort(res.components.begin(), res.components.end(),
              [&](const WebComponent& a, const WebComponent& b) {
                  return a.min_arc_id(d) < b.min_arc_id(d);
              });

    for (const FreeLoop& l : d.free_loops()) {
        WebComponent comp;
        comp.free_loop = l.id;
        comp.loop_ccw = l.ccw;
        res.components.push_back(std::move(comp));
    }

    for (auto& comp : res.components) {
        comp = reduce(std::move(comp));
        res.type_sequence.push_back(classify(comp, d, J, opts));
    }
    return res;
}

namespace {

bool same_type_pair(const WebComponent& c, size_t i) {
    size_t m = c.cycle.size();
    size_t j = (i + 1) % m;
    if (!c.vertex_after[i] || !c.vertex_after[j]) return false;
    // preferred-for-both or preferred-for-neither on the shared entry j
    return c.vertex_after[i]->prefers_next == !c.vertex_after[j]->prefers_next;
}

std::vector<size_t> removable_pairs(const WebComponent& c) {
    std::vector<size_t> out;
    for (size_t i = 0; i < c.cycle.size(); ++i)
        if (same_type_pair(c, i)) out.push_back(i);
    return out;
}

void remove_pair(WebComponent& c, size_t i) {
    size_t m = c.cycle.size();
    size_t j = (i + 1) % m;
    size_t su = (i + 2) % m;
    if (c.vertex_after[i]->is_sink == c.vertex_after[j]->is_sink)
        throw InvariantViolation("adjacent vertices of equal kind in a web component");
    if (su == i) {
        // two entries, both vertices removed: a one-arc circle remains
        WebEntry keep = c.cycle[i];
        c.cycle = {keep};
        c.vertex_after = {std::nullopt};
        return;
    }
    std::vector<WebEntry> cycle;
    std::vector<std::optional<WebVertex>> va;
    size_t pos = (su + 1) % m;
    while (true) {
        cycle.push_back(c.cycle[pos]);
        va.push_back(pos == i ? c.vertex_after[su] : c.vertex_after[pos]);
        if (pos == i) break;
        pos = (pos + 1) % m;
    }
    c.cycle = std::move(cycle);
    c.vertex_after = std::move(va);
}

} // namespace

WebComponent reduce(WebComponent c, const std::function<size_t(size_t)>& pick) {
    if (c.free_loop) return c;
    while (true) {
        auto candidates = removable_pairs(c);
        if (candidates.empty()) break;
        size_t choice = pick ? pick(candidates.size()) : 0;
        remove_pair(c, candidates[choice % candidates.size()]);
    }
    int verts = c.vertex_count();
    if (verts != 0 && verts != 2)
        throw IrreducibleWebError("web component failed to reduce to a circle or bi-web (" +
                                  std::to_string(verts) + " vertices remain)");
    return c;
}

ComponentType classify(const WebComponent& c, const LinkDiagram& d, std::uint32_t J,
                       const ResolveOptions& opts) {
    if (c.free_loop) {
        if (opts.force_neg_circles) return ComponentType::CircleNeg;
        return c.loop_ccw ? ComponentType::CirclePos : ComponentType::CircleNeg;
    }
    int verts = c.vertex_count();
    if (verts == 2) return ComponentType::BiWeb;
    if (verts != 0) throw IrreducibleWebError("classify called on an unreduced component");
    if (opts.force_neg_circles) return ComponentType::CircleNeg;

    // Faces of the resolved picture: each smoothing joins the two diagram-face
    // corners that lie between its strands.
    UnionFind region(d.face_count());
    for (int k = 0; k < d.crossing_count(); ++k) {
        bool bit = (J >> k) & 1u;
        if (bit)
            region.unite(d.corner_face(k, 1), d.corner_face(k, 3)); // pairs (0,1),(2,3)
        else
            region.unite(d.corner_face(k, 0), d.corner_face(k, 2)); // pairs (1,2),(3,0)
    }
    // Crossing any curve other than this one keeps us on the same side of it.
    std::vector<bool> own(d.arc_count(), false);
    for (int e : c.origin_arcs) own[e] = true;
    for (int e = 0; e < d.arc_count(); ++e) {
        if (own[e]) continue;
        region.unite(d.face_of_dart(2 * e), d.face_of_dart(2 * e + 1));
    }

    const WebEntry& entry = c.cycle.front();
    int right_dart =
        2 * entry.arc + (entry.forward ? d.tail_end(entry.arc) : d.head_end(entry.arc));
    bool ccw = region.find(d.face_of_dart(right_dart)) == region.find(d.outer_face());
    return ccw ? ComponentType::CirclePos : ComponentType::CircleNeg;
}

int count_components(const LinkDiagram& d, std::uint32_t J) {
    auto pairings = all_pairings(d, J, VertexConvention{});
    std::vector<bool> visited(d.arc_count(), false);
    int count = 0;
    for (int e0 = 0; e0 < d.arc_count(); ++e0) {
        if (visited[e0]) continue;
        ++count;
        int arc = e0;
        int leave_end = d.tail_end(e0);
        do {
            visited[arc] = true;
            ArcEnd at = d.arc_ends(arc)[1 - leave_end];
            int s2 = pairings[at.crossing].pair_with[at.slot];
            auto [e2, t2] = d.end_at(at.crossing, s2);
            arc = e2;
            leave_end = t2;
        } while (!(arc == e0 && leave_end == d.tail_end(e0)));
    }
    return count + int(d.free_loops().size());
}

std::string dump_resolution(const Resolution& r, const LinkDiagram& d) {
    std::ostringstream os;
    for (size_t l = 0; l < r.components.size(); ++l) {
        os << "J=";
        for (int k = 0; k < d.crossing_count(); ++k) os << ((r.J >> k) & 1u);
        os << " comp" << l << " type=" << to_string(r.type_sequence[l]) << " arcs={";
        const WebComponent& c = r.components[l];
        if (c.free_loop) {
            os << "U" << *c.free_loop;
        } else {
            for (size_t a = 0; a < c.origin_arcs.size(); ++a) {
                if (a) os << ',';
                os << d.arc_id(c.origin_arcs[a]);
            }
        }
        os << "} verts=" << c.vertex_count() << '\n';
    }
    return os.str();
}

} // namespace twinfoam
