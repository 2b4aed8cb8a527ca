#include "twinfoam/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace twinfoam {

namespace {

struct RawCrossing {
    std::array<int, 4> label{};
};

struct Tokenized {
    std::vector<RawCrossing> crossings;
    std::vector<bool> loops_ccw;
};

Tokenized tokenize(std::string_view text) {
    Tokenized out;
    std::string stripped;
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            stripped += ' ';
        } else {
            stripped += text[i];
        }
    }
    std::istringstream in(stripped);
    std::string tok;
    while (in >> tok) {
        if (tok == "U+" || tok == "u+") {
            out.loops_ccw.push_back(true);
        } else if (tok == "U-" || tok == "u-") {
            out.loops_ccw.push_back(false);
        } else if ((tok[0] == 'X' || tok[0] == 'x') && tok.size() > 1 && tok[1] == '[') {
            if (tok.back() != ']') throw InputError("malformed crossing token: '" + tok + "'");
            RawCrossing rc;
            std::string body = tok.substr(2, tok.size() - 3);
            std::replace(body.begin(), body.end(), ',', ' ');
            std::istringstream nums(body);
            for (int s = 0; s < 4; ++s) {
                if (!(nums >> rc.label[s]) || rc.label[s] < 0)
                    throw InputError("malformed crossing token: '" + tok + "'");
            }
            int extra;
            if (nums >> extra) throw InputError("malformed crossing token: '" + tok + "'");
            out.crossings.push_back(rc);
        } else {
            throw InputError("unrecognized token: '" + tok + "'");
        }
    }
    return out;
}

enum class EndStatus { Unknown, Head, Tail };

} // namespace

LinkDiagram LinkDiagram::parse(std::string_view text) {
    Tokenized tok = tokenize(text);
    LinkDiagram d;

    std::map<int, int> id_to_index;
    for (const RawCrossing& rc : tok.crossings) {
        Crossing c;
        int ci = int(d.crossings_.size());
        for (int s = 0; s < 4; ++s) {
            auto [it, inserted] = id_to_index.try_emplace(rc.label[s], int(d.arc_ids_.size()));
            if (inserted) {
                d.arc_ids_.push_back(rc.label[s]);
                d.ends_.emplace_back();
                d.ends_.back()[0] = ArcEnd{ci, s};
                d.ends_.back()[1] = ArcEnd{-1, -1};
            } else {
                int e = it->second;
                if (d.ends_[e][1].crossing != -1)
                    throw InputError("arc " + std::to_string(rc.label[s]) +
                                     " appears more than twice");
                d.ends_[e][1] = ArcEnd{ci, s};
            }
            c.arc[s] = it->second;
        }
        d.crossings_.push_back(c);
    }
    for (int e = 0; e < d.arc_count(); ++e)
        if (d.ends_[e][1].crossing == -1)
            throw InputError("arc " + std::to_string(d.arc_ids_[e]) + " appears only once");

    for (size_t l = 0; l < tok.loops_ccw.size(); ++l)
        d.free_loops_.push_back(FreeLoop{int(l), tok.loops_ccw[l]});

    d.end_at_.assign(d.crossing_count(), {});
    for (int ci = 0; ci < d.crossing_count(); ++ci)
        for (int s = 0; s < 4; ++s) {
            int e = d.crossings_[ci].arc[s];
            int t = (d.ends_[e][0] == ArcEnd{ci, s}) ? 0 : 1;
            d.end_at_[ci][s] = {e, t};
        }

    d.infer_orientations();
    d.compute_faces();
    d.validate_planarity();

    if (d.crossing_count() > 0) {
        int min_arc = 0;
        for (int e = 1; e < d.arc_count(); ++e)
            if (d.arc_ids_[e] < d.arc_ids_[min_arc]) min_arc = e;
        // traversal against the orientation arrives at the tail
        d.default_outer_face_ = d.face_of_dart_[2 * min_arc + d.tail_end_[min_arc]];
        d.outer_face_ = d.default_outer_face_;
    }
    return d;
}

void LinkDiagram::infer_orientations() {
    int n_arcs = arc_count();
    std::vector<std::array<EndStatus, 2>> status(n_arcs, {EndStatus::Unknown, EndStatus::Unknown});

    auto set_status = [&](int e, int t, EndStatus st) {
        if (status[e][t] == st) return;
        if (status[e][t] != EndStatus::Unknown || status[e][1 - t] == st)
            throw InputError("inconsistent strand orientation at arc " +
                             std::to_string(arc_ids_[e]));
        status[e][t] = st;
    };

    for (int ci = 0; ci < crossing_count(); ++ci) {
        auto [e_in, t_in] = end_at_[ci][0];
        auto [e_out, t_out] = end_at_[ci][2];
        set_status(e_in, t_in, EndStatus::Head);
        set_status(e_out, t_out, EndStatus::Tail);
    }

    std::vector<int> over_in_slot(crossing_count(), 0); // 0 = undecided
    auto apply_choice = [&](int ci, int in_slot) {
        int out_slot = in_slot == 1 ? 3 : 1;
        auto [pe, pt] = end_at_[ci][in_slot];
        auto [qe, qt] = end_at_[ci][out_slot];
        set_status(pe, pt, EndStatus::Head);
        set_status(qe, qt, EndStatus::Tail);
        over_in_slot[ci] = in_slot;
    };

    auto feasible = [&](int ci, int in_slot) {
        int out_slot = in_slot == 1 ? 3 : 1;
        auto [pe, pt] = end_at_[ci][in_slot];
        auto [qe, qt] = end_at_[ci][out_slot];
        if (pe == qe) return true; // an over-strand looping straight back
        bool p_ok = status[pe][pt] != EndStatus::Tail && status[pe][1 - pt] != EndStatus::Head;
        bool q_ok = status[qe][qt] != EndStatus::Head && status[qe][1 - qt] != EndStatus::Tail;
        return p_ok && q_ok;
    };

    auto propagate = [&]() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int ci = 0; ci < crossing_count(); ++ci) {
                if (over_in_slot[ci]) continue;
                bool a = feasible(ci, 1), b = feasible(ci, 3);
                if (!a && !b)
                    throw InputError("inconsistent strand orientation at crossing " +
                                     std::to_string(ci));
                if (a != b) {
                    apply_choice(ci, a ? 1 : 3);
                    changed = true;
                }
            }
        }
    };
    propagate();

    // Components that never pass under are not pinned by the slot rules;
    // fall back to consecutive arc numbering within the strand.
    std::vector<int> uf(n_arcs);
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
    for (const Crossing& c : crossings_) {
        uf[find(c.arc[0])] = find(c.arc[2]);
        uf[find(c.arc[1])] = find(c.arc[3]);
    }
    std::map<int, std::vector<int>> comp_labels;
    for (int e = 0; e < n_arcs; ++e) comp_labels[find(e)].push_back(arc_ids_[e]);
    for (auto& [root, labels] : comp_labels) std::sort(labels.begin(), labels.end());
    auto successor = [&](int e) {
        const auto& labels = comp_labels[find(e)];
        auto it = std::lower_bound(labels.begin(), labels.end(), arc_ids_[e]);
        ++it;
        return it == labels.end() ? labels.front() : *it;
    };

    for (int ci = 0; ci < crossing_count(); ++ci) {
        if (over_in_slot[ci]) continue;
        int p = crossings_[ci].arc[1];
        int q = crossings_[ci].arc[3];
        if (successor(p) == arc_ids_[q]) {
            apply_choice(ci, 1);
        } else if (successor(q) == arc_ids_[p]) {
            apply_choice(ci, 3);
        } else {
            throw InputError("cannot orient the over-strand of crossing " + std::to_string(ci) +
                             ": arc labels are not consecutive along the strand");
        }
        propagate();
    }

    tail_end_.assign(n_arcs, -1);
    for (int e = 0; e < n_arcs; ++e) {
        if (status[e][0] == EndStatus::Tail && status[e][1] == EndStatus::Head) {
            tail_end_[e] = 0;
        } else if (status[e][0] == EndStatus::Head && status[e][1] == EndStatus::Tail) {
            tail_end_[e] = 1;
        } else {
            throw InputError("arc " + std::to_string(arc_ids_[e]) +
                             " does not have one incoming and one outgoing end");
        }
    }

    n_plus_ = n_minus_ = 0;
    for (int ci = 0; ci < crossing_count(); ++ci) {
        crossings_[ci].sign = over_in_slot[ci] == 3 ? 1 : -1;
        (crossings_[ci].sign > 0 ? n_plus_ : n_minus_)++;
    }

    // strand components, free loops included
    std::map<int, bool> roots;
    for (int e = 0; e < n_arcs; ++e) roots[find(e)] = true;
    link_components_ = int(roots.size()) + int(free_loops_.size());
}

void LinkDiagram::compute_faces() {
    int n_darts = 2 * arc_count();
    face_of_dart_.assign(n_darts, -1);
    faces_.clear();
    for (int d0 = 0; d0 < n_darts; ++d0) {
        if (face_of_dart_[d0] != -1) continue;
        Face face;
        face.id = int(faces_.size());
        int d = d0;
        do {
            face_of_dart_[d] = face.id;
            face.darts.push_back(d);
            ArcEnd at = ends_[d / 2][d % 2];
            int next_slot = (at.slot + 3) % 4;
            auto [e2, t2] = end_at_[at.crossing][next_slot];
            d = 2 * e2 + (1 - t2);
        } while (d != d0);
        faces_.push_back(std::move(face));
    }
}

void LinkDiagram::validate_planarity() const {
    if (crossing_count() == 0) return;

    std::vector<bool> seen(crossing_count(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int visited = 1;
    while (!stack.empty()) {
        int ci = stack.back();
        stack.pop_back();
        for (int s = 0; s < 4; ++s) {
            int e = crossings_[ci].arc[s];
            for (const ArcEnd& end : ends_[e]) {
                if (!seen[end.crossing]) {
                    seen[end.crossing] = true;
                    ++visited;
                    stack.push_back(end.crossing);
                }
            }
        }
    }
    if (visited != crossing_count())
        throw InputError("Euler check failed: the crossing graph is disconnected "
                         "(split PD codes are not supported; use U tokens for far loops)");

    int euler = crossing_count() - arc_count() + face_count();
    if (euler != 2)
        throw InputError("Euler check failed: V-E+F = " + std::to_string(euler) +
                         " != 2; the rotation data is not planar");
}

int LinkDiagram::corner_face(int crossing, int slot) const {
    auto [e, t] = end_at_[crossing][(slot + 1) % 4];
    return face_of_dart_[2 * e + t];
}

void LinkDiagram::set_outer_face(int face_id) {
    if (face_id < 0 || face_id >= face_count())
        throw InputError("outer face id " + std::to_string(face_id) + " out of range (have " +
                         std::to_string(face_count()) + " faces)");
    outer_face_ = face_id;
}

std::string LinkDiagram::render() const {
    std::ostringstream os;
    bool first = true;
    for (const Crossing& c : crossings_) {
        if (!first) os << ' ';
        first = false;
        os << "X[" << arc_ids_[c.arc[0]] << ',' << arc_ids_[c.arc[1]] << ',' << arc_ids_[c.arc[2]]
           << ',' << arc_ids_[c.arc[3]] << ']';
    }
    for (const FreeLoop& l : free_loops_) {
        if (!first) os << ' ';
        first = false;
        os << (l.ccw ? "U+" : "U-");
    }
    return os.str();
}

LinkDiagram LinkDiagram::with_crossing_order(const std::vector<int>& perm) const {
    if (int(perm.size()) != crossing_count())
        throw InputError("crossing permutation has wrong length");
    std::ostringstream os;
    bool first = true;
    for (int idx : perm) {
        const Crossing& c = crossings_.at(idx);
        if (!first) os << ' ';
        first = false;
        os << "X[" << arc_ids_[c.arc[0]] << ',' << arc_ids_[c.arc[1]] << ',' << arc_ids_[c.arc[2]]
           << ',' << arc_ids_[c.arc[3]] << ']';
    }
    for (const FreeLoop& l : free_loops_) {
        if (!first) os << ' ';
        first = false;
        os << (l.ccw ? "U+" : "U-");
    }
    return parse(os.str());
}

} // namespace twinfoam
