#include "twinfoam/cube.hpp"

#include <bit>
#include <map>
#include <sstream>

namespace twinfoam {

std::string to_string(const EdgeSignature& sig) {
    std::ostringstream os;
    os << (sig.kind == EdgeKind::Merge ? "merge(" : "split(");
    for (size_t i = 0; i < sig.source_types.size(); ++i)
        os << (i ? "," : "") << to_string(sig.source_types[i]);
    os << ")->(";
    for (size_t i = 0; i < sig.target_types.size(); ++i)
        os << (i ? "," : "") << to_string(sig.target_types[i]);
    os << ')';
    return os.str();
}

namespace {

// Components are identified across an edge by what they contain.
using ComponentKey = std::pair<int, std::vector<int>>; // (free loop id or -1, arcs)

ComponentKey key_of(const WebComponent& c) {
    return {c.free_loop ? *c.free_loop : -1, c.origin_arcs};
}

} // namespace

EdgeDescriptor classify_edge(const Resolution& src, const Resolution& tgt, int k) {
    if (tgt.J != (src.J | (1u << k)) || src.J == tgt.J)
        throw MalformedEdgeError("edge endpoints are not (J, J | {k})");

    EdgeDescriptor desc;
    desc.J = src.J;
    desc.k = k;
    desc.source_factors = int(src.components.size());
    desc.target_factors = int(tgt.components.size());

    std::map<ComponentKey, int> src_at, tgt_at;
    for (int l = 0; l < desc.source_factors; ++l) src_at[key_of(src.components[l])] = l;
    for (int l = 0; l < desc.target_factors; ++l) tgt_at[key_of(tgt.components[l])] = l;

    for (const auto& [key, sl] : src_at) {
        auto it = tgt_at.find(key);
        if (it == tgt_at.end()) {
            desc.source_slots.push_back(sl);
        } else {
            if (src.type_sequence[sl] != tgt.type_sequence[it->second])
                throw MalformedEdgeError("an untouched component changed type across an edge");
            desc.unaffected.emplace_back(sl, it->second);
        }
    }
    for (const auto& [key, tl] : tgt_at)
        if (!src_at.count(key)) desc.target_slots.push_back(tl);

    auto arcs_of = [](const Resolution& r, const std::vector<int>& slots) {
        std::vector<int> arcs;
        for (int l : slots) {
            if (r.components[l].free_loop)
                throw MalformedEdgeError("a free loop appears in the affected slots of an edge");
            arcs.insert(arcs.end(), r.components[l].origin_arcs.begin(),
                        r.components[l].origin_arcs.end());
        }
        std::sort(arcs.begin(), arcs.end());
        return arcs;
    };

    bool merge = desc.source_slots.size() == 2 && desc.target_slots.size() == 1;
    bool split = desc.source_slots.size() == 1 && desc.target_slots.size() == 2;
    if ((!merge && !split) || arcs_of(src, desc.source_slots) != arcs_of(tgt, desc.target_slots))
        throw MalformedEdgeError("edge J=" + std::to_string(src.J) + " k=" + std::to_string(k) +
                                 " is not a single merge or split");
    desc.kind = merge ? EdgeKind::Merge : EdgeKind::Split;

    desc.signature.kind = desc.kind;
    for (int l : desc.source_slots) desc.signature.source_types.push_back(src.type_sequence[l]);
    for (int l : desc.target_slots) desc.signature.target_types.push_back(tgt.type_sequence[l]);
    return desc;
}

LinMap lookup_local_map(const EdgeSignature& sig, const Params& p) {
    using CT = ComponentType;
    const CT P = CT::CirclePos, N = CT::CircleNeg, W = CT::BiWeb;
    LinMap id = LinMap::identity(2);
    GaussianRational i = GaussianRational::i();

    auto is = [&](std::initializer_list<CT> from, std::initializer_list<CT> to) {
        return sig.source_types == std::vector<CT>(from) && sig.target_types == std::vector<CT>(to);
    };

    if (sig.kind == EdgeKind::Merge) {
        if (is({P, N}, {W})) return z1(p) * m_C(p) * tensor(g_map(p), id);
        if (is({N, P}, {W})) return z1(p) * m_C(p) * tensor(id, g_map(p));
        if (is({N, W}, {W})) return m_W(p) * tensor(z1(p), id);
        if (is({W, N}, {W})) return m_W(p) * tensor(id, z1(p));
        if (is({P, W}, {W})) return m_W(p) * tensor(z1(p) * g_map(p), id);
        if (is({W, P}, {W})) return m_W(p) * tensor(id, z1(p) * g_map(p));
        if (is({W, W}, {W})) return m_W(p);
    } else {
        if (is({W}, {P, N})) return -(tensor(f_map(p), id) * delta_C(p) * z1s(p));
        if (is({W}, {N, P})) return -(tensor(id, f_map(p)) * delta_C(p) * z1s(p));
        if (is({W}, {W, N})) return (tensor(id, z1s(p)) * delta_W(p)).scaled(i);
        if (is({W}, {N, W})) return (tensor(z1s(p), id) * delta_W(p)).scaled(i);
        if (is({W}, {P, W})) return (tensor(f_map(p) * z1s(p), id) * delta_W(p)).scaled(i);
        if (is({W}, {W, P})) return (tensor(id, f_map(p) * z1s(p)) * delta_W(p)).scaled(i);
        if (is({W}, {W, W})) return delta_W(p);
    }
    throw UnsupportedEdgeSignatureError("no local map for signature " + to_string(sig));
}

CubeEdgeMap assemble_edge_map(const EdgeDescriptor& desc, const Params& p) {
    LinMap local = lookup_local_map(desc.signature, p);

    int src_n = desc.source_factors;
    int tgt_n = desc.target_factors;
    int src_dim = 1 << src_n;
    int tgt_dim = 1 << tgt_n;
    LinMap full(tgt_dim, src_dim);

    auto factor_bit = [](int index, int slot, int n) { return (index >> (n - 1 - slot)) & 1; };

    for (int s = 0; s < src_dim; ++s) {
        int local_col = 0;
        for (int sl : desc.source_slots) local_col = (local_col << 1) | factor_bit(s, sl, src_n);
        int fixed = 0;
        for (const auto& [ssl, tsl] : desc.unaffected)
            if (factor_bit(s, ssl, src_n)) fixed |= 1 << (tgt_n - 1 - tsl);
        for (int local_row = 0; local_row < local.rows(); ++local_row) {
            const GaussianRational& v = local.at(local_row, local_col);
            if (v.is_zero()) continue;
            int t = fixed;
            for (size_t a = 0; a < desc.target_slots.size(); ++a) {
                int bit = (local_row >> (desc.target_slots.size() - 1 - a)) & 1;
                if (bit) t |= 1 << (tgt_n - 1 - desc.target_slots[a]);
            }
            full.at(t, s) += v;
        }
    }

    CubeEdgeMap out;
    out.descriptor = desc;
    out.matrix = std::move(full);
    out.sign = std::popcount(desc.J & ((1u << desc.k) - 1u)) % 2 == 0 ? 1 : -1;
    return out;
}

std::string dump_cube(const LinkDiagram& d, const Params& p, const ResolveOptions& opts) {
    int n = d.crossing_count();
    std::vector<Resolution> res;
    res.reserve(size_t(1) << n);
    for (std::uint32_t J = 0; J < (1u << n); ++J) res.push_back(resolve(d, J, opts));

    std::ostringstream os;
    for (std::uint32_t J = 0; J < (1u << n); ++J) {
        os << dump_resolution(res[J], d);
        for (int k = 0; k < n; ++k) {
            if ((J >> k) & 1u) continue;
            EdgeDescriptor desc = classify_edge(res[J], res[J | (1u << k)], k);
            CubeEdgeMap edge = assemble_edge_map(desc, p);
            os << "edge J=";
            for (int b = 0; b < n; ++b) os << ((J >> b) & 1u);
            os << " k=" << k << ' ' << to_string(desc.signature)
               << " sign=" << (edge.sign > 0 ? "+1" : "-1") << '\n'
               << edge.matrix.to_string() << '\n';
        }
    }
    return os.str();
}

} // namespace twinfoam
