#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twinfoam/twinfrob.hpp"
#include "twinfoam/webs.hpp"

namespace twinfoam {

enum class EdgeKind { Merge, Split };

struct EdgeSignature {
    EdgeKind kind = EdgeKind::Merge;
    std::vector<ComponentType> source_types; // affected factors, canonical order
    std::vector<ComponentType> target_types;

    friend bool operator==(const EdgeSignature&, const EdgeSignature&) = default;
};

std::string to_string(const EdgeSignature& sig);

struct EdgeDescriptor {
    std::uint32_t J = 0; // source vertex of the edge; target is J | (1 << k)
    int k = -1;
    EdgeKind kind = EdgeKind::Merge;
    int source_factors = 0;
    int target_factors = 0;
    std::vector<int> source_slots; // affected tensor positions, ascending
    std::vector<int> target_slots;
    std::vector<std::pair<int, int>> unaffected; // (source slot, target slot)
    EdgeSignature signature;
};

struct CubeEdgeMap {
    EdgeDescriptor descriptor;
    LinMap matrix; // full tensor-product matrix, sign not included
    int sign = 1;
};

// Matches components by arc content, finds the single merge or split, and
// builds the type signature. Throws MalformedEdgeError when the partitions
// differ by anything else.
EdgeDescriptor classify_edge(const Resolution& src, const Resolution& tgt, int k);

// One of the fourteen local saddle maps, in the uniform storage basis {1, X}
// on every factor. Throws UnsupportedEdgeSignatureError outside the fourteen.
LinMap lookup_local_map(const EdgeSignature& sig, const Params& p);

// Local case tensored with identities on the unaffected factors, with both
// sides permuted to the canonical component orders, and the alternating sign
// (-1)^{#(1-bits of J below k)} attached.
CubeEdgeMap assemble_edge_map(const EdgeDescriptor& desc, const Params& p);

// Every edge of the cube in a stable text format: signature, sign and matrix,
// ordered by (J, k). Suitable for golden-file comparison.
std::string dump_cube(const LinkDiagram& d, const Params& p, const ResolveOptions& opts = {});

} // namespace twinfoam
