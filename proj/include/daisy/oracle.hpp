#ifndef DAISY_ORACLE_HPP
#define DAISY_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "daisy/core.hpp"
#include "daisy/invariants.hpp"

namespace daisy {

// Brute-force ground truth. Distances come from BFS only, never from Hamming
// shortcuts, so these results are independent of the semicube formulas they
// are used to check.

struct AdjacencyView {
    int n = 0;
    std::vector<Label> labels; // sorted, index = position
    std::vector<std::vector<int>> nbrs;

    std::size_t size() const { return labels.size(); }
};

struct EdgeSideCount {
    std::uint64_t closer_to_u = 0;
    std::uint64_t closer_to_v = 0;
    std::uint64_t ties = 0;
};

AdjacencyView build_adjacency(const CubeSubgraph& g);

// Unweighted shortest-path distances from source; -1 marks unreachable.
std::vector<int> bfs_distances(const AdjacencyView& a, int source);

bool is_connected(const AdjacencyView& a);

// Sum of BFS distances over unordered pairs. Throws on disconnected input.
std::int64_t wiener_bruteforce(const AdjacencyView& a);

// Sum over edges of |n_uv - n_vu| from per-endpoint BFS. Throws on
// disconnected input.
std::int64_t mostar_bruteforce(const AdjacencyView& a);

// True iff BFS distance equals Hamming distance of labels for all pairs.
bool is_isometric(const AdjacencyView& a);

EdgeSideCount edge_side_counts(const AdjacencyView& a, int u, int v);

struct EdgeSides {
    int u, v; // u < v, so label(u) < label(v)
    EdgeSideCount count;
};

// Side counts for every edge from one BFS per vertex; the |V| x |V| distance
// matrix is never materialized.
std::vector<EdgeSides> all_edge_side_counts(const AdjacencyView& a);

IndexReport indices_bruteforce(const AdjacencyView& a);

} // namespace daisy

#endif
