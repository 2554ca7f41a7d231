#include "daisy/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <queue>

namespace daisy {

AdjacencyView build_adjacency(const CubeSubgraph& g) {
    validate(g);
    AdjacencyView a;
    a.n = g.n;
    a.labels = g.vertices;
    a.nbrs.resize(a.labels.size());
    for (std::size_t i = 0; i < a.labels.size(); ++i) {
        Label u = a.labels[i];
        for (int b = 0; b < g.n; ++b) {
            Label v = u ^ (Label{1} << b);
            auto it = std::lower_bound(a.labels.begin(), a.labels.end(), v);
            if (it != a.labels.end() && *it == v)
                a.nbrs[i].push_back(static_cast<int>(it - a.labels.begin()));
        }
    }
    return a;
}

std::vector<int> bfs_distances(const AdjacencyView& a, int source) {
    std::vector<int> dist(a.size(), -1);
    dist[static_cast<std::size_t>(source)] = 0;
    std::queue<int> q;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : a.nbrs[static_cast<std::size_t>(u)]) {
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

bool is_connected(const AdjacencyView& a) {
    if (a.size() == 0) return false;
    auto dist = bfs_distances(a, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

namespace {

void require_connected(const AdjacencyView& a) {
    if (!is_connected(a))
        throw Error(Errc::disconnected, "graph is disconnected; distances undefined");
}

} // namespace

std::int64_t wiener_bruteforce(const AdjacencyView& a) {
    require_connected(a);
    __int128 sum = 0;
    for (std::size_t src = 0; src < a.size(); ++src) {
        auto dist = bfs_distances(a, static_cast<int>(src));
        for (std::size_t v = src + 1; v < a.size(); ++v) sum += dist[v];
    }
    if (sum > __int128{INT64_MAX}) throw Error(Errc::overflow, "Wiener sum overflows");
    return static_cast<std::int64_t>(sum);
}

std::vector<EdgeSides> all_edge_side_counts(const AdjacencyView& a) {
    require_connected(a);
    std::vector<EdgeSides> edges;
    for (std::size_t u = 0; u < a.size(); ++u) {
        for (int v : a.nbrs[u]) {
            if (static_cast<std::size_t>(v) > u)
                edges.push_back({static_cast<int>(u), v, {}});
        }
    }
    // One BFS per vertex updates the counters of every edge at once.
    for (std::size_t w = 0; w < a.size(); ++w) {
        auto dist = bfs_distances(a, static_cast<int>(w));
        for (EdgeSides& e : edges) {
            int du = dist[static_cast<std::size_t>(e.u)];
            int dv = dist[static_cast<std::size_t>(e.v)];
            if (du < dv)
                ++e.count.closer_to_u;
            else if (dv < du)
                ++e.count.closer_to_v;
            else
                ++e.count.ties;
        }
    }
    return edges;
}

std::int64_t mostar_bruteforce(const AdjacencyView& a) {
    __int128 sum = 0;
    for (const EdgeSides& e : all_edge_side_counts(a)) {
        std::uint64_t nu = e.count.closer_to_u, nv = e.count.closer_to_v;
        sum += nu > nv ? nu - nv : nv - nu;
    }
    if (sum > __int128{INT64_MAX}) throw Error(Errc::overflow, "Mostar sum overflows");
    return static_cast<std::int64_t>(sum);
}

bool is_isometric(const AdjacencyView& a) {
    require_connected(a);
    for (std::size_t src = 0; src < a.size(); ++src) {
        auto dist = bfs_distances(a, static_cast<int>(src));
        for (std::size_t v = src + 1; v < a.size(); ++v) {
            int hamming = std::popcount(a.labels[src] ^ a.labels[v]);
            if (dist[v] != hamming) return false;
        }
    }
    return true;
}

EdgeSideCount edge_side_counts(const AdjacencyView& a, int u, int v) {
    const auto& un = a.nbrs[static_cast<std::size_t>(u)];
    if (std::find(un.begin(), un.end(), v) == un.end())
        throw Error(Errc::invalid_argument, "edge not present");
    auto du = bfs_distances(a, u);
    auto dv = bfs_distances(a, v);
    EdgeSideCount c;
    for (std::size_t w = 0; w < a.size(); ++w) {
        if (du[w] < 0 || dv[w] < 0) continue;
        if (du[w] < dv[w])
            ++c.closer_to_u;
        else if (dv[w] < du[w])
            ++c.closer_to_v;
        else
            ++c.ties;
    }
    return c;
}

IndexReport indices_bruteforce(const AdjacencyView& a) {
    std::uint64_t edges = 0;
    for (const auto& nb : a.nbrs) edges += nb.size();
    edges /= 2;
    return make_report(a.size(), edges, wiener_bruteforce(a), mostar_bruteforce(a), "oracle");
}

} // namespace daisy
