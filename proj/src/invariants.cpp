#include "daisy/invariants.hpp"

#include <numeric>

namespace daisy {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 value, const char* what) {
    if (value > i128{INT64_MAX} || value < i128{INT64_MIN})
        throw Error(Errc::overflow, std::string(what) + " does not fit in 64 bits");
    return static_cast<std::int64_t>(value);
}

} // namespace

std::uint64_t DirectionProfile::total_edges() const {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

DirectionProfile direction_profile(const CubeSubgraph& g) {
    DirectionProfile p;
    p.n = g.n;
    p.e.assign(static_cast<std::size_t>(g.n), 0);
    p.w0.assign(static_cast<std::size_t>(g.n), 0);
    p.w1.assign(static_cast<std::size_t>(g.n), 0);
    const std::uint64_t total = g.vertices.size();
    for (Label u : g.vertices) {
        for (int i = 0; i < g.n; ++i) {
            if (u >> i & 1) {
                ++p.w1[static_cast<std::size_t>(i)];
                if (g.contains(u ^ (Label{1} << i))) ++p.e[static_cast<std::size_t>(i)];
            }
        }
    }
    for (int i = 0; i < g.n; ++i)
        p.w0[static_cast<std::size_t>(i)] = total - p.w1[static_cast<std::size_t>(i)];
    return p;
}

std::int64_t wiener_semicube(const DirectionProfile& p) {
    i128 sum = 0;
    for (int i = 0; i < p.n; ++i) {
        auto idx = static_cast<std::size_t>(i);
        sum += i128{p.w0[idx]} * i128{p.w1[idx]};
    }
    return narrow(sum, "Wiener index");
}

std::int64_t mostar_semicube(const DirectionProfile& p) {
    i128 sum = 0;
    for (int i = 0; i < p.n; ++i) {
        auto idx = static_cast<std::size_t>(i);
        if (p.w0[idx] < p.w1[idx])
            throw Error(Errc::not_daisy,
                        "direction " + std::to_string(i + 1) +
                            " has |W_0| < |W_1|; labeling is not downward-closed");
        sum += i128{p.w1[idx]} * i128{p.w0[idx] - p.w1[idx]};
    }
    return narrow(sum, "Mostar index");
}

IndexReport indices_from_profile(const DirectionProfile& p, std::uint64_t vertex_count) {
    i128 sq = 0;
    for (int i = 0; i < p.n; ++i) {
        auto idx = static_cast<std::size_t>(i);
        if (p.e[idx] != p.w1[idx])
            throw Error(Errc::not_daisy,
                        "direction " + std::to_string(i + 1) +
                            " has |E_i| != |W_1|; labeling is not downward-closed");
        sq += i128{p.e[idx]} * i128{p.e[idx]};
    }
    const std::uint64_t edges = p.total_edges();
    i128 ve = i128{vertex_count} * i128{edges};
    IndexReport r;
    r.vertex_count = vertex_count;
    r.edge_count = edges;
    r.wiener = narrow(ve - sq, "Wiener index");
    r.mostar = narrow(ve - 2 * sq, "Mostar index");
    r.method = "corollary";
    r.residual = narrow(2 * i128{r.wiener} - i128{r.mostar} - ve, "relation residual");
    return r;
}

IndexReport make_report(std::uint64_t vertex_count, std::uint64_t edge_count,
                        std::int64_t wiener, std::int64_t mostar, std::string method) {
    IndexReport r;
    r.vertex_count = vertex_count;
    r.edge_count = edge_count;
    r.wiener = wiener;
    r.mostar = mostar;
    r.method = std::move(method);
    r.residual = narrow(2 * i128{wiener} - i128{mostar} - i128{vertex_count} * i128{edge_count},
                        "relation residual");
    return r;
}

bool verify_relation(const IndexReport& r) { return r.residual == 0; }

bool verify_difference_identity(const IndexReport& r, const DirectionProfile& p) {
    i128 sum = 0;
    for (std::uint64_t w1 : p.w1) sum += i128{w1} * i128{w1};
    return i128{r.wiener} - i128{r.mostar} == sum;
}

} // namespace daisy
