#ifndef DAISY_INVARIANTS_HPP
#define DAISY_INVARIANTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "daisy/core.hpp"

namespace daisy {

// Per-direction cardinalities: e[i] edges using direction i+1, w1[i] vertices
// with coordinate i+1 set, w0[i] the complement. e is always measured from
// actual edges so that e_i = w1_i stays a checkable property.
struct DirectionProfile {
    int n = 0;
    std::vector<std::uint64_t> e;
    std::vector<std::uint64_t> w0;
    std::vector<std::uint64_t> w1;

    std::uint64_t total_edges() const;
};

struct IndexReport {
    std::uint64_t vertex_count = 0;
    std::uint64_t edge_count = 0;
    std::int64_t wiener = 0;
    std::int64_t mostar = 0;
    std::string method; // "semicube" | "oracle" | "corollary"
    std::int64_t residual = 0; // 2W - Mo - |V||E|, signed on purpose

    bool relation_holds() const { return residual == 0; }
};

DirectionProfile direction_profile(const CubeSubgraph& g);

// Sum over directions of |W_{i,0}| * |W_{i,1}|. Valid for any isometric
// labeling; the caller is responsible for checking isometry.
std::int64_t wiener_semicube(const DirectionProfile& p);

// Sum over directions of |W_{i,1}| * (|W_{i,0}| - |W_{i,1}|). Requires a
// downward-closed labeling; refuses any direction with w0 < w1 rather than
// taking absolute values.
std::int64_t mostar_semicube(const DirectionProfile& p);

// W = |V||E| - sum e_i^2 and Mo = |V||E| - 2 sum e_i^2. Requires e_i = w1_i
// for every direction (checked).
IndexReport indices_from_profile(const DirectionProfile& p, std::uint64_t vertex_count);

IndexReport make_report(std::uint64_t vertex_count, std::uint64_t edge_count,
                        std::int64_t wiener, std::int64_t mostar, std::string method);

bool verify_relation(const IndexReport& r);

// The companion identity W - Mo = sum w1_i^2.
bool verify_difference_identity(const IndexReport& r, const DirectionProfile& p);

} // namespace daisy

#endif
