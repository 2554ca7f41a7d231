#ifndef DAISY_CORE_HPP
#define DAISY_CORE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "daisy/error.hpp"

namespace daisy {

// One vertex of Q_n packed into a machine word. Coordinate i of the
// left-to-right string u_1...u_n lives at bit position i-1, so the textual
// form only matters at the I/O boundary.
using Label = std::uint64_t;

constexpr int kMaxDimension = 64;
constexpr std::uint64_t kDefaultVertexCap = std::uint64_t{1} << 20;

// u <= v in the coordinatewise partial order.
inline bool label_below(Label u, Label v) { return (u & v) == u; }

std::string label_to_string(Label bits, int n);
Label label_from_string(std::string_view s, int n);

// An induced subgraph of Q_n given by its vertex labels. Edges are implicit:
// pairs of labels at Hamming distance 1. Vertices are kept strictly sorted.
struct CubeSubgraph {
    int n = 0;
    std::vector<Label> vertices;

    bool contains(Label u) const;
    std::uint64_t edge_count() const;
};

// Throws on out-of-range dimension, stray bits, duplicates, unsorted input,
// or an empty vertex set.
void validate(const CubeSubgraph& g);

// A generator set X together with its maximal antichain; both generate the
// same daisy cube.
struct GeneratorSet {
    int n = 0;
    std::vector<Label> generators;
    std::vector<Label> maximal;
};

GeneratorSet make_generator_set(int n, std::vector<Label> generators);

CubeSubgraph hypercube(int n, std::uint64_t vertex_cap = kDefaultVertexCap);
CubeSubgraph fibonacci_cube(int n, std::uint64_t vertex_cap = kDefaultVertexCap);
CubeSubgraph lucas_cube(int n, std::uint64_t vertex_cap = kDefaultVertexCap);
CubeSubgraph generalized_fibonacci_cube(int n, std::string_view pattern,
                                        std::uint64_t vertex_cap = kDefaultVertexCap);
CubeSubgraph vertex_deleted_cube(int n, std::uint64_t vertex_cap = kDefaultVertexCap);

// Downward closure of the generators: every label u with u <= x for some
// generator x. Equal to the closure of the maximal antichain alone.
CubeSubgraph daisy_closure(const GeneratorSet& gen,
                           std::uint64_t vertex_cap = kDefaultVertexCap);

// Elements of X not strictly below another element of X.
std::vector<Label> maximal_antichain(const std::vector<Label>& labels);

// True iff clearing any set bit of any vertex stays inside the vertex set.
// Under this embedding that is exactly the daisy-cube condition.
bool is_downward_closed(const CubeSubgraph& g);

// F_k with F_0 = 0, F_1 = 1. Throws on overflow of uint64.
std::uint64_t fibonacci_number(unsigned k);

} // namespace daisy

#endif
