#include "daisy/core.hpp"

#include <algorithm>
#include <bit>

namespace daisy {

std::string label_to_string(Label bits, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i) {
        if (bits >> i & 1) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
}

Label label_from_string(std::string_view s, int n) {
    if (static_cast<int>(s.size()) != n)
        throw Error(Errc::parse, "vertex string \"" + std::string(s) + "\" has length " +
                                     std::to_string(s.size()) + ", expected " + std::to_string(n));
    Label bits = 0;
    for (int i = 0; i < n; ++i) {
        char c = s[static_cast<std::size_t>(i)];
        if (c == '1')
            bits |= Label{1} << i;
        else if (c != '0')
            throw Error(Errc::parse, "vertex string contains non-binary character");
    }
    return bits;
}

bool CubeSubgraph::contains(Label u) const {
    return std::binary_search(vertices.begin(), vertices.end(), u);
}

std::uint64_t CubeSubgraph::edge_count() const {
    std::uint64_t edges = 0;
    for (Label u : vertices) {
        for (int i = 0; i < n; ++i) {
            if ((u >> i & 1) && contains(u ^ (Label{1} << i))) ++edges;
        }
    }
    return edges;
}

void validate(const CubeSubgraph& g) {
    if (g.n < 0 || g.n > kMaxDimension)
        throw Error(Errc::invalid_argument, "dimension out of range [0,64]");
    if (g.vertices.empty())
        throw Error(Errc::invalid_argument, "vertex set is empty");
    Label mask = g.n == 64 ? ~Label{0} : (Label{1} << g.n) - 1;
    Label prev = 0;
    bool first = true;
    for (Label u : g.vertices) {
        if ((u & ~mask) != 0)
            throw Error(Errc::parse, "vertex label has bits beyond dimension " + std::to_string(g.n));
        if (!first && u <= prev)
            throw Error(Errc::parse, u == prev ? "duplicate vertex label" : "vertex list not sorted");
        prev = u;
        first = false;
    }
}

namespace {

void check_dimension(int n) {
    if (n < 0 || n > kMaxDimension)
        throw Error(Errc::invalid_argument, "dimension out of range [0,64]");
}

void check_cap(std::uint64_t count, std::uint64_t cap) {
    if (count > cap)
        throw Error(Errc::size_limit, "vertex count " + std::to_string(count) +
                                          " exceeds cap " + std::to_string(cap));
}

// All length-n strings avoiding `pattern` as a contiguous substring, built by
// extending one coordinate at a time. A new occurrence can only end at the
// freshly appended position, so only the last |pattern| coordinates are
// checked.
std::vector<Label> avoid_substring(int n, Label pattern_bits, int pattern_len,
                                   std::uint64_t cap) {
    std::vector<Label> cur{0};
    for (int len = 1; len <= n; ++len) {
        std::vector<Label> next;
        next.reserve(cur.size() * 2);
        for (Label u : cur) {
            for (Label bit : {Label{0}, Label{1}}) {
                Label v = u | bit << (len - 1);
                if (pattern_len <= len) {
                    Label tail = v >> (len - pattern_len);
                    if (tail == pattern_bits) continue;
                }
                next.push_back(v);
            }
        }
        check_cap(next.size(), cap);
        cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end());
    return cur;
}

} // namespace

CubeSubgraph hypercube(int n, std::uint64_t vertex_cap) {
    check_dimension(n);
    if (n >= 63 || (std::uint64_t{1} << n) > vertex_cap)
        throw Error(Errc::size_limit, "hypercube of dimension " + std::to_string(n) +
                                          " exceeds vertex cap");
    CubeSubgraph g{n, {}};
    g.vertices.resize(std::size_t{1} << n);
    for (std::uint64_t u = 0; u < g.vertices.size(); ++u) g.vertices[u] = u;
    return g;
}

CubeSubgraph fibonacci_cube(int n, std::uint64_t vertex_cap) {
    check_dimension(n);
    return {n, avoid_substring(n, 0b11, 2, vertex_cap)};
}

CubeSubgraph lucas_cube(int n, std::uint64_t vertex_cap) {
    check_dimension(n);
    if (n == 0) return {0, {0}};
    // Lambda_1 = K_1 by convention even though "1" has no adjacent pair.
    std::vector<Label> fib = avoid_substring(n, 0b11, 2, vertex_cap);
    std::vector<Label> out;
    out.reserve(fib.size());
    Label first = 1;
    Label last = Label{1} << (n - 1);
    for (Label u : fib) {
        if ((u & first) && (u & last)) continue;
        out.push_back(u);
    }
    return {n, std::move(out)};
}

CubeSubgraph generalized_fibonacci_cube(int n, std::string_view pattern,
                                        std::uint64_t vertex_cap) {
    check_dimension(n);
    if (pattern.empty())
        throw Error(Errc::invalid_argument, "pattern must be nonempty");
    if (pattern.size() > static_cast<std::size_t>(kMaxDimension))
        throw Error(Errc::invalid_argument, "pattern longer than 64 bits");
    Label bits = label_from_string(pattern, static_cast<int>(pattern.size()));
    if (static_cast<int>(pattern.size()) > n) {
        // Pattern cannot occur; the result is all of Q_n.
        return hypercube(n, vertex_cap);
    }
    return {n, avoid_substring(n, bits, static_cast<int>(pattern.size()), vertex_cap)};
}

CubeSubgraph vertex_deleted_cube(int n, std::uint64_t vertex_cap) {
    if (n < 1) throw Error(Errc::invalid_argument, "vertex-deleted cube needs n >= 1");
    CubeSubgraph g = hypercube(n, vertex_cap);
    g.vertices.pop_back(); // 1^n is the largest label
    return g;
}

std::vector<Label> maximal_antichain(const std::vector<Label>& labels) {
    std::vector<Label> sorted(labels);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Label> out;
    for (Label u : sorted) {
        bool dominated = false;
        for (Label v : sorted) {
            if (v != u && label_below(u, v)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(u);
    }
    return out;
}

GeneratorSet make_generator_set(int n, std::vector<Label> generators) {
    check_dimension(n);
    if (generators.empty())
        throw Error(Errc::invalid_argument, "generator set is empty");
    Label mask = n == 64 ? ~Label{0} : (Label{1} << n) - 1;
    for (Label x : generators) {
        if ((x & ~mask) != 0)
            throw Error(Errc::parse, "generator has bits beyond dimension " + std::to_string(n));
    }
    GeneratorSet gen{n, std::move(generators), {}};
    gen.maximal = maximal_antichain(gen.generators);
    return gen;
}

CubeSubgraph daisy_closure(const GeneratorSet& gen, std::uint64_t vertex_cap) {
    check_dimension(gen.n);
    if (gen.maximal.empty())
        throw Error(Errc::invalid_argument, "generator set is empty");
    std::uint64_t estimate = 0;
    for (Label x : gen.maximal) {
        int pc = std::popcount(x);
        if (pc >= 63) throw Error(Errc::size_limit, "closure estimate exceeds cap");
        estimate += std::uint64_t{1} << pc;
        check_cap(estimate, vertex_cap);
    }
    std::vector<Label> out;
    out.reserve(estimate);
    for (Label x : gen.maximal) {
        // standard decrementing-submask loop, including x itself and 0
        Label sub = x;
        while (true) {
            out.push_back(sub);
            if (sub == 0) break;
            sub = (sub - 1) & x;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return {gen.n, std::move(out)};
}

bool is_downward_closed(const CubeSubgraph& g) {
    for (Label u : g.vertices) {
        for (int i = 0; i < g.n; ++i) {
            if ((u >> i & 1) && !g.contains(u ^ (Label{1} << i))) return false;
        }
    }
    return true;
}

std::uint64_t fibonacci_number(unsigned k) {
    if (k == 0) return 0;
    std::uint64_t a = 0, b = 1;
    for (unsigned i = 1; i < k; ++i) {
        if (a > UINT64_MAX - b)
            throw Error(Errc::overflow, "Fibonacci number overflows 64 bits");
        std::uint64_t next = a + b;
        a = b;
        b = next;
    }
    return b;
}

} // namespace daisy
