#include "daisycube.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "daisy/core.hpp"
#include "daisy/invariants.hpp"
#include "daisy/json_io.hpp"
#include "daisy/oracle.hpp"

struct dc_graph {
    daisy::CubeSubgraph g;
};

namespace {

thread_local std::string g_last_error;

dc_status map_errc(daisy::Errc code) {
    switch (code) {
        case daisy::Errc::invalid_argument: return DC_ERR_INVALID_ARG;
        case daisy::Errc::size_limit: return DC_ERR_SIZE_LIMIT;
        case daisy::Errc::parse: return DC_ERR_PARSE;
        case daisy::Errc::disconnected: return DC_ERR_DISCONNECTED;
        case daisy::Errc::not_daisy: return DC_ERR_NOT_DAISY;
        case daisy::Errc::not_isometric: return DC_ERR_NOT_ISOMETRIC;
        case daisy::Errc::overflow: return DC_ERR_OVERFLOW;
    }
    return DC_ERR_INVALID_ARG;
}

template <typename Fn>
dc_status wrap(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return DC_OK;
    } catch (const daisy::Error& e) {
        g_last_error = e.what();
        return map_errc(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return DC_ERR_INVALID_ARG;
    }
}

dc_status make_graph(dc_graph** out, daisy::CubeSubgraph g) {
    if (!out) return DC_ERR_INVALID_ARG;
    *out = new dc_graph{std::move(g)};
    return DC_OK;
}

std::uint64_t effective_cap(uint64_t cap) {
    return cap == 0 ? daisy::kDefaultVertexCap : cap;
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void fill_report(const daisy::IndexReport& r, dc_index_report* out) {
    out->vertex_count = r.vertex_count;
    out->edge_count = r.edge_count;
    out->wiener = r.wiener;
    out->mostar = r.mostar;
    out->residual = r.residual;
    out->relation_holds = r.relation_holds() ? 1 : 0;
}

} // namespace

extern "C" {

const char* dc_status_name(dc_status status) {
    switch (status) {
        case DC_OK: return "ok";
        case DC_ERR_INVALID_ARG: return "invalid argument";
        case DC_ERR_SIZE_LIMIT: return "size limit exceeded";
        case DC_ERR_PARSE: return "parse error";
        case DC_ERR_DISCONNECTED: return "graph is disconnected";
        case DC_ERR_NOT_DAISY: return "labeling is not downward-closed";
        case DC_ERR_NOT_ISOMETRIC: return "labeling is not isometric";
        case DC_ERR_OVERFLOW: return "arithmetic overflow";
    }
    return "unknown status";
}

const char* dc_last_error(void) { return g_last_error.c_str(); }

void dc_string_free(char* s) { delete[] s; }

void dc_graph_free(dc_graph* g) { delete g; }

dc_status dc_graph_hypercube(int n, uint64_t vertex_cap, dc_graph** out) {
    return wrap([&] { make_graph(out, daisy::hypercube(n, effective_cap(vertex_cap))); });
}

dc_status dc_graph_fibonacci(int n, uint64_t vertex_cap, dc_graph** out) {
    return wrap([&] { make_graph(out, daisy::fibonacci_cube(n, effective_cap(vertex_cap))); });
}

dc_status dc_graph_lucas(int n, uint64_t vertex_cap, dc_graph** out) {
    return wrap([&] { make_graph(out, daisy::lucas_cube(n, effective_cap(vertex_cap))); });
}

dc_status dc_graph_avoiding_pattern(int n, const char* pattern, uint64_t vertex_cap,
                                    dc_graph** out) {
    if (!pattern) return DC_ERR_INVALID_ARG;
    return wrap([&] {
        make_graph(out, daisy::generalized_fibonacci_cube(n, pattern, effective_cap(vertex_cap)));
    });
}

dc_status dc_graph_vertex_deleted(int n, uint64_t vertex_cap, dc_graph** out) {
    return wrap([&] { make_graph(out, daisy::vertex_deleted_cube(n, effective_cap(vertex_cap))); });
}

dc_status dc_graph_daisy(int n, const char* const* generators, size_t count,
                         uint64_t vertex_cap, dc_graph** out) {
    if (!generators && count > 0) return DC_ERR_INVALID_ARG;
    return wrap([&] {
        std::vector<daisy::Label> labels;
        labels.reserve(count);
        for (size_t i = 0; i < count; ++i)
            labels.push_back(daisy::label_from_string(generators[i], n));
        auto gen = daisy::make_generator_set(n, std::move(labels));
        make_graph(out, daisy::daisy_closure(gen, effective_cap(vertex_cap)));
    });
}

dc_status dc_graph_from_json(const char* text, dc_graph** out) {
    if (!text) return DC_ERR_INVALID_ARG;
    return wrap([&] { make_graph(out, daisy::graph_from_json(text)); });
}

dc_status dc_graph_from_generators_json(const char* text, uint64_t vertex_cap,
                                        dc_graph** out) {
    if (!text) return DC_ERR_INVALID_ARG;
    return wrap([&] {
        auto gen = daisy::generators_from_json(text);
        make_graph(out, daisy::daisy_closure(gen, effective_cap(vertex_cap)));
    });
}

dc_status dc_graph_to_json(const dc_graph* g, char** out) {
    if (!g || !out) return DC_ERR_INVALID_ARG;
    return wrap([&] { *out = copy_string(daisy::graph_to_json(g->g)); });
}

int dc_graph_dimension(const dc_graph* g) { return g ? g->g.n : -1; }

uint64_t dc_graph_vertex_count(const dc_graph* g) { return g ? g->g.vertices.size() : 0; }

uint64_t dc_graph_edge_count(const dc_graph* g) { return g ? g->g.edge_count() : 0; }

dc_status dc_graph_is_connected(const dc_graph* g, int* out) {
    if (!g || !out) return DC_ERR_INVALID_ARG;
    return wrap([&] { *out = daisy::is_connected(daisy::build_adjacency(g->g)) ? 1 : 0; });
}

dc_status dc_graph_is_downward_closed(const dc_graph* g, int* out) {
    if (!g || !out) return DC_ERR_INVALID_ARG;
    return wrap([&] { *out = daisy::is_downward_closed(g->g) ? 1 : 0; });
}

dc_status dc_graph_is_isometric(const dc_graph* g, int* out) {
    if (!g || !out) return DC_ERR_INVALID_ARG;
    return wrap([&] { *out = daisy::is_isometric(daisy::build_adjacency(g->g)) ? 1 : 0; });
}

dc_status dc_graph_direction_profile(const dc_graph* g, uint64_t* e, uint64_t* w0,
                                     uint64_t* w1) {
    if (!g || !e || !w0 || !w1) return DC_ERR_INVALID_ARG;
    return wrap([&] {
        auto p = daisy::direction_profile(g->g);
        for (int i = 0; i < p.n; ++i) {
            e[i] = p.e[static_cast<std::size_t>(i)];
            w0[i] = p.w0[static_cast<std::size_t>(i)];
            w1[i] = p.w1[static_cast<std::size_t>(i)];
        }
    });
}

dc_status dc_graph_indices(const dc_graph* g, dc_method method, dc_index_report* out) {
    if (!g || !out) return DC_ERR_INVALID_ARG;
    return wrap([&] {
        daisy::IndexReport r;
        switch (method) {
            case DC_METHOD_ORACLE: {
                r = daisy::indices_bruteforce(daisy::build_adjacency(g->g));
                break;
            }
            case DC_METHOD_SEMICUBE: {
                // Downward-closed labelings are isometric by construction, so
                // the O(|V|^2) BFS check is only needed for other inputs.
                if (!daisy::is_downward_closed(g->g) &&
                    !daisy::is_isometric(daisy::build_adjacency(g->g)))
                    throw daisy::Error(daisy::Errc::not_isometric,
                                       "semicube formulas require an isometric labeling");
                auto p = daisy::direction_profile(g->g);
                r = daisy::make_report(g->g.vertices.size(), p.total_edges(),
                                       daisy::wiener_semicube(p), daisy::mostar_semicube(p),
                                       "semicube");
                break;
            }
            case DC_METHOD_COROLLARY: {
                auto p = daisy::direction_profile(g->g);
                r = daisy::indices_from_profile(p, g->g.vertices.size());
                break;
            }
            default:
                throw daisy::Error(daisy::Errc::invalid_argument, "unknown method");
        }
        fill_report(r, out);
    });
}

dc_status dc_graph_verify(const dc_graph* g, char** report_json, int* all_ok) {
    if (!g || !report_json || !all_ok) return DC_ERR_INVALID_ARG;
    return wrap([&] {
        using nlohmann::json;
        const daisy::CubeSubgraph& cube = g->g;
        json doc;
        doc["n"] = cube.n;
        doc["V"] = cube.vertices.size();

        std::string first_failure;
        auto check = [&](const char* name, bool ok) {
            doc[name] = ok;
            if (!ok && first_failure.empty()) first_failure = name;
            return ok;
        };

        auto adj = daisy::build_adjacency(cube);
        doc["E"] = cube.edge_count();
        bool connected = check("connected", daisy::is_connected(adj));
        bool isometric = connected && daisy::is_isometric(adj);
        check("isometric", isometric);
        bool closed = check("downward_closed", daisy::is_downward_closed(cube));

        auto profile = daisy::direction_profile(cube);
        bool prop3 = true, prop4 = true;
        for (int i = 0; i < profile.n; ++i) {
            auto idx = static_cast<std::size_t>(i);
            prop3 = prop3 && profile.w0[idx] >= profile.w1[idx];
            prop4 = prop4 && profile.e[idx] == profile.w1[idx];
        }
        // Props 3-4 are theorems about downward-closed labelings only.
        if (closed) {
            check("semicube_dominance", prop3);
            check("edges_match_semicubes", prop4);
        }

        if (!connected) {
            doc["first_failure"] = first_failure;
            doc["ok"] = false;
            *all_ok = 0;
            *report_json = copy_string(doc.dump());
            return;
        }

        auto oracle = daisy::indices_bruteforce(adj);
        doc["oracle"] = {{"W", oracle.wiener}, {"Mo", oracle.mostar}};
        doc["residual"] = oracle.residual;

        bool agree = true;
        if (isometric) {
            auto semi = daisy::make_report(cube.vertices.size(), profile.total_edges(),
                                           daisy::wiener_semicube(profile),
                                           closed ? daisy::mostar_semicube(profile)
                                                  : oracle.mostar,
                                           "semicube");
            doc["semicube"] = {{"W", semi.wiener}, {"Mo", semi.mostar}};
            agree = agree && semi.wiener == oracle.wiener && semi.mostar == oracle.mostar;
        }
        if (closed && isometric) {
            auto cor = daisy::indices_from_profile(profile, cube.vertices.size());
            doc["corollary"] = {{"W", cor.wiener}, {"Mo", cor.mostar}};
            agree = agree && cor.wiener == oracle.wiener && cor.mostar == oracle.mostar;
        }
        check("methods_agree", agree);
        check("relation_holds", oracle.residual == 0);
        if (closed && isometric)
            check("difference_identity", daisy::verify_difference_identity(oracle, profile));

        bool ok = first_failure.empty();
        doc["first_failure"] = ok ? json(nullptr) : json(first_failure);
        doc["ok"] = ok;
        *all_ok = ok ? 1 : 0;
        *report_json = copy_string(doc.dump());
    });
}

} // extern "C"
