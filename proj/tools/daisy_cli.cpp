// Command-line front end for the daisycube library. Links only the C API.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "daisycube.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInputError = 2;

struct GraphDeleter {
    void operator()(dc_graph* g) const { dc_graph_free(g); }
};
using GraphPtr = std::unique_ptr<dc_graph, GraphDeleter>;

struct CliError {
    int exit_code;
    std::string message;
};

int exit_code_for(dc_status status) {
    switch (status) {
        case DC_ERR_PARSE:
        case DC_ERR_INVALID_ARG:
        case DC_ERR_SIZE_LIMIT:
            return kExitInputError;
        default:
            return kExitPropertyFailure;
    }
}

void require_ok(dc_status status, const std::string& context) {
    if (status == DC_OK) return;
    std::string detail = dc_last_error();
    std::string msg = context + ": " + dc_status_name(status);
    if (!detail.empty()) msg += " (" + detail + ")";
    throw CliError{exit_code_for(status), msg};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError{kExitInputError, "cannot open " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw CliError{kExitInputError, "cannot write " + out_path};
    out << text << "\n";
}

struct GenerateOptions {
    std::string family;
    int n = 0;
    std::string pattern;
    std::string generators_path;
    std::uint64_t max_vertices = 0;
};

GraphPtr build_family(const GenerateOptions& opt) {
    dc_graph* raw = nullptr;
    dc_status status;
    if (opt.family == "hypercube") {
        status = dc_graph_hypercube(opt.n, opt.max_vertices, &raw);
    } else if (opt.family == "fibonacci") {
        status = dc_graph_fibonacci(opt.n, opt.max_vertices, &raw);
    } else if (opt.family == "lucas") {
        status = dc_graph_lucas(opt.n, opt.max_vertices, &raw);
    } else if (opt.family == "qnf") {
        if (opt.pattern.empty())
            throw CliError{kExitInputError, "family qnf requires --pattern"};
        status = dc_graph_avoiding_pattern(opt.n, opt.pattern.c_str(), opt.max_vertices, &raw);
    } else if (opt.family == "vertex-deleted") {
        status = dc_graph_vertex_deleted(opt.n, opt.max_vertices, &raw);
    } else if (opt.family == "daisy") {
        if (opt.generators_path.empty())
            throw CliError{kExitInputError, "family daisy requires --generators <path>"};
        std::string text = read_file(opt.generators_path);
        status = dc_graph_from_generators_json(text.c_str(), opt.max_vertices, &raw);
    } else {
        throw CliError{kExitInputError, "unknown family: " + opt.family};
    }
    require_ok(status, "generate " + opt.family);
    return GraphPtr(raw);
}

GraphPtr load_graph(const std::string& path) {
    std::string text = read_file(path);
    dc_graph* raw = nullptr;
    require_ok(dc_graph_from_json(text.c_str(), &raw), "parse " + path);
    return GraphPtr(raw);
}

std::string graph_json(const dc_graph* g) {
    char* text = nullptr;
    require_ok(dc_graph_to_json(g, &text), "serialize graph");
    std::string out(text);
    dc_string_free(text);
    return out;
}

std::string report_json(const dc_index_report& r, const char* method) {
    std::ostringstream out;
    out << "{\"V\":" << r.vertex_count << ",\"E\":" << r.edge_count << ",\"W\":" << r.wiener
        << ",\"Mo\":" << r.mostar << ",\"method\":\"" << method
        << "\",\"residual\":" << r.residual
        << ",\"relation_holds\":" << (r.relation_holds ? "true" : "false") << "}";
    return out.str();
}

struct MethodResult {
    const char* name;
    dc_index_report report;
};

// Computes the requested methods; "all" demands success and agreement of
// every method.
std::vector<MethodResult> compute_indices(const dc_graph* g, const std::string& method) {
    std::vector<MethodResult> results;
    auto run = [&](dc_method m, const char* name) {
        dc_index_report r;
        require_ok(dc_graph_indices(g, m, &r), std::string("indices (") + name + ")");
        results.push_back({name, r});
    };
    if (method == "semicube") {
        run(DC_METHOD_SEMICUBE, "semicube");
    } else if (method == "oracle") {
        run(DC_METHOD_ORACLE, "oracle");
    } else if (method == "corollary") {
        run(DC_METHOD_COROLLARY, "corollary");
    } else if (method == "all") {
        run(DC_METHOD_SEMICUBE, "semicube");
        run(DC_METHOD_ORACLE, "oracle");
        run(DC_METHOD_COROLLARY, "corollary");
    } else {
        throw CliError{kExitInputError, "unknown method: " + method};
    }
    return results;
}

bool methods_agree(const std::vector<MethodResult>& results) {
    for (std::size_t i = 1; i < results.size(); ++i) {
        if (results[i].report.wiener != results[0].report.wiener ||
            results[i].report.mostar != results[0].report.mostar)
            return false;
    }
    return true;
}

int run_indices(const std::string& path, const std::string& method, const std::string& out_path) {
    GraphPtr g = load_graph(path);
    auto results = compute_indices(g.get(), method);
    if (results.size() == 1) {
        write_output(report_json(results[0].report, results[0].name), out_path);
        return kExitOk;
    }
    bool agree = methods_agree(results);
    std::ostringstream out;
    out << "{\"reports\":[";
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (i) out << ",";
        out << report_json(results[i].report, results[i].name);
    }
    out << "],\"agreement\":" << (agree ? "true" : "false") << "}";
    write_output(out.str(), out_path);
    if (!agree) {
        std::cerr << "error: index methods disagree\n";
        return kExitPropertyFailure;
    }
    return kExitOk;
}

int run_verify(const std::string& path) {
    GraphPtr g = load_graph(path);
    char* report = nullptr;
    int ok = 0;
    require_ok(dc_graph_verify(g.get(), &report, &ok), "verify " + path);
    std::cout << report << "\n";
    dc_string_free(report);
    return ok ? kExitOk : kExitPropertyFailure;
}

struct SweepOptions {
    std::string family;
    int n_min = 0;
    int n_max = 0;
    std::string pattern;
    std::string format = "csv";
    std::uint64_t max_vertices = 0;
};

int run_sweep(const SweepOptions& opt) {
    if (opt.n_min > opt.n_max) throw CliError{kExitInputError, "empty sweep range"};
    if (opt.format != "csv" && opt.format != "json")
        throw CliError{kExitInputError, "unknown format: " + opt.format};
    const bool csv = opt.format == "csv";
    if (csv)
        std::cout << "family,n,V,E,W,Mo,residual,relation_holds,method\n";
    else
        std::cout << "[";
    bool first_row = true;
    for (int n = opt.n_min; n <= opt.n_max; ++n) {
        GenerateOptions gen{opt.family, n, opt.pattern, "", opt.max_vertices};
        GraphPtr g;
        try {
            g = build_family(gen);
        } catch (const CliError& e) {
            // Cap exceeded mid-sweep: keep the partial output, report, stop.
            if (!csv) std::cout << "]\n";
            std::cout.flush();
            std::cerr << "error: " << e.message << " (sweep stopped at n=" << n << ")\n";
            return e.exit_code;
        }
        // Cross-check every method that applies to this instance. The
        // all-pairs oracle is quadratic, so it only runs on small graphs.
        constexpr std::uint64_t kOracleLimit = 4096;
        std::vector<MethodResult> results;
        dc_index_report r;
        if (dc_graph_vertex_count(g.get()) <= kOracleLimit) {
            require_ok(dc_graph_indices(g.get(), DC_METHOD_ORACLE, &r), "sweep oracle");
            results.push_back({"oracle", r});
        }
        if (dc_graph_indices(g.get(), DC_METHOD_SEMICUBE, &r) == DC_OK)
            results.push_back({"semicube", r});
        if (dc_graph_indices(g.get(), DC_METHOD_COROLLARY, &r) == DC_OK)
            results.push_back({"corollary", r});
        if (results.empty())
            throw CliError{kExitPropertyFailure,
                           "no index method applies at n=" + std::to_string(n)};
        if (!methods_agree(results)) {
            std::cerr << "error: index methods disagree at n=" << n << "\n";
            return kExitPropertyFailure;
        }
        std::string method = results.size() == 3 ? "all" : results[0].name;
        for (std::size_t i = 1; i < results.size() && method != "all"; ++i)
            method += std::string("+") + results[i].name;
        const dc_index_report& row = results[0].report;
        if (csv) {
            std::cout << opt.family << "," << n << "," << row.vertex_count << ","
                      << row.edge_count << "," << row.wiener << "," << row.mostar << ","
                      << row.residual << "," << (row.relation_holds ? "true" : "false")
                      << "," << method << "\n";
        } else {
            if (!first_row) std::cout << ",";
            std::cout << "{\"family\":\"" << opt.family << "\",\"n\":" << n
                      << ",\"V\":" << row.vertex_count << ",\"E\":" << row.edge_count
                      << ",\"W\":" << row.wiener << ",\"Mo\":" << row.mostar
                      << ",\"residual\":" << row.residual << ",\"relation_holds\":"
                      << (row.relation_holds ? "true" : "false") << ",\"method\":\"" << method
                      << "\"}";
        }
        first_row = false;
    }
    if (!csv) std::cout << "]\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Daisy cube construction and distance-invariant toolkit"};
    app.require_subcommand(1);

    GenerateOptions gen_opt;
    std::string gen_out;
    auto* gen = app.add_subcommand("generate", "Construct a graph and emit its JSON");
    gen->add_option("--family", gen_opt.family,
                    "hypercube|fibonacci|lucas|qnf|vertex-deleted|daisy")
        ->required();
    gen->add_option("-n,--dim", gen_opt.n, "dimension");
    gen->add_option("--pattern", gen_opt.pattern, "forbidden substring (family qnf)");
    gen->add_option("--generators", gen_opt.generators_path, "generator JSON file (family daisy)");
    gen->add_option("--max-vertices", gen_opt.max_vertices, "vertex-count cap override");
    gen->add_option("--out", gen_out, "output path (default stdout)");

    std::string idx_path, idx_method = "all", idx_out;
    auto* idx = app.add_subcommand("indices", "Compute Wiener and Mostar indices");
    idx->add_option("graph", idx_path, "graph JSON file")->required();
    idx->add_option("--method", idx_method, "semicube|oracle|corollary|all (default all)");
    idx->add_option("--out", idx_out, "output path (default stdout)");

    std::string verify_path;
    auto* ver = app.add_subcommand("verify", "Check every structural property");
    ver->add_option("graph", verify_path, "graph JSON file")->required();

    SweepOptions sweep_opt;
    auto* sweep = app.add_subcommand("sweep", "Tabulate indices over a range of dimensions");
    sweep->add_option("--family", sweep_opt.family, "graph family")->required();
    sweep->add_option("--n-min", sweep_opt.n_min, "first dimension")->required();
    sweep->add_option("--n-max", sweep_opt.n_max, "last dimension")->required();
    sweep->add_option("--pattern", sweep_opt.pattern, "forbidden substring (family qnf)");
    sweep->add_option("--format", sweep_opt.format, "csv|json (default csv)");
    sweep->add_option("--max-vertices", sweep_opt.max_vertices, "vertex-count cap override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (gen->parsed()) {
            GraphPtr g = build_family(gen_opt);
            write_output(graph_json(g.get()), gen_out);
            return kExitOk;
        }
        if (idx->parsed()) return run_indices(idx_path, idx_method, idx_out);
        if (ver->parsed()) return run_verify(verify_path);
        if (sweep->parsed()) return run_sweep(sweep_opt);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.exit_code;
    }
    return kExitOk;
}
