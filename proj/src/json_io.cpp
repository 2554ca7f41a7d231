#include "daisy/json_io.hpp"

#include <json.hpp>

namespace daisy {

using nlohmann::json;

std::string graph_to_json(const CubeSubgraph& g) {
    json doc;
    doc["n"] = g.n;
    json verts = json::array();
    for (Label u : g.vertices) verts.push_back(label_to_string(u, g.n));
    doc["vertices"] = std::move(verts);
    return doc.dump();
}

namespace {

json parse(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw Error(Errc::parse, "invalid JSON");
    return doc;
}

int read_dimension(const json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
        throw Error(Errc::parse, "missing integer field \"n\"");
    int n = doc["n"].get<int>();
    if (n < 0 || n > kMaxDimension)
        throw Error(Errc::parse, "dimension out of range [0,64]");
    return n;
}

std::vector<Label> read_labels(const json& doc, const char* field, int n) {
    if (!doc.contains(field) || !doc[field].is_array())
        throw Error(Errc::parse, std::string("missing array field \"") + field + "\"");
    std::vector<Label> out;
    for (const auto& item : doc[field]) {
        if (!item.is_string()) throw Error(Errc::parse, "vertex entries must be strings");
        out.push_back(label_from_string(item.get<std::string>(), n));
    }
    return out;
}

} // namespace

CubeSubgraph graph_from_json(const std::string& text) {
    json doc = parse(text);
    int n = read_dimension(doc);
    CubeSubgraph g{n, read_labels(doc, "vertices", n)};
    validate(g); // rejects duplicates and unsorted input
    return g;
}

GeneratorSet generators_from_json(const std::string& text) {
    json doc = parse(text);
    int n = read_dimension(doc);
    return make_generator_set(n, read_labels(doc, "generators", n));
}

std::string report_to_json(const IndexReport& r) {
    json doc;
    doc["V"] = r.vertex_count;
    doc["E"] = r.edge_count;
    doc["W"] = r.wiener;
    doc["Mo"] = r.mostar;
    doc["method"] = r.method;
    doc["residual"] = r.residual;
    doc["relation_holds"] = r.relation_holds();
    return doc.dump();
}

std::string profile_to_json(const DirectionProfile& p) {
    json doc;
    doc["n"] = p.n;
    doc["e"] = p.e;
    doc["w0"] = p.w0;
    doc["w1"] = p.w1;
    return doc.dump();
}

} // namespace daisy
