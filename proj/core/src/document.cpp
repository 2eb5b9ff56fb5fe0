#include "magtop/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "magtop/errors.hpp"

namespace magtop {

namespace {

using json = nlohmann::json;

const json& field(const json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

std::string text(const json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

Rational number(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw ParseError("numbers must be integers or \"p/q\" strings, got " + j.dump());
}

std::vector<std::string> strings(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto& e : j) out.push_back(text(e, what));
    return out;
}

MetricSpace parse_space(const json& j) {
    if (!j.is_object()) throw ParseError("a space document must be an object");
    const std::string type = text(field(j, "type"), "type");
    if (type == "matrix") {
        std::vector<std::string> labels = strings(field(j, "labels"), "labels");
        const json& rows = field(j, "dist");
        if (!rows.is_array()) throw ParseError("dist must be an array of rows");
        std::vector<std::vector<Rational>> dist;
        for (const auto& row : rows) {
            if (!row.is_array()) throw ParseError("dist rows must be arrays");
            dist.emplace_back();
            for (const auto& x : row) dist.back().push_back(number(x));
        }
        return MetricSpace::from_distance_matrix(std::move(labels), std::move(dist));
    }
    if (type == "graph") {
        std::vector<std::string> vertices = strings(field(j, "vertices"), "vertices");
        const json& edges = field(j, "edges");
        if (!edges.is_array()) throw ParseError("edges must be an array");
        std::vector<WeightedEdge> list;
        for (const auto& e : edges) {
            if (!e.is_array() || e.size() < 2 || e.size() > 3) throw ParseError("edge must be [u, v] or [u, v, w]");
            list.push_back({text(e[0], "edge endpoint"), text(e[1], "edge endpoint"),
                            e.size() == 3 ? number(e[2]) : Rational(1)});
        }
        return MetricSpace::from_weighted_graph(std::move(vertices), list);
    }
    throw ParseError("expected a matrix or graph document, got type '" + type + "'");
}

std::vector<Point> resolve(const MetricSpace& X, const json& j, const char* what) {
    std::vector<Point> out;
    for (const auto& label : strings(j, what)) out.push_back(X.index_of(label));
    return out;
}

}  // namespace

const MetricSpace& Document::metric() const {
    if (!space) throw ParseError("expected a matrix or graph document, got '" + type + "'");
    return *space;
}

GluingSpec Document::gluing() const {
    if (!G || !H) throw ParseError("expected a gluing or twist document, got '" + type + "'");
    return glue(*G, *H, k_in_g, k_in_h);
}

SycamoreTwist Document::twist() const {
    if (type != "twist") throw ParseError("expected a twist document, got '" + type + "'");
    return make_sycamore_twist(*G, *H, k_in_g, k_in_h, alpha);
}

Document parse_document(std::string_view source) {
    json j;
    try {
        j = json::parse(source);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("a document must be a JSON object");

    Document doc;
    doc.type = text(field(j, "type"), "type");
    if (doc.type == "matrix" || doc.type == "graph") {
        doc.space = parse_space(j);
    } else if (doc.type == "gluing" || doc.type == "twist") {
        doc.G = parse_space(field(j, "G"));
        doc.H = parse_space(field(j, "H"));
        doc.k_in_g = resolve(*doc.G, field(j, "K_in_G"), "K_in_G");
        doc.k_in_h = resolve(*doc.H, field(j, "K_in_H"), "K_in_H");
        if (doc.type == "twist") {
            for (Point p : resolve(*doc.G, field(j, "alpha"), "alpha")) {
                const auto it = std::find(doc.k_in_g.begin(), doc.k_in_g.end(), p);
                if (it == doc.k_in_g.end()) throw LabelError("alpha image '" + doc.G->label(p) + "' is not in K");
                doc.alpha.push_back(static_cast<std::size_t>(it - doc.k_in_g.begin()));
            }
        }
    } else if (doc.type == "facets") {
        const json& facets = field(j, "facets");
        if (!facets.is_array()) throw ParseError("facets must be an array");
        for (const auto& f : facets) doc.facets.push_back(strings(f, "facet"));
    } else {
        throw ParseError("unknown document type '" + doc.type + "'");
    }
    return doc;
}

Document load_document(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

std::string hasse_document(const HasseGraph& g) {
    json edges = json::array();
    for (const auto& e : g.edges) edges.push_back({e.u, e.v, e.weight.str()});
    json j = {{"type", "graph"}, {"vertices", g.vertices}, {"edges", edges},
              {"bottom", g.bottom}, {"top", g.top}, {"length", g.length.str()}};
    return j.dump(2);
}

std::string matrix_document(const MetricSpace& X) {
    json dist = json::array();
    for (Point x = 0; x < static_cast<Point>(X.size()); ++x) {
        json row = json::array();
        for (Point y = 0; y < static_cast<Point>(X.size()); ++y) row.push_back(X(x, y).str());
        dist.push_back(row);
    }
    return json{{"type", "matrix"}, {"labels", X.labels()}, {"dist", dist}}.dump(2);
}

}  // namespace magtop
