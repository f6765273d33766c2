#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "b2crystal/graph.hpp"

namespace b2crystal {

namespace detail {

inline std::vector<VertexData> sorted_vertices(const ColoredDigraph& g) {
    std::vector<VertexData> vs = g.vertices();
    std::sort(vs.begin(), vs.end(),
              [](const VertexData& a, const VertexData& b) { return a.id < b.id; });
    return vs;
}

inline std::vector<EdgeData> sorted_edges(const ColoredDigraph& g) {
    std::vector<EdgeData> es = g.edges();
    std::sort(es.begin(), es.end(), [](const EdgeData& a, const EdgeData& b) {
        return std::tie(a.src, a.color, a.dst) < std::tie(b.src, b.color, b.dst);
    });
    return es;
}

} // namespace detail

inline constexpr const char* kGraphFormat = "b2crystal-graph-v1";
inline constexpr const char* kDecoratedFormat = "b2crystal-decorated-v1";

// Deterministic document: vertices sorted by id, edges by (src, color, dst).
inline std::string to_json(const ColoredDigraph& g) {
    nlohmann::ordered_json doc;
    doc["format"] = kGraphFormat;
    doc["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : detail::sorted_vertices(g))
        doc["vertices"].push_back({{"id", v.id}, {"central", v.central}});
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : detail::sorted_edges(g))
        doc["edges"].push_back({{"src", e.src},
                                {"dst", e.dst},
                                {"color", color_number(e.color)},
                                {"central", e.central}});
    return doc.dump(2);
}

inline ColoredDigraph from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    try {
        if (!doc.is_object() || doc.at("format") != kGraphFormat)
            throw ParseError(std::string("expected format ") + kGraphFormat);
        ColoredDigraph g;
        for (const auto& v : doc.at("vertices")) {
            const std::string id = v.at("id").get<std::string>();
            if (g.has_vertex(id)) throw ParseError("duplicate vertex id: " + id);
            g.add_vertex(id, v.value("central", false));
        }
        for (const auto& e : doc.at("edges")) {
            const std::string src = e.at("src").get<std::string>();
            const std::string dst = e.at("dst").get<std::string>();
            const int color = e.at("color").get<int>();
            if (color != 1 && color != 2)
                throw ParseError("edge color must be 1 or 2, got " +
                                 std::to_string(color));
            if (!g.has_vertex(src) || !g.has_vertex(dst))
                throw ParseError("edge endpoint is not a declared vertex: " + src +
                                 " -> " + dst);
            g.add_edge(src, dst, color == 1 ? Color::one : Color::two,
                       e.value("central", false));
        }
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid graph document: ") + e.what());
    }
}

inline std::string to_json(const DecoratedGraph& d) {
    nlohmann::ordered_json doc;
    doc["format"] = kDecoratedFormat;
    doc["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : detail::sorted_vertices(d.graph))
        doc["vertices"].push_back({{"id", v.id}, {"otimes", d.is_otimes(v.id)}});
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : detail::sorted_edges(d.graph))
        doc["edges"].push_back({{"src", e.src},
                                {"dst", e.dst},
                                {"color", e.color == Color::one ? "I" : "II"}});
    return doc.dump(2);
}

inline DecoratedGraph decorated_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    try {
        if (!doc.is_object() || doc.at("format") != kDecoratedFormat)
            throw ParseError(std::string("expected format ") + kDecoratedFormat);
        DecoratedGraph d;
        for (const auto& v : doc.at("vertices")) {
            const std::string id = v.at("id").get<std::string>();
            if (d.graph.has_vertex(id)) throw ParseError("duplicate vertex id: " + id);
            d.graph.add_vertex(id);
            if (v.value("otimes", false)) d.otimes.insert(id);
        }
        for (const auto& e : doc.at("edges")) {
            const std::string src = e.at("src").get<std::string>();
            const std::string dst = e.at("dst").get<std::string>();
            const std::string color = e.at("color").get<std::string>();
            if (color != "I" && color != "II")
                throw ParseError("edge color must be I or II, got " + color);
            if (!d.graph.has_vertex(src) || !d.graph.has_vertex(dst))
                throw ParseError("edge endpoint is not a declared vertex: " + src +
                                 " -> " + dst);
            d.graph.add_edge(src, dst, color == "I" ? Color::one : Color::two);
        }
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid decorated document: ") + e.what());
    }
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

} // namespace detail

// Presentation only: colour-1 edges blue, colour-2 red, central vertices as
// points, central edges with a diamond arrowhead.
inline std::string to_dot(const ColoredDigraph& g) {
    std::ostringstream os;
    os << "digraph b2crystal {\n";
    for (const auto& v : detail::sorted_vertices(g)) {
        os << "  " << detail::dot_quote(v.id);
        if (v.central) os << " [shape=\"point\"]";
        os << ";\n";
    }
    for (const auto& e : detail::sorted_edges(g)) {
        os << "  " << detail::dot_quote(e.src) << " -> " << detail::dot_quote(e.dst)
           << " [color=\"" << (e.color == Color::one ? "blue" : "red") << "\"";
        if (e.central) os << ", arrowhead=\"diamond\"";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace b2crystal
