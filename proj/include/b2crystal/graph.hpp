#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "b2crystal/common.hpp"
#include "b2crystal/graph_color.hpp"

namespace b2crystal {

using VertexId = std::string;

struct VertexData {
    VertexId id;
    bool central = false;
};

struct EdgeData {
    VertexId src;
    VertexId dst;
    Color color = Color::one;
    bool central = false;
};

// Finite 2-edge-coloured digraph with central marks. The container itself
// enforces nothing beyond vertex existence; acyclicity, degree bounds and the
// placement of central marks are verified, not assumed, so that broken inputs
// can be diagnosed.
class ColoredDigraph {
public:
    void add_vertex(const VertexId& id, bool central = false) {
        require(!has_vertex(id), "duplicate vertex id: " + id);
        index_[id] = vertices_.size();
        vertices_.push_back({id, central});
        out_.emplace_back();
        in_.emplace_back();
    }

    std::size_t add_edge(const VertexId& src, const VertexId& dst, Color color,
                         bool central = false) {
        require(has_vertex(src), "edge source not a vertex: " + src);
        require(has_vertex(dst), "edge target not a vertex: " + dst);
        const std::size_t e = edges_.size();
        edges_.push_back({src, dst, color, central});
        out_[index_.at(src)].push_back(e);
        in_[index_.at(dst)].push_back(e);
        return e;
    }

    void remove_edge(std::size_t e) {
        require(e < edges_.size(), "remove_edge: index out of range");
        edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(e));
        rebuild_adjacency();
    }

    void set_edge_color(std::size_t e, Color c) {
        require(e < edges_.size(), "set_edge_color: index out of range");
        edges_[e].color = c;
    }

    void set_edge_central(std::size_t e, bool central) {
        require(e < edges_.size(), "set_edge_central: index out of range");
        edges_[e].central = central;
    }

    void set_vertex_central(const VertexId& v, bool central) {
        vertices_[checked_index(v)].central = central;
    }

    bool has_vertex(const VertexId& id) const { return index_.count(id) != 0; }

    const std::vector<VertexData>& vertices() const { return vertices_; }
    const std::vector<EdgeData>& edges() const { return edges_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const VertexData& vertex(const VertexId& id) const {
        return vertices_[checked_index(id)];
    }

    bool is_central_vertex(const VertexId& id) const { return vertex(id).central; }

    const std::vector<std::size_t>& out_edges(const VertexId& v) const {
        return out_[checked_index(v)];
    }

    const std::vector<std::size_t>& in_edges(const VertexId& v) const {
        return in_[checked_index(v)];
    }

    // Unique incident edge of the given colour, if any. More than one is a
    // degree-shape violation.
    std::optional<std::size_t> out_edge(const VertexId& v, Color c) const {
        return unique_edge(out_[checked_index(v)], c, v, "leaving");
    }

    std::optional<std::size_t> in_edge(const VertexId& v, Color c) const {
        return unique_edge(in_[checked_index(v)], c, v, "entering");
    }

    std::optional<VertexId> successor(const VertexId& v, Color c) const {
        auto e = out_edge(v, c);
        if (!e) return std::nullopt;
        return edges_[*e].dst;
    }

    std::optional<VertexId> predecessor(const VertexId& v, Color c) const {
        auto e = in_edge(v, c);
        if (!e) return std::nullopt;
        return edges_[*e].src;
    }

    std::vector<VertexId> sources() const {
        std::vector<VertexId> out;
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (in_[i].empty()) out.push_back(vertices_[i].id);
        return out;
    }

    std::vector<VertexId> sinks() const {
        std::vector<VertexId> res;
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (out_[i].empty()) res.push_back(vertices_[i].id);
        return res;
    }

    bool is_acyclic() const {
        std::vector<std::size_t> indeg(vertices_.size());
        for (std::size_t i = 0; i < vertices_.size(); ++i) indeg[i] = in_[i].size();
        std::deque<std::size_t> ready;
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (indeg[i] == 0) ready.push_back(i);
        std::size_t seen = 0;
        while (!ready.empty()) {
            std::size_t v = ready.front();
            ready.pop_front();
            ++seen;
            for (std::size_t e : out_[v]) {
                std::size_t w = index_.at(edges_[e].dst);
                if (--indeg[w] == 0) ready.push_back(w);
            }
        }
        return seen == vertices_.size();
    }

    bool is_weakly_connected() const {
        if (vertices_.empty()) return true;
        std::vector<bool> seen(vertices_.size(), false);
        std::deque<std::size_t> queue{0};
        seen[0] = true;
        std::size_t n = 1;
        while (!queue.empty()) {
            std::size_t v = queue.front();
            queue.pop_front();
            auto visit = [&](std::size_t w) {
                if (!seen[w]) {
                    seen[w] = true;
                    ++n;
                    queue.push_back(w);
                }
            };
            for (std::size_t e : out_[v]) visit(index_.at(edges_[e].dst));
            for (std::size_t e : in_[v]) visit(index_.at(edges_[e].src));
        }
        return n == vertices_.size();
    }

    // Same vertices and marks, every edge reversed. Edge indices line up with
    // the original, which keeps dual-check witnesses mappable.
    ColoredDigraph reversed() const {
        ColoredDigraph r;
        for (const auto& v : vertices_) r.add_vertex(v.id, v.central);
        for (const auto& e : edges_) r.add_edge(e.dst, e.src, e.color, e.central);
        return r;
    }

private:
    std::size_t checked_index(const VertexId& id) const {
        auto it = index_.find(id);
        require(it != index_.end(), "unknown vertex: " + id);
        return it->second;
    }

    std::optional<std::size_t> unique_edge(const std::vector<std::size_t>& list,
                                           Color c, const VertexId& v,
                                           const char* dir) const {
        std::optional<std::size_t> found;
        for (std::size_t e : list) {
            if (edges_[e].color != c) continue;
            if (found)
                throw DegreeViolation("vertex " + v + " has two " + dir +
                                      " edges of color " +
                                      std::to_string(color_number(c)));
            found = e;
        }
        return found;
    }

    void rebuild_adjacency() {
        for (auto& v : out_) v.clear();
        for (auto& v : in_) v.clear();
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            out_[index_.at(edges_[e].src)].push_back(e);
            in_[index_.at(edges_[e].dst)].push_back(e);
        }
    }

    std::vector<VertexData> vertices_;
    std::vector<EdgeData> edges_;
    std::unordered_map<VertexId, std::size_t> index_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::size_t>> in_;
};

// 2-coloured digraph with colours I/II and an otimes/ordinary vertex
// partition (central graphs and related decorated graphs).
struct DecoratedGraph {
    ColoredDigraph graph;
    std::set<VertexId> otimes;

    bool is_otimes(const VertexId& v) const { return otimes.count(v) != 0; }
};

// Maximal monochromatic path.
struct StringPath {
    Color color = Color::one;
    std::vector<VertexId> vertices;
};

inline std::string edge_label(const EdgeData& e) {
    return e.src + " -" + std::to_string(color_number(e.color)) + "-> " + e.dst;
}

// Decomposes the graph into maximal paths of colour c. Requires per-colour
// degree at most one; a monochromatic cycle is reported as well since its
// vertices lie on no path.
inline std::vector<StringPath> strings_of(const ColoredDigraph& g, Color c) {
    std::vector<StringPath> result;
    std::set<VertexId> covered;
    for (const auto& v : g.vertices()) {
        if (g.in_edge(v.id, c).has_value()) continue;  // not a string start
        StringPath path;
        path.color = c;
        VertexId cur = v.id;
        path.vertices.push_back(cur);
        covered.insert(cur);
        while (auto next = g.successor(cur, c)) {
            cur = *next;
            path.vertices.push_back(cur);
            covered.insert(cur);
        }
        result.push_back(std::move(path));
    }
    if (covered.size() != g.vertex_count())
        throw DegreeViolation("monochromatic cycle of color " +
                              std::to_string(color_number(c)));
    return result;
}

// (t, h): edges before and after v on its c-string.
inline std::pair<int, int> th_stats(const ColoredDigraph& g, const VertexId& v,
                                    Color c) {
    int t = 0, h = 0;
    VertexId cur = v;
    while (auto p = g.predecessor(cur, c)) {
        cur = *p;
        ++t;
        require(t <= static_cast<int>(g.vertex_count()), "th_stats: cycle");
    }
    cur = v;
    while (auto n = g.successor(cur, c)) {
        cur = *n;
        ++h;
        require(h <= static_cast<int>(g.vertex_count()), "th_stats: cycle");
    }
    return {t, h};
}

// For an i-edge e=(u,v): (t_{3-i}(v) - t_{3-i}(u), h_{3-i}(v) - h_{3-i}(u)).
inline std::pair<int, int> edge_delta(const ColoredDigraph& g, std::size_t e) {
    require(e < g.edge_count(), "edge_delta: index out of range");
    const EdgeData& ed = g.edges()[e];
    const Color oc = other(ed.color);
    auto [tu, hu] = th_stats(g, ed.src, oc);
    auto [tv, hv] = th_stats(g, ed.dst, oc);
    return {tv - tu, hv - hu};
}

struct InferredCentral {
    std::set<VertexId> vertices;
    std::set<std::size_t> edges;
};

namespace detail {

inline bool squares_with_entering_two_edge(const ColoredDigraph& g,
                                           const VertexId& u, const VertexId& v) {
    // e=(u,v) colour 1 and e'=(w,u) colour 2 close to a square iff the path
    // w -1-> z -2-> v exists.
    auto w = g.predecessor(u, Color::two);
    if (!w) return false;
    auto z = g.successor(*w, Color::one);
    if (!z) return false;
    auto v2 = g.successor(*z, Color::two);
    return v2 && *v2 == v;
}

inline bool squares_with_leaving_two_edge(const ColoredDigraph& g,
                                          const VertexId& u, const VertexId& v) {
    // e=(u,v) colour 1 and e''=(v,t) colour 2 close to a square iff the path
    // u -2-> s -1-> t exists.
    auto t = g.successor(v, Color::two);
    if (!t) return false;
    auto s = g.successor(u, Color::two);
    if (!s) return false;
    auto t2 = g.successor(*s, Color::one);
    return t2 && *t2 == *t;
}

} // namespace detail

// Local re-derivation of the central marks from the graph structure alone.
// A vertex is central when it is extremal (no entering or no leaving edges),
// when one of its strings is trivial (forced by the one-centre-per-string
// rule), or when the two operators fail to commute at it in either direction.
// A 1-edge is central when its tail has an entering 2-edge, its head a
// leaving 2-edge, and neither pair closes to a square.
inline InferredCentral infer_central(const ColoredDigraph& g) {
    InferredCentral result;
    for (const auto& vd : g.vertices()) {
        const VertexId& v = vd.id;
        const bool in1 = g.in_edge(v, Color::one).has_value();
        const bool in2 = g.in_edge(v, Color::two).has_value();
        const bool out1 = g.out_edge(v, Color::one).has_value();
        const bool out2 = g.out_edge(v, Color::two).has_value();
        bool central = false;
        if ((!in1 && !in2) || (!out1 && !out2)) central = true;
        if ((!in1 && !out1) || (!in2 && !out2)) central = true;
        if (!central && out1 && out2) {
            auto a = g.successor(*g.successor(v, Color::two), Color::one);
            auto b = g.successor(*g.successor(v, Color::one), Color::two);
            if (!a || !b || *a != *b) central = true;
        }
        if (!central && in1 && in2) {
            auto a = g.predecessor(*g.predecessor(v, Color::two), Color::one);
            auto b = g.predecessor(*g.predecessor(v, Color::one), Color::two);
            if (!a || !b || *a != *b) central = true;
        }
        if (central) result.vertices.insert(v);
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const EdgeData& ed = g.edges()[e];
        if (ed.color != Color::one) continue;
        if (!g.predecessor(ed.src, Color::two)) continue;
        if (!g.successor(ed.dst, Color::two)) continue;
        if (detail::squares_with_entering_two_edge(g, ed.src, ed.dst)) continue;
        if (detail::squares_with_leaving_two_edge(g, ed.src, ed.dst)) continue;
        result.edges.insert(e);
    }
    return result;
}

struct IntervalResult {
    ColoredDigraph graph;
    bool nonempty = false;
};

// Induced subgraph of everything lying on a directed path from x to y.
// If y is unreachable from x the graph is empty and the flag is false.
inline IntervalResult interval(const ColoredDigraph& g, const VertexId& x,
                               const VertexId& y) {
    require(g.has_vertex(x), "interval: unknown vertex " + x);
    require(g.has_vertex(y), "interval: unknown vertex " + y);

    auto reach = [&](const VertexId& start, bool forward) {
        std::set<VertexId> seen{start};
        std::deque<VertexId> queue{start};
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            const auto& next = forward ? g.out_edges(v) : g.in_edges(v);
            for (std::size_t e : next) {
                const VertexId& w = forward ? g.edges()[e].dst : g.edges()[e].src;
                if (seen.insert(w).second) queue.push_back(w);
            }
        }
        return seen;
    };

    const std::set<VertexId> desc = reach(x, true);
    const std::set<VertexId> anc = reach(y, false);

    IntervalResult res;
    if (desc.count(y) == 0) return res;  // empty, flagged
    res.nonempty = true;
    for (const auto& v : g.vertices())
        if (desc.count(v.id) && anc.count(v.id)) res.graph.add_vertex(v.id, v.central);
    for (const auto& e : g.edges())
        if (res.graph.has_vertex(e.src) && res.graph.has_vertex(e.dst))
            res.graph.add_edge(e.src, e.dst, e.color, e.central);
    return res;
}

namespace detail {

// Deterministic traversal record. Per discovered vertex, the four incident
// slots are explored in the fixed order out-1, out-2, in-1, in-2; vertices
// get numbers in discovery order, so the record is independent of vertex ids.
struct Transcript {
    std::vector<long> tokens;
    std::vector<VertexId> order;
};

template <typename VertexFlag, typename EdgeFlag>
Transcript canonical_transcript(const ColoredDigraph& g, VertexFlag vflag,
                                EdgeFlag eflag) {
    for (const auto& v : g.vertices()) {
        for (Color c : {Color::one, Color::two}) {
            g.out_edge(v.id, c);  // throws DegreeViolation on shape breakage
            g.in_edge(v.id, c);
        }
    }
    auto srcs = g.sources();
    if (srcs.empty()) throw NoSource("graph has no source vertex");
    if (srcs.size() > 1) throw MultipleSources("graph has several source vertices");

    Transcript t;
    std::unordered_map<VertexId, long> disc;
    std::deque<VertexId> queue;
    disc[srcs[0]] = 0;
    t.order.push_back(srcs[0]);
    queue.push_back(srcs[0]);

    t.tokens.push_back(static_cast<long>(g.vertex_count()));
    t.tokens.push_back(static_cast<long>(g.edge_count()));

    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        auto slot = [&](std::optional<std::size_t> e, bool forward) {
            if (!e) {
                t.tokens.push_back(-1);
                t.tokens.push_back(0);
                return;
            }
            const EdgeData& ed = g.edges()[*e];
            const VertexId& nb = forward ? ed.dst : ed.src;
            auto it = disc.find(nb);
            if (it == disc.end()) {
                it = disc.emplace(nb, static_cast<long>(t.order.size())).first;
                t.order.push_back(nb);
                queue.push_back(nb);
            }
            t.tokens.push_back(it->second);
            t.tokens.push_back(eflag(*e) ? 1 : 0);
        };
        slot(g.out_edge(v, Color::one), true);
        slot(g.out_edge(v, Color::two), true);
        slot(g.in_edge(v, Color::one), false);
        slot(g.in_edge(v, Color::two), false);
        t.tokens.push_back(vflag(v) ? 1 : 0);
    }
    if (t.order.size() != g.vertex_count())
        throw GraphError("graph is not weakly connected from its source");
    return t;
}

} // namespace detail

using VertexBijection = std::vector<std::pair<VertexId, VertexId>>;

// Canonical-traversal isomorphism. Per-colour degrees at most one make the
// traversal transcript a complete invariant; two graphs are isomorphic iff
// the transcripts coincide, and pairing the discovery orders yields the
// bijection.
inline std::optional<VertexBijection> isomorphism(const ColoredDigraph& g1,
                                                  const ColoredDigraph& g2,
                                                  bool respect_central) {
    auto vflag1 = [&](const VertexId& v) {
        return respect_central && g1.is_central_vertex(v);
    };
    auto vflag2 = [&](const VertexId& v) {
        return respect_central && g2.is_central_vertex(v);
    };
    auto eflag1 = [&](std::size_t e) { return respect_central && g1.edges()[e].central; };
    auto eflag2 = [&](std::size_t e) { return respect_central && g2.edges()[e].central; };
    auto t1 = detail::canonical_transcript(g1, vflag1, eflag1);
    auto t2 = detail::canonical_transcript(g2, vflag2, eflag2);
    if (t1.tokens != t2.tokens) return std::nullopt;
    VertexBijection bij;
    for (std::size_t i = 0; i < t1.order.size(); ++i)
        bij.emplace_back(t1.order[i], t2.order[i]);
    return bij;
}

inline bool is_isomorphic(const ColoredDigraph& g1, const ColoredDigraph& g2,
                          bool respect_central) {
    return isomorphism(g1, g2, respect_central).has_value();
}

inline std::optional<VertexBijection> isomorphism(const DecoratedGraph& g1,
                                                  const DecoratedGraph& g2) {
    auto t1 = detail::canonical_transcript(
        g1.graph, [&](const VertexId& v) { return g1.is_otimes(v); },
        [](std::size_t) { return false; });
    auto t2 = detail::canonical_transcript(
        g2.graph, [&](const VertexId& v) { return g2.is_otimes(v); },
        [](std::size_t) { return false; });
    if (t1.tokens != t2.tokens) return std::nullopt;
    VertexBijection bij;
    for (std::size_t i = 0; i < t1.order.size(); ++i)
        bij.emplace_back(t1.order[i], t2.order[i]);
    return bij;
}

inline bool is_isomorphic(const DecoratedGraph& g1, const DecoratedGraph& g2) {
    return isomorphism(g1, g2).has_value();
}

} // namespace b2crystal
