#pragma once

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "b2crystal/graph.hpp"
#include "b2crystal/report.hpp"

namespace b2crystal {

// Canonical vertex names of C(a,b). Principal vertices carry grid
// coordinates; sail interiors carry the copy index and the local lattice
// point of their sail.
struct CrystalCoords {
    enum class Kind { principal, right_sail_interior, left_sail_interior };

    Kind kind = Kind::principal;
    int copy = 0;  // sail copy index (j for right sails, i for left sails)
    int p = 0;     // local point; principal vertices use (p,q) = (i,j)
    int q = 0;

    static CrystalCoords principal(int i, int j) {
        return {Kind::principal, 0, i, j};
    }
    static CrystalCoords right_interior(int j, int p, int q) {
        require(0 <= q && q < p, "right sail interior needs q < p");
        return {Kind::right_sail_interior, j, p, q};
    }
    static CrystalCoords left_interior(int i, int p, int q) {
        require(0 <= p && p < q, "left sail interior needs p < q");
        return {Kind::left_sail_interior, i, p, q};
    }

    std::string id() const {
        std::ostringstream os;
        switch (kind) {
            case Kind::principal: os << "P(" << p << ',' << q << ')'; break;
            case Kind::right_sail_interior:
                os << "R(" << copy << "):(" << p << ',' << q << ')';
                break;
            case Kind::left_sail_interior:
                os << "L(" << copy << "):(" << p << ',' << q << ')';
                break;
        }
        return os.str();
    }
};

inline std::string principal_id(int i, int j) {
    return CrystalCoords::principal(i, j).id();
}

// Rectangular grid: vertices (i,j) for 0<=i<=a, 0<=j<=b, I-edges increase i,
// II-edges increase j. No otimes vertices.
inline DecoratedGraph build_grid(int a, int b) {
    require(a >= 0 && b >= 0, "build_grid: negative parameter");
    DecoratedGraph d;
    for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= b; ++j) d.graph.add_vertex(principal_id(i, j));
    for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= b; ++j) {
            if (i < a) d.graph.add_edge(principal_id(i, j), principal_id(i + 1, j), Color::one);
            if (j < b) d.graph.add_edge(principal_id(i, j), principal_id(i, j + 1), Color::two);
        }
    return d;
}

struct A2Crystal {
    DecoratedGraph graph;
    int a = 0;
    int b = 0;
    std::vector<VertexId> principals;
};

// Diagonal product of right and left A-sails over the grid. The j-th row of
// the grid becomes the diagonal of a right-sail copy R_j (points (p,q) with
// 0<=q<=p<=a), the i-th column the diagonal of a left-sail copy L_i (points
// (p,q) with 0<=p<=q<=b); grid edges are dropped. A left-sail interior point
// at odd distance q-p from its diagonal is an otimes vertex.
inline A2Crystal build_c(int a, int b) {
    require(a >= 0 && b >= 0, "build_c: negative parameter");
    A2Crystal c;
    c.a = a;
    c.b = b;

    auto right_vertex = [&](int j, int p, int q) {
        return p == q ? principal_id(p, j) : CrystalCoords::right_interior(j, p, q).id();
    };
    auto left_vertex = [&](int i, int p, int q) {
        return q == p ? principal_id(i, p) : CrystalCoords::left_interior(i, p, q).id();
    };

    for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= b; ++j) {
            c.graph.graph.add_vertex(principal_id(i, j));
            c.principals.push_back(principal_id(i, j));
        }
    for (int j = 0; j <= b; ++j)
        for (int p = 1; p <= a; ++p)
            for (int q = 0; q < p; ++q)
                c.graph.graph.add_vertex(CrystalCoords::right_interior(j, p, q).id());
    for (int i = 0; i <= a; ++i)
        for (int q = 1; q <= b; ++q)
            for (int p = 0; p < q; ++p) {
                const auto id = CrystalCoords::left_interior(i, p, q).id();
                c.graph.graph.add_vertex(id);
                if ((q - p) % 2 == 1) c.graph.otimes.insert(id);
            }

    for (int j = 0; j <= b; ++j)
        for (int p = 0; p <= a; ++p)
            for (int q = 0; q <= p; ++q) {
                if (p + 1 <= a)
                    c.graph.graph.add_edge(right_vertex(j, p, q), right_vertex(j, p + 1, q),
                                           Color::one);
                if (q + 1 <= p)
                    c.graph.graph.add_edge(right_vertex(j, p, q), right_vertex(j, p, q + 1),
                                           Color::two);
            }
    for (int i = 0; i <= a; ++i)
        for (int q = 0; q <= b; ++q)
            for (int p = 0; p <= q; ++p) {
                if (p + 1 <= q)
                    c.graph.graph.add_edge(left_vertex(i, p, q), left_vertex(i, p + 1, q),
                                           Color::one);
                if (q + 1 <= b)
                    c.graph.graph.add_edge(left_vertex(i, p, q), left_vertex(i, p, q + 1),
                                           Color::two);
            }
    return c;
}

namespace detail {

struct AxiomCollector {
    Report& report;
    std::string axiom;
    std::vector<std::string> witnesses;

    AxiomCollector(Report& r, std::string name) : report(r), axiom(std::move(name)) {}

    void violation(const std::string& witness) { witnesses.push_back(witness); }

    ~AxiomCollector() {
        if (witnesses.empty())
            report.add_pass(axiom);
        else
            report.add_fail(axiom, std::move(witnesses));
    }
};

} // namespace detail

// Local axioms for decorated graphs (colours I/II plus an otimes/ordinary
// partition). Violations are reported with witnesses, never thrown.
inline Report check_axioms_A(const DecoratedGraph& d) {
    Report report;
    const ColoredDigraph& g = d.graph;

    {
        detail::AxiomCollector a0(report, "A0(i)");
        for (const auto& v : g.vertices()) {
            for (Color c : {Color::one, Color::two}) {
                int out = 0, in = 0;
                for (std::size_t e : g.out_edges(v.id))
                    if (g.edges()[e].color == c) ++out;
                for (std::size_t e : g.in_edges(v.id))
                    if (g.edges()[e].color == c) ++in;
                if (out > 1 || in > 1) a0.violation(v.id);
            }
        }
        if (a0.witnesses.empty()) {
            // With degrees in shape, a monochromatic component that is not a
            // path must be a cycle: walking from the starts misses it.
            for (Color c : {Color::one, Color::two}) {
                std::set<VertexId> covered;
                for (const auto& v : g.vertices()) {
                    if (g.in_edge(v.id, c)) continue;
                    VertexId cur = v.id;
                    covered.insert(cur);
                    while (auto n = g.successor(cur, c)) {
                        cur = *n;
                        covered.insert(cur);
                    }
                }
                for (const auto& v : g.vertices())
                    if (!covered.count(v.id)) a0.violation(v.id);
            }
        }
    }
    if (!report.axiom_passed("A0(i)")) {
        report.add_vacuous("A1..A9", "skipped: degree shape violated");
        return report;
    }

    {
        detail::AxiomCollector conn(report, "A0:connected");
        if (!g.is_weakly_connected()) conn.violation("(whole graph)");
    }

    {
        detail::AxiomCollector a0ii(report, "A0(ii)");
        for (const auto& e : g.edges())
            if (d.is_otimes(e.src) && d.is_otimes(e.dst))
                a0ii.violation(e.src + " -> " + e.dst);
    }

    report.add_vacuous("A0(iii)", "finite input: every string has a beginning");
    report.add_vacuous("A0(iv)", "finite input: every string has an end");

    auto ot = [&](const std::optional<VertexId>& v) { return v && d.is_otimes(*v); };

    {
        detail::AxiomCollector a1(report, "A1");
        for (const auto& v : d.otimes)
            if (!g.out_edge(v, Color::one) || !g.in_edge(v, Color::two))
                a1.violation(v);
    }

    {
        detail::AxiomCollector a2(report, "A2");
        for (const auto& v : d.otimes) {
            if (auto u = g.predecessor(v, Color::one)) {
                auto z = g.predecessor(v, Color::two);
                auto t1 = g.predecessor(*u, Color::two);
                auto t2 = z ? g.predecessor(*z, Color::one) : std::nullopt;
                if (!z || !t1 || !t2 || *t1 != *t2 || !d.is_otimes(*t1))
                    a2.violation(v);
            }
            if (auto w = g.successor(v, Color::two)) {
                auto t = g.successor(v, Color::one);
                auto s1 = g.successor(*w, Color::one);
                auto s2 = t ? g.successor(*t, Color::two) : std::nullopt;
                if (!t || !s1 || !s2 || *s1 != *s2 || !d.is_otimes(*s1))
                    a2.violation(v);
            }
        }
    }

    {
        detail::AxiomCollector a3(report, "A3");
        for (const auto& v : d.otimes) {
            if (auto u = g.predecessor(v, Color::one)) {
                if (g.out_edge(*u, Color::two) || g.out_edge(v, Color::two)) {
                    auto s = g.successor(*u, Color::two);
                    auto r = g.successor(v, Color::two);
                    auto corner = s ? g.successor(*s, Color::one) : std::nullopt;
                    if (!s || !r || !corner || *corner != *r || !d.is_otimes(*s))
                        a3.violation(v);
                }
            }
            if (auto w = g.successor(v, Color::two)) {
                if (g.in_edge(v, Color::one) || g.in_edge(*w, Color::one)) {
                    auto t = g.predecessor(v, Color::one);
                    auto s = g.predecessor(*w, Color::one);
                    auto corner = t ? g.successor(*t, Color::two) : std::nullopt;
                    if (!t || !s || !corner || *corner != *s || !d.is_otimes(*s))
                        a3.violation(v);
                }
            }
        }
    }

    {
        detail::AxiomCollector a4(report, "A4");
        for (const auto& v : d.otimes) {
            if (auto w = g.successor(v, Color::one)) {
                if (auto s = g.successor(*w, Color::two)) {
                    auto t = g.successor(v, Color::two);
                    auto corner = t ? g.successor(*t, Color::one) : std::nullopt;
                    if (!t || !corner || *corner != *s || !d.is_otimes(*s))
                        a4.violation(v);
                }
            }
            if (auto u = g.predecessor(v, Color::two)) {
                if (auto t = g.predecessor(*u, Color::one)) {
                    auto t2 = g.successor(*t, Color::two);
                    auto corner = t2 ? g.successor(*t2, Color::one) : std::nullopt;
                    if (!t2 || !corner || *corner != v || !d.is_otimes(*t))
                        a4.violation(v);
                }
            }
        }
    }

    {
        detail::AxiomCollector a5(report, "A5");
        for (const auto& e : g.edges()) {
            if (d.is_otimes(e.src) || d.is_otimes(e.dst)) continue;
            if (e.color == Color::one) {
                auto w = g.successor(e.dst, Color::two);
                if (!ot(w).operator bool() ? !w || d.is_otimes(*w) : true)
                    ;  // placeholder, see below
                if (!w || d.is_otimes(*w)) a5.violation(e.src + " -> " + e.dst);
            } else {
                auto u = g.predecessor(e.src, Color::one);
                if (!u || d.is_otimes(*u)) a5.violation(e.src + " -> " + e.dst);
            }
        }
    }

    {
        detail::AxiomCollector a6(report, "A6");
        for (const auto& e : g.edges()) {
            if (d.is_otimes(e.src) || d.is_otimes(e.dst)) continue;
            if (e.color == Color::one) {
                if (g.in_edge(e.src, Color::two) || g.in_edge(e.dst, Color::two)) {
                    auto t = g.predecessor(e.src, Color::two);
                    auto s = g.predecessor(e.dst, Color::two);
                    auto corner = t ? g.successor(*t, Color::one) : std::nullopt;
                    if (!t || !s || !corner || *corner != *s || d.is_otimes(*t) ||
                        d.is_otimes(*s))
                        a6.violation(e.src + " -> " + e.dst);
                }
            } else {
                if (g.out_edge(e.src, Color::one) || g.out_edge(e.dst, Color::one)) {
                    auto s = g.successor(e.src, Color::one);
                    auto r = g.successor(e.dst, Color::one);
                    auto corner = s ? g.successor(*s, Color::two) : std::nullopt;
                    if (!s || !r || !corner || *corner != *r || d.is_otimes(*s) ||
                        d.is_otimes(*r))
                        a6.violation(e.src + " -> " + e.dst);
                }
            }
        }
    }

    // Eight-vertex configuration v1..v8 with v2=Iv1, v3=IIv1, v4=IIv2,
    // v5=IIv4, v6=Iv3, v7=Iv6, v8=Iv5=IIv7 and v4 != v6; exactly v3 and v5
    // are otimes.
    auto verma_ok = [&](const std::optional<VertexId>& v1) -> bool {
        if (!v1) return false;
        auto v2 = g.successor(*v1, Color::one);
        auto v3 = g.successor(*v1, Color::two);
        if (!v2 || !v3) return false;
        auto v4 = g.successor(*v2, Color::two);
        auto v6 = g.successor(*v3, Color::one);
        if (!v4 || !v6 || *v4 == *v6) return false;
        auto v5 = g.successor(*v4, Color::two);
        auto v7 = g.successor(*v6, Color::one);
        if (!v5 || !v7) return false;
        auto v8 = g.successor(*v5, Color::one);
        auto v8b = g.successor(*v7, Color::two);
        if (!v8 || !v8b || *v8 != *v8b) return false;
        return !d.is_otimes(*v1) && !d.is_otimes(*v2) && d.is_otimes(*v3) &&
               !d.is_otimes(*v4) && d.is_otimes(*v5) && !d.is_otimes(*v6) &&
               !d.is_otimes(*v7) && !d.is_otimes(*v8);
    };

    {
        detail::AxiomCollector a7(report, "A7");
        for (const auto& vd : g.vertices()) {
            const VertexId& u = vd.id;
            if (d.is_otimes(u)) continue;
            auto v = g.successor(u, Color::one);
            auto w = g.successor(u, Color::two);
            if (v && w && !d.is_otimes(*v) && ot(w)) {
                if (!verma_ok(u)) a7.violation(u);
            }
        }
        // Symmetric part: anchored at the closing vertex v8.
        for (const auto& vd : g.vertices()) {
            const VertexId& v8 = vd.id;
            if (d.is_otimes(v8)) continue;
            auto u = g.predecessor(v8, Color::one);   // v5
            auto w = g.predecessor(v8, Color::two);   // v7
            if (u && w && ot(u) && !d.is_otimes(*w)) {
                auto v4 = g.predecessor(*u, Color::two);
                auto v6 = g.predecessor(*w, Color::one);
                auto v2 = v4 ? g.predecessor(*v4, Color::two) : std::nullopt;
                auto v1 = v2 ? g.predecessor(*v2, Color::one) : std::nullopt;
                if (!v4 || !v6 || !v1 || !verma_ok(v1)) a7.violation(v8);
            }
        }
    }

    {
        detail::AxiomCollector a8(report, "A8");
        for (const auto& vd : g.vertices()) {
            const VertexId& u = vd.id;  // otimes vertex starting an I-chain: u=v3
            if (!d.is_otimes(u)) continue;
            auto v = g.successor(u, Color::one);
            if (v && !d.is_otimes(*v)) {
                auto w = g.successor(*v, Color::one);
                if (w && !d.is_otimes(*w)) {
                    if (!verma_ok(g.predecessor(u, Color::two))) a8.violation(u);
                }
            }
            // Symmetric part: otimes vertex ending a II-chain: w=v5.
            auto pv = g.predecessor(u, Color::two);
            if (pv && !d.is_otimes(*pv)) {
                auto pu = g.predecessor(*pv, Color::two);
                if (pu && !d.is_otimes(*pu)) {
                    auto v1 = g.predecessor(*pu, Color::one);
                    if (!verma_ok(v1)) a8.violation(u);
                }
            }
        }
    }

    {
        detail::AxiomCollector a9(report, "A9");
        for (const auto& w : d.otimes) {
            if (auto v = g.predecessor(w, Color::one))
                if (auto u = g.predecessor(*v, Color::one))
                    if (!d.is_otimes(*u)) a9.violation(w);
        }
        for (const auto& u : d.otimes) {
            if (auto v = g.successor(u, Color::two))
                if (auto w = g.successor(*v, Color::two))
                    if (!d.is_otimes(*w)) a9.violation(u);
        }
    }

    return report;
}

} // namespace b2crystal
