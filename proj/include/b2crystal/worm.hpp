#pragma once

#include <array>
#include <compare>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "b2crystal/common.hpp"
#include "b2crystal/graph_color.hpp"

namespace b2crystal {

// Six-tuple (x',y,x'';y',x,y'') describing a worm: the horizontal segment
// [X',X''] at height y and the vertical segment [Y',Y''] at abscissa x,
// where X'=(x',y), X''=(x'',y), Y'=(x,y'), Y''=(x,y'').
struct WormState {
    int x_lo = 0;  // x'
    int y_mid = 0; // y
    int x_hi = 0;  // x''
    int y_lo = 0;  // y'
    int x_mid = 0; // x
    int y_hi = 0;  // y''

    friend bool operator==(const WormState&, const WormState&) = default;
    friend auto operator<=>(const WormState&, const WormState&) = default;
};

// Admissibility:
//   A) x' and x'' even,
//   B) y'' >= y >= y' and x'' >= x >= x',
//   C) y'' > y implies x'' = x, and y > y' implies x = x'.
inline bool is_admissible(const WormState& w) {
    if (w.x_lo % 2 != 0 || w.x_hi % 2 != 0) return false;
    if (!(w.y_hi >= w.y_mid && w.y_mid >= w.y_lo)) return false;
    if (!(w.x_hi >= w.x_mid && w.x_mid >= w.x_lo)) return false;
    if (w.y_hi > w.y_mid && w.x_hi != w.x_mid) return false;
    if (w.y_mid > w.y_lo && w.x_mid != w.x_lo) return false;
    return true;
}

inline bool is_admissible(int x_lo, int y_mid, int x_hi, int y_lo, int x_mid, int y_hi) {
    return is_admissible(WormState{x_lo, y_mid, x_hi, y_lo, x_mid, y_hi});
}

inline bool is_v_worm(const WormState& w) {
    return w.x_lo == w.x_mid && w.x_mid == w.x_hi;
}

inline bool is_h_worm(const WormState& w) {
    return w.y_lo == w.y_mid && w.y_mid == w.y_hi;
}

// X' = Y''
inline bool is_vh_worm(const WormState& w) {
    return w.x_lo == w.x_mid && w.y_mid == w.y_hi;
}

// Y' = X''
inline bool is_hv_worm(const WormState& w) {
    return w.x_mid == w.x_hi && w.y_lo == w.y_mid;
}

inline bool is_principal(const WormState& w) {
    return is_v_worm(w) && is_h_worm(w);
}

inline int distinct_point_count(const WormState& w) {
    std::array<std::pair<int, int>, 4> pts = {{
        {w.x_lo, w.y_mid},  // X'
        {w.x_hi, w.y_mid},  // X''
        {w.x_mid, w.y_lo},  // Y'
        {w.x_mid, w.y_hi},  // Y''
    }};
    int n = 0;
    for (int i = 0; i < 4; ++i) {
        bool seen = false;
        for (int j = 0; j < i; ++j)
            if (pts[j] == pts[i]) seen = true;
        if (!seen) ++n;
    }
    return n;
}

struct WormClass {
    bool v = false;
    bool h = false;
    bool vh = false;
    bool hv = false;
    bool proper = false;     // exactly three distinct defining points
    bool principal = false;  // all four points coincide
};

inline WormClass classify(const WormState& w) {
    require(is_admissible(w), "classify: inadmissible worm");
    WormClass c;
    c.v = is_v_worm(w);
    c.h = is_h_worm(w);
    c.vh = is_vh_worm(w);
    c.hv = is_hv_worm(w);
    c.proper = distinct_point_count(w) == 3;
    c.principal = is_principal(w);
    require(c.v || c.h || c.vh || c.hv, "classify: admissible worm with no shape");
    return c;
}

// Forward operator of color 1:
//   (i)   2x > x'+x''          -> x' += 2
//   (ii)  x=x'=x'' and y''> y  -> y  += 1
//   (iii) otherwise            -> x''+= 2
inline WormState apply1(const WormState& w) {
    WormState r = w;
    if (2 * w.x_mid > w.x_lo + w.x_hi)
        r.x_lo += 2;
    else if (w.x_mid == w.x_lo && w.x_mid == w.x_hi && w.y_hi > w.y_mid)
        r.y_mid += 1;
    else
        r.x_hi += 2;
    require(is_admissible(r), "apply1 produced an inadmissible worm");
    return r;
}

// Forward operator of color 2:
//   (iv)  2y > y'+y''          -> y' += 1
//   (v)   y''=y=y' and x''> x  -> x  += 1
//   (vi)  otherwise            -> y''+= 1
inline WormState apply2(const WormState& w) {
    WormState r = w;
    if (2 * w.y_mid > w.y_lo + w.y_hi)
        r.y_lo += 1;
    else if (w.y_hi == w.y_mid && w.y_mid == w.y_lo && w.x_hi > w.x_mid)
        r.x_mid += 1;
    else
        r.y_hi += 1;
    require(is_admissible(r), "apply2 produced an inadmissible worm");
    return r;
}

inline WormState apply(const WormState& w, Color c) {
    return c == Color::one ? apply1(w) : apply2(w);
}

namespace detail {

inline std::vector<WormState> invert_candidates(const WormState& w, Color c) {
    std::vector<WormState> out;
    if (c == Color::one) {
        WormState a = w; a.x_lo -= 2; out.push_back(a);
        WormState b = w; b.y_mid -= 1; out.push_back(b);
        WormState d = w; d.x_hi -= 2; out.push_back(d);
    } else {
        WormState a = w; a.y_lo -= 1; out.push_back(a);
        WormState b = w; b.x_mid -= 1; out.push_back(b);
        WormState d = w; d.y_hi -= 1; out.push_back(d);
    }
    return out;
}

} // namespace detail

// Inverse operators. Found by reversing each forward rule and keeping the
// candidate that is admissible and maps back onto w; exactly one survives.
inline WormState invert(const WormState& w, Color c) {
    std::optional<WormState> found;
    for (const WormState& cand : detail::invert_candidates(w, c)) {
        if (!is_admissible(cand)) continue;
        if (apply(cand, c) != w) continue;
        require(!found.has_value(), "invert: two admissible predecessors");
        found = cand;
    }
    require(found.has_value(), "invert: no admissible predecessor");
    return *found;
}

inline WormState invert1(const WormState& w) { return invert(w, Color::one); }
inline WormState invert2(const WormState& w) { return invert(w, Color::two); }

// Weight mapping (x'/2 + x''/2 + y, y' + y'' + x): 1-edges shift it by (1,0)
// and 2-edges by (0,1).
inline std::pair<long long, long long> weight(const WormState& w) {
    return {static_cast<long long>(w.x_lo / 2) + w.x_hi / 2 + w.y_mid,
            static_cast<long long>(w.y_lo) + w.y_hi + w.x_mid};
}

// Position of a worm relative to the centre of the string of colour c through
// it. "Left" means strictly before the centre in string order. Central edges
// occur only on 1-strings of V-worms with odd vertical span.
enum class WormRole {
    left,
    central_vertex,
    central_edge_begin,
    central_edge_end,
    right,
};

inline WormRole center_role(const WormState& w, Color c) {
    require(is_admissible(w), "center_role: inadmissible worm");
    if (c == Color::one) {
        if (is_v_worm(w)) {
            // Along a 1-string the V-stage moves y upward; the vertical span
            // [y',y''] is fixed. dv = 2y - y' - y'' grows by 2 per step.
            const int span = w.y_hi - w.y_lo;
            const int dv = 2 * w.y_mid - w.y_lo - w.y_hi;
            if (span % 2 == 0) {
                if (dv < 0) return WormRole::left;
                if (dv == 0) return WormRole::central_vertex;
                return WormRole::right;
            }
            if (dv < -1) return WormRole::left;
            if (dv == -1) return WormRole::central_edge_begin;
            if (dv == 1) return WormRole::central_edge_end;
            return WormRole::right;
        }
        if (is_h_worm(w)) {
            // dh = 2x - x' - x'' decreases by 2 per step along a 1-string.
            const int dh = 2 * w.x_mid - w.x_lo - w.x_hi;
            if (dh > 0) return WormRole::left;
            if (dh == 0) return WormRole::central_vertex;
            return WormRole::right;
        }
        return is_hv_worm(w) ? WormRole::left : WormRole::right;
    }
    if (is_v_worm(w)) {
        // dv decreases by 1 per step along a 2-string; centre at dv = 0.
        const int dv = 2 * w.y_mid - w.y_lo - w.y_hi;
        if (dv > 0) return WormRole::left;
        if (dv == 0) return WormRole::central_vertex;
        return WormRole::right;
    }
    if (is_h_worm(w)) {
        // dh grows by 2 per step along a 2-string; centre at dh = 0.
        const int dh = 2 * w.x_mid - w.x_lo - w.x_hi;
        if (dh < 0) return WormRole::left;
        if (dh == 0) return WormRole::central_vertex;
        return WormRole::right;
    }
    return is_vh_worm(w) ? WormRole::left : WormRole::right;
}

inline bool is_central_vertex(const WormState& w) {
    return center_role(w, Color::one) == WormRole::central_vertex;
}

// w begins a central 1-edge (w, apply1(w)).
inline bool begins_central_edge(const WormState& w) {
    return center_role(w, Color::one) == WormRole::central_edge_begin;
}

struct Quadruple {
    int q1 = 0, q2 = 0, q3 = 0, q4 = 0;

    friend bool operator==(const Quadruple&, const Quadruple&) = default;
    friend auto operator<=>(const Quadruple&, const Quadruple&) = default;

    int operator[](int i) const {
        switch (i) {
            case 1: return q1;
            case 2: return q2;
            case 3: return q3;
            default: return q4;
        }
    }
};

struct ABQuadruples {
    Quadruple a;
    Quadruple b;

    friend bool operator==(const ABQuadruples&, const ABQuadruples&) = default;
};

// Closed-form string statistics by worm shape. Shapes can overlap on
// degenerate worms; every matching formula is evaluated and they must agree.
inline ABQuadruples closed_form_ab(const WormState& w) {
    require(is_admissible(w), "closed_form_ab: inadmissible worm");
    const int xl = w.x_lo, xh = w.x_hi, x = w.x_mid;
    const int yl = w.y_lo, yh = w.y_hi, y = w.y_mid;
    std::vector<ABQuadruples> results;

    const bool proper = distinct_point_count(w) == 3;
    if (is_vh_worm(w) && proper) {
        results.push_back({{yl, xh / 2 + yh, xl + yh, xl / 2},
                           {xh / 2 + yh - yl, xl + yh, xl / 2 + yl, yl}});
    }
    if (is_hv_worm(w) && proper) {
        results.push_back({{xh - xl + yh, xh / 2 + yl, xl + yl, xl / 2},
                           {xl / 2, xh + yh, xh / 2 + yl, yl}});
    }
    if (is_h_worm(w)) {
        if (xh - x > x - xl) {
            results.push_back({{x - xl + y, xh / 2 + y, xl + y, xl / 2},
                               {xh / 2 + xl - x, x + y, x - xl / 2 + y, y}});
        }
        if (2 * x >= xl + xh) {
            results.push_back({{x - xl + y, xh / 2 + y, xl + y, xl / 2},
                               {xl / 2, x + y, xh / 2 + y, y}});
        }
    }
    if (is_v_worm(w)) {
        if (2 * y >= yl + yh) {
            results.push_back({{yl, x / 2 + y, x + yh, x / 2},
                               {x / 2 + y - yl, x + yh, x / 2 + yl, yl}});
        }
        if (yh - y > y - yl) {
            results.push_back({{yh - 2 * y + 2 * yl, x / 2 + y, x + 2 * y - yl, x / 2},
                               {x / 2 + y - yl, x + yh, x / 2 + yl, yl}});
        }
    }

    require(!results.empty(), "closed_form_ab: no case matched");
    for (std::size_t i = 1; i < results.size(); ++i)
        require(results[i] == results[0], "closed_form_ab: overlapping cases disagree");
    return results[0];
}

// Predicted (delta t, delta h) of the edge of colour c leaving w, measured in
// terms of the other colour's string statistics. Tails strictly before the
// centre of their c-string give the "right deficient" value; for 2-edges the
// tail at the centre already produces (0,1).
inline std::pair<int, int> predict_edge_delta(const WormState& w, Color c) {
    const WormRole role = center_role(w, c);
    if (c == Color::one) {
        if (role == WormRole::left) return {-2, 0};
        if (role == WormRole::central_edge_begin) return {-1, 1};
        return {0, 2};
    }
    return role == WormRole::left ? std::pair<int, int>{-1, 0}
                                  : std::pair<int, int>{0, 1};
}

// Literal form "(x',y,x'';y',x,y'')" used as the vertex id of worm graphs.
inline std::string to_string(const WormState& w) {
    std::ostringstream os;
    os << '(' << w.x_lo << ',' << w.y_mid << ',' << w.x_hi << ';' << w.y_lo
       << ',' << w.x_mid << ',' << w.y_hi << ')';
    return os.str();
}

inline std::optional<WormState> parse_worm(const std::string& text) {
    WormState w;
    char open = 0, c1 = 0, c2 = 0, semi = 0, c3 = 0, c4 = 0, close = 0;
    std::istringstream is(text);
    is >> open >> w.x_lo >> c1 >> w.y_mid >> c2 >> w.x_hi >> semi >> w.y_lo
       >> c3 >> w.x_mid >> c4 >> w.y_hi >> close;
    if (!is || open != '(' || c1 != ',' || c2 != ',' || semi != ';' ||
        c3 != ',' || c4 != ',' || close != ')')
        return std::nullopt;
    return w;
}

} // namespace b2crystal
