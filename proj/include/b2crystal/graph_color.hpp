#pragma once

namespace b2crystal {

// The two edge colours. B-side graphs label them 1/2, decorated A-side graphs
// label the same carrier I/II.
enum class Color : unsigned char { one = 1, two = 2 };

inline Color other(Color c) {
    return c == Color::one ? Color::two : Color::one;
}

inline int color_number(Color c) {
    return c == Color::one ? 1 : 2;
}

} // namespace b2crystal
