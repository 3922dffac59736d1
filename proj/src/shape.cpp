#include "torsion/shape.hpp"

#include "torsion/errors.hpp"

#include <charconv>

namespace torsion {

TorsionShape::TorsionShape(unsigned m_, unsigned n_) : m(m_), n(n_) {
    if (m == 0 || n == 0 || n % m != 0) throw MathError("invalid torsion shape: need m | n");
}

std::string TorsionShape::to_string() const {
    if (m == 1) return "C" + std::to_string(n);
    return "C" + std::to_string(m) + "xC" + std::to_string(n);
}

namespace {

bool read_cyclic(std::string_view s, unsigned& v) {
    if (s.size() < 2 || s[0] != 'C') return false;
    auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), v);
    return ec == std::errc() && ptr == s.data() + s.size() && v > 0;
}

}  // namespace

TorsionShape TorsionShape::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ') s += c;
    for (std::string_view sep : {"x", "+", "\xE2\x8A\x95"}) {
        auto pos = s.find(sep);
        if (pos == std::string::npos) continue;
        unsigned a = 0, b = 0;
        if (!read_cyclic(std::string_view(s).substr(0, pos), a) ||
            !read_cyclic(std::string_view(s).substr(pos + sep.size()), b))
            throw ParseError("not a torsion shape: '" + std::string(text) + "'");
        if (b % a != 0) throw ParseError("torsion shape needs m | n: '" + std::string(text) + "'");
        return {a, b};
    }
    unsigned v = 0;
    if (!read_cyclic(s, v)) throw ParseError("not a torsion shape: '" + std::string(text) + "'");
    return cyclic(v);
}

}  // namespace torsion
