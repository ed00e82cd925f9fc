#include "ybx/rational.hpp"

#include "ybx/errors.hpp"

namespace ybx {

Rat rat(long num, long den) {
    if (den == 0) throw ParseError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational string");
    Rat r;
    if (r.set_str(s, 10) != 0) throw ParseError("bad rational: '" + s + "'");
    if (r.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) {
    return r.get_str();
}

std::string vec_str(const Vec& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += rat_str(v[i]);
    }
    return out + ")";
}

Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error("dot: size mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

} // namespace ybx
