// Static curve data behind the three presentation families: generator name
// lists, geometric intersection tables, and homology classes of the curves
// in the standard symplectic basis (x_1..x_g, y_1..y_g).
//
// Conventions (fixed here once, validated by the symplectic oracle):
//
// Chain families (wajnryb-lift, genus2): c_1..c_{2g(+1)} is the standard
// chain, c_{2i-1} -> y_i, c_{2i} -> x_i + x_{i+1}, c_{2g} -> x_g. The curve
// c_0 is a boundary curve of a neighborhood of the 3-chain c_1,c_2,c_3, so
// c_0 -> y_1 - y_2, and it meets only c_4. The closed-case curve c_{2g+1}
// meets only c_{2g}; its class is forced to the alternating sum
// sum_i (-1)^{g-i} y_i by the disjointness constraints. In genus 2 the chain
// end c_5 plays the same role with class y_1 - y_2.
//
// Handle-and-star family (gervais-lift), n = 2g + r - 2: one curve b crossed
// once by each of the n pairwise-disjoint curves a_1..a_n, in cyclic position
// order 1..n. cij(x,y) is the boundary curve enclosing b and the arc of
// positions from x to y in the positive direction. Handles join the two
// regions flanking a_{2k}, and b_k runs through handle k crossing a_{2k}
// once. The induced classes: a_i collapse to x_1 for i odd or i >= 2g-1,
// a_{2k} -> x_{k+1}, b -> y_1 + ... + y_g, b_k -> y_{k+1},
// cij(x,y) -> class(a_x) - class(a_y).

#pragma once

#include <string>
#include <vector>

#include "mcgx/words.hpp"

namespace mcgx {

enum class Family { wajnryb_lift, gervais_lift, genus2 };

inline const char* family_tag(Family f) {
    switch (f) {
        case Family::wajnryb_lift: return "wajnryb-lift";
        case Family::gervais_lift: return "gervais-lift";
        case Family::genus2: return "genus2";
    }
    return "?";
}

inline Family family_from_tag(const std::string& tag) {
    if (tag == "wajnryb-lift" || tag == "wajnryb") return Family::wajnryb_lift;
    if (tag == "gervais-lift" || tag == "gervais") return Family::gervais_lift;
    if (tag == "genus2") return Family::genus2;
    throw std::invalid_argument("unknown family: " + tag);
}

struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// build_wajnryb_lift with g < 3: the genus2 builder is the right entry point.
struct UnsupportedGenus : InvalidParameter {
    using InvalidParameter::InvalidParameter;
};

struct NoClassError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline void check_family_params(Family f, int g, int r) {
    switch (f) {
        case Family::wajnryb_lift:
            if (g < 3) throw UnsupportedGenus("wajnryb-lift requires g >= 3; use build_genus2 for g = 2");
            if (r != 0 && r != 1) throw InvalidParameter("wajnryb-lift requires r in {0,1}");
            break;
        case Family::gervais_lift:
            if (g < 3 || r < 1) throw InvalidParameter("gervais-lift requires g >= 3 and r >= 1");
            break;
        case Family::genus2:
            if (g != 2 || r != 0) throw InvalidParameter("genus2 family is fixed at g = 2, r = 0");
            break;
    }
}

inline std::string gervais_c_name(int i, int j) {
    return "cij(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Generator names in their conventional order; the central generator mu
// comes last (the genus2 family has none).
inline std::vector<std::string> generator_names(Family f, int g, int r) {
    check_family_params(f, g, r);
    std::vector<std::string> names;
    switch (f) {
        case Family::wajnryb_lift:
            for (int i = 0; i <= 2 * g + 1; ++i) names.push_back("c" + std::to_string(i));
            names.push_back("mu");
            break;
        case Family::genus2:
            for (int i = 1; i <= 5; ++i) names.push_back("c" + std::to_string(i));
            break;
        case Family::gervais_lift: {
            int n = 2 * g + r - 2;
            names.push_back("b");
            for (int i = 1; i <= g - 1; ++i) names.push_back("b" + std::to_string(i));
            for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    if (i != j) names.push_back(gervais_c_name(i, j));
            names.push_back("mu");
            break;
        }
    }
    return names;
}

enum class Crossing { disjoint = 0, once = 1, many = 2 };

// Symmetric geometric-intersection table over the curve generators of one
// family (mu carries no curve and is excluded). Diagonal entries are "many":
// no braid relator is ever emitted for a generator against itself.
struct IntersectionTable {
    Family family;
    int g = 0, r = 0;
    std::vector<std::string> symbols;
    std::vector<Crossing> entries;  // symbols.size()^2, symmetric

    Crossing at(std::size_t i, std::size_t j) const { return entries[i * symbols.size() + j]; }

    Crossing at(const std::string& a, const std::string& b) const {
        return at(index_of(a), index_of(b));
    }

    void set(std::size_t i, std::size_t j, Crossing c) {
        entries[i * symbols.size() + j] = c;
        entries[j * symbols.size() + i] = c;
    }

    std::size_t index_of(const std::string& name) const {
        for (std::size_t i = 0; i < symbols.size(); ++i)
            if (symbols[i] == name) return i;
        throw std::invalid_argument("symbol not in intersection table: " + name);
    }
};

namespace detail {

// Gervais symbol structure, parsed from the canonical names.
struct GervaisSym {
    enum Kind { B, BK, A, C } kind;
    int i = 0, j = 0;  // BK/A: i; C: (i, j)
};

inline GervaisSym parse_gervais(const std::string& name) {
    if (name == "b") return {GervaisSym::B, 0, 0};
    if (name.rfind("cij(", 0) == 0) {
        auto comma = name.find(',');
        int i = std::stoi(name.substr(4, comma - 4));
        int j = std::stoi(name.substr(comma + 1, name.size() - comma - 2));
        return {GervaisSym::C, i, j};
    }
    if (name[0] == 'b') return {GervaisSym::BK, std::stoi(name.substr(1)), 0};
    if (name[0] == 'a') return {GervaisSym::A, std::stoi(name.substr(1)), 0};
    throw std::invalid_argument("not a gervais symbol: " + name);
}

// p strictly inside the open positive arc (s -> t) on the cycle {1..n}.
inline bool inside_arc(int s, int t, int p, int n) {
    if (p == s || p == t) return false;
    int dt = ((t - s) % n + n) % n;
    int dp = ((p - s) % n + n) % n;
    return dp > 0 && dp < dt;
}

// Whether the boundary curves over arcs (x->y) and (u->v) must cross.
// Arcs sharing a start or sharing an end are nested; complementary arcs are
// disjoint. Otherwise they cross exactly when one endpoint of the second arc
// lies strictly inside the first.
inline bool arcs_cross(int x, int y, int u, int v, int n) {
    if (x == u || y == v) return false;
    if (x == v && y == u) return false;
    return inside_arc(x, y, u, n) != inside_arc(x, y, v, n);
}

inline Crossing gervais_crossing(const GervaisSym& p, const GervaisSym& q, int g, int n) {
    using K = GervaisSym;
    // order so that p.kind <= q.kind in enum order B < BK < A < C
    if (p.kind > q.kind) return gervais_crossing(q, p, g, n);
    switch (p.kind) {
        case K::B:
            if (q.kind == K::A) return Crossing::once;
            return Crossing::disjoint;  // b vs b_k, b vs cij
        case K::BK:
            if (q.kind == K::BK) return Crossing::disjoint;
            if (q.kind == K::A)
                return q.i == 2 * p.i ? Crossing::once : Crossing::disjoint;
            // b_k vs cij(x,y): once iff 2k is an arc endpoint
            return (q.i == 2 * p.i || q.j == 2 * p.i) ? Crossing::once : Crossing::disjoint;
        case K::A:
            if (q.kind == K::A) return Crossing::disjoint;
            // a_k vs cij(x,y)
            if (p.i == q.i || p.i == q.j) return Crossing::disjoint;
            return inside_arc(q.i, q.j, p.i, n) ? Crossing::many : Crossing::disjoint;
        case K::C:
            return arcs_cross(p.i, p.j, q.i, q.j, n) ? Crossing::many : Crossing::disjoint;
    }
    return Crossing::many;
}

}  // namespace detail

inline IntersectionTable intersection_table(Family f, int g, int r) {
    check_family_params(f, g, r);
    IntersectionTable t;
    t.family = f;
    t.g = g;
    t.r = r;
    t.symbols = generator_names(f, g, r);
    if (f != Family::genus2) t.symbols.pop_back();  // drop mu
    std::size_t m = t.symbols.size();
    t.entries.assign(m * m, Crossing::disjoint);
    for (std::size_t i = 0; i < m; ++i) t.set(i, i, Crossing::many);

    if (f == Family::wajnryb_lift || f == Family::genus2) {
        // curve index from name "ck"
        auto idx = [&](std::size_t i) { return std::stoi(t.symbols[i].substr(1)); };
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                int a = idx(i), b = idx(j);
                if (a > b) std::swap(a, b);
                bool once = (b == a + 1 && a >= 1) || (a == 0 && b == 4);
                t.set(i, j, once ? Crossing::once : Crossing::disjoint);
            }
        }
    } else {
        int n = 2 * g + r - 2;
        std::vector<detail::GervaisSym> syms;
        syms.reserve(m);
        for (const auto& name : t.symbols) syms.push_back(detail::parse_gervais(name));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                t.set(i, j, detail::gervais_crossing(syms[i], syms[j], g, n));
    }
    return t;
}

// Integer homology vector of length 2g in the basis (x_1..x_g, y_1..y_g).
using HomologyClass = std::vector<long long>;

// <u, w> with <x_i, y_i> = 1.
inline long long symplectic_pairing(const HomologyClass& u, const HomologyClass& w) {
    if (u.size() != w.size() || u.size() % 2 != 0)
        throw std::invalid_argument("pairing: mismatched homology vectors");
    std::size_t g = u.size() / 2;
    long long s = 0;
    for (std::size_t i = 0; i < g; ++i) s += u[i] * w[g + i] - u[g + i] * w[i];
    return s;
}

inline HomologyClass curve_class(Family f, int g, int r, const std::string& symbol) {
    check_family_params(f, g, r);
    if (symbol == "mu") throw NoClassError("mu is central and carries no curve class");
    HomologyClass v(static_cast<std::size_t>(2 * g), 0);
    auto x = [&](int i) -> long long& { return v[static_cast<std::size_t>(i - 1)]; };
    auto y = [&](int i) -> long long& { return v[static_cast<std::size_t>(g + i - 1)]; };

    if (f == Family::wajnryb_lift || f == Family::genus2) {
        if (symbol.empty() || symbol[0] != 'c') throw NoClassError("unknown symbol: " + symbol);
        int k = std::stoi(symbol.substr(1));
        int top = (f == Family::genus2) ? 5 : 2 * g + 1;
        int lo = (f == Family::genus2) ? 1 : 0;
        if (k < lo || k > top) throw NoClassError("unknown symbol: " + symbol);
        if (f == Family::genus2 && k == 5) {
            y(1) = 1;
            y(2) = -1;
        } else if (f == Family::wajnryb_lift && k == 0) {
            y(1) = 1;
            y(2) = -1;
        } else if (f == Family::wajnryb_lift && k == 2 * g + 1) {
            for (int i = 1; i <= g; ++i) y(i) = ((g - i) % 2 == 0) ? 1 : -1;
        } else if (k % 2 == 1) {
            y((k + 1) / 2) = 1;
        } else if (k == 2 * g) {
            x(g) = 1;
        } else {
            x(k / 2) = 1;
            x(k / 2 + 1) = 1;
        }
        return v;
    }

    int n = 2 * g + r - 2;
    auto a_class = [&](int i) {
        HomologyClass w(static_cast<std::size_t>(2 * g), 0);
        if (i < 1 || i > n) throw NoClassError("unknown symbol index");
        if (i % 2 == 1 || i >= 2 * g - 1)
            w[0] = 1;  // x_1
        else
            w[static_cast<std::size_t>(i / 2)] = 1;  // x_{i/2+1}
        return w;
    };
    auto s = detail::parse_gervais(symbol);
    switch (s.kind) {
        case detail::GervaisSym::B:
            for (int i = 1; i <= g; ++i) y(i) = 1;
            return v;
        case detail::GervaisSym::BK:
            if (s.i < 1 || s.i > g - 1) throw NoClassError("unknown symbol: " + symbol);
            y(s.i + 1) = 1;
            return v;
        case detail::GervaisSym::A:
            return a_class(s.i);
        case detail::GervaisSym::C: {
            auto va = a_class(s.i), vb = a_class(s.j);
            for (std::size_t k = 0; k < v.size(); ++k) v[k] = va[k] - vb[k];
            return v;
        }
    }
    throw NoClassError("unknown symbol: " + symbol);
}

// Fail fast if the algebraic pairing disagrees with a table entry <= 1.
// Geometric intersection 0 or 1 forces |<u,w>| equal to it; entries "many"
// are unconstrained.
inline void check_table_class_consistency(const IntersectionTable& t) {
    std::vector<HomologyClass> cls;
    cls.reserve(t.symbols.size());
    for (const auto& s : t.symbols) cls.push_back(curve_class(t.family, t.g, t.r, s));
    for (std::size_t i = 0; i < t.symbols.size(); ++i) {
        for (std::size_t j = i + 1; j < t.symbols.size(); ++j) {
            Crossing c = t.at(i, j);
            if (c == Crossing::many) continue;
            long long p = symplectic_pairing(cls[i], cls[j]);
            long long want = (c == Crossing::once) ? 1 : 0;
            if (p < 0) p = -p;
            if (p != want)
                throw std::logic_error("intersection table inconsistent with curve classes at (" +
                                       t.symbols[i] + ", " + t.symbols[j] + ")");
        }
    }
}

}  // namespace mcgx
