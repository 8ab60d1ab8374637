// Builders for the three finite presentation families of the centrally
// extended mapping class groups, the good-triple combinatorics behind the
// star relations, and the named central words (kappa-chain, kappa-lantern).
//
// Relation "L = R" is always stored as the single relator L * R^-1.
// The b_0..b_3 generators of the chain/lantern relations are macros: they
// appear only as expanded conjugate words, never as alphabet symbols.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "mcgx/curves.hpp"
#include "mcgx/words.hpp"

namespace mcgx {

struct Presentation {
    Family family;
    int g = 0, r = 0;
    Alphabet alphabet;
    std::vector<std::pair<std::string, Word>> relators;  // (label, relator)
    std::vector<std::string> notes;

    const Word& relator(const std::string& label) const {
        for (const auto& [l, w] : relators)
            if (l == label) return w;
        throw std::invalid_argument("no relator labelled " + label);
    }

    bool has_relator(const std::string& label) const {
        for (const auto& [l, w] : relators)
            if (l == label) return true;
        return false;
    }

    json to_json() const {
        json j;
        j["family"] = family_tag(family);
        j["g"] = g;
        j["r"] = r;
        j["generators"] = alphabet.names();
        json rels = json::array();
        for (const auto& [label, word] : relators)
            rels.push_back(json{{"label", label}, {"word", word.to_json()}});
        j["relators"] = rels;
        return j;
    }

    static Presentation from_json(const json& j) {
        Presentation p;
        p.family = family_from_tag(j.at("family").get<std::string>());
        p.g = j.at("g").get<int>();
        p.r = j.at("r").get<int>();
        p.alphabet = Alphabet(j.at("generators").get<std::vector<std::string>>());
        for (const auto& rel : j.at("relators"))
            p.relators.emplace_back(rel.at("label").get<std::string>(),
                                    Word::from_json(p.alphabet, rel.at("word")));
        return p;
    }
};

struct GoodTriple {
    int i, j, k;
    friend bool operator==(const GoodTriple& a, const GoodTriple& b) {
        return a.i == b.i && a.j == b.j && a.k == b.k;
    }
    friend bool operator<(const GoodTriple& a, const GoodTriple& b) {
        if (a.i != b.i) return a.i < b.i;
        if (a.j != b.j) return a.j < b.j;
        return a.k < b.k;
    }
};

inline bool is_good_triple(int i, int j, int k) {
    if (i == j && j == k) return false;
    return (i <= j && j <= k) || (j <= k && k <= i) || (k <= i && i <= j);
}

// All good triples in {1..n}^3, lexicographic.
inline std::vector<GoodTriple> good_triples(int n) {
    if (n < 1) throw InvalidParameter("good_triples requires n >= 1");
    std::vector<GoodTriple> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                if (is_good_triple(i, j, k)) out.push_back({i, j, k});
    return out;
}

namespace detail {

inline Word commute_relator(const Alphabet& a, const std::string& x, const std::string& y) {
    return gen(a, x) * gen(a, y) * gen(a, x, -1) * gen(a, y, -1);
}

inline Word braid_relator(const Alphabet& a, const std::string& x, const std::string& y) {
    return gen(a, x) * gen(a, y) * gen(a, x) * gen(a, y, -1) * gen(a, x, -1) * gen(a, y, -1);
}

inline Word chain_word(const Alphabet& a, int lo, int hi) {
    // c_hi c_{hi-1} ... c_lo c_lo ... c_{hi-1} c_hi
    Word w = Word::identity(a);
    for (int i = hi; i >= lo; --i) w = w * gen(a, "c" + std::to_string(i));
    for (int i = lo; i <= hi; ++i) w = w * gen(a, "c" + std::to_string(i));
    return w;
}

}  // namespace detail

// The b_i of the chain and lantern relations, expanded over the wajnryb
// alphabet. b_i is the twist along w_i(curve of c_0), i.e. w_i c_0 w_i^-1
// under the left-to-right evaluation convention used throughout, with
//   w_0 = c4 c3 c2 c1 c1 c2 c3 c4
//   w_1 = c4 c5 c3 c4
//   w_2 = c2 c3 c1 c2          (moving b_1)
//   w_3 = c6 c5 c4 c3 c2 c5^-1 c6^-1 b_1 c6 c5 c1^-1 c2^-1 c3^-1 c4^-1
// The other conjugation direction sends b_3 to a curve that breaks the
// lantern configuration (the symplectic oracle rejects it).
inline Word wajnryb_b_word(const Alphabet& a, int which) {
    auto c = [&](int i, long e = 1) { return gen(a, "c" + std::to_string(i), e); };
    auto moved = [](const Word& u, const Word& w) { return concat(concat(w, u), invert(w)); };
    switch (which) {
        case 0:
            return moved(c(0), c(4) * c(3) * c(2) * c(1) * c(1) * c(2) * c(3) * c(4));
        case 1:
            return moved(c(0), c(4) * c(5) * c(3) * c(4));
        case 2:
            return moved(wajnryb_b_word(a, 1), c(2) * c(3) * c(1) * c(2));
        case 3: {
            Word w3 = c(6) * c(5) * c(4) * c(3) * c(2) * c(5, -1) * c(6, -1) *
                      wajnryb_b_word(a, 1) * c(6) * c(5) * c(1, -1) * c(2, -1) * c(3, -1) * c(4, -1);
            return moved(c(0), w3);
        }
        default:
            throw InvalidParameter("wajnryb_b_word: which must be 0..3");
    }
}

inline Presentation build_wajnryb_lift(int g, int r, const IntersectionTable& table) {
    check_family_params(Family::wajnryb_lift, g, r);
    Presentation p;
    p.family = Family::wajnryb_lift;
    p.g = g;
    p.r = r;
    p.alphabet = Alphabet(generator_names(Family::wajnryb_lift, g, r));
    p.notes.push_back("the central generator is often written u in the literature; it is named mu here");
    if (r == 1)
        p.notes.push_back("c" + std::to_string(2 * g + 1) +
                          " appears only in braid/commutation relators when r = 1");
    const Alphabet& a = p.alphabet;
    auto c = [&](int i, long e = 1) { return gen(a, "c" + std::to_string(i), e); };

    std::size_t m = table.symbols.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (table.at(i, j) == Crossing::disjoint)
                p.relators.emplace_back("commute(" + table.symbols[i] + "," + table.symbols[j] + ")",
                                        detail::commute_relator(a, table.symbols[i], table.symbols[j]));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (table.at(i, j) == Crossing::once)
                p.relators.emplace_back("braid(" + table.symbols[i] + "," + table.symbols[j] + ")",
                                        detail::braid_relator(a, table.symbols[i], table.symbols[j]));

    Word b0 = wajnryb_b_word(a, 0);
    p.relators.emplace_back("chain",
                            pow(c(1) * c(2) * c(3), 4) * invert(b0) * c(0, -1) * gen(a, "mu", -1));
    for (int i = 0; i <= 2 * g + 1; ++i)
        p.relators.emplace_back("central(c" + std::to_string(i) + ")",
                                c(i) * gen(a, "mu") * c(i, -1) * gen(a, "mu", -1));

    Word b1 = wajnryb_b_word(a, 1), b2 = wajnryb_b_word(a, 2), b3 = wajnryb_b_word(a, 3);
    p.relators.emplace_back("lantern",
                            c(0) * b2 * b1 * invert(b3) * c(5, -1) * c(3, -1) * c(1, -1));

    if (r == 0) {
        Word n = detail::chain_word(a, 1, 2 * g);
        Word t = c(2 * g + 1);
        p.relators.emplace_back("closed-commute", n * t * invert(n) * invert(t));
    }
    return p;
}

inline Presentation build_wajnryb_lift(int g, int r) {
    auto table = intersection_table(Family::wajnryb_lift, g, r);
    check_table_class_consistency(table);
    return build_wajnryb_lift(g, r, table);
}

inline Presentation build_genus2(const IntersectionTable& table) {
    Presentation p;
    p.family = Family::genus2;
    p.g = 2;
    p.r = 0;
    p.alphabet = Alphabet(generator_names(Family::genus2, 2, 0));
    const Alphabet& a = p.alphabet;
    auto c = [&](int i, long e = 1) { return gen(a, "c" + std::to_string(i), e); };

    std::size_t m = table.symbols.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (table.at(i, j) == Crossing::disjoint)
                p.relators.emplace_back("commute(" + table.symbols[i] + "," + table.symbols[j] + ")",
                                        detail::commute_relator(a, table.symbols[i], table.symbols[j]));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (table.at(i, j) == Crossing::once)
                p.relators.emplace_back("braid(" + table.symbols[i] + "," + table.symbols[j] + ")",
                                        detail::braid_relator(a, table.symbols[i], table.symbols[j]));

    Word kappa = pow(c(1) * c(2) * c(3), 4) * c(5, -2);
    Word u = detail::chain_word(a, 1, 5);
    p.relators.emplace_back("central-square", pow(kappa, 2) * invert(pow(u, 2)));
    p.relators.emplace_back("central-commute", u * c(1) * invert(u) * c(1, -1));
    return p;
}

inline Presentation build_genus2() {
    auto table = intersection_table(Family::genus2, 2, 0);
    check_table_class_consistency(table);
    return build_genus2(table);
}

inline Presentation build_gervais_lift(int g, int r, const IntersectionTable& table) {
    check_family_params(Family::gervais_lift, g, r);
    int n = 2 * g + r - 2;
    Presentation p;
    p.family = Family::gervais_lift;
    p.g = g;
    p.r = r;
    p.alphabet = Alphabet(generator_names(Family::gervais_lift, g, r));
    const Alphabet& a = p.alphabet;
    auto cij = [&](int i, int j) {
        // c_{l,l} = 1: the symbol is replaced by the empty word
        return i == j ? Word::identity(a) : gen(a, gervais_c_name(i, j));
    };

    for (int i = 1; i <= g - 1; ++i)
        p.relators.emplace_back("handle(" + std::to_string(i) + ")",
                                cij(2 * i, 2 * i - 1) * invert(cij(2 * i + 1, 2 * i)));

    std::size_t m = table.symbols.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            Crossing cr = table.at(i, j);
            if (cr == Crossing::many) continue;
            const std::string& x = table.symbols[i];
            const std::string& y = table.symbols[j];
            if (cr == Crossing::disjoint)
                p.relators.emplace_back("commute(" + x + "," + y + ")",
                                        detail::commute_relator(a, x, y));
            else
                p.relators.emplace_back("braid(" + x + "," + y + ")",
                                        detail::braid_relator(a, x, y));
        }
    }

    for (const auto& t : good_triples(n)) {
        Word star = cij(t.i, t.j) * cij(t.j, t.k) * cij(t.k, t.i);
        Word rhs = pow(gen(a, "a" + std::to_string(t.i)) * gen(a, "a" + std::to_string(t.j)) *
                           gen(a, "a" + std::to_string(t.k)) * gen(a, "b"),
                       3);
        p.relators.emplace_back("star(" + std::to_string(t.i) + "," + std::to_string(t.j) + "," +
                                    std::to_string(t.k) + ")",
                                star * gen(a, "mu") * invert(rhs));
    }

    for (const auto& s : table.symbols)
        p.relators.emplace_back("central(" + s + ")",
                                gen(a, s) * gen(a, "mu") * gen(a, s, -1) * gen(a, "mu", -1));
    return p;
}

inline Presentation build_gervais_lift(int g, int r) {
    auto table = intersection_table(Family::gervais_lift, g, r);
    check_table_class_consistency(table);
    return build_gervais_lift(g, r, table);
}

inline Presentation build_presentation(Family f, int g, int r) {
    switch (f) {
        case Family::wajnryb_lift: return build_wajnryb_lift(g, r);
        case Family::gervais_lift: return build_gervais_lift(g, r);
        case Family::genus2: return build_genus2();
    }
    throw InvalidParameter("unknown family");
}

// Named central words over the alphabet matching (g, r). For g >= 3 these
// live over the wajnryb alphabet; for g = 2 over the genus2 one, where
// kappa-lantern is the empty word. kappa-chain uses the relation order
// (...)^4 b0^-1 c0^-1; kappa-chain-alt the definition order with c0^-1 first.
// Both map to the same symplectic matrix (c0 and b0 are disjoint curves).
inline std::map<std::string, Word> relator_library(int g, int r) {
    std::map<std::string, Word> lib;
    if (g == 2) {
        if (r != 0) throw InvalidParameter("relator_library: g = 2 requires r = 0");
        Alphabet a(generator_names(Family::genus2, 2, 0));
        auto c = [&](int i, long e = 1) { return gen(a, "c" + std::to_string(i), e); };
        lib.emplace("kappa-chain", pow(c(1) * c(2) * c(3), 4) * c(5, -2));
        lib.emplace("kappa-lantern", Word::identity(a));
        Word kappa = pow(c(1) * c(2) * c(3), 4) * c(5, -2);
        Word u = detail::chain_word(a, 1, 5);
        lib.emplace("central-square", pow(kappa, 2) * invert(pow(u, 2)));
        lib.emplace("central-commute", u * c(1) * invert(u) * c(1, -1));
        return lib;
    }
    if (g < 2) throw InvalidParameter("relator_library requires g >= 2");
    check_family_params(Family::wajnryb_lift, g, r);
    Alphabet a(generator_names(Family::wajnryb_lift, g, r));
    auto c = [&](int i, long e = 1) { return gen(a, "c" + std::to_string(i), e); };
    Word b0 = wajnryb_b_word(a, 0);
    Word b1 = wajnryb_b_word(a, 1);
    Word b2 = wajnryb_b_word(a, 2);
    Word b3 = wajnryb_b_word(a, 3);
    Word four = pow(c(1) * c(2) * c(3), 4);
    lib.emplace("kappa-chain", four * invert(b0) * c(0, -1));
    lib.emplace("kappa-chain-alt", four * c(0, -1) * invert(b0));
    lib.emplace("kappa-lantern",
                c(1, -1) * c(3, -1) * c(5, -1) * invert(b3) * c(0) * b2 * b1);
    Word nw = detail::chain_word(a, 1, 2 * g);
    Word t = c(2 * g + 1);
    lib.emplace("closed-commute", nw * t * invert(nw) * invert(t));
    return lib;
}

// Quotient by mu = 1: drop mu from the alphabet, erase it from every relator,
// and drop relators that become empty (the centrality ones). This is the base
// presentation of the underlying mapping class group.
inline Presentation base_quotient(const Presentation& p) {
    if (!p.alphabet.contains("mu")) return p;
    std::vector<std::string> names;
    for (const auto& nm : p.alphabet.names())
        if (nm != "mu") names.push_back(nm);
    Presentation q;
    q.family = p.family;
    q.g = p.g;
    q.r = p.r;
    q.alphabet = Alphabet(names);
    GeneratorSymbol mu = p.alphabet.symbol("mu");
    for (const auto& [label, word] : p.relators) {
        Word w = word.erase_symbol(mu, q.alphabet);
        if (w.empty()) continue;
        q.relators.emplace_back(label, w);
    }
    return q;
}

}  // namespace mcgx
