#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <set>

#include "mcgx/intmat.hpp"
#include "mcgx/presentations.hpp"

using namespace mcgx;

namespace {

// independent restatement: a triple is good iff some cyclic rotation is
// non-decreasing, and it is not constant
bool good_by_rotation(int i, int j, int k) {
    if (i == j && j == k) return false;
    int t[3] = {i, j, k};
    for (int s = 0; s < 3; ++s)
        if (t[s] <= t[(s + 1) % 3] && t[(s + 1) % 3] <= t[(s + 2) % 3]) return true;
    return false;
}

std::size_t count_relators(const Presentation& p, const std::string& prefix) {
    std::size_t n = 0;
    for (const auto& [label, word] : p.relators)
        if (label.rfind(prefix, 0) == 0) ++n;
    return n;
}

}  // namespace

TEST_CASE("good triples") {
    CHECK(good_triples(1).empty());
    CHECK(good_triples(2).size() == 6);  // all of {1,2}^3 except the two constants

    for (int n = 1; n <= 12; ++n) {
        std::set<std::array<int, 3>> brute;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k)
                    if (good_by_rotation(i, j, k)) brute.insert({i, j, k});
        auto got = good_triples(n);
        CHECK(got.size() == brute.size());
        CHECK(std::is_sorted(got.begin(), got.end()));
        for (const auto& t : got) {
            CHECK(brute.count({t.i, t.j, t.k}) == 1);
            CHECK(!(t.i == t.j && t.j == t.k));
        }
    }
    CHECK_THROWS_AS(static_cast<void>(good_triples(0)), InvalidParameter);
}

TEST_CASE("wajnryb lift shape") {
    auto p = build_wajnryb_lift(3, 1);
    CHECK(p.alphabet.size() == 9);  // c0..c7, mu
    CHECK(p.alphabet.names().back() == "mu");

    auto p0 = build_wajnryb_lift(3, 0);
    CHECK(p0.relators.size() == p.relators.size() + 1);
    CHECK(p0.has_relator("closed-commute"));
    CHECK(!p.has_relator("closed-commute"));

    CHECK(count_relators(p, "central(") == 8);
    CHECK(p.has_relator("chain"));
    CHECK(p.has_relator("lantern"));

    CHECK_THROWS_AS(static_cast<void>(build_wajnryb_lift(2, 1)), UnsupportedGenus);
    CHECK_THROWS_AS(static_cast<void>(build_wajnryb_lift(3, 2)), InvalidParameter);
}

TEST_CASE("wajnryb braid pairs follow the chain") {
    auto p = build_wajnryb_lift(4, 1);
    // braid pairs: consecutive chain curves plus (c0, c4)
    std::set<std::string> braids;
    for (const auto& [label, word] : p.relators)
        if (label.rfind("braid(", 0) == 0) braids.insert(label);
    std::set<std::string> expected;
    for (int i = 1; i <= 2 * 4; ++i)
        expected.insert("braid(c" + std::to_string(i) + ",c" + std::to_string(i + 1) + ")");
    expected.insert("braid(c0,c4)");
    CHECK(braids == expected);

    // every unordered pair appears exactly once, as commute xor braid
    std::size_t pairs = (p.alphabet.size() - 1) * (p.alphabet.size() - 2) / 2;
    CHECK(count_relators(p, "commute(") + count_relators(p, "braid(") == pairs);
}

TEST_CASE("genus2 shape") {
    auto p = build_genus2();
    CHECK(p.alphabet.size() == 5);
    CHECK(!p.alphabet.contains("mu"));
    CHECK(count_relators(p, "braid(") == 4);
    CHECK(count_relators(p, "commute(") == 6);
    CHECK(p.has_relator("central-square"));
    CHECK(p.has_relator("central-commute"));
    CHECK(p.relators.size() == 12);
}

TEST_CASE("gervais lift shape") {
    int g = 3, r = 2;
    int n = 2 * g + r - 2;
    auto p = build_gervais_lift(g, r);
    // b, b1..b_{g-1}, a1..an, n(n-1) cij, mu
    CHECK(p.alphabet.size() == 1 + static_cast<std::size_t>(g - 1) + static_cast<std::size_t>(n) +
                                   static_cast<std::size_t>(n) * (n - 1) + 1);
    CHECK(count_relators(p, "handle(") == static_cast<std::size_t>(g - 1));
    CHECK(count_relators(p, "star(") == good_triples(n).size());
    CHECK(count_relators(p, "central(") == p.alphabet.size() - 1);

    CHECK_THROWS_AS(static_cast<void>(build_gervais_lift(2, 1)), InvalidParameter);
    CHECK_THROWS_AS(static_cast<void>(build_gervais_lift(3, 0)), InvalidParameter);
}

TEST_CASE("star relator with a repeated index drops c_{l,l}") {
    auto p = build_gervais_lift(3, 1);
    const Word& w = p.relator("star(1,1,3)");
    // no cij(1,1) symbol exists; the star word has the two remaining c letters
    for (const auto& l : w.letters()) CHECK(p.alphabet.name(l.sym) != "cij(1,1)");
    auto expect_len = 2 + 1 + 12;  // cij(1,3) cij(3,1) mu (a1 a1 a3 b)^-3
    CHECK(w.size() <= static_cast<std::size_t>(expect_len));
    CHECK(w.exponent_sum(p.alphabet.symbol("cij(1,3)")) == 1);
    CHECK(w.exponent_sum(p.alphabet.symbol("cij(3,1)")) == 1);
    CHECK(w.exponent_sum(p.alphabet.symbol("mu")) == 1);
    CHECK(w.exponent_sum(p.alphabet.symbol("a1")) == -6);
    CHECK(w.exponent_sum(p.alphabet.symbol("a3")) == -3);
    CHECK(w.exponent_sum(p.alphabet.symbol("b")) == -3);
}

TEST_CASE("relator words are reduced, cyclically reduced, nonempty, in-alphabet") {
    for (const auto& p : {build_wajnryb_lift(3, 0), build_wajnryb_lift(4, 1), build_genus2(),
                          build_gervais_lift(3, 1), build_gervais_lift(3, 3)}) {
        std::set<std::string> labels;
        for (const auto& [label, word] : p.relators) {
            CHECK(labels.insert(label).second);  // unique labels
            CHECK(!word.empty());
            CHECK(cyclic_reduce(word) == word);
            for (const auto& l : word.letters())
                CHECK(l.sym < static_cast<int>(p.alphabet.size()));
        }
    }
}

TEST_CASE("b words") {
    Alphabet a(generator_names(Family::wajnryb_lift, 3, 1));
    auto c = [&](int i, long e = 1) { return gen(a, "c" + std::to_string(i), e); };
    Word w0 = c(4) * c(3) * c(2) * c(1) * c(1) * c(2) * c(3) * c(4);
    Word b0 = wajnryb_b_word(a, 0);
    CHECK(b0 == conjugate(c(0), invert(w0)));
    CHECK(b0.size() == 15);    // syllables: the c1 c1 pair merges to c1^2
    CHECK(b0.length() == 17);  // total letters
    CHECK(b0.exponent_sum(a.symbol("c0")) == 1);
    for (int i = 1; i <= 4; ++i) CHECK(b0.exponent_sum(a.symbol("c" + std::to_string(i))) == 0);
    // b2 moves b1; b3's conjugator carries b1 inside
    CHECK(wajnryb_b_word(a, 2).exponent_sum(a.symbol("c0")) == 1);
    CHECK(wajnryb_b_word(a, 3).exponent_sum(a.symbol("c0")) == 1);
    CHECK_THROWS_AS(static_cast<void>(wajnryb_b_word(a, 4)), InvalidParameter);
}

TEST_CASE("relator library") {
    auto lib2 = relator_library(2, 0);
    CHECK(lib2.at("kappa-lantern").empty());
    {
        Alphabet a(generator_names(Family::genus2, 2, 0));
        auto c = [&](int i, long e = 1) { return gen(a, "c" + std::to_string(i), e); };
        CHECK(lib2.at("kappa-chain") == pow(c(1) * c(2) * c(3), 4) * c(5, -2));
    }

    auto lib3 = relator_library(3, 1);
    CHECK(lib3.count("kappa-chain") == 1);
    CHECK(lib3.count("kappa-chain-alt") == 1);
    CHECK(lib3.count("kappa-lantern") == 1);
    CHECK(lib3.count("closed-commute") == 1);
    {
        Alphabet a(generator_names(Family::wajnryb_lift, 3, 1));
        auto c = [&](int i, long e = 1) { return gen(a, "c" + std::to_string(i), e); };
        Word b0 = wajnryb_b_word(a, 0);
        CHECK(lib3.at("kappa-chain") == pow(c(1) * c(2) * c(3), 4) * invert(b0) * c(0, -1));
        // signed nonseparating letter counts feed the central module constants
        mpz_class chain_eps = 0, lant_eps = 0;
        for (const auto& l : lib3.at("kappa-chain").letters()) chain_eps += l.exp;
        for (const auto& l : lib3.at("kappa-lantern").letters()) lant_eps += l.exp;
        CHECK(chain_eps == 10);
        CHECK(lant_eps == -1);
    }
    CHECK_THROWS_AS(static_cast<void>(relator_library(1, 0)), InvalidParameter);
    CHECK_THROWS_AS(static_cast<void>(relator_library(2, 1)), InvalidParameter);
}

TEST_CASE("base quotient matches the stored fixture") {
    auto q = base_quotient(build_wajnryb_lift(3, 1));
    CHECK(!q.alphabet.contains("mu"));
    for (const auto& [label, word] : q.relators) {
        CHECK(label.rfind("central(", 0) != 0);
        CHECK(!word.empty());
    }

    std::ifstream f(std::string(MCGX_FIXTURE_DIR) + "/wajnryb_m31.json");
    REQUIRE(f.good());
    json jf;
    f >> jf;
    auto fixture = Presentation::from_json(jf);
    REQUIRE(fixture.relators.size() == q.relators.size());
    for (std::size_t i = 0; i < q.relators.size(); ++i) {
        CHECK(fixture.relators[i].first == q.relators[i].first);
        CHECK(fixture.relators[i].second == q.relators[i].second);
    }
    CHECK(fixture.alphabet.names() == q.alphabet.names());
}

TEST_CASE("base quotient structure for gervais") {
    auto p = build_gervais_lift(3, 1);
    auto q = base_quotient(p);
    CHECK(!q.alphabet.contains("mu"));
    CHECK(q.alphabet.size() == p.alphabet.size() - 1);
    // exactly the centrality relators vanish; stars lose their mu letter
    CHECK(q.relators.size() == p.relators.size() - (p.alphabet.size() - 1));
    for (const auto& [label, word] : q.relators) {
        if (label.rfind("star(", 0) == 0) CHECK(word.size() == p.relator(label).size() - 1);
        CHECK(!word.empty());
    }
    // base quotients of the lifts are perfect too
    CHECK(abelianize(q).trivial());
    CHECK(abelianize(base_quotient(build_wajnryb_lift(3, 1))).trivial());
    CHECK(abelianize(base_quotient(build_wajnryb_lift(4, 0))).trivial());
}

TEST_CASE("presentation json round trip") {
    auto p = build_gervais_lift(3, 1);
    auto j = p.to_json();
    CHECK(j.at("family") == "gervais-lift");
    auto back = Presentation::from_json(j);
    CHECK(back.alphabet.names() == p.alphabet.names());
    REQUIRE(back.relators.size() == p.relators.size());
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        CHECK(back.relators[i].first == p.relators[i].first);
        CHECK(back.relators[i].second == p.relators[i].second);
    }
}

namespace {

// Independent oracle for the arc geometry behind the gervais table.
// Positions live on a 4n-cycle with inward-shrunk arc endpoints
// (start 4k+1, end 4k-1); two band curves over circle arcs cross exactly
// when their endpoint pairs interleave. Interleaving is decided by walking
// the cycle and recording the marker order, with no interval arithmetic.
bool cross_oracle(int x, int y, int u, int v, int n) {
    int cyc = 4 * n;
    auto start = [&](int k) { return (4 * k + 1) % cyc; };
    auto end = [&](int k) { return (4 * k - 1 + cyc) % cyc; };
    int a1 = start(x), a2 = end(y), b1 = start(u), b2 = end(v);
    if (a1 == b1 || a2 == b2) return false;  // parallel verticals, nested
    std::string seq;
    for (int step = 1; step < cyc; ++step) {
        int p = (a1 + step) % cyc;
        if (p == a2) seq += 'a';
        if (p == b1 || p == b2) seq += 'b';
    }
    return seq == "bab";
}

bool inside_oracle(int s, int t, int p, int n) {
    int q = s;
    for (;;) {
        q = q % n + 1;
        if (q == t) return false;
        if (q == p) return true;
    }
}

}  // namespace

TEST_CASE("arc predicates match the walking oracle") {
    using mcgx::detail::arcs_cross;
    using mcgx::detail::inside_arc;
    for (int n = 2; n <= 10; ++n) {
        for (int s = 1; s <= n; ++s)
            for (int t = 1; t <= n; ++t) {
                if (s == t) continue;
                for (int p = 1; p <= n; ++p)
                    CHECK(inside_arc(s, t, p, n) == inside_oracle(s, t, p, n));
            }
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y) {
                if (x == y) continue;
                for (int u = 1; u <= n; ++u)
                    for (int v = 1; v <= n; ++v) {
                        if (u == v) continue;
                        bool got = arcs_cross(x, y, u, v, n);
                        CHECK(got == cross_oracle(x, y, u, v, n));
                        CHECK(got == arcs_cross(u, v, x, y, n));  // symmetric
                    }
            }
    }
}

TEST_CASE("emitted relator type matches the algebraic pairing") {
    for (const auto& p :
         {build_wajnryb_lift(5, 1), build_gervais_lift(4, 2), build_genus2()}) {
        for (const auto& [label, word] : p.relators) {
            bool is_braid = label.rfind("braid(", 0) == 0;
            bool is_commute = label.rfind("commute(", 0) == 0;
            if (!is_braid && !is_commute) continue;
            const auto& ls = word.letters();
            REQUIRE(ls.size() >= 2);
            auto va = curve_class(p.family, p.g, p.r, p.alphabet.name(ls[0].sym));
            auto vb = curve_class(p.family, p.g, p.r, p.alphabet.name(ls[1].sym));
            long long pr = symplectic_pairing(va, vb);
            if (pr < 0) pr = -pr;
            CHECK(pr == (is_braid ? 1 : 0));
        }
    }
}

TEST_CASE("handle-identified curves never receive conflicting relator types") {
    // the handle relators equate c(2i,2i-1) with c(2i+1,2i); against any third
    // generator the two copies must not get a commutation relator on one side
    // and a braid relator on the other, which would force extra collapsing
    for (int g = 3; g <= 5; ++g) {
        for (int r = 1; r <= 2; ++r) {
            auto t = intersection_table(Family::gervais_lift, g, r);
            for (int i = 1; i <= g - 1; ++i) {
                auto a = t.index_of(gervais_c_name(2 * i, 2 * i - 1));
                auto b = t.index_of(gervais_c_name(2 * i + 1, 2 * i));
                for (std::size_t s = 0; s < t.symbols.size(); ++s) {
                    if (s == a || s == b) continue;
                    Crossing ca = t.at(a, s), cb = t.at(b, s);
                    bool conflict = (ca == Crossing::disjoint && cb == Crossing::once) ||
                                    (ca == Crossing::once && cb == Crossing::disjoint);
                    CHECK(!conflict);
                }
            }
        }
    }
}

TEST_CASE("intersection tables are class-consistent") {
    for (int g = 3; g <= 5; ++g) {
        check_table_class_consistency(intersection_table(Family::wajnryb_lift, g, 0));
        check_table_class_consistency(intersection_table(Family::gervais_lift, g, 2));
    }
    check_table_class_consistency(intersection_table(Family::genus2, 2, 0));

    // a corrupted entry is caught
    auto t = intersection_table(Family::wajnryb_lift, 3, 1);
    t.set(t.index_of("c1"), t.index_of("c3"), Crossing::once);
    CHECK_THROWS_AS(check_table_class_consistency(t), std::logic_error);
}
