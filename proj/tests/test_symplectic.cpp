#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mcgx/presentations.hpp"
#include "mcgx/symplectic.hpp"

using namespace mcgx;

namespace {

struct Rng {
    unsigned long long s = 0x13198a2e03707344ull;
    unsigned long long next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<unsigned long long>(hi - lo + 1));
    }
};

HomologyClass random_class(Rng& rng, int g) {
    HomologyClass v(static_cast<std::size_t>(2 * g));
    for (auto& x : v) x = rng.range(-4, 4);
    return v;
}

}  // namespace

TEST_CASE("transvection basics") {
    // zero class: separating twists act trivially on homology
    HomologyClass zero(6, 0);
    CHECK(transvection(zero).is_identity());

    // x1 basis vector at g = 2: columns pick up <e_j, x1> x1
    HomologyClass x1{1, 0, 0, 0};
    const auto t = transvection(x1);
    // <y1, x1> = -1, so column of y1 (index 2) gains -x1
    CHECK(t.at(0, 0) == 1);
    CHECK(t.at(0, 2) == -1);
    CHECK(t.at(1, 1) == 1);
    CHECK(t.at(2, 2) == 1);
    CHECK(t.at(3, 3) == 1);

    CHECK_THROWS_AS(transvection(HomologyClass{1, 0, 0}), DimensionError);
    CHECK_THROWS_AS(transvection(HomologyClass{}), DimensionError);
}

TEST_CASE("transvections are symplectic and sign-insensitive") {
    Rng rng;
    for (int i = 0; i < 200; ++i) {
        int g = static_cast<int>(rng.range(1, 4));
        auto v = random_class(rng, g);
        auto t = transvection(v);
        CHECK(t.is_symplectic());
        HomologyClass neg(v.size());
        for (std::size_t k = 0; k < v.size(); ++k) neg[k] = -v[k];
        CHECK(transvection(neg) == t);
        CHECK((t * t.inverse()).is_identity());
        CHECK((t.inverse() * t).is_identity());
    }
}

TEST_CASE("from_matrix validates the symplectic form") {
    // the transvection along x1 at g = 1, entered as raw entries
    auto m = SymplecticElement::from_matrix(2, {1, -1, 0, 1});
    CHECK(m == transvection(HomologyClass{1, 0}));
    // a shear that does not preserve the form is rejected
    CHECK_THROWS_AS(SymplecticElement::from_matrix(2, {1, 0, 0, 2}), InvalidAssignment);
    CHECK_THROWS_AS(SymplecticElement::from_matrix(2, {1, 0, 0}), DimensionError);
}

TEST_CASE("products of transvections stay symplectic") {
    Rng rng;
    for (int i = 0; i < 50; ++i) {
        int g = 3;
        auto m = SymplecticElement::identity(2 * g);
        for (int k = 0; k < 8; ++k)
            m = m * transvection(random_class(rng, g));
        CHECK(m.is_symplectic());
    }
}

TEST_CASE("disjoint pairing-zero classes commute, pairing-one classes braid") {
    struct Case {
        Family f;
        int g, r;
    };
    for (const auto& cs : {Case{Family::wajnryb_lift, 3, 1}, Case{Family::gervais_lift, 3, 1},
                           Case{Family::genus2, 2, 0}}) {
        auto sys = TransvectionSystem::for_family(cs.f, cs.g, cs.r);
        auto table = intersection_table(cs.f, cs.g, cs.r);
        for (std::size_t i = 0; i < table.symbols.size(); ++i) {
            for (std::size_t j = i + 1; j < table.symbols.size(); ++j) {
                auto ti = transvection(sys.classes.at(table.symbols[i]));
                auto tj = transvection(sys.classes.at(table.symbols[j]));
                if (table.at(i, j) == Crossing::disjoint) CHECK(ti * tj == tj * ti);
                if (table.at(i, j) == Crossing::once) CHECK(ti * tj * ti == tj * ti * tj);
            }
        }
    }
}

TEST_CASE("evaluate") {
    auto p = build_wajnryb_lift(3, 1);
    auto sys = TransvectionSystem::for_family(Family::wajnryb_lift, 3, 1);
    auto images = sys.images_with_mu();

    CHECK(evaluate(Word::identity(p.alphabet), images).is_identity());
    Word cancel = gen(p.alphabet, "c1") * gen(p.alphabet, "c1", -1);
    CHECK(evaluate(cancel, images).is_identity());

    // generic evaluation agrees with the transvection fast path
    for (const auto& [label, word] : p.relators)
        CHECK(evaluate(word, images) == sys.evaluate(word));

    std::map<std::string, SymplecticElement> partial;
    partial.emplace("c1", transvection(sys.classes.at("c1")));
    CHECK_THROWS_AS(evaluate(gen(p.alphabet, "c2"), partial), MissingAssignment);
}

TEST_CASE("curve classes") {
    CHECK(curve_class(Family::wajnryb_lift, 3, 1, "c1") == HomologyClass{0, 0, 0, 1, 0, 0});
    CHECK(curve_class(Family::wajnryb_lift, 3, 1, "c0") == HomologyClass{0, 0, 0, 1, -1, 0});
    CHECK(curve_class(Family::wajnryb_lift, 3, 1, "c7") == HomologyClass{0, 0, 0, 1, -1, 1});
    CHECK(curve_class(Family::genus2, 2, 0, "c5") == HomologyClass{0, 0, 1, -1});
    CHECK(curve_class(Family::gervais_lift, 3, 1, "b") == HomologyClass{0, 0, 0, 1, 1, 1});
    CHECK(curve_class(Family::gervais_lift, 3, 1, "a2") == HomologyClass{0, 1, 0, 0, 0, 0});
    CHECK(curve_class(Family::gervais_lift, 3, 1, "cij(2,3)") == HomologyClass{-1, 1, 0, 0, 0, 0});
    CHECK_THROWS_AS(curve_class(Family::wajnryb_lift, 3, 1, "mu"), NoClassError);
    CHECK_THROWS_AS(curve_class(Family::wajnryb_lift, 3, 1, "zz"), NoClassError);
}

TEST_CASE("verify_presentation_sp over small families") {
    CHECK(verify_presentation_sp(build_genus2()).all_ok());
    CHECK(verify_presentation_sp(build_wajnryb_lift(3, 0)).all_ok());
    CHECK(verify_presentation_sp(build_wajnryb_lift(4, 1)).all_ok());
    CHECK(verify_presentation_sp(build_gervais_lift(3, 1)).all_ok());
    CHECK(verify_presentation_sp(build_gervais_lift(3, 2)).all_ok());
}

TEST_CASE("corrupted intersection table fails verification") {
    auto table = intersection_table(Family::wajnryb_lift, 3, 1);
    table.set(table.index_of("c1"), table.index_of("c3"), Crossing::once);
    auto bad = build_wajnryb_lift(3, 1, table);
    auto rep = verify_presentation_sp(bad);
    CHECK(!rep.all_ok());
    bool braid_failed = false;
    for (const auto& f : rep.failures())
        if (f == "braid(c1,c3)") braid_failed = true;
    CHECK(braid_failed);
}

TEST_CASE("kappa words map to the identity, both chain orderings agree") {
    auto lib = relator_library(3, 1);
    auto sys = TransvectionSystem::for_family(Family::wajnryb_lift, 3, 1);
    CHECK(sys.evaluate(lib.at("kappa-chain")).is_identity());
    CHECK(sys.evaluate(lib.at("kappa-chain-alt")).is_identity());
    CHECK(sys.evaluate(lib.at("kappa-chain")) == sys.evaluate(lib.at("kappa-chain-alt")));
    CHECK(sys.evaluate(lib.at("kappa-lantern")).is_identity());

    auto lib2 = relator_library(2, 0);
    auto sys2 = TransvectionSystem::for_family(Family::genus2, 2, 0);
    CHECK(sys2.evaluate(lib2.at("kappa-chain")).is_identity());
}

TEST_CASE("projective checker on the symplectic fixture") {
    // whenever the assignment factors through the symplectic one, every
    // relator reports scalar 1, in all three families
    for (const auto& p :
         {build_wajnryb_lift(3, 1), build_gervais_lift(3, 1), build_genus2()}) {
        auto rep = verify_projective_rep(p, symplectic_fixture(p));
        CHECK(rep.all_scalar());
        CHECK(rep.all_one());
    }

    // all-identity assignment also passes with scalar 1
    auto p = build_wajnryb_lift(3, 1);
    RepAssignment ident;
    ident.dimension = 6;
    for (const auto& name : p.alphabet.names())
        ident.matrices.emplace(name, RationalMatrix::identity(6));
    CHECK(verify_projective_rep(p, ident).all_one());
}

TEST_CASE("lambda-scaled fixture: chain passes, lantern detects the scaling") {
    auto p = build_wajnryb_lift(3, 1);
    mpq_class lambda(2, 3);
    auto scaled = symplectic_fixture(p, lambda);
    auto rep = verify_projective_rep(p, scaled);
    CHECK(rep.all_scalar());   // projectively well-defined
    CHECK(!rep.all_one());     // but not linearly
    for (const auto& e : rep.entries) {
        REQUIRE(e.is_scalar);
        if (e.label == "chain") CHECK(e.scalar == 1);
        if (e.label == "lantern") CHECK(e.scalar == mpq_class(3, 2));  // lambda^-1
        if (e.label.rfind("braid(", 0) == 0) CHECK(e.scalar == 1);
    }
}

TEST_CASE("projective checker error paths") {
    auto p = build_wajnryb_lift(3, 1);
    auto assign = symplectic_fixture(p);
    assign.matrices.erase("c3");
    CHECK_THROWS_AS(verify_projective_rep(p, assign), MissingAssignment);

    auto assign2 = symplectic_fixture(p);
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) assign2.matrices.at("c3").at(r, c) = 0;
    CHECK_THROWS_AS(verify_projective_rep(p, assign2), InvalidAssignment);
}

TEST_CASE("rep assignment json round trip with p/q rationals") {
    auto p = build_genus2();
    auto a = symplectic_fixture(p, mpq_class(5, 7));
    auto j = a.to_json();
    auto back = RepAssignment::from_json(j);
    CHECK(back.dimension == a.dimension);
    for (const auto& [name, m] : a.matrices) CHECK(back.matrices.at(name) == m);
    CHECK(rational_from_str("6/4") == mpq_class(3, 2));
    CHECK(rational_from_str("7") == 7);
    CHECK(rational_str(mpq_class(-3, 9)) == "-1/3");
}
