#include "tangentad/poly_model.hpp"
#include "tangentad/tangent_core.hpp"

#include "catch_amalgamated.hpp"

using namespace tangentad;

namespace {

Samples<PolyModel> poly_samples(std::uint64_t seed, std::size_t count) {
    Rng rng(seed);
    Samples<PolyModel> s;
    s.objects = {1, 2, 3};
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t a = 1 + rng.below(3), b = 1 + rng.below(3);
        s.morphisms.push_back(random_poly_map(rng, a, b, 3));
    }
    return s;
}

template <class M>
Samples<M> as_samples(const Samples<PolyModel>& s) {
    return {s.objects, s.morphisms};
}

} // namespace

TEST_CASE("tangent axioms hold exactly on the polynomial model") {
    PolyModel m;
    auto rep = check_tangent_axioms(m, poly_samples(42, 12));
    for (const auto& r : rep.failures())
        UNSCOPED_INFO(r.diagram << " @ " << r.sample << ": " << r.witness);
    CHECK(rep.all_pass());
}

TEST_CASE("axioms hold for the explicit sample f(x) = x^2") {
    PolyModel m;
    Samples<PolyModel> s;
    s.objects = {1};
    s.morphisms = {PolyMap(1, {Poly::variable(1, 0) * Poly::variable(1, 0)})};
    CHECK(check_tangent_axioms(m, s).all_pass());
}

TEST_CASE("mutated models are caught by named diagrams") {
    auto failing = [](Mutation mut) {
        MutatedPolyModel m(mut);
        auto rep = check_tangent_axioms(m, as_samples<MutatedPolyModel>(poly_samples(43, 6)));
        std::set<std::string> bad;
        for (const auto& r : rep.failures()) bad.insert(r.diagram);
        return bad;
    };

    SECTION("c |-> id breaks the l/c exchange") {
        auto bad = failing(Mutation::c_identity);
        CHECK(bad.count("def-2.3/lc-exchange") == 1);
    }
    SECTION("degenerate l breaks c . l = l") {
        auto bad = failing(Mutation::l_degenerate);
        CHECK(bad.count("def-2.3/cl-fix") == 1);
    }
    SECTION("s as a projection breaks the unit law") {
        auto bad = failing(Mutation::s_proj);
        CHECK(bad.count("def-2.1/s-unit") == 1);
    }
    SECTION("z with a constant tangent breaks naturality of z") {
        auto bad = failing(Mutation::z_one);
        CHECK(bad.count("nat/z") == 1);
    }
    SECTION("n |-> id breaks the negative law") {
        auto bad = failing(Mutation::n_identity);
        CHECK(bad.count("def-2.3/negative-law") == 1);
    }
}

TEST_CASE("identity morphism is a strict lax tangent morphism") {
    PolyModel m;
    auto id = identity_lax(m);
    CHECK(check_lax_tangent_morphism(id, poly_samples(7, 5)).all_pass());
}

TEST_CASE("(T, c) is a lax tangent endomorphism of the polynomial model") {
    PolyModel m;
    auto tc = tangent_endo(m);
    auto rep = check_lax_tangent_morphism(tc, poly_samples(8, 5));
    for (const auto& r : rep.failures())
        UNSCOPED_INFO(r.diagram << " @ " << r.sample << ": " << r.witness);
    CHECK(rep.all_pass());
}

TEST_CASE("compose_lax unit and associativity on samples") {
    PolyModel m;
    auto id = identity_lax(m);
    auto tc = tangent_endo(m);
    auto samples = poly_samples(9, 4);

    auto same = [&](const auto& f, const auto& g) {
        for (const auto& M : samples.objects) {
            if (f.obj(M) != g.obj(M)) return false;
            if (!m.equal(f.law(M), g.law(M))) return false;
        }
        for (const auto& h : samples.morphisms)
            if (!m.equal(f.mor(h), g.mor(h))) return false;
        return true;
    };

    CHECK(same(compose_lax(id, tc), tc));
    CHECK(same(compose_lax(tc, id), tc));
    CHECK(same(compose_lax(compose_lax(tc, tc), tc), compose_lax(tc, compose_lax(tc, tc))));

    // composite of two strict morphisms is strict
    CHECK(compose_lax(id, id).strength == Strength::strict);
    CHECK(compose_lax(tc, id).strength == Strength::strong);
}

TEST_CASE("hom_tangent") {
    PolyModel m;
    auto id = identity_lax(m);
    auto tc = tangent_endo(m);
    auto samples = poly_samples(10, 4);

    SECTION("hom_tangent(identity) = (T, c)") {
        auto ht = hom_tangent(id);
        for (const auto& M : samples.objects) {
            CHECK(ht.obj(M) == tc.obj(M));
            CHECK(m.equal(ht.law(M), tc.law(M)));
        }
    }
    SECTION("hom_tangent of a strict morphism has distributive law c at F") {
        auto ht = hom_tangent(id);
        for (const auto& M : samples.objects) CHECK(m.equal(ht.law(M), m.flip(M)));
    }
    SECTION("hom_tangent remains a valid lax tangent morphism") {
        CHECK(check_lax_tangent_morphism(hom_tangent(tc), samples).all_pass());
    }
    SECTION("whiskering p onto hom_tangent(f) is a tangent 2-morphism onto f") {
        auto ht = hom_tangent(tc);
        TangentTwoMorphism<PolyModel, PolyModel> pbar;
        pbar.source = &ht;
        pbar.target = &tc;
        pbar.component = hom_structural(tc, "p");
        CHECK(check_tangent_two_morphism(pbar, samples).all_pass());
    }
}

TEST_CASE("report json is stable and carries witnesses") {
    MutatedPolyModel m(Mutation::c_identity);
    Samples<MutatedPolyModel> s;
    s.objects = {1};
    auto rep = check_tangent_axioms(m, s);
    auto j = rep.to_json();
    REQUIRE(j.is_array());
    bool found = false;
    for (const auto& e : j)
        if (e["diagram"] == "def-2.3/lc-exchange" && e["status"] == "fail") {
            found = true;
            CHECK(e.contains("witness"));
        }
    CHECK(found);
}

TEST_CASE("pointwise structural whiskerings are tangent 2-morphisms") {
    PolyModel m;
    auto tc = tangent_endo(m);
    auto ht = hom_tangent(tc);
    auto htt = hom_tangent(ht);
    auto samples = poly_samples(55, 4);

    SECTION("zero whiskers from f into the hom tangent of f") {
        TangentTwoMorphism<PolyModel, PolyModel> zbar;
        zbar.source = &tc;
        zbar.target = &ht;
        zbar.component = hom_structural(tc, "z");
        CHECK(check_tangent_two_morphism(zbar, samples).all_pass());
    }
    SECTION("lift whiskers into the double hom tangent") {
        TangentTwoMorphism<PolyModel, PolyModel> lbar;
        lbar.source = &ht;
        lbar.target = &htt;
        lbar.component = hom_structural(tc, "l");
        CHECK(check_tangent_two_morphism(lbar, samples).all_pass());
    }
    SECTION("flip whiskers on the double hom tangent") {
        TangentTwoMorphism<PolyModel, PolyModel> cbar;
        cbar.source = &htt;
        cbar.target = &htt;
        cbar.component = hom_structural(tc, "c");
        CHECK(check_tangent_two_morphism(cbar, samples).all_pass());
    }
    SECTION("negation whiskers on the hom tangent") {
        TangentTwoMorphism<PolyModel, PolyModel> nbar;
        nbar.source = &ht;
        nbar.target = &ht;
        nbar.component = hom_structural(tc, "n");
        CHECK(check_tangent_two_morphism(nbar, samples).all_pass());
    }
}
