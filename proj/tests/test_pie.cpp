#include "tangentad/pie.hpp"

#include "catch_amalgamated.hpp"

using namespace tangentad;
using namespace tangentad::fincat;

namespace {

std::vector<FiniteCategory> default_probes() {
    return {terminal_category(), arrow_category(), parallel_pair_category()};
}

} // namespace

TEST_CASE("2-products of finite categories") {
    SECTION("discrete 2 x discrete 3 is discrete 6") {
        auto P = product(discrete_category(2), discrete_category(3));
        CHECK(P.carrier.n_objects == 6);
        CHECK(P.carrier.n_mors() == 6);
    }
    SECTION("C x terminal has the shape of C") {
        auto C = chain3_category();
        auto P = product(C, terminal_category());
        CHECK(P.carrier.n_objects == C.n_objects);
        CHECK(P.carrier.n_mors() == C.n_mors());
        CHECK(is_functor(P.carrier, C, P.proj1));
    }
    SECTION("projections are functors and the universal property holds") {
        auto C = arrow_category();
        auto D = z2_category();
        auto P = product(C, D);
        CHECK(is_functor(P.carrier, C, P.proj1));
        CHECK(is_functor(P.carrier, D, P.proj2));
        for (const auto& probe : default_probes())
            CHECK(product_universal(C, D, P, probe).all_pass());
    }
    SECTION("trivial tangent structures multiply to the trivial structure") {
        auto P = product(arrow_category(), arrow_category());
        TrivialFinModel m{&P.carrier};
        Samples<TrivialFinModel> s;
        for (std::size_t o = 0; o < P.carrier.n_objects; ++o) s.objects.push_back(o);
        for (std::size_t f = 0; f < P.carrier.n_mors(); ++f) s.morphisms.push_back(f);
        CHECK(check_tangent_axioms(m, s).all_pass());
    }
}

TEST_CASE("inserters") {
    SECTION("inserter(id, id) is the endomorphism category") {
        auto C = idempotent_monoid_category(); // endos of the object: id and e
        auto I = inserter(C, C, identity_functor(C), identity_functor(C));
        // brute force: objects are pairs (M, endomorphism of M)
        std::size_t expected = 0;
        for (std::size_t M = 0; M < C.n_objects; ++M)
            for (std::size_t f = 0; f < C.n_mors(); ++f)
                if (C.src(f) == M && C.dst(f) == M) ++expected;
        CHECK(I.objects.size() == expected);
        CHECK(is_functor(I.carrier, C, I.V));
    }
    SECTION("universal property over probes") {
        auto C = arrow_category();
        auto I = inserter(C, C, identity_functor(C), identity_functor(C));
        for (const auto& probe : default_probes()) {
            auto rep = inserter_universal(C, C, identity_functor(C), identity_functor(C), I,
                                          probe);
            for (const auto& r : rep.failures())
                UNSCOPED_INFO(probe.name << " " << r.diagram << ": " << r.witness);
            CHECK(rep.all_pass());
        }
    }
    SECTION("inserter between distinct functors") {
        // C = discrete 2, D = chain3; F at (0, 1), G at (1, 2)
        auto C = discrete_category(2);
        auto D = chain3_category();
        FinFunctor F{{0, 1}, {D.id(0), D.id(1)}};
        FinFunctor G{{1, 2}, {D.id(1), D.id(2)}};
        REQUIRE(is_functor(C, D, F));
        REQUIRE(is_functor(C, D, G));
        auto I = inserter(C, D, F, G);
        // objects: (0, the arrow 0->1) and (1, the arrow 1->2)
        CHECK(I.objects.size() == 2);
        for (const auto& probe : default_probes())
            CHECK(inserter_universal(C, D, F, G, I, probe).all_pass());
    }
}

TEST_CASE("equifiers") {
    auto C = parallel_pair_category();
    auto D = C;
    auto F = identity_functor(C);

    SECTION("equifier(phi, phi) is all of C") {
        // phi: the transformation with components (id0 at 0, id1 at 1)
        std::vector<std::size_t> phi{C.id(0), C.id(1)};
        auto E = equifier(C, D, F, F, phi, phi);
        CHECK(E.carrier.n_objects == C.n_objects);
        CHECK(E.carrier.n_mors() == C.n_mors());
        for (const auto& probe : default_probes())
            CHECK(equifier_universal(C, D, F, F, phi, phi, E, probe).all_pass());
    }
    SECTION("mixed case keeps exactly the agreeing objects") {
        // phi = identity components; psi agrees at 1 but maps 0 via arrow 2
        // F = G = id on parallel pair: nat trans id => id with component at
        // object 0 an endomorphism of 0: only id0. So use constant functors.
        auto D2 = chain3_category();
        FinFunctor A{{0, 0}, {D2.id(0), D2.id(0), D2.id(0), D2.id(0)}};
        FinFunctor B{{1, 1}, {D2.id(1), D2.id(1), D2.id(1), D2.id(1)}};
        REQUIRE(is_functor(C, D2, A));
        REQUIRE(is_functor(C, D2, B));
        auto nats = enumerate_nat_trans(C, D2, A, B);
        REQUIRE(nats.size() == 1); // single arrow 0 -> 1 in chain3
        // phi = psi: whole category survives
        auto E = equifier(C, D2, A, B, nats[0], nats[0]);
        CHECK(E.carrier.n_objects == 2);
    }
    SECTION("mixed case on a 3-object category keeps exactly the agreeing objects") {
        // discrete 3 into the parallel pair: constant functors at 0 and 1,
        // transformations pick one of the two arrows per object
        auto C3 = discrete_category(3);
        auto PP = parallel_pair_category();
        FinFunctor A{{0, 0, 0}, {PP.id(0), PP.id(0), PP.id(0)}};
        FinFunctor B{{1, 1, 1}, {PP.id(1), PP.id(1), PP.id(1)}};
        REQUIRE(is_functor(C3, PP, A));
        REQUIRE(is_functor(C3, PP, B));
        std::vector<std::size_t> phi{2, 2, 3};
        std::vector<std::size_t> psi{2, 3, 3};
        REQUIRE(is_natural(C3, PP, A, B, phi));
        REQUIRE(is_natural(C3, PP, A, B, psi));
        auto E = equifier(C3, PP, A, B, phi, psi);
        CHECK(E.carrier.n_objects == 2); // objects 0 and 2 agree
        CHECK(E.objects == std::vector<std::size_t>{0, 2});
        for (const auto& probe : default_probes())
            CHECK(equifier_universal(C3, PP, A, B, phi, psi, E, probe).all_pass());
    }
    SECTION("pointwise-distinct transformations give the empty subcategory") {
        // on Z2: F = G = id; two distinct natural transformations: id and
        // the flip (the nonidentity group element is central)
        auto Z = z2_category();
        auto idZ = identity_functor(Z);
        std::vector<std::size_t> one{Z.id(0)};
        std::vector<std::size_t> g{1};
        REQUIRE(is_natural(Z, Z, idZ, idZ, g));
        auto E = equifier(Z, Z, idZ, idZ, one, g);
        CHECK(E.carrier.n_objects == 0);
        for (const auto& probe : default_probes())
            CHECK(equifier_universal(Z, Z, idZ, idZ, one, g, E, probe).all_pass());
    }
}

TEST_CASE("strict pullbacks") {
    SECTION("pullback over the terminal category is the product") {
        auto C = arrow_category();
        auto D = z2_category();
        auto T = terminal_category();
        FinFunctor toT_C{{0, 0}, {0, 0, 0}};
        FinFunctor toT_D{{0}, {0, 0}};
        REQUIRE(is_functor(C, T, toT_C));
        REQUIRE(is_functor(D, T, toT_D));
        auto PB = strict_pullback(C, D, T, toT_C, toT_D);
        auto P = product(C, D);
        CHECK(PB.carrier.n_objects == P.carrier.n_objects);
        CHECK(PB.carrier.n_mors() == P.carrier.n_mors());
        for (const auto& probe : default_probes())
            CHECK(pullback_universal(C, D, T, toT_C, toT_D, PB, probe).all_pass());
    }
    SECTION("pullback of an inclusion along itself is the domain") {
        auto C = arrow_category();
        auto D = chain3_category();
        // inclusion arrow -> chain3 onto the first arrow
        FinFunctor inc{{0, 1}, {D.id(0), D.id(1), 3}};
        REQUIRE(is_functor(C, D, inc));
        auto PB = strict_pullback(C, C, D, inc, inc);
        CHECK(PB.carrier.n_objects == C.n_objects);
        CHECK(PB.carrier.n_mors() == C.n_mors());
        for (const auto& probe : default_probes())
            CHECK(pullback_universal(C, C, D, inc, inc, PB, probe).all_pass());
    }
}

TEST_CASE("vector fields via inserter and equifier") {
    auto probes = default_probes();

    SECTION("terminal category") {
        auto out = vf_via_pie(terminal_category(), probes);
        for (const auto& r : out.report.failures())
            UNSCOPED_INFO(r.diagram << " @ " << r.sample << ": " << r.witness);
        CHECK(out.report.all_pass());
        CHECK(out.direct.n_objects == 1);
    }
    SECTION("arrow category") {
        auto out = vf_via_pie(arrow_category(), probes);
        for (const auto& r : out.report.failures())
            UNSCOPED_INFO(r.diagram << " @ " << r.sample << ": " << r.witness);
        CHECK(out.report.all_pass());
        // every object carries exactly the identity section
        CHECK(out.direct.n_objects == 2);
        CHECK(out.direct.n_mors() == 3);
    }
    SECTION("a nonidentity endomorphism survives the inserter but not the equifier") {
        auto C = idempotent_monoid_category();
        auto out = vf_via_pie(C, probes);
        CHECK(out.report.all_pass());
        CHECK(out.inserter.objects.size() == 2); // (M, id) and (M, e)
        CHECK(out.equifier.objects.size() == 1); // only the section survives
    }
    SECTION("remaining corpus categories") {
        for (auto C : {discrete_category(2), z2_category(), chain3_category(),
                       parallel_pair_category()}) {
            auto out = vf_via_pie(C, probes);
            for (const auto& r : out.report.failures())
                UNSCOPED_INFO(C.name << " " << r.diagram << ": " << r.witness);
            CHECK(out.report.all_pass());
        }
    }
}
