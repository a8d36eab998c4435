#include "tangentad/tangent_monad.hpp"

#include "catch_amalgamated.hpp"

using namespace tangentad;

namespace {

Poly x(std::size_t n, std::size_t i) { return Poly::variable(n, i); }

VectorField<PolyModel> field(const PolyModel& m, std::vector<Poly> comps) {
    std::size_t dim = comps.front().nvars();
    std::vector<Poly> section;
    for (std::size_t i = 0; i < dim; ++i) section.push_back(x(dim, i));
    for (auto& c : comps) section.push_back(std::move(c));
    return make_vector_field(m, dim, PolyMap(dim, std::move(section)));
}

VectorField<PolyModel> random_field(const PolyModel& m, Rng& rng, std::size_t dim,
                                    unsigned deg) {
    std::vector<Poly> comps;
    for (std::size_t i = 0; i < dim; ++i) comps.push_back(random_poly(rng, dim, deg, 3));
    return field(m, std::move(comps));
}

Samples<PolyModel> poly_samples(std::uint64_t seed, std::size_t count) {
    Rng rng(seed);
    Samples<PolyModel> s;
    s.objects = {1, 2};
    for (std::size_t i = 0; i < count; ++i)
        s.morphisms.push_back(random_poly_map(rng, 1 + rng.below(2), 1 + rng.below(2), 2));
    return s;
}

} // namespace

TEST_CASE("identity monad passes the full checker") {
    PolyModel m;
    CHECK(check_tangent_monad(identity_monad(m), poly_samples(1, 4)).all_pass());
}

TEST_CASE("writer monad is a tangent monad") {
    PolyModel m;
    auto t = writer_monad(m, 1);
    auto rep = check_tangent_monad(t, poly_samples(2, 5));
    for (const auto& r : rep.failures())
        UNSCOPED_INFO(r.diagram << " @ " << r.sample << ": " << r.witness);
    CHECK(rep.all_pass());

    SECTION("two monoid coordinates work as well") {
        CHECK(check_tangent_monad(writer_monad(m, 2), poly_samples(3, 3)).all_pass());
    }
}

TEST_CASE("corrupted writer distributive laws are caught by name") {
    PolyModel m;
    auto failing = [&](WriterCorruption c) {
        auto rep = check_tangent_monad(writer_monad(m, 1, c), poly_samples(4, 4));
        std::set<std::string> bad;
        for (const auto& r : rep.failures()) bad.insert(r.diagram);
        return bad;
    };
    SECTION("dropping the tangent slot breaks the unit's tangent square") {
        // the fully zeroed tangent block still satisfies every lax square
        // (it factors through the zero section); the unit square catches it
        auto bad = failing(WriterCorruption::drop_tangent);
        CHECK(bad.count("monad/eta-2mor/law-square") == 1);
    }
    SECTION("dropping the monoid slot breaks the zero compatibility") {
        auto bad = failing(WriterCorruption::drop_base);
        CHECK(bad.count("lax/z-compat") == 1);
    }
}

TEST_CASE("writer monad lifts to vector fields") {
    PolyModel m;
    VFModel<PolyModel> vfm{&m};
    auto t = writer_monad(m, 1);
    auto lifted = lift_to_vf(vfm, t);

    SECTION("the lifted field has the expected coordinates") {
        // v(x) = x on Q^1 lifts to (x, a) |-> (x, a, x, 0)
        auto v = field(m, {x(1, 0)});
        auto lifted_field = lifted.carrier.obj(v);
        CHECK(lifted_field.base == 2);
        PolyMap expected(2, {x(2, 0), x(2, 1), x(2, 0), Poly(2)});
        CHECK(lifted_field.section == expected);
    }

    SECTION("the lift passes the same checker over vector-field samples") {
        Rng rng(9);
        Samples<VFModel<PolyModel>> s;
        s.objects.push_back(zero_vf(m, 1));
        s.objects.push_back(field(m, {x(1, 0)}));
        s.objects.push_back(random_field(m, rng, 2, 2));
        s.morphisms.push_back(vfm.identity(s.objects[1]));
        s.morphisms.push_back(
            make_vf_morphism(m, zero_vf(m, 1), zero_vf(m, 2), random_poly_map(rng, 1, 2, 2)));
        auto rep = check_tangent_monad(lifted, s);
        for (const auto& r : rep.failures())
            UNSCOPED_INFO(r.diagram << " @ " << r.sample << ": " << r.witness);
        CHECK(rep.all_pass());
    }

    SECTION("identity monad lifts to the identity monad") {
        auto ilift = lift_to_vf(vfm, identity_monad(m));
        auto v = field(m, {x(1, 0) * x(1, 0)});
        CHECK(vf_equal(m, ilift.carrier.obj(v), v));
    }

    SECTION("a broken monad is rejected with a witness") {
        auto broken = writer_monad(m, 1, WriterCorruption::drop_base);
        auto blift = lift_to_vf(vfm, broken);
        auto v = field(m, {x(1, 0)});
        // eta fails the vf-morphism square once the law is corrupted
        CHECK_THROWS_AS(blift.carrier.law(v), std::invalid_argument);
    }
}

TEST_CASE("commuting pair check matches the Jacobian criterion") {
    PolyModel m;
    Rng rng(21);
    for (int trial = 0; trial < 15; ++trial) {
        std::size_t dim = 1 + rng.below(2);
        auto u = random_field(m, rng, dim, 2);
        auto v = random_field(m, rng, dim, 2);
        // Jv u - Ju v = 0 iff commuting
        auto cl = classical_bracket_section(u.section, v.section);
        bool zero_bracket = true;
        for (std::size_t i = 0; i < dim; ++i)
            if (!cl.components[dim + i].is_zero()) zero_bracket = false;
        CHECK(commuting_pair_check(m, u, v) == zero_bracket);
    }
}

TEST_CASE("vf monad laws on commuting linear families") {
    PolyModel m;
    std::vector<FieldTriple<PolyModel>> triples;
    Rng rng(33);
    for (int i = 0; i < 10; ++i) {
        // powers of one matrix commute pairwise: A, A + I, 2A on Q^2
        long long a = rng.range(-2, 2), b = rng.range(-2, 2), c = rng.range(-2, 2),
                  d = rng.range(-2, 2);
        auto lin = [&](long long s, long long t) {
            // field p |-> s A p + t p
            return field(m, {rat(s * a + t) * x(2, 0) + rat(s * b) * x(2, 1),
                             rat(s * c) * x(2, 0) + rat(s * d + t) * x(2, 1)});
        };
        triples.push_back({lin(1, 0), lin(1, 1), lin(2, 0)});
    }
    auto rep = check_vf_monad(m, triples);
    for (const auto& r : rep.failures())
        UNSCOPED_INFO(r.diagram << " @ " << r.sample << ": " << r.witness);
    CHECK(rep.all_pass());

    SECTION("non-commuting pairs are rejected with witnesses") {
        auto u = field(m, {x(2, 1), Poly(2)});            // A = [[0,1],[0,0]]
        auto v = field(m, {x(2, 0), rat(2) * x(2, 1)});   // B = diag(1,2)
        CHECK_FALSE(commuting_pair_check(m, u, v));
        CHECK_THROWS_AS(vf_monad_mult(m, u, v), CommutingPairError);
    }
}
