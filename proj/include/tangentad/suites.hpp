#pragma once

// Named check suites shared by the command-line tool and the acceptance
// tests. Every suite is deterministic in its seed.

#include "tangentad/fincat.hpp"
#include "tangentad/pie.hpp"
#include "tangentad/poly_model.hpp"
#include "tangentad/restriction.hpp"
#include "tangentad/smooth.hpp"
#include "tangentad/tangent_core.hpp"
#include "tangentad/tangent_monad.hpp"
#include "tangentad/vector_field.hpp"
#include "tangentad/weil.hpp"

#include <string>
#include <vector>

namespace tangentad::suites {

inline constexpr const char* kVersion = "0.1.0";

// ---- sample builders -------------------------------------------------------

inline Samples<PolyModel> poly_samples(std::uint64_t seed, std::size_t count, unsigned max_deg,
                                       std::size_t max_dim = 3) {
    Rng rng(seed);
    Samples<PolyModel> s;
    for (std::size_t d = 1; d <= max_dim; ++d) s.objects.push_back(d);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t a = 1 + rng.below(max_dim), b = 1 + rng.below(max_dim);
        s.morphisms.push_back(random_poly_map(rng, a, b, max_deg));
    }
    return s;
}

inline VectorField<PolyModel> random_vf(const PolyModel& m, Rng& rng, std::size_t dim,
                                        unsigned deg) {
    std::vector<Poly> comps;
    for (std::size_t i = 0; i < dim; ++i) comps.push_back(Poly::variable(dim, i));
    for (std::size_t i = 0; i < dim; ++i) comps.push_back(random_poly(rng, dim, deg, 3));
    return make_vector_field(m, dim, PolyMap(dim, std::move(comps)));
}

// field p |-> s A p + t p on Q^2 for a fixed 2x2 integer matrix A
inline VectorField<PolyModel> linear_pencil_field(const PolyModel& m, long long a, long long b,
                                                  long long c, long long d, long long s,
                                                  long long t) {
    auto x0 = Poly::variable(2, 0), x1 = Poly::variable(2, 1);
    std::vector<Poly> comps{x0, x1, rat(s * a + t) * x0 + rat(s * b) * x1,
                            rat(s * c) * x0 + rat(s * d + t) * x1};
    return make_vector_field(m, 2, PolyMap(2, std::move(comps)));
}

inline std::vector<fincat::FiniteCategory> category_corpus() {
    using namespace fincat;
    return {terminal_category(),          discrete_category(2), arrow_category(),
            parallel_pair_category(),     z2_category(),        idempotent_monoid_category(),
            chain3_category()};
}

inline std::vector<fincat::FiniteCategory> probe_corpus() {
    using namespace fincat;
    return {terminal_category(), arrow_category(), parallel_pair_category()};
}

// ---- suites ----------------------------------------------------------------

inline Report weil_suite(Nat bound) {
    Report rep = verify_relations();
    for (const char* name : {"p", "z", "s", "l", "c"}) rep.merge(check_rig_hom(generator(name), name));
    rep.merge(probe_fundamental_pullbacks(bound));
    return rep;
}

inline Report poly_suite(std::uint64_t seed, std::size_t samples, Mutation mutation) {
    auto s = poly_samples(seed, samples, 3);
    if (mutation == Mutation::none) {
        PolyModel m;
        return check_tangent_axioms(m, s);
    }
    MutatedPolyModel m(mutation);
    Samples<MutatedPolyModel> ms{s.objects, s.morphisms};
    return check_tangent_axioms(m, ms);
}

inline Report smooth_suite(std::uint64_t seed, std::size_t samples, double tolerance) {
    SmoothModel m;
    m.tolerance = tolerance;
    Rng rng(seed);
    Samples<SmoothModel> s;
    s.objects = {1, 2};
    for (std::size_t i = 0; i < samples; ++i)
        s.morphisms.push_back(random_smooth_map(rng, 1 + rng.below(2), 1 + rng.below(2)));
    Report rep = check_tangent_axioms(m, s);

    // agreement with the exact model on shared polynomial maps
    Rng rng2(seed ^ 0xabcdef);
    for (std::size_t i = 0; i < samples; ++i) {
        PolyMap f = random_poly_map(rng2, 1 + rng2.below(3), 1 + rng2.below(2), 3);
        SmoothMap g = poly_to_smooth(tangent_map(f));
        SmoothMap h = smooth_tangent(poly_to_smooth(f));
        bool ok = m.equal(g, h);
        rep.add("smooth/poly-agreement", "map:" + std::to_string(i), ok, "");
    }
    return rep;
}

inline Report fincat_suite(const fincat::SizeBounds& bounds) {
    Report rep;
    for (const auto& cat : category_corpus()) {
        if (cat.n_objects > bounds.max_objects || cat.n_mors() > bounds.max_morphisms) continue;
        fincat::TrivialFinModel m{&cat};
        Samples<fincat::TrivialFinModel> s;
        for (std::size_t o = 0; o < cat.n_objects; ++o) s.objects.push_back(o);
        for (std::size_t f = 0; f < cat.n_mors(); ++f) s.morphisms.push_back(f);
        for (auto& r : check_tangent_axioms(m, s).results)
            rep.add(r.diagram, cat.name + "/" + r.sample, r.pass, r.witness);
    }
    return rep;
}

inline Report rational_suite(std::uint64_t seed, std::size_t samples) {
    Report rep;
    Rng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        std::size_t a = 1 + rng.below(2);
        auto f = random_rational_map(rng, a, 1 + rng.below(2), 2);
        auto g = random_rational_map(rng, a, 1 + rng.below(2), 2);
        auto h = random_rational_map(rng, 1 + rng.below(2), a, 2);
        rep.merge(check_restriction_laws(f, g, h, "sample:" + std::to_string(i)));
        // T preserves the restriction idempotents
        std::set<Poly> lifted;
        for (const auto& q : f.idempotent) lifted.insert(q.embedded(2 * a, 0));
        rep.add("rest/rtangent-preserves-idempotents", "sample:" + std::to_string(i),
                rtangent(f).idempotent == lifted, "");
    }
    // tangent axioms with restriction-aware equality on a fixed small set
    RationalModel m;
    Samples<RationalModel> s;
    s.objects = {1, 2};
    s.morphisms.push_back(make_rational_map(
        1, {make_rf(Poly::constant(1, rat(1)), Poly::variable(1, 0))}));
    Rng rng2(seed ^ 0x51);
    s.morphisms.push_back(rational_from_poly(random_poly_map(rng2, 2, 1, 2)));
    s.morphisms.push_back(random_rational_map(rng2, 1, 2, 2));
    rep.merge(check_tangent_axioms(m, s));
    return rep;
}

inline Report structure_suite(std::uint64_t seed, std::size_t samples) {
    Report rep;
    PolyModel m;
    Rng rng(seed);

    std::vector<FieldTriple<PolyModel>> triples;
    for (std::size_t i = 0; i < samples; ++i) {
        std::size_t dim = 1 + rng.below(3);
        triples.push_back({random_vf(m, rng, dim, 2), random_vf(m, rng, dim, 2),
                           random_vf(m, rng, dim, 2)});
    }
    std::vector<FRelatedSample<PolyModel>> related;
    {
        auto x0 = Poly::variable(2, 0), x1 = Poly::variable(2, 1);
        PolyMap U(2, {x0 + x1, x1});
        PolyMap Uinv(2, {x0 - x1, x1});
        for (int i = 0; i < 3; ++i) {
            auto v1 = linear_pencil_field(m, i + 1, 0, 1, 2, 1, 0);
            auto v2 = linear_pencil_field(m, 0, 1, i, 1, 1, 0);
            auto push = [&](const VectorField<PolyModel>& v) {
                auto sec = m.compose(m.tangent_mor(U), m.compose(v.section, Uinv));
                return make_vector_field(m, 2, sec);
            };
            related.push_back({U, v1, v2, push(v1), push(v2)});
        }
    }
    rep.merge(check_structure_theorems(m, triples, related));

    for (std::size_t i = 0; i < std::min<std::size_t>(samples, 5); ++i) {
        const auto& t = triples[i];
        rep.merge(check_vf_tangent_strictness(m, t.x, t.y, "triple:" + std::to_string(i)));
    }

    // bracket vs the classical Jacobian oracle, with the side condition
    Rng rng2(seed ^ 0x99);
    for (std::size_t i = 0; i < samples; ++i) {
        std::size_t dim = 1 + rng2.below(3);
        auto u = random_vf(m, rng2, dim, 2);
        auto v = random_vf(m, rng2, dim, 2);
        auto f = m.compose(m.tangent_mor(v.section), u.section);
        auto g = m.compose(m.flip(dim), m.compose(m.tangent_mor(u.section), v.section));
        auto h = subtract_t2(m, dim, f, g);
        rep.add("vf/bracket-side-condition", "pair:" + std::to_string(i),
                lift_side_condition(m, dim, h), "");
        auto b = bracket(m, u, v);
        rep.add("vf/bracket-oracle", "pair:" + std::to_string(i),
                b.section == classical_bracket_section(u.section, v.section), "");
    }
    return rep;
}

inline Report universality_suite(std::uint64_t seed) {
    Report rep;
    PolyModel m;
    VFModel<PolyModel> vfm{&m};
    (void)seed;

    Samples<PolyModel> probe;
    probe.objects = {1};
    probe.morphisms.push_back(PolyMap::identity(1));
    probe.morphisms.push_back(
        PolyMap(1, {Poly::variable(1, 0) + Poly::constant(1, rat(1))}));

    std::vector<HomVectorField<PolyModel, PolyModel>> families;
    {
        HomVectorField<PolyModel, PolyModel> h;
        h.label = "zero";
        h.morphism = identity_lax(m);
        h.field = [&m](const std::size_t& A) { return zero_vf(m, A); };
        families.push_back(h);
    }
    {
        HomVectorField<PolyModel, PolyModel> h;
        h.label = "basis-direction";
        h.morphism = identity_lax(m);
        h.field = [&m](const std::size_t& A) {
            std::vector<Poly> comps;
            for (std::size_t i = 0; i < A; ++i) comps.push_back(Poly::variable(A, i));
            comps.push_back(Poly::constant(A, rat(1)));
            for (std::size_t i = 1; i < A; ++i) comps.push_back(Poly(A));
            return make_vector_field(m, A, PolyMap(A, std::move(comps)));
        };
        families.push_back(h);
    }
    families.push_back(hom_vf_tangent(families[0]));
    families.push_back(hom_vf_tangent(families[1]));
    {
        HomVectorField<PolyModel, PolyModel> h;
        h.label = "pushforward";
        h.morphism = tangent_endo(m);
        h.field = [&m](const std::size_t& A) { return zero_vf(m, 2 * A); };
        families.push_back(h);
    }
    rep.merge(universality_probe(vfm, families, probe));

    std::vector<HomVFMorphism<PolyModel, PolyModel>> mors;
    HomVFMorphism<PolyModel, PolyModel> idm;
    idm.label = "id-zero";
    idm.from = 0;
    idm.to = 0;
    idm.component = [&m](const std::size_t& A) { return m.identity(A); };
    mors.push_back(idm);
    rep.merge(check_hom_vf_morphisms(vfm, families, mors, probe));

    // the universal vector field over a probe of concrete fields
    Samples<VFModel<PolyModel>> vf_probe;
    vf_probe.objects.push_back(zero_vf(m, 1));
    {
        auto x0 = Poly::variable(1, 0);
        vf_probe.objects.push_back(make_vector_field(m, 1, PolyMap(1, {x0, x0})));
        vf_probe.objects.push_back(
            make_vector_field(m, 1, PolyMap(1, {x0, Poly::constant(1, rat(2))})));
        vf_probe.objects.push_back(
            make_vector_field(m, 1, PolyMap(1, {x0, x0 * x0})));
    }
    vf_probe.morphisms.push_back(vfm.identity(vf_probe.objects[1]));
    rep.merge(universality_probe(vfm, {universal_vf_family(vfm)}, vf_probe));
    return rep;
}

inline Report monad_suite(std::uint64_t seed, std::size_t samples, WriterCorruption corrupt) {
    Report rep;
    PolyModel m;
    VFModel<PolyModel> vfm{&m};
    auto s = poly_samples(seed, std::max<std::size_t>(samples / 2, 3), 2, 2);
    auto writer = writer_monad(m, 1, corrupt);
    for (auto& r : check_tangent_monad(writer, s).results)
        rep.add("writer/" + r.diagram, r.sample, r.pass, r.witness);
    if (corrupt != WriterCorruption::none) return rep;

    // the lift to vector fields, checked over random polynomial fields
    Rng rng(seed ^ 0x7777);
    Samples<VFModel<PolyModel>> vs;
    for (std::size_t i = 0; i < samples; ++i) vs.objects.push_back(random_vf(m, rng, 1 + rng.below(2), 2));
    vs.morphisms.push_back(vfm.identity(vs.objects.front()));
    vs.morphisms.push_back(
        make_vf_morphism(m, zero_vf(m, 1), zero_vf(m, 2), random_poly_map(rng, 1, 2, 2)));
    auto lifted = lift_to_vf(vfm, writer);
    for (auto& r : check_tangent_monad(lifted, vs).results)
        rep.add("writer-lift/" + r.diagram, r.sample, r.pass, r.witness);

    // the monad carried by vector fields, on commuting linear families
    std::vector<FieldTriple<PolyModel>> triples;
    Rng rng2(seed ^ 0x8888);
    for (std::size_t i = 0; i < samples; ++i) {
        long long a = rng2.range(-2, 2), b = rng2.range(-2, 2), c = rng2.range(-2, 2),
                  d = rng2.range(-2, 2);
        triples.push_back({linear_pencil_field(m, a, b, c, d, 1, 0),
                           linear_pencil_field(m, a, b, c, d, 1, 1),
                           linear_pencil_field(m, a, b, c, d, 2, 0)});
    }
    rep.merge(check_vf_monad(m, triples));
    return rep;
}

inline fincat::VfViaPieResult pie_suite(const fincat::FiniteCategory& cat,
                                        const fincat::SizeBounds& bounds) {
    return fincat::vf_via_pie(cat, probe_corpus(), bounds);
}

} // namespace tangentad::suites
