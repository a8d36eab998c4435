#pragma once

// Tangent monads: a monad whose carrier is a lax tangent endomorphism and
// whose unit and multiplication are tangent 2-morphisms. Includes the writer
// monad on the polynomial model, the lift of a tangent monad to the
// vector-field model, and the monad structure carried by vector fields
// themselves (sum of commuting fields).

#include "tangentad/poly_model.hpp"
#include "tangentad/vector_field.hpp"

#include <functional>
#include <string>
#include <vector>

namespace tangentad {

template <class M>
struct TangentMonad {
    std::string label;
    LaxTangentMorphism<M, M> carrier; // (S, alpha)
    std::function<typename M::Morphism(const typename M::Object&)> unit; // eta_M : M -> SM
    std::function<typename M::Morphism(const typename M::Object&)> mult; // mu_M : S^2 M -> SM
};

template <class M>
TangentMonad<M> identity_monad(const M& m) {
    TangentMonad<M> t;
    t.label = "identity";
    t.carrier = identity_lax(m);
    t.unit = [&m](const typename M::Object& o) { return m.identity(o); };
    t.mult = [&m](const typename M::Object& o) { return m.identity(o); };
    return t;
}

// Lax-morphism compatibility, monad laws, and the tangent 2-morphism squares
// for the unit and the multiplication.
template <class M>
Report check_tangent_monad(const TangentMonad<M>& t, const Samples<M>& samples) {
    Report rep;
    const M& m = *t.carrier.src;

    rep.merge(check_lax_tangent_morphism(t.carrier, samples));

    for (std::size_t i = 0; i < samples.objects.size(); ++i) {
        const auto& O = samples.objects[i];
        const std::string tag = "obj:" + std::to_string(i);
        const auto SO = t.carrier.obj(O);
        TANGENTAD_DIAGRAM(rep, m, "monad/unit-left", tag,
                          m.compose(t.mult(O), t.carrier.mor(t.unit(O))), m.identity(SO));
        TANGENTAD_DIAGRAM(rep, m, "monad/unit-right", tag,
                          m.compose(t.mult(O), t.unit(SO)), m.identity(SO));
        TANGENTAD_DIAGRAM(rep, m, "monad/assoc", tag,
                          m.compose(t.mult(O), t.carrier.mor(t.mult(O))),
                          m.compose(t.mult(O), t.mult(SO)));
    }

    for (std::size_t i = 0; i < samples.morphisms.size(); ++i) {
        const auto& f = samples.morphisms[i];
        const std::string tag = "mor:" + std::to_string(i);
        auto A = m.source_obj(f), B = m.target_obj(f);
        TANGENTAD_DIAGRAM(rep, m, "monad/eta-natural", tag, m.compose(t.unit(B), f),
                          m.compose(t.carrier.mor(f), t.unit(A)));
        TANGENTAD_DIAGRAM(rep, m, "monad/mu-natural", tag,
                          m.compose(t.mult(B), t.carrier.mor(t.carrier.mor(f))),
                          m.compose(t.carrier.mor(f), t.mult(A)));
    }

    // eta and mu are tangent 2-morphisms
    auto id = identity_lax(m);
    auto ss = compose_lax(t.carrier, t.carrier);
    TangentTwoMorphism<M, M> eta{&id, &t.carrier, "eta", t.unit};
    TangentTwoMorphism<M, M> mu{&ss, &t.carrier, "mu", t.mult};
    for (auto& r : check_tangent_two_morphism(eta, samples).results)
        rep.add("monad/eta-" + r.diagram, r.sample, r.pass, r.witness);
    for (auto& r : check_tangent_two_morphism(mu, samples).results)
        rep.add("monad/mu-" + r.diagram, r.sample, r.pass, r.witness);

    return rep;
}

// ---------------------------------------------------------------------------
// The writer monad S(M) = M x Q^k on the polynomial model. The distributive
// law keeps the monoid coordinate in the base slot with zero tangent.
// ---------------------------------------------------------------------------

enum class WriterCorruption { none, drop_tangent, drop_base };

inline TangentMonad<PolyModel> writer_monad(const PolyModel& m, std::size_t k,
                                            WriterCorruption corrupt = WriterCorruption::none) {
    TangentMonad<PolyModel> t;
    t.label = "writer" + std::to_string(k);
    t.carrier.src = t.carrier.dst = &m;
    t.carrier.label = "S";
    t.carrier.strength = Strength::lax;
    t.carrier.obj = [k](const std::size_t& d) { return d + k; };
    t.carrier.mor = [k](const PolyMap& f) {
        const std::size_t a = f.source_dim;
        std::vector<Poly> comps;
        for (const auto& p : f.components) comps.push_back(p.embedded(a + k, 0));
        for (std::size_t j = 0; j < k; ++j) comps.push_back(Poly::variable(a + k, a + j));
        return PolyMap(a + k, std::move(comps));
    };
    t.carrier.law = [k, corrupt](const std::size_t& d) {
        // S(T M) = (x, v, w) |-> T(S M) = (x, w, v, 0)
        const std::size_t src = 2 * d + k;
        std::vector<Poly> comps;
        for (std::size_t i = 0; i < d; ++i) comps.push_back(Poly::variable(src, i));
        for (std::size_t j = 0; j < k; ++j)
            comps.push_back(corrupt == WriterCorruption::drop_base
                                ? Poly(src)
                                : Poly::variable(src, 2 * d + j));
        for (std::size_t i = 0; i < d; ++i)
            comps.push_back(corrupt == WriterCorruption::drop_tangent
                                ? Poly(src)
                                : Poly::variable(src, d + i));
        for (std::size_t j = 0; j < k; ++j) comps.push_back(Poly(src));
        return PolyMap(src, std::move(comps));
    };
    t.unit = [k](const std::size_t& d) {
        std::vector<Poly> comps;
        for (std::size_t i = 0; i < d; ++i) comps.push_back(Poly::variable(d, i));
        for (std::size_t j = 0; j < k; ++j) comps.push_back(Poly(d));
        return PolyMap(d, std::move(comps));
    };
    t.mult = [k](const std::size_t& d) {
        const std::size_t src = d + 2 * k;
        std::vector<Poly> comps;
        for (std::size_t i = 0; i < d; ++i) comps.push_back(Poly::variable(src, i));
        for (std::size_t j = 0; j < k; ++j)
            comps.push_back(Poly::variable(src, d + j) + Poly::variable(src, d + k + j));
        return PolyMap(src, std::move(comps));
    };
    return t;
}

// ---------------------------------------------------------------------------
// Lifting a tangent monad to the vector-field model. Every component is
// revalidated as a morphism of vector fields; a failing square indicates an
// invalid input monad and raises with its witness.
// ---------------------------------------------------------------------------

template <class M>
TangentMonad<VFModel<M>> lift_to_vf(const VFModel<M>& vfm, const TangentMonad<M>& t) {
    const M* base = vfm.base;
    auto carrier = t.carrier;
    auto obj = [carrier](const VectorField<M>& o) { return vf_pushforward(carrier, o); };

    TangentMonad<VFModel<M>> r;
    r.label = t.label + "/vf";
    r.carrier.src = r.carrier.dst = &vfm;
    r.carrier.label = "VF(" + t.carrier.label + ")";
    r.carrier.strength = t.carrier.strength;
    r.carrier.obj = obj;
    r.carrier.mor = [base, carrier, obj](const typename VFModel<M>::Morphism& f) {
        return make_vf_morphism(*base, obj(f.src), obj(f.tgt), carrier.mor(f.under));
    };
    r.carrier.law = [base, carrier, obj, &vfm](const VectorField<M>& o) {
        return make_vf_morphism(*base, obj(vf_tangent(*base, o)), vf_tangent(*base, obj(o)),
                                carrier.law(o.base));
    };
    auto unit = t.unit;
    auto mult = t.mult;
    r.unit = [base, unit, obj](const VectorField<M>& o) {
        return make_vf_morphism(*base, o, obj(o), unit(o.base));
    };
    r.mult = [base, mult, obj](const VectorField<M>& o) {
        return make_vf_morphism(*base, obj(obj(o)), obj(o), mult(o.base));
    };
    return r;
}

// ---------------------------------------------------------------------------
// The monad structure carried by vector fields: unit is the zero field and
// multiplication sums commuting pairs.
// ---------------------------------------------------------------------------

struct CommutingPairError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// T v . u = c . T u . v
template <class M>
bool commuting_pair_check(const M& m, const VectorField<M>& u, const VectorField<M>& v) {
    if (!m.obj_equal(u.base, v.base)) return false;
    auto lhs = m.compose(m.tangent_mor(v.section), u.section);
    auto rhs = m.compose(m.flip(u.base), m.compose(m.tangent_mor(u.section), v.section));
    return m.equal(lhs, rhs);
}

template <class M>
VectorField<M> vf_monad_mult(const M& m, const VectorField<M>& u, const VectorField<M>& v) {
    if (!commuting_pair_check(m, u, v))
        throw CommutingPairError("vf monad: fields do not commute: u = " + m.show(u.section) +
                                 ", v = " + m.show(v.section));
    return sum_vf(m, u, v);
}

// Unit and associativity of the multiplication over pairwise-commuting
// triples, plus the unit's commutation with everything.
template <class M>
Report check_vf_monad(const M& m, const std::vector<FieldTriple<M>>& commuting_triples) {
    Report rep;
    for (std::size_t i = 0; i < commuting_triples.size(); ++i) {
        const auto& [u, v, w] = commuting_triples[i];
        const std::string tag = "triple:" + std::to_string(i);
        auto zero = zero_vf(m, u.base);
        rep.add("vfmonad/zero-commutes", tag, commuting_pair_check(m, zero, u), "");
        try {
            rep.add("vfmonad/unit-left", tag, vf_equal(m, vf_monad_mult(m, zero, u), u), "");
            rep.add("vfmonad/unit-right", tag, vf_equal(m, vf_monad_mult(m, u, zero), u), "");
            bool pairwise = commuting_pair_check(m, u, v) && commuting_pair_check(m, v, w) &&
                            commuting_pair_check(m, u, w);
            rep.add("vfmonad/pairwise-commuting", tag, pairwise, "");
            if (pairwise) {
                auto lhs = vf_monad_mult(m, vf_monad_mult(m, u, v), w);
                auto rhs = vf_monad_mult(m, u, vf_monad_mult(m, v, w));
                rep.add("vfmonad/assoc", tag, vf_equal(m, lhs, rhs), "");
            }
        } catch (const CommutingPairError& e) {
            rep.add("vfmonad/unexpected-rejection", tag, false, e.what());
        }
    }
    return rep;
}

} // namespace tangentad
