#pragma once

// Model-generic tangent structure machinery: the axiom checker for tangent
// structures, lax tangent morphisms with their compatibility checker, tangent
// 2-morphisms, and composition of lax morphisms.
//
// A tangent model supplies, via duck typing:
//   types    Object, Morphism
//   category obj_equal, source_obj, target_obj, identity, compose, equal, show
//   tangent  tangent_obj, tangent_mor, proj, zero, sum, lift, flip,
//            has_negatives/negate, power_obj, power_proj, power_tuple,
//            has_lift_solve/lift_solve
//
// power_tuple(M, t, fs) tuples maps K -> T^t(TM) agreeing under T^t p into
// T^t(T_n M); t = 0 is the plain pullback pairing.

#include "tangentad/errors.hpp"
#include "tangentad/report.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tangentad {

template <class Model>
struct Samples {
    std::vector<typename Model::Object> objects;
    std::vector<typename Model::Morphism> morphisms;
};

namespace detail {

// Evaluates a diagram lazily; a ConeError during construction means a
// prerequisite cone fails to form, which counts as a failing diagram.
template <class Model, class Fn>
void check_diagram(Report& rep, const Model& model, std::string diagram, std::string sample,
                   Fn&& both_sides) {
    try {
        auto [lhs, rhs] = both_sides();
        bool ok = model.equal(lhs, rhs);
        rep.add(std::move(diagram), std::move(sample), ok,
                ok ? "" : "lhs = " + model.show(lhs) + "; rhs = " + model.show(rhs));
    } catch (const ConeError& e) {
        rep.add(std::move(diagram), std::move(sample), false,
                std::string("cone failed to form: ") + e.what());
    }
}

} // namespace detail

#define TANGENTAD_DIAGRAM(rep, model, id, tag, lhs, rhs) \
    detail::check_diagram(rep, model, id, tag, [&] { return std::pair{lhs, rhs}; })

// T_2 f : T_2 M -> T_2 N induced on pullback powers.
template <class Model>
typename Model::Morphism pullback_map(const Model& m, const typename Model::Morphism& f,
                                      std::size_t n) {
    auto M = m.source_obj(f), N = m.target_obj(f);
    auto Tf = m.tangent_mor(f);
    std::vector<typename Model::Morphism> legs;
    for (std::size_t k = 1; k <= n; ++k) legs.push_back(m.compose(Tf, m.power_proj(M, n, k)));
    return m.power_tuple(N, 0, legs);
}

// The canonical symmetry of T_2 M.
template <class Model>
typename Model::Morphism pullback_swap(const Model& m, const typename Model::Object& M) {
    return m.power_tuple(M, 0, {m.power_proj(M, 2, 2), m.power_proj(M, 2, 1)});
}

// Verifies every diagram of the tangent structure axioms on the samples.
template <class Model>
Report check_tangent_axioms(const Model& m, const Samples<Model>& samples) {
    Report rep;

    for (std::size_t i = 0; i < samples.morphisms.size(); ++i) {
        const auto& f = samples.morphisms[i];
        const std::string tag = "mor:" + std::to_string(i);
        auto M = m.source_obj(f), N = m.target_obj(f);
        auto Tf = m.tangent_mor(f);
        auto TTf = m.tangent_mor(Tf);

        TANGENTAD_DIAGRAM(rep, m, "nat/p", tag, m.compose(m.proj(N), Tf),
                          m.compose(f, m.proj(M)));
        TANGENTAD_DIAGRAM(rep, m, "nat/z", tag, m.compose(Tf, m.zero(M)),
                          m.compose(m.zero(N), f));
        TANGENTAD_DIAGRAM(rep, m, "nat/s", tag, m.compose(Tf, m.sum(M)),
                          m.compose(m.sum(N), pullback_map(m, f, 2)));
        TANGENTAD_DIAGRAM(rep, m, "nat/l", tag, m.compose(TTf, m.lift(M)),
                          m.compose(m.lift(N), Tf));
        TANGENTAD_DIAGRAM(rep, m, "nat/c", tag, m.compose(m.flip(N), TTf),
                          m.compose(TTf, m.flip(M)));
        if (m.has_negatives())
            TANGENTAD_DIAGRAM(rep, m, "nat/n", tag, m.compose(Tf, m.negate(M)),
                              m.compose(m.negate(N), Tf));
    }

    for (std::size_t i = 0; i < samples.objects.size(); ++i) {
        const auto& M = samples.objects[i];
        const std::string tag = "obj:" + std::to_string(i);
        const auto TM = m.tangent_obj(M);
        const auto p = m.proj(M), z = m.zero(M), s = m.sum(M), l = m.lift(M), c = m.flip(M);
        const auto id_TM = m.identity(TM);
        const auto pi1 = m.power_proj(M, 2, 1), pi2 = m.power_proj(M, 2, 2);

        // additive bundle of (p, z, s)
        TANGENTAD_DIAGRAM(rep, m, "def-2.1/p-section", tag, m.compose(p, z), m.identity(M));
        TANGENTAD_DIAGRAM(rep, m, "def-2.1/s-proj-compat", tag, m.compose(p, s),
                          m.compose(p, pi1));
        {
            auto q1 = m.power_proj(M, 3, 1), q2 = m.power_proj(M, 3, 2),
                 q3 = m.power_proj(M, 3, 3);
            TANGENTAD_DIAGRAM(
                rep, m, "def-2.1/s-assoc", tag,
                m.compose(s, m.power_tuple(
                                 M, 0, {m.compose(s, m.power_tuple(M, 0, {q1, q2})), q3})),
                m.compose(s, m.power_tuple(
                                 M, 0, {q1, m.compose(s, m.power_tuple(M, 0, {q2, q3}))})));
        }
        TANGENTAD_DIAGRAM(rep, m, "def-2.1/s-unit", tag,
                          m.compose(s, m.power_tuple(M, 0, {m.compose(z, p), id_TM})), id_TM);
        TANGENTAD_DIAGRAM(rep, m, "def-2.1/s-comm", tag, m.compose(s, pullback_swap(m, M)), s);

        // (z, l) : p -> Tp is an additive bundle morphism
        TANGENTAD_DIAGRAM(rep, m, "def-2.3/zl-base", tag, m.compose(m.tangent_mor(p), l),
                          m.compose(z, p));
        TANGENTAD_DIAGRAM(rep, m, "def-2.3/zl-zero", tag, m.compose(l, z),
                          m.compose(m.tangent_mor(z), z));
        TANGENTAD_DIAGRAM(
            rep, m, "def-2.3/zl-sum", tag,
            m.compose(m.tangent_mor(s),
                      m.power_tuple(M, 1, {m.compose(l, pi1), m.compose(l, pi2)})),
            m.compose(l, s));

        // (id, c) : Tp -> p_T is an additive bundle morphism
        TANGENTAD_DIAGRAM(rep, m, "def-2.3/idc-base", tag, m.compose(m.proj(TM), c),
                          m.tangent_mor(p));
        TANGENTAD_DIAGRAM(rep, m, "def-2.3/idc-zero", tag, m.compose(c, m.tangent_mor(z)),
                          m.zero(TM));
        TANGENTAD_DIAGRAM(
            rep, m, "def-2.3/idc-sum", tag, m.compose(c, m.tangent_mor(s)),
            m.compose(m.sum(TM),
                      m.power_tuple(TM, 0,
                                    {m.compose(c, m.tangent_mor(pi1)),
                                     m.compose(c, m.tangent_mor(pi2))})));

        // coherence of l and c
        TANGENTAD_DIAGRAM(rep, m, "def-2.3/l-coassoc", tag, m.compose(m.tangent_mor(l), l),
                          m.compose(m.lift(TM), l));
        TANGENTAD_DIAGRAM(rep, m, "def-2.3/cl-fix", tag, m.compose(c, l), l);
        TANGENTAD_DIAGRAM(rep, m, "def-2.3/lc-exchange", tag,
                          m.compose(m.flip(TM), m.compose(m.tangent_mor(c), m.lift(TM))),
                          m.compose(m.tangent_mor(l), c));
        TANGENTAD_DIAGRAM(rep, m, "def-2.3/c-involution", tag, m.compose(c, c),
                          m.identity(m.tangent_obj(TM)));
        {
            auto Tc = m.tangent_mor(c);
            auto cT = m.flip(TM);
            TANGENTAD_DIAGRAM(rep, m, "def-2.3/c-braid", tag, m.compose(Tc, m.compose(cT, Tc)),
                              m.compose(cT, m.compose(Tc, cT)));
        }

        if (m.has_negatives()) {
            auto n = m.negate(M);
            TANGENTAD_DIAGRAM(rep, m, "def-2.3/negative-law", tag,
                              m.compose(s, m.power_tuple(M, 0, {n, id_TM})), m.compose(z, p));
        }
    }

    return rep;
}

// ---------------------------------------------------------------------------
// Lax tangent morphisms
// ---------------------------------------------------------------------------

enum class Strength { lax, strong, strict };

template <class SM, class DM>
struct LaxTangentMorphism {
    using SrcObj = typename SM::Object;
    using SrcMor = typename SM::Morphism;
    using DstObj = typename DM::Object;
    using DstMor = typename DM::Morphism;

    const SM* src = nullptr;
    const DM* dst = nullptr;
    std::string label;
    std::function<DstObj(const SrcObj&)> obj;
    std::function<DstMor(const SrcMor&)> mor;
    std::function<DstMor(const SrcObj&)> law;     // alpha_M : F(TM) -> T'(FM)
    Strength strength = Strength::lax;
    std::function<DstMor(const SrcObj&)> law_inv; // set when strength >= strong
};

template <class M>
LaxTangentMorphism<M, M> identity_lax(const M& m) {
    LaxTangentMorphism<M, M> f;
    f.src = f.dst = &m;
    f.label = "id";
    f.obj = [](const typename M::Object& o) { return o; };
    f.mor = [](const typename M::Morphism& g) { return g; };
    f.law = [&m](const typename M::Object& o) { return m.identity(m.tangent_obj(o)); };
    f.law_inv = f.law;
    f.strength = Strength::strict;
    return f;
}

// (T, c), the tangent bundle as a strong endomorphism of its own model.
template <class M>
LaxTangentMorphism<M, M> tangent_endo(const M& m) {
    LaxTangentMorphism<M, M> f;
    f.src = f.dst = &m;
    f.label = "(T,c)";
    f.obj = [&m](const typename M::Object& o) { return m.tangent_obj(o); };
    f.mor = [&m](const typename M::Morphism& g) { return m.tangent_mor(g); };
    f.law = [&m](const typename M::Object& o) { return m.flip(o); };
    f.law_inv = f.law; // c is an involution
    f.strength = Strength::strong;
    return f;
}

// g after f; the distributive law is beta_F after G(alpha).
template <class AM, class BM, class CM>
LaxTangentMorphism<AM, CM> compose_lax(const LaxTangentMorphism<BM, CM>& g,
                                       const LaxTangentMorphism<AM, BM>& f) {
    if (f.dst != g.src) throw std::invalid_argument("compose_lax: model mismatch");
    LaxTangentMorphism<AM, CM> r;
    r.src = f.src;
    r.dst = g.dst;
    r.label = g.label + " . " + f.label;
    auto fo = f.obj, fm = f.mor, fl = f.law;
    auto go = g.obj, gm = g.mor, gl = g.law;
    const CM* out = g.dst;
    r.obj = [fo, go](const typename AM::Object& o) { return go(fo(o)); };
    r.mor = [fm, gm](const typename AM::Morphism& h) { return gm(fm(h)); };
    r.law = [fo, fl, gm, gl, out](const typename AM::Object& o) {
        return out->compose(gl(fo(o)), gm(fl(o)));
    };
    r.strength = std::min(f.strength, g.strength);
    if (r.strength != Strength::lax) {
        auto fli = f.law_inv, gli = g.law_inv;
        r.law_inv = [fo, fli, gm, gli, out](const typename AM::Object& o) {
            return out->compose(gm(fli(o)), gli(fo(o)));
        };
    }
    return r;
}

// The hom-tangent bundle: postcomposition with (T, c).
template <class SM, class DM>
LaxTangentMorphism<SM, DM> hom_tangent(const LaxTangentMorphism<SM, DM>& f) {
    return compose_lax(tangent_endo(*f.dst), f);
}

// Checks the five compatibility squares of a lax distributive law, plus its
// naturality on the sampled morphisms.
template <class SM, class DM>
Report check_lax_tangent_morphism(const LaxTangentMorphism<SM, DM>& f,
                                  const Samples<SM>& samples) {
    Report rep;
    const SM& S = *f.src;
    const DM& D = *f.dst;

    for (std::size_t i = 0; i < samples.objects.size(); ++i) {
        const auto& M = samples.objects[i];
        const std::string tag = "obj:" + std::to_string(i);
        const auto FM = f.obj(M);
        const auto alpha = f.law(M);

        TANGENTAD_DIAGRAM(rep, D, "lax/p-compat", tag, D.compose(D.proj(FM), alpha),
                          f.mor(S.proj(M)));
        TANGENTAD_DIAGRAM(rep, D, "lax/z-compat", tag, D.compose(alpha, f.mor(S.zero(M))),
                          D.zero(FM));
        TANGENTAD_DIAGRAM(
            rep, D, "lax/s-compat", tag, D.compose(alpha, f.mor(S.sum(M))),
            D.compose(D.sum(FM),
                      D.power_tuple(FM, 0,
                                    {D.compose(alpha, f.mor(S.power_proj(M, 2, 1))),
                                     D.compose(alpha, f.mor(S.power_proj(M, 2, 2)))})));
        {
            auto alpha_T = f.law(S.tangent_obj(M));
            auto Talpha = D.tangent_mor(alpha);
            TANGENTAD_DIAGRAM(rep, D, "lax/l-compat", tag, D.compose(D.lift(FM), alpha),
                              D.compose(Talpha, D.compose(alpha_T, f.mor(S.lift(M)))));
            TANGENTAD_DIAGRAM(rep, D, "lax/c-compat", tag,
                              D.compose(D.flip(FM), D.compose(Talpha, alpha_T)),
                              D.compose(Talpha, D.compose(alpha_T, f.mor(S.flip(M)))));
        }
        if (S.has_negatives() && D.has_negatives())
            TANGENTAD_DIAGRAM(rep, D, "lax/n-compat", tag,
                              D.compose(alpha, f.mor(S.negate(M))),
                              D.compose(D.negate(FM), alpha));
    }

    for (std::size_t i = 0; i < samples.morphisms.size(); ++i) {
        const auto& g = samples.morphisms[i];
        const std::string tag = "mor:" + std::to_string(i);
        auto M = S.source_obj(g), N = S.target_obj(g);
        TANGENTAD_DIAGRAM(rep, D, "lax/alpha-natural", tag,
                          D.compose(f.law(N), f.mor(S.tangent_mor(g))),
                          D.compose(D.tangent_mor(f.mor(g)), f.law(M)));
    }

    return rep;
}

// ---------------------------------------------------------------------------
// Tangent 2-morphisms
// ---------------------------------------------------------------------------

template <class SM, class DM>
struct TangentTwoMorphism {
    const LaxTangentMorphism<SM, DM>* source = nullptr;
    const LaxTangentMorphism<SM, DM>* target = nullptr;
    std::string label;
    std::function<typename DM::Morphism(const typename SM::Object&)> component;
};

// beta . phi_T = T' phi . alpha, plus naturality of phi on sampled morphisms.
template <class SM, class DM>
Report check_tangent_two_morphism(const TangentTwoMorphism<SM, DM>& phi,
                                  const Samples<SM>& samples) {
    Report rep;
    const SM& S = *phi.source->src;
    const DM& D = *phi.source->dst;
    for (std::size_t i = 0; i < samples.objects.size(); ++i) {
        const auto& M = samples.objects[i];
        TANGENTAD_DIAGRAM(rep, D, "2mor/law-square", "obj:" + std::to_string(i),
                          D.compose(phi.target->law(M), phi.component(S.tangent_obj(M))),
                          D.compose(D.tangent_mor(phi.component(M)), phi.source->law(M)));
    }
    for (std::size_t i = 0; i < samples.morphisms.size(); ++i) {
        const auto& g = samples.morphisms[i];
        auto M = S.source_obj(g), N = S.target_obj(g);
        TANGENTAD_DIAGRAM(rep, D, "2mor/natural", "mor:" + std::to_string(i),
                          D.compose(phi.component(N), phi.source->mor(g)),
                          D.compose(phi.target->mor(g), phi.component(M)));
    }
    return rep;
}

// Whiskering helper for the pointwise hom-tangent structure: the structural
// 2-morphism named by `which` at hom_tangent(f), e.g. "p" recovers f.
template <class SM, class DM>
std::function<typename DM::Morphism(const typename SM::Object&)>
hom_structural(const LaxTangentMorphism<SM, DM>& f, const std::string& which) {
    const DM* D = f.dst;
    auto fo = f.obj;
    if (which == "p")
        return [D, fo](const typename SM::Object& o) { return D->proj(fo(o)); };
    if (which == "z")
        return [D, fo](const typename SM::Object& o) { return D->zero(fo(o)); };
    if (which == "s")
        return [D, fo](const typename SM::Object& o) { return D->sum(fo(o)); };
    if (which == "l")
        return [D, fo](const typename SM::Object& o) { return D->lift(fo(o)); };
    if (which == "c")
        return [D, fo](const typename SM::Object& o) { return D->flip(fo(o)); };
    if (which == "n")
        return [D, fo](const typename SM::Object& o) { return D->negate(fo(o)); };
    throw std::invalid_argument("hom_structural: unknown structural morphism " + which);
}

} // namespace tangentad
