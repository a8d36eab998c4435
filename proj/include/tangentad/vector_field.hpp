#pragma once

// Vector fields over any tangent model: sections of the projection, the
// tangent model they form, sum/negation/Lie bracket, pushforward along lax
// tangent morphisms, vector fields of hom-tangent categories with the
// Gamma/Lambda universality probes, and the algebraic structure checks.

#include "tangentad/poly_model.hpp"
#include "tangentad/tangent_core.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tangentad {

struct SideConditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class M>
struct VectorField {
    typename M::Object base;
    typename M::Morphism section; // v : M -> TM with p . v = id
};

template <class M>
VectorField<M> make_vector_field(const M& m, const typename M::Object& base,
                                 const typename M::Morphism& v) {
    if (!m.obj_equal(m.source_obj(v), base) ||
        !m.obj_equal(m.target_obj(v), m.tangent_obj(base)))
        throw std::invalid_argument("vector field: section endpoints do not match the base");
    if (!m.equal(m.compose(m.proj(base), v), m.identity(base)))
        throw std::invalid_argument("vector field: not a section of the projection: " +
                                    m.show(v));
    return {base, v};
}

template <class M>
bool vf_equal(const M& m, const VectorField<M>& a, const VectorField<M>& b) {
    return m.obj_equal(a.base, b.base) && m.equal(a.section, b.section);
}

template <class M>
VectorField<M> zero_vf(const M& m, const typename M::Object& obj) {
    return {obj, m.zero(obj)};
}

template <class M>
VectorField<M> sum_vf(const M& m, const VectorField<M>& x, const VectorField<M>& y) {
    if (!m.obj_equal(x.base, y.base))
        throw std::invalid_argument("sum_vf: fields live on different bases");
    auto sec = m.compose(m.sum(x.base), m.power_tuple(x.base, 0, {x.section, y.section}));
    return make_vector_field(m, x.base, sec);
}

template <class M>
VectorField<M> neg_vf(const M& m, const VectorField<M>& x) {
    if (!m.has_negatives()) throw std::invalid_argument("neg_vf: model has no negatives");
    return make_vector_field(m, x.base, m.compose(m.negate(x.base), x.section));
}

// (TM, c . Tv)
template <class M>
VectorField<M> vf_tangent(const M& m, const VectorField<M>& x) {
    auto sec = m.compose(m.flip(x.base), m.tangent_mor(x.section));
    return make_vector_field(m, m.tangent_obj(x.base), sec);
}

// f - g : K -> T^2 M for parallel f, g into the second tangent bundle,
// via the fibered sum over the outer projection.
template <class M>
typename M::Morphism subtract_t2(const M& m, const typename M::Object& obj,
                                 const typename M::Morphism& f, const typename M::Morphism& g) {
    auto TM = m.tangent_obj(obj);
    auto neg_g = m.compose(m.negate(TM), g);
    return m.compose(m.sum(TM), m.power_tuple(TM, 0, {f, neg_g}));
}

// The vertical-lift side condition T p . h = z . p . p_T . h.
template <class M>
bool lift_side_condition(const M& m, const typename M::Object& obj,
                         const typename M::Morphism& h) {
    auto lhs = m.compose(m.tangent_mor(m.proj(obj)), h);
    auto base = m.compose(m.proj(obj), m.compose(m.proj(m.tangent_obj(obj)), h));
    auto rhs = m.compose(m.zero(obj), base);
    return m.equal(lhs, rhs);
}

// [x, y] = { T(y) . x  -  c . T(x) . y }
template <class M>
VectorField<M> bracket(const M& m, const VectorField<M>& x, const VectorField<M>& y) {
    if (!m.obj_equal(x.base, y.base))
        throw std::invalid_argument("bracket: fields live on different bases");
    if (!m.has_negatives() || !m.has_lift_solve())
        throw std::invalid_argument("bracket: model must supply negatives and a lift solver");
    const auto& obj = x.base;
    auto f = m.compose(m.tangent_mor(y.section), x.section);
    auto g = m.compose(m.flip(obj), m.compose(m.tangent_mor(x.section), y.section));
    auto h = subtract_t2(m, obj, f, g);
    if (!lift_side_condition(m, obj, h))
        throw SideConditionError("bracket: lift side condition fails for h = " + m.show(h));
    return make_vector_field(m, obj, m.lift_solve(obj, h));
}

template <class SM, class DM>
VectorField<DM> vf_pushforward(const LaxTangentMorphism<SM, DM>& f, const VectorField<SM>& x) {
    auto sec = f.dst->compose(f.law(x.base), f.mor(x.section));
    return make_vector_field(*f.dst, f.obj(x.base), sec);
}

// Jacobian formula oracle for polynomial sections: [u, v] has field
// Jv . u - Ju . v. Kept on the plain derivative path, independent of the
// tangent/lift machinery.
inline PolyMap classical_bracket_section(const PolyMap& u, const PolyMap& v) {
    const std::size_t m = u.source_dim;
    if (v.source_dim != m || u.target_dim != 2 * m || v.target_dim != 2 * m)
        throw std::invalid_argument("classical_bracket_section: expects sections m -> 2m");
    std::vector<Poly> comps;
    for (std::size_t i = 0; i < m; ++i) comps.push_back(Poly::variable(m, i));
    for (std::size_t i = 0; i < m; ++i) {
        Poly acc(m);
        for (std::size_t j = 0; j < m; ++j) {
            acc += v.components[m + i].derivative(j) * u.components[m + j];
            acc -= u.components[m + i].derivative(j) * v.components[m + j];
        }
        comps.push_back(std::move(acc));
    }
    return PolyMap(m, std::move(comps));
}

// ---------------------------------------------------------------------------
// The tangent model of vector fields. Objects are fields (M, v), morphisms
// carry their endpoints; the tangent bundle sends (M, v) to (TM, c . Tv) and
// the structural morphisms are the base ones.
// ---------------------------------------------------------------------------

template <class Base>
struct VFModel {
    const Base* base = nullptr;

    using Object = VectorField<Base>;

    struct Morphism {
        Object src, tgt;
        typename Base::Morphism under;
    };

    std::string name() const { return base->name() + "/vf"; }

    bool obj_equal(const Object& a, const Object& b) const { return vf_equal(*base, a, b); }
    Object source_obj(const Morphism& f) const { return f.src; }
    Object target_obj(const Morphism& f) const { return f.tgt; }

    Morphism identity(const Object& o) const { return {o, o, base->identity(o.base)}; }

    Morphism compose(const Morphism& g, const Morphism& f) const {
        if (!obj_equal(f.tgt, g.src))
            throw std::invalid_argument(name() + ": compose endpoint mismatch");
        return {f.src, g.tgt, base->compose(g.under, f.under)};
    }

    bool equal(const Morphism& f, const Morphism& g) const {
        return base->equal(f.under, g.under);
    }

    std::string show(const Morphism& f) const { return base->show(f.under); }

    Object tangent_obj(const Object& o) const { return vf_tangent(*base, o); }

    Morphism tangent_mor(const Morphism& f) const {
        return {tangent_obj(f.src), tangent_obj(f.tgt), base->tangent_mor(f.under)};
    }

    Morphism proj(const Object& o) const { return {tangent_obj(o), o, base->proj(o.base)}; }
    Morphism zero(const Object& o) const { return {o, tangent_obj(o), base->zero(o.base)}; }
    Morphism sum(const Object& o) const {
        return {power_obj(o, 2), tangent_obj(o), base->sum(o.base)};
    }
    Morphism lift(const Object& o) const {
        auto to = tangent_obj(o);
        return {to, tangent_obj(to), base->lift(o.base)};
    }
    Morphism flip(const Object& o) const {
        auto t2 = tangent_obj(tangent_obj(o));
        return {t2, t2, base->flip(o.base)};
    }
    bool has_negatives() const { return base->has_negatives(); }
    Morphism negate(const Object& o) const {
        auto to = tangent_obj(o);
        return {to, to, base->negate(o.base)};
    }

    // T_n(M, v): the induced section on T_n M tuples the tangent field along
    // every projection.
    Object power_obj(const Object& o, std::size_t n) const {
        auto vt = tangent_obj(o).section; // c . Tv : TM -> T^2 M
        std::vector<typename Base::Morphism> legs;
        for (std::size_t k = 1; k <= n; ++k)
            legs.push_back(base->compose(vt, base->power_proj(o.base, n, k)));
        auto sec = base->power_tuple(o.base, 1, legs);
        return make_vector_field(*base, base->power_obj(o.base, n), sec);
    }

    Morphism power_proj(const Object& o, std::size_t n, std::size_t k) const {
        return {power_obj(o, n), tangent_obj(o), base->power_proj(o.base, n, k)};
    }

    Morphism power_tuple(const Object& o, unsigned t, const std::vector<Morphism>& fs) const {
        if (fs.empty()) throw std::invalid_argument("power_tuple: empty family");
        std::vector<typename Base::Morphism> under;
        under.reserve(fs.size());
        for (const auto& f : fs) under.push_back(f.under);
        Object tgt = power_obj(o, fs.size());
        for (unsigned i = 0; i < t; ++i) tgt = tangent_obj(tgt);
        return {fs.front().src, tgt, base->power_tuple(o.base, t, under)};
    }

    bool has_lift_solve() const { return base->has_lift_solve(); }
    Morphism lift_solve(const Object& o, const Morphism& h) const {
        auto to = tangent_obj(o);
        return {h.src, to, base->lift_solve(o.base, h.under)};
    }
};

// Checked morphism-of-vector-fields constructor: u . f = Tf . v.
template <class M>
typename VFModel<M>::Morphism make_vf_morphism(const M& m, const VectorField<M>& src,
                                               const VectorField<M>& tgt,
                                               const typename M::Morphism& f) {
    if (!m.obj_equal(m.source_obj(f), src.base) || !m.obj_equal(m.target_obj(f), tgt.base))
        throw std::invalid_argument("vf morphism: endpoints");
    auto lhs = m.compose(tgt.section, f);
    auto rhs = m.compose(m.tangent_mor(f), src.section);
    if (!m.equal(lhs, rhs))
        throw std::invalid_argument("vf morphism: defining square fails: " + m.show(lhs) +
                                    " vs " + m.show(rhs));
    return {src, tgt, f};
}

// ---------------------------------------------------------------------------
// Vector fields of the hom-tangent category: a lax tangent morphism (G, beta)
// together with a field u_A on each GA, natural in A and compatible with
// beta. Finite probes stand in for the quantification over all objects.
// ---------------------------------------------------------------------------

template <class SM, class DM>
struct HomVectorField {
    std::string label;
    LaxTangentMorphism<SM, DM> morphism; // (G, beta)
    std::function<VectorField<DM>(const typename SM::Object&)> field;
};

template <class SM, class DM>
Report validate_hom_vector_field(const HomVectorField<SM, DM>& h, const Samples<SM>& probe) {
    Report rep;
    const SM& S = *h.morphism.src;
    const DM& D = *h.morphism.dst;
    for (std::size_t i = 0; i < probe.objects.size(); ++i) {
        const auto& A = probe.objects[i];
        const std::string tag = h.label + "/obj:" + std::to_string(i);
        auto u = h.field(A);
        bool on_base = D.obj_equal(u.base, h.morphism.obj(A));
        rep.add("homvf/base", tag, on_base, on_base ? "" : "field lives off G(A)");
        TANGENTAD_DIAGRAM(rep, D, "homvf/section", tag, D.compose(D.proj(u.base), u.section),
                          D.identity(u.base));
        // beta-compatibility: c . T(u_A) . beta_A = T(beta_A) . u_{T'A}
        auto uT = h.field(S.tangent_obj(A));
        TANGENTAD_DIAGRAM(rep, D, "homvf/beta-compat", tag,
                          D.compose(D.flip(h.morphism.obj(A)),
                                    D.compose(D.tangent_mor(u.section), h.morphism.law(A))),
                          D.compose(D.tangent_mor(h.morphism.law(A)), uT.section));
    }
    for (std::size_t i = 0; i < probe.morphisms.size(); ++i) {
        const auto& f = probe.morphisms[i];
        const std::string tag = h.label + "/mor:" + std::to_string(i);
        auto uA = h.field(S.source_obj(f));
        auto uB = h.field(S.target_obj(f));
        auto Gf = h.morphism.mor(f);
        TANGENTAD_DIAGRAM(rep, D, "homvf/natural", tag, D.compose(uB.section, Gf),
                          D.compose(D.tangent_mor(Gf), uA.section));
    }
    return rep;
}

// The hom-tangent bundle on hom vector fields: (G, beta; u) |-> (T G, c Tbeta;
// tangent-lifted fields).
template <class SM, class DM>
HomVectorField<SM, DM> hom_vf_tangent(const HomVectorField<SM, DM>& h) {
    HomVectorField<SM, DM> r;
    r.label = "T(" + h.label + ")";
    r.morphism = hom_tangent(h.morphism);
    const DM* D = h.morphism.dst;
    auto field = h.field;
    r.field = [D, field](const typename SM::Object& A) { return vf_tangent(*D, field(A)); };
    return r;
}

// Lambda[G, beta; u]: the lax tangent morphism into the vector-field model
// selecting u_A over each probe object.
template <class SM, class DM>
LaxTangentMorphism<SM, VFModel<DM>> hom_vf_to_lax(const VFModel<DM>& vfm,
                                                  const HomVectorField<SM, DM>& h) {
    LaxTangentMorphism<SM, VFModel<DM>> r;
    r.src = h.morphism.src;
    r.dst = &vfm;
    r.label = "Lambda[" + h.label + "]";
    auto G = h.morphism;
    auto field = h.field;
    const DM* D = h.morphism.dst;
    auto obj = [D, G, field](const typename SM::Object& A) {
        return make_vector_field(*D, G.obj(A), field(A).section);
    };
    r.obj = obj;
    r.mor = [obj, G](const typename SM::Morphism& f) -> typename VFModel<DM>::Morphism {
        return {obj(G.src->source_obj(f)), obj(G.src->target_obj(f)), G.mor(f)};
    };
    r.law = [obj, G, D](const typename SM::Object& A) -> typename VFModel<DM>::Morphism {
        return {obj(G.src->tangent_obj(A)), vf_tangent(*D, obj(A)), G.law(A)};
    };
    r.strength = G.strength;
    if (G.strength != Strength::lax && G.law_inv) {
        r.law_inv = [obj, G, D](const typename SM::Object& A) -> typename VFModel<DM>::Morphism {
            return {vf_tangent(*D, obj(A)), obj(G.src->tangent_obj(A)), G.law_inv(A)};
        };
    }
    return r;
}

// Gamma: a lax tangent morphism into the vector-field model, composed with
// the forgetful morphism and the universal vector field, yields a hom vector
// field over the underlying morphism.
template <class SM, class DM>
HomVectorField<SM, DM> lax_to_hom_vf(const DM& d, const LaxTangentMorphism<SM, VFModel<DM>>& F) {
    HomVectorField<SM, DM> r;
    r.label = "Gamma[" + F.label + "]";
    r.morphism.src = F.src;
    r.morphism.dst = &d;
    r.morphism.label = "U . " + F.label;
    auto obj = F.obj;
    auto mor = F.mor;
    auto law = F.law;
    r.morphism.obj = [obj](const typename SM::Object& A) { return obj(A).base; };
    r.morphism.mor = [mor](const typename SM::Morphism& f) { return mor(f).under; };
    r.morphism.law = [law](const typename SM::Object& A) { return law(A).under; };
    r.morphism.strength = F.strength;
    if (F.strength != Strength::lax && F.law_inv) {
        auto law_inv = F.law_inv;
        r.morphism.law_inv = [law_inv](const typename SM::Object& A) {
            return law_inv(A).under;
        };
    }
    r.field = [obj](const typename SM::Object& A) { return obj(A); };
    return r;
}

namespace detail {

// Structural equality of two lax morphisms into the vector-field model over a
// finite probe.
template <class SM, class DM>
void compare_vf_valued(Report& rep, const std::string& diagram, const std::string& label,
                       const VFModel<DM>& vfm, const LaxTangentMorphism<SM, VFModel<DM>>& a,
                       const LaxTangentMorphism<SM, VFModel<DM>>& b, const Samples<SM>& probe) {
    const DM& D = *vfm.base;
    for (std::size_t i = 0; i < probe.objects.size(); ++i) {
        const auto& A = probe.objects[i];
        bool obj_ok = vfm.obj_equal(a.obj(A), b.obj(A));
        bool law_ok = D.equal(a.law(A).under, b.law(A).under);
        rep.add(diagram + "/object", label + "/obj:" + std::to_string(i), obj_ok && law_ok,
                obj_ok ? (law_ok ? "" : "laws differ") : "objects differ");
    }
    for (std::size_t i = 0; i < probe.morphisms.size(); ++i) {
        const auto& f = probe.morphisms[i];
        bool ok = D.equal(a.mor(f).under, b.mor(f).under);
        rep.add(diagram + "/morphism", label + "/mor:" + std::to_string(i), ok,
                ok ? "" : "images differ");
    }
}

} // namespace detail

// Round-trip universality probe: Gamma . Lambda and Lambda . Gamma are the
// identities on the probe, and Lambda commutes with the tangent bundles.
template <class SM, class DM>
Report universality_probe(const VFModel<DM>& vfm,
                          const std::vector<HomVectorField<SM, DM>>& families,
                          const Samples<SM>& probe) {
    Report rep;
    const DM& D = *vfm.base;
    for (const auto& h : families) {
        Report v = validate_hom_vector_field(h, probe);
        rep.merge(v);
        if (!v.all_pass()) continue; // rejected probes carry their witness above

        auto lambda = hom_vf_to_lax(vfm, h);
        auto back = lax_to_hom_vf(D, lambda);

        // Gamma . Lambda = id on families
        for (std::size_t i = 0; i < probe.objects.size(); ++i) {
            const auto& A = probe.objects[i];
            bool ok = D.obj_equal(back.morphism.obj(A), h.morphism.obj(A)) &&
                      D.equal(back.morphism.law(A), h.morphism.law(A)) &&
                      vf_equal(D, back.field(A), h.field(A));
            rep.add("univ/gamma-lambda", h.label + "/obj:" + std::to_string(i), ok, "");
        }
        for (std::size_t i = 0; i < probe.morphisms.size(); ++i) {
            bool ok = D.equal(back.morphism.mor(probe.morphisms[i]),
                              h.morphism.mor(probe.morphisms[i]));
            rep.add("univ/gamma-lambda", h.label + "/mor:" + std::to_string(i), ok, "");
        }

        // Lambda . Gamma = id on morphisms into the vector-field model
        auto again = hom_vf_to_lax(vfm, back);
        detail::compare_vf_valued(rep, "univ/lambda-gamma", h.label, vfm, again, lambda, probe);

        // Lambda is strict w.r.t. the tangent bundles
        auto lifted = hom_vf_to_lax(vfm, hom_vf_tangent(h));
        auto composed = compose_lax(tangent_endo(vfm), lambda);
        detail::compare_vf_valued(rep, "univ/tangent-strict", h.label, vfm, lifted, composed,
                                  probe);
    }
    return rep;
}

// JSON for polynomial vector fields: base dimension plus the section map.
inline nlohmann::json poly_field_to_json(const VectorField<PolyModel>& v) {
    return {{"model", "poly"}, {"base", v.base}, {"section", polymap_to_json(v.section)}};
}

inline VectorField<PolyModel> poly_field_from_json(const PolyModel& m, const nlohmann::json& j) {
    return make_vector_field(m, j.at("base").get<std::size_t>(),
                             polymap_from_json(j.at("section")));
}

// The strict forgetful morphism U : VF(X, T) -> (X, T).
template <class Base>
LaxTangentMorphism<VFModel<Base>, Base> forgetful_lax(const VFModel<Base>& vfm) {
    LaxTangentMorphism<VFModel<Base>, Base> r;
    r.src = &vfm;
    r.dst = vfm.base;
    r.label = "U";
    const Base* b = vfm.base;
    r.obj = [](const VectorField<Base>& o) { return o.base; };
    r.mor = [](const typename VFModel<Base>::Morphism& f) { return f.under; };
    r.law = [b](const VectorField<Base>& o) { return b->identity(b->tangent_obj(o.base)); };
    r.law_inv = r.law;
    r.strength = Strength::strict;
    return r;
}

// The universal vector field: over the forgetful morphism, each object of
// the vector-field model selects its own section.
template <class Base>
HomVectorField<VFModel<Base>, Base> universal_vf_family(const VFModel<Base>& vfm) {
    HomVectorField<VFModel<Base>, Base> r;
    r.label = "universal";
    r.morphism = forgetful_lax(vfm);
    r.field = [](const VectorField<Base>& o) { return o; };
    return r;
}

// A morphism of hom vector fields: a tangent 2-morphism between the base
// morphisms whose components commute with the selected fields.
template <class SM, class DM>
struct HomVFMorphism {
    std::string label;
    std::size_t from = 0, to = 0; // indices into the probed family list
    std::function<typename DM::Morphism(const typename SM::Object&)> component;
};

template <class SM, class DM>
Report check_hom_vf_morphisms(const VFModel<DM>& vfm,
                              const std::vector<HomVectorField<SM, DM>>& families,
                              const std::vector<HomVFMorphism<SM, DM>>& morphisms,
                              const Samples<SM>& probe) {
    Report rep;
    const DM& D = *vfm.base;
    for (const auto& phi : morphisms) {
        const auto& from = families.at(phi.from);
        const auto& to = families.at(phi.to);
        const SM& S = *from.morphism.src;
        auto lf = hom_vf_to_lax(vfm, from);
        auto lt = hom_vf_to_lax(vfm, to);
        for (std::size_t i = 0; i < probe.objects.size(); ++i) {
            const auto& A = probe.objects[i];
            const std::string tag = phi.label + "/obj:" + std::to_string(i);
            TANGENTAD_DIAGRAM(rep, D, "univ/mor-2cell", tag,
                              D.compose(to.morphism.law(A), phi.component(S.tangent_obj(A))),
                              D.compose(D.tangent_mor(phi.component(A)), from.morphism.law(A)));
            bool lambda_ok = true;
            std::string witness;
            try {
                make_vf_morphism(D, lf.obj(A), lt.obj(A), phi.component(A));
            } catch (const std::invalid_argument& e) {
                lambda_ok = false;
                witness = e.what();
            }
            rep.add("univ/mor-field-compat", tag, lambda_ok, witness);
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Structure checks: commutative monoid, abelian group, Lie algebra, and
// f-relatedness of brackets.
// ---------------------------------------------------------------------------

template <class M>
struct FieldTriple {
    VectorField<M> x, y, w;
};

template <class M>
struct FRelatedSample {
    typename M::Morphism f;
    VectorField<M> v1, v2; // on the source
    VectorField<M> u1, u2; // f-related images on the target
};

template <class M>
Report check_structure_theorems(const M& m, const std::vector<FieldTriple<M>>& triples,
                                const std::vector<FRelatedSample<M>>& related = {}) {
    Report rep;
    auto eq = [&](const VectorField<M>& a, const VectorField<M>& b) {
        return vf_equal(m, a, b);
    };
    for (std::size_t i = 0; i < triples.size(); ++i) {
        const auto& [x, y, w] = triples[i];
        const std::string tag = "triple:" + std::to_string(i);
        auto zero = zero_vf(m, x.base);

        rep.add("vf/sum-unit", tag, eq(sum_vf(m, zero, x), x), "");
        rep.add("vf/sum-comm", tag, eq(sum_vf(m, x, y), sum_vf(m, y, x)), "");
        rep.add("vf/sum-assoc", tag,
                eq(sum_vf(m, sum_vf(m, x, y), w), sum_vf(m, x, sum_vf(m, y, w))), "");

        if (!m.has_negatives()) continue;
        rep.add("vf/neg-inverse", tag, eq(sum_vf(m, x, neg_vf(m, x)), zero), "");

        if (!m.has_lift_solve()) continue;
        try {
            rep.add("vf/bracket-zero", tag, eq(bracket(m, zero, x), zero), "");
            rep.add("vf/bracket-left-additive", tag,
                    eq(bracket(m, sum_vf(m, x, y), w),
                       sum_vf(m, bracket(m, x, w), bracket(m, y, w))),
                    "");
            rep.add("vf/bracket-antisym", tag,
                    eq(sum_vf(m, bracket(m, x, y), bracket(m, y, x)), zero), "");
            auto jac = sum_vf(m,
                              sum_vf(m, bracket(m, bracket(m, x, y), w),
                                     bracket(m, bracket(m, w, x), y)),
                              bracket(m, bracket(m, y, w), x));
            rep.add("vf/jacobi", tag, eq(jac, zero), "");
        } catch (const SideConditionError& e) {
            rep.add("vf/bracket-side-condition", tag, false, e.what());
        }
    }
    for (std::size_t i = 0; i < related.size(); ++i) {
        const auto& s = related[i];
        const std::string tag = "related:" + std::to_string(i);
        bool inputs_ok = true;
        std::string witness;
        try {
            make_vf_morphism(m, s.v1, s.u1, s.f);
            make_vf_morphism(m, s.v2, s.u2, s.f);
        } catch (const std::invalid_argument& e) {
            inputs_ok = false;
            witness = e.what();
        }
        rep.add("vf/f-related-inputs", tag, inputs_ok, witness);
        if (!inputs_ok) continue;
        bool ok = true;
        try {
            make_vf_morphism(m, bracket(m, s.v1, s.v2), bracket(m, s.u1, s.u2), s.f);
        } catch (const std::invalid_argument& e) {
            ok = false;
            witness = e.what();
        }
        rep.add("vf/f-related-bracket", tag, ok, witness);
    }
    return rep;
}

// The strictness of the tangent bundle against zero, sum, negation, bracket.
template <class M>
Report check_vf_tangent_strictness(const M& m, const VectorField<M>& x, const VectorField<M>& y,
                                   const std::string& tag) {
    Report rep;
    auto eq = [&](const VectorField<M>& a, const VectorField<M>& b) {
        return vf_equal(m, a, b);
    };
    rep.add("vf/tangent-zero", tag,
            eq(vf_tangent(m, zero_vf(m, x.base)), zero_vf(m, m.tangent_obj(x.base))), "");
    rep.add("vf/tangent-sum", tag,
            eq(vf_tangent(m, sum_vf(m, x, y)),
               sum_vf(m, vf_tangent(m, x), vf_tangent(m, y))),
            "");
    if (m.has_negatives())
        rep.add("vf/tangent-neg", tag,
                eq(vf_tangent(m, neg_vf(m, x)), neg_vf(m, vf_tangent(m, x))), "");
    if (m.has_negatives() && m.has_lift_solve())
        rep.add("vf/tangent-bracket", tag,
                eq(vf_tangent(m, bracket(m, x, y)),
                   bracket(m, vf_tangent(m, x), vf_tangent(m, y))),
                "");
    return rep;
}

} // namespace tangentad
