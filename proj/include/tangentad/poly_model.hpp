#pragma once

// The exact workhorse tangent category: objects are affine spaces Q^m,
// morphisms are polynomial maps, T is the symbolic dual-number construction.

#include "tangentad/polymap.hpp"
#include "tangentad/rng.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace tangentad {

struct PolyModel {
    using Object = std::size_t;
    using Morphism = PolyMap;

    std::string name() const { return "poly"; }

    bool obj_equal(Object a, Object b) const { return a == b; }
    Object source_obj(const Morphism& f) const { return f.source_dim; }
    Object target_obj(const Morphism& f) const { return f.target_dim; }

    Morphism identity(Object m) const { return PolyMap::identity(m); }
    Morphism compose(const Morphism& g, const Morphism& f) const { return tangentad::compose(g, f); }
    bool equal(const Morphism& f, const Morphism& g) const { return f == g; }
    std::string show(const Morphism& f) const { return f.str(); }

    Object tangent_obj(Object m) const { return 2 * m; }
    Morphism tangent_mor(const Morphism& f) const { return tangent_map(f); }

    Morphism proj(Object m) const { return poly_structural::proj(m); }
    Morphism zero(Object m) const { return poly_structural::zero(m); }
    Morphism sum(Object m) const { return poly_structural::sum(m); }
    Morphism lift(Object m) const { return poly_structural::lift(m); }
    Morphism flip(Object m) const { return poly_structural::flip(m); }

    bool has_negatives() const { return true; }
    Morphism negate(Object m) const { return poly_structural::negate(m); }

    Object power_obj(Object m, std::size_t n) const { return (n + 1) * m; }
    Morphism power_proj(Object m, std::size_t n, std::size_t k) const {
        return poly_power_proj(m, n, k);
    }
    Morphism power_tuple(Object m, unsigned t, const std::vector<Morphism>& fs) const {
        return poly_power_tuple(m, t, fs);
    }

    bool has_lift_solve() const { return true; }
    Morphism lift_solve(Object m, const Morphism& h) const { return poly_lift_solve(m, h); }
};

// Structural corruptions for mutation testing. Each one must be caught by at
// least one named diagram of the axiom checker.
enum class Mutation {
    none,
    c_identity,  // canonical flip replaced by the identity on T^2
    l_degenerate, // vertical lift replaced by the zero of p_T
    s_proj,      // sum replaced by the first projection
    z_one,       // zero section replaced by the constant-1 tangent
    n_identity,  // negation replaced by the identity
};

inline Mutation mutation_from_name(const std::string& s) {
    if (s == "none" || s.empty()) return Mutation::none;
    if (s == "c-identity") return Mutation::c_identity;
    if (s == "l-degenerate") return Mutation::l_degenerate;
    if (s == "s-proj") return Mutation::s_proj;
    if (s == "z-one") return Mutation::z_one;
    if (s == "n-identity") return Mutation::n_identity;
    throw std::invalid_argument("unknown mutation: " + s);
}

struct MutatedPolyModel : PolyModel {
    Mutation mutation = Mutation::none;

    explicit MutatedPolyModel(Mutation m) : mutation(m) {}

    std::string name() const { return "poly/mutated"; }

    Morphism zero(Object m) const {
        if (mutation != Mutation::z_one) return PolyModel::zero(m);
        std::vector<Poly> c;
        for (std::size_t i = 0; i < m; ++i) c.push_back(Poly::variable(m, i));
        for (std::size_t i = 0; i < m; ++i) c.push_back(Poly::constant(m, Rat(1)));
        return PolyMap(m, std::move(c));
    }

    Morphism sum(Object m) const {
        if (mutation != Mutation::s_proj) return PolyModel::sum(m);
        return tangentad::compose(PolyModel::identity(2 * m), poly_power_proj(m, 2, 1));
    }

    Morphism lift(Object m) const {
        if (mutation != Mutation::l_degenerate) return PolyModel::lift(m);
        // z at TM: (x,v) |-> (x,v,0,0)
        return poly_structural::zero(2 * m);
    }

    Morphism flip(Object m) const {
        if (mutation != Mutation::c_identity) return PolyModel::flip(m);
        return PolyModel::identity(4 * m);
    }

    Morphism negate(Object m) const {
        if (mutation != Mutation::n_identity) return PolyModel::negate(m);
        return PolyModel::identity(2 * m);
    }
};

// ---------------------------------------------------------------------------
// Seeded random samples
// ---------------------------------------------------------------------------

inline Poly random_poly(Rng& rng, std::size_t nvars, unsigned max_degree, long long coeff_bound,
                        std::size_t max_terms = 4) {
    Poly p(nvars);
    std::size_t terms = 1 + rng.below(max_terms);
    for (std::size_t t = 0; t < terms; ++t) {
        Exponents e(nvars, 0);
        unsigned budget = max_degree == 0 ? 0 : static_cast<unsigned>(rng.below(max_degree + 1));
        for (unsigned d = 0; d < budget && nvars > 0; ++d) e[rng.below(nvars)] += 1;
        long long num = rng.range(-coeff_bound, coeff_bound);
        if (num == 0) num = 1;
        long long den = rng.range(1, 3);
        p.add_term(e, rat(num, den));
    }
    return p;
}

inline PolyMap random_poly_map(Rng& rng, std::size_t src, std::size_t dst, unsigned max_degree,
                               long long coeff_bound = 3) {
    std::vector<Poly> comps;
    comps.reserve(dst);
    for (std::size_t i = 0; i < dst; ++i)
        comps.push_back(random_poly(rng, src, max_degree, coeff_bound));
    return PolyMap(src, std::move(comps));
}

// ---------------------------------------------------------------------------
// JSON: {"source_dim": m, "target_dim": n,
//        "components": [[[num, den, [e_1, ..., e_m]], ...], ...]}
// Numerators and denominators are JSON integers when they fit in 64 bits and
// decimal strings otherwise, so the round trip stays exact.
// ---------------------------------------------------------------------------

namespace detail {

inline nlohmann::json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

inline Int int_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(j.get<std::int64_t>());
}

} // namespace detail

inline nlohmann::json poly_to_json(const Poly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : p.terms())
        arr.push_back({detail::int_to_json(numerator(c)), detail::int_to_json(denominator(c)), e});
    return arr;
}

inline Poly poly_from_json(const nlohmann::json& j, std::size_t nvars) {
    Poly p(nvars);
    for (const auto& term : j) {
        Int num = detail::int_from_json(term.at(0));
        Int den = detail::int_from_json(term.at(1));
        if (den == 0) throw std::invalid_argument("poly term with zero denominator");
        Exponents e = term.at(2).get<Exponents>();
        p.add_term(e, Rat(num, den));
    }
    return p;
}

inline nlohmann::json polymap_to_json(const PolyMap& f) {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& p : f.components) comps.push_back(poly_to_json(p));
    return {{"source_dim", f.source_dim}, {"target_dim", f.target_dim}, {"components", comps}};
}

inline PolyMap polymap_from_json(const nlohmann::json& j) {
    std::size_t src = j.at("source_dim").get<std::size_t>();
    std::size_t dst = j.at("target_dim").get<std::size_t>();
    std::vector<Poly> comps;
    for (const auto& c : j.at("components")) comps.push_back(poly_from_json(c, src));
    if (comps.size() != dst) throw std::invalid_argument("PolyMap JSON: component count");
    return PolyMap(src, std::move(comps));
}

} // namespace tangentad
