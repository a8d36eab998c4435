#pragma once

// Finite categories with total composition tables, functors and natural
// transformations between them, exhaustive enumeration under size bounds,
// and the trivial tangent model every finite category carries.

#include "tangentad/errors.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tangentad::fincat {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct SizeBounds {
    std::size_t max_objects = 5;
    std::size_t max_morphisms = 12;
    std::size_t max_probe_objects = 3;
};

struct FiniteCategory {
    struct Mor {
        std::size_t src = 0, dst = 0;
    };

    std::string name;
    std::size_t n_objects = 0;
    std::vector<Mor> mors;
    std::vector<std::size_t> ids;                 // identity morphism per object
    std::vector<std::vector<std::size_t>> table;  // table[g][f] = g . f, npos if not composable

    std::size_t n_mors() const { return mors.size(); }
    std::size_t src(std::size_t f) const { return mors[f].src; }
    std::size_t dst(std::size_t f) const { return mors[f].dst; }

    bool composable(std::size_t g, std::size_t f) const { return dst(f) == src(g); }

    std::size_t compose(std::size_t g, std::size_t f) const {
        if (!composable(g, f)) throw std::invalid_argument("FiniteCategory: not composable");
        return table[g][f];
    }

    std::size_t id(std::size_t obj) const {
        if (obj >= n_objects) throw std::out_of_range("FiniteCategory: object out of range");
        return ids[obj];
    }
};

// Builds and validates: identities, closure, unit laws, associativity.
inline FiniteCategory make_finite_category(std::string name, std::size_t n_objects,
                                           std::vector<FiniteCategory::Mor> mors,
                                           std::vector<std::size_t> ids,
                                           std::vector<std::vector<std::size_t>> table) {
    FiniteCategory c{std::move(name), n_objects, std::move(mors), std::move(ids),
                     std::move(table)};
    if (c.ids.size() != n_objects) throw InputError(c.name + ": one identity per object");
    if (c.table.size() != c.n_mors()) throw InputError(c.name + ": composition table rows");
    for (const auto& row : c.table)
        if (row.size() != c.n_mors()) throw InputError(c.name + ": composition table columns");
    for (std::size_t f = 0; f < c.n_mors(); ++f) {
        if (c.src(f) >= n_objects || c.dst(f) >= n_objects)
            throw InputError(c.name + ": morphism endpoint out of range");
    }
    for (std::size_t o = 0; o < n_objects; ++o) {
        std::size_t i = c.ids[o];
        if (i >= c.n_mors() || c.src(i) != o || c.dst(i) != o)
            throw InputError(c.name + ": bad identity for object " + std::to_string(o));
    }
    for (std::size_t g = 0; g < c.n_mors(); ++g)
        for (std::size_t f = 0; f < c.n_mors(); ++f) {
            std::size_t gf = c.table[g][f];
            if (!c.composable(g, f)) {
                if (gf != npos) throw InputError(c.name + ": composite of non-composable pair");
                continue;
            }
            if (gf == npos || gf >= c.n_mors())
                throw InputError(c.name + ": missing composite");
            if (c.src(gf) != c.src(f) || c.dst(gf) != c.dst(g))
                throw InputError(c.name + ": composite endpoints");
        }
    for (std::size_t f = 0; f < c.n_mors(); ++f) {
        if (c.table[c.ids[c.dst(f)]][f] != f || c.table[f][c.ids[c.src(f)]] != f)
            throw InputError(c.name + ": identity law fails at morphism " + std::to_string(f));
    }
    for (std::size_t h = 0; h < c.n_mors(); ++h)
        for (std::size_t g = 0; g < c.n_mors(); ++g) {
            if (!c.composable(h, g)) continue;
            for (std::size_t f = 0; f < c.n_mors(); ++f) {
                if (!c.composable(g, f)) continue;
                if (c.table[c.table[h][g]][f] != c.table[h][c.table[g][f]])
                    throw InputError(c.name + ": associativity fails");
            }
        }
    return c;
}

// Convenience constructor from the morphism list; composites are looked up
// by endpoints when unique, so it only suits categories where hom-sets
// determine composites, which the explicit-table constructor does not assume.
inline FiniteCategory category_from_table(std::string name, std::size_t n_objects,
                                          std::vector<FiniteCategory::Mor> mors,
                                          std::vector<std::size_t> ids,
                                          const std::vector<std::vector<std::size_t>>& table) {
    return make_finite_category(std::move(name), n_objects, std::move(mors), std::move(ids),
                                table);
}

// ---------------------------------------------------------------------------
// A small corpus of categories
// ---------------------------------------------------------------------------

inline FiniteCategory terminal_category() {
    return make_finite_category("terminal", 1, {{0, 0}}, {0}, {{0}});
}

inline FiniteCategory discrete_category(std::size_t n) {
    std::vector<FiniteCategory::Mor> mors;
    std::vector<std::size_t> ids;
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n, npos));
    for (std::size_t o = 0; o < n; ++o) {
        mors.push_back({o, o});
        ids.push_back(o);
        table[o][o] = o;
    }
    return make_finite_category("discrete" + std::to_string(n), n, std::move(mors),
                                std::move(ids), std::move(table));
}

// two objects, one non-identity arrow 0 -> 1
inline FiniteCategory arrow_category() {
    std::vector<FiniteCategory::Mor> mors{{0, 0}, {1, 1}, {0, 1}};
    std::vector<std::vector<std::size_t>> t(3, std::vector<std::size_t>(3, npos));
    t[0][0] = 0;
    t[1][1] = 1;
    t[2][0] = 2;
    t[1][2] = 2;
    return make_finite_category("arrow", 2, std::move(mors), {0, 1}, std::move(t));
}

// two objects, two parallel arrows 0 -> 1
inline FiniteCategory parallel_pair_category() {
    std::vector<FiniteCategory::Mor> mors{{0, 0}, {1, 1}, {0, 1}, {0, 1}};
    std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4, npos));
    t[0][0] = 0;
    t[1][1] = 1;
    t[2][0] = 2;
    t[1][2] = 2;
    t[3][0] = 3;
    t[1][3] = 3;
    return make_finite_category("parallel-pair", 2, std::move(mors), {0, 1}, std::move(t));
}

// one object, one nonidentity endomorphism e with e . e = e
inline FiniteCategory idempotent_monoid_category() {
    std::vector<FiniteCategory::Mor> mors{{0, 0}, {0, 0}};
    std::vector<std::vector<std::size_t>> t{{0, 1}, {1, 1}};
    return make_finite_category("idempotent-monoid", 1, std::move(mors), {0}, std::move(t));
}

// one object, the group of order two
inline FiniteCategory z2_category() {
    std::vector<FiniteCategory::Mor> mors{{0, 0}, {0, 0}};
    std::vector<std::vector<std::size_t>> t{{0, 1}, {1, 0}};
    return make_finite_category("z2", 1, std::move(mors), {0}, std::move(t));
}

// three objects in a row: a -> b -> c with the composite
inline FiniteCategory chain3_category() {
    std::vector<FiniteCategory::Mor> mors{{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}, {0, 2}};
    std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6, npos));
    t[0][0] = 0;
    t[1][1] = 1;
    t[2][2] = 2;
    t[3][0] = 3;
    t[1][3] = 3;
    t[4][1] = 4;
    t[2][4] = 4;
    t[5][0] = 5;
    t[2][5] = 5;
    t[4][3] = 5;
    return make_finite_category("chain3", 3, std::move(mors), {0, 1, 2}, std::move(t));
}

// ---------------------------------------------------------------------------
// Functors and natural transformations
// ---------------------------------------------------------------------------

struct FinFunctor {
    std::vector<std::size_t> obj; // object images
    std::vector<std::size_t> mor; // morphism images

    friend bool operator==(const FinFunctor&, const FinFunctor&) = default;
};

inline bool is_functor(const FiniteCategory& C, const FiniteCategory& D, const FinFunctor& F) {
    if (F.obj.size() != C.n_objects || F.mor.size() != C.n_mors()) return false;
    for (std::size_t o = 0; o < C.n_objects; ++o)
        if (F.obj[o] >= D.n_objects) return false;
    for (std::size_t f = 0; f < C.n_mors(); ++f) {
        if (F.mor[f] >= D.n_mors()) return false;
        if (D.src(F.mor[f]) != F.obj[C.src(f)] || D.dst(F.mor[f]) != F.obj[C.dst(f)])
            return false;
    }
    for (std::size_t o = 0; o < C.n_objects; ++o)
        if (F.mor[C.id(o)] != D.id(F.obj[o])) return false;
    for (std::size_t g = 0; g < C.n_mors(); ++g)
        for (std::size_t f = 0; f < C.n_mors(); ++f)
            if (C.composable(g, f) && F.mor[C.compose(g, f)] != D.compose(F.mor[g], F.mor[f]))
                return false;
    return true;
}

inline FinFunctor identity_functor(const FiniteCategory& C) {
    FinFunctor F;
    for (std::size_t o = 0; o < C.n_objects; ++o) F.obj.push_back(o);
    for (std::size_t f = 0; f < C.n_mors(); ++f) F.mor.push_back(f);
    return F;
}

inline FinFunctor compose_functor(const FinFunctor& G, const FinFunctor& F) {
    FinFunctor R;
    for (std::size_t o : F.obj) R.obj.push_back(G.obj[o]);
    for (std::size_t f : F.mor) R.mor.push_back(G.mor[f]);
    return R;
}

// Components of a natural transformation F => G are morphism indices in D.
inline bool is_natural(const FiniteCategory& C, const FiniteCategory& D, const FinFunctor& F,
                       const FinFunctor& G, const std::vector<std::size_t>& comp) {
    if (comp.size() != C.n_objects) return false;
    for (std::size_t o = 0; o < C.n_objects; ++o) {
        if (comp[o] >= D.n_mors()) return false;
        if (D.src(comp[o]) != F.obj[o] || D.dst(comp[o]) != G.obj[o]) return false;
    }
    for (std::size_t f = 0; f < C.n_mors(); ++f) {
        std::size_t a = C.src(f), b = C.dst(f);
        if (D.compose(comp[b], F.mor[f]) != D.compose(G.mor[f], comp[a])) return false;
    }
    return true;
}

namespace detail {

inline void check_bounds(const FiniteCategory& C, const SizeBounds& b, bool probe) {
    std::size_t omax = probe ? b.max_probe_objects : b.max_objects;
    if (C.n_objects > omax || (!probe && C.n_mors() > b.max_morphisms))
        throw BoundError(C.name + ": exceeds size bounds (" + std::to_string(C.n_objects) +
                         " objects, " + std::to_string(C.n_mors()) +
                         " morphisms); raise the bounds to enumerate it");
}

} // namespace detail

namespace detail {

// Odometer over per-slot candidate lists; visit receives the current picks.
template <class Visit>
void product_scan(const std::vector<std::vector<std::size_t>>& cands, Visit&& visit) {
    for (const auto& c : cands)
        if (c.empty()) return;
    std::vector<std::size_t> pick(cands.size(), 0), value(cands.size());
    while (true) {
        for (std::size_t i = 0; i < cands.size(); ++i) value[i] = cands[i][pick[i]];
        visit(value);
        std::size_t k = 0;
        for (; k < cands.size(); ++k) {
            if (pick[k] + 1 < cands[k].size()) {
                ++pick[k];
                break;
            }
            pick[k] = 0;
        }
        if (k == cands.size()) break;
    }
}

} // namespace detail

// All functors C -> D, exhaustively: every object assignment, then every
// endpoint-consistent morphism assignment, filtered by functoriality.
inline std::vector<FinFunctor> enumerate_functors(const FiniteCategory& C,
                                                  const FiniteCategory& D,
                                                  const SizeBounds& bounds = {}) {
    detail::check_bounds(C, bounds, true);
    detail::check_bounds(D, bounds, false);
    std::vector<FinFunctor> out;
    if (C.n_objects == 0) {
        out.push_back(FinFunctor{});
        return out;
    }

    std::vector<std::vector<std::size_t>> obj_cands(C.n_objects);
    for (auto& c : obj_cands)
        for (std::size_t o = 0; o < D.n_objects; ++o) c.push_back(o);

    detail::product_scan(obj_cands, [&](const std::vector<std::size_t>& objmap) {
        std::vector<std::vector<std::size_t>> mor_cands(C.n_mors());
        for (std::size_t f = 0; f < C.n_mors(); ++f) {
            if (C.id(C.src(f)) == f) {
                mor_cands[f] = {D.id(objmap[C.src(f)])};
                continue;
            }
            for (std::size_t d = 0; d < D.n_mors(); ++d)
                if (D.src(d) == objmap[C.src(f)] && D.dst(d) == objmap[C.dst(f)])
                    mor_cands[f].push_back(d);
        }
        detail::product_scan(mor_cands, [&](const std::vector<std::size_t>& mor) {
            FinFunctor F{objmap, mor};
            if (is_functor(C, D, F)) out.push_back(std::move(F));
        });
    });
    return out;
}

// All natural transformations F => G.
inline std::vector<std::vector<std::size_t>> enumerate_nat_trans(const FiniteCategory& C,
                                                                 const FiniteCategory& D,
                                                                 const FinFunctor& F,
                                                                 const FinFunctor& G) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::vector<std::size_t>> cands(C.n_objects);
    for (std::size_t o = 0; o < C.n_objects; ++o)
        for (std::size_t d = 0; d < D.n_mors(); ++d)
            if (D.src(d) == F.obj[o] && D.dst(d) == G.obj[o]) cands[o].push_back(d);
    detail::product_scan(cands, [&](const std::vector<std::size_t>& comp) {
        if (is_natural(C, D, F, G, comp)) out.push_back(comp);
    });
    return out;
}

// ---------------------------------------------------------------------------
// The trivial tangent model of a finite category: T is the identity functor
// and every structural morphism is an identity.
// ---------------------------------------------------------------------------

struct TrivialFinModel {
    const FiniteCategory* cat = nullptr;

    using Object = std::size_t;
    using Morphism = std::size_t;

    std::string name() const { return "fincat:" + cat->name; }

    bool obj_equal(Object a, Object b) const { return a == b; }
    Object source_obj(Morphism f) const { return cat->src(check(f)); }
    Object target_obj(Morphism f) const { return cat->dst(check(f)); }

    Morphism identity(Object o) const { return cat->id(o); }
    Morphism compose(Morphism g, Morphism f) const { return cat->compose(check(g), check(f)); }
    bool equal(Morphism f, Morphism g) const { return check(f) == check(g); }
    std::string show(Morphism f) const { return "m" + std::to_string(f); }

    Object tangent_obj(Object o) const {
        if (o >= cat->n_objects) throw std::out_of_range(name() + ": object out of range");
        return o;
    }
    Morphism tangent_mor(Morphism f) const { return check(f); }

    Morphism proj(Object o) const { return cat->id(o); }
    Morphism zero(Object o) const { return cat->id(o); }
    Morphism sum(Object o) const { return cat->id(o); }
    Morphism lift(Object o) const { return cat->id(o); }
    Morphism flip(Object o) const { return cat->id(o); }
    bool has_negatives() const { return true; }
    Morphism negate(Object o) const { return cat->id(o); }

    Object power_obj(Object o, std::size_t) const { return tangent_obj(o); }
    Morphism power_proj(Object o, std::size_t, std::size_t) const { return cat->id(o); }
    Morphism power_tuple(Object, unsigned, const std::vector<Morphism>& fs) const {
        if (fs.empty()) throw std::invalid_argument("power_tuple: empty family");
        for (std::size_t i = 1; i < fs.size(); ++i)
            if (fs[i] != fs[0]) throw ConeError("trivial model: tuple legs must coincide");
        return fs[0];
    }

    bool has_lift_solve() const { return true; }
    Morphism lift_solve(Object, Morphism h) const { return check(h); }

private:
    Morphism check(Morphism f) const {
        if (f >= cat->n_mors()) throw std::out_of_range(name() + ": morphism out of range");
        return f;
    }
};

// ---------------------------------------------------------------------------
// JSON: {"objects": k, "morphisms": [{"src":i,"dst":j}], "compose": table,
//        "identities": [..]}; npos is serialized as -1.
// ---------------------------------------------------------------------------

inline nlohmann::json fincat_to_json(const FiniteCategory& c) {
    nlohmann::json mors = nlohmann::json::array();
    for (const auto& m : c.mors) mors.push_back({{"src", m.src}, {"dst", m.dst}});
    nlohmann::json table = nlohmann::json::array();
    for (const auto& row : c.table) {
        nlohmann::json r = nlohmann::json::array();
        for (std::size_t v : row) r.push_back(v == npos ? -1 : static_cast<long long>(v));
        table.push_back(r);
    }
    return {{"name", c.name},
            {"objects", c.n_objects},
            {"morphisms", mors},
            {"compose", table},
            {"identities", c.ids}};
}

inline FiniteCategory fincat_from_json(const nlohmann::json& j) {
    std::vector<FiniteCategory::Mor> mors;
    for (const auto& m : j.at("morphisms"))
        mors.push_back({m.at("src").get<std::size_t>(), m.at("dst").get<std::size_t>()});
    std::vector<std::vector<std::size_t>> table;
    for (const auto& row : j.at("compose")) {
        table.emplace_back();
        for (const auto& v : row) {
            long long x = v.get<long long>();
            table.back().push_back(x < 0 ? npos : static_cast<std::size_t>(x));
        }
    }
    return make_finite_category(j.value("name", std::string("input")),
                                j.at("objects").get<std::size_t>(), std::move(mors),
                                j.at("identities").get<std::vector<std::size_t>>(),
                                std::move(table));
}

} // namespace tangentad::fincat
