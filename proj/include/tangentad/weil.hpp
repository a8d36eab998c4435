#pragma once

// The monoidal category of tensor words of the rigs W_n = N[x_1..x_n]/(x_i x_j),
// with morphisms the rig homomorphisms determined by generator images. The
// generator morphisms p, z, s, l, c live here, every relation between them is
// checked mechanically on basis elements, and the two fundamental pullback
// squares are probed exhaustively up to a coefficient height bound.

#include "tangentad/errors.hpp"
#include "tangentad/report.hpp"

#include "json.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tangentad {

using Nat = std::uint64_t;

// A tensor word: one entry per factor, the generator count of that factor.
// The empty word is the monoidal unit N.
struct WeilObject {
    std::vector<unsigned> widths;

    friend bool operator==(const WeilObject&, const WeilObject&) = default;

    std::size_t factors() const { return widths.size(); }

    std::size_t basis_size() const {
        std::size_t n = 1;
        for (unsigned w : widths) n *= (w + 1);
        return n;
    }

    // Basis tuples pick, per factor, 0 (the unit) or a generator 1..n_i.
    // Enumeration order: factor 0 is the most significant digit.
    std::vector<unsigned> basis_tuple(std::size_t index) const {
        std::vector<unsigned> t(widths.size(), 0);
        for (std::size_t i = widths.size(); i-- > 0;) {
            t[i] = static_cast<unsigned>(index % (widths[i] + 1));
            index /= (widths[i] + 1);
        }
        return t;
    }

    std::size_t basis_index(const std::vector<unsigned>& t) const {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < widths.size(); ++i) idx = idx * (widths[i] + 1) + t[i];
        return idx;
    }

    std::string str() const {
        if (widths.empty()) return "N";
        std::ostringstream os;
        for (std::size_t i = 0; i < widths.size(); ++i) {
            if (i) os << "(x)";
            os << (widths[i] == 1 ? "W" : "W" + std::to_string(widths[i]));
        }
        return os.str();
    }
};

inline WeilObject make_object(std::vector<unsigned> widths) {
    for (unsigned w : widths)
        if (w == 0) throw std::invalid_argument("WeilObject: factor of width 0");
    return WeilObject{std::move(widths)};
}

inline WeilObject weil_unit() { return WeilObject{}; }
inline WeilObject weil_W() { return make_object({1}); }

inline WeilObject tensor_obj(const WeilObject& a, const WeilObject& b) {
    std::vector<unsigned> w = a.widths;
    w.insert(w.end(), b.widths.begin(), b.widths.end());
    return WeilObject{std::move(w)};
}

// Product of two basis tuples; nullopt encodes zero (nilpotency kills any
// product of two generators within one factor, squares included).
inline std::optional<std::vector<unsigned>> mul_basis(const WeilObject& obj,
                                                      const std::vector<unsigned>& a,
                                                      const std::vector<unsigned>& b) {
    std::vector<unsigned> r(obj.factors());
    for (std::size_t i = 0; i < obj.factors(); ++i) {
        if (a[i] != 0 && b[i] != 0) return std::nullopt;
        r[i] = a[i] + b[i];
    }
    return r;
}

struct WeilElement {
    WeilObject parent;
    std::map<std::vector<unsigned>, Nat> coeffs; // no zero coefficients stored

    static WeilElement zero(const WeilObject& obj) { return {obj, {}}; }

    static WeilElement unit(const WeilObject& obj) {
        return basis(obj, std::vector<unsigned>(obj.factors(), 0));
    }

    static WeilElement basis(const WeilObject& obj, std::vector<unsigned> t) {
        WeilElement e{obj, {}};
        e.coeffs.emplace(std::move(t), 1);
        return e;
    }

    void add_term(const std::vector<unsigned>& t, Nat c) {
        if (c == 0) return;
        auto [it, fresh] = coeffs.emplace(t, c);
        if (!fresh) it->second += c;
    }

    friend WeilElement operator+(const WeilElement& a, const WeilElement& b) {
        WeilElement r = a;
        for (const auto& [t, c] : b.coeffs) r.add_term(t, c);
        return r;
    }

    friend WeilElement operator*(const WeilElement& a, const WeilElement& b) {
        WeilElement r{a.parent, {}};
        for (const auto& [ta, ca] : a.coeffs)
            for (const auto& [tb, cb] : b.coeffs)
                if (auto t = mul_basis(a.parent, ta, tb)) r.add_term(*t, ca * cb);
        return r;
    }

    friend WeilElement operator*(Nat k, const WeilElement& e) {
        WeilElement r{e.parent, {}};
        if (k != 0)
            for (const auto& [t, c] : e.coeffs) r.coeffs.emplace(t, k * c);
        return r;
    }

    friend bool operator==(const WeilElement& a, const WeilElement& b) {
        return a.parent == b.parent && a.coeffs == b.coeffs;
    }

    std::string str() const {
        if (coeffs.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [t, c] : coeffs) {
            if (!first) os << " + ";
            first = false;
            bool any = false;
            std::ostringstream mono;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (t[i] == 0) continue;
                if (any) mono << "*";
                any = true;
                if (parent.widths[i] == 1) mono << "e" << i;
                else mono << "x" << i << "." << t[i];
            }
            if (!any) os << c;
            else if (c == 1) os << mono.str();
            else os << c << "*" << mono.str();
        }
        return os.str();
    }
};

// A rig homomorphism, stored as the image of every generator of every source
// factor. Morphisms are compared by their generator images, which determines
// them on the whole rig.
struct WeilMorphism {
    WeilObject source, target;
    std::vector<std::vector<WeilElement>> images; // images[factor][generator-1]

    const WeilElement& image(std::size_t factor, unsigned gen) const {
        return images.at(factor).at(gen - 1);
    }

    WeilElement apply_basis(const std::vector<unsigned>& t) const {
        WeilElement r = WeilElement::unit(target);
        for (std::size_t i = 0; i < t.size(); ++i)
            if (t[i] != 0) r = r * image(i, t[i]);
        return r;
    }

    WeilElement apply(const WeilElement& e) const {
        if (!(e.parent == source)) throw std::invalid_argument("WeilMorphism::apply: wrong parent");
        WeilElement r = WeilElement::zero(target);
        for (const auto& [t, c] : e.coeffs) r = r + c * apply_basis(t);
        return r;
    }

    friend bool operator==(const WeilMorphism& a, const WeilMorphism& b) {
        return a.source == b.source && a.target == b.target && a.images == b.images;
    }

    std::string str() const {
        std::ostringstream os;
        os << source.str() << " -> " << target.str() << " [";
        bool first = true;
        for (std::size_t i = 0; i < images.size(); ++i)
            for (std::size_t j = 0; j < images[i].size(); ++j) {
                if (!first) os << ", ";
                first = false;
                os << "g" << i << "." << (j + 1) << " |-> " << images[i][j].str();
            }
        os << "]";
        return os.str();
    }
};

inline WeilMorphism make_morphism(WeilObject src, WeilObject tgt,
                                  std::vector<std::vector<WeilElement>> images) {
    if (images.size() != src.factors())
        throw std::invalid_argument("WeilMorphism: one image list per source factor");
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i].size() != src.widths[i])
            throw std::invalid_argument("WeilMorphism: one image per generator");
        for (const auto& e : images[i])
            if (!(e.parent == tgt)) throw std::invalid_argument("WeilMorphism: image parent");
        // nilpotency within a factor must be respected, squares included
        for (const auto& a : images[i])
            for (const auto& b : images[i])
                if (!((a * b) == WeilElement::zero(tgt)))
                    throw std::invalid_argument(
                        "WeilMorphism: generator images violate nilpotency");
    }
    return WeilMorphism{std::move(src), std::move(tgt), std::move(images)};
}

inline WeilMorphism weil_identity(const WeilObject& obj) {
    std::vector<std::vector<WeilElement>> images(obj.factors());
    for (std::size_t i = 0; i < obj.factors(); ++i)
        for (unsigned j = 1; j <= obj.widths[i]; ++j) {
            std::vector<unsigned> t(obj.factors(), 0);
            t[i] = j;
            images[i].push_back(WeilElement::basis(obj, std::move(t)));
        }
    return WeilMorphism{obj, obj, std::move(images)};
}

// g after f.
inline WeilMorphism compose(const WeilMorphism& g, const WeilMorphism& f) {
    if (!(f.target == g.source)) throw std::invalid_argument("Weil compose: object mismatch");
    std::vector<std::vector<WeilElement>> images(f.source.factors());
    for (std::size_t i = 0; i < f.source.factors(); ++i)
        for (unsigned j = 1; j <= f.source.widths[i]; ++j)
            images[i].push_back(g.apply(f.image(i, j)));
    return WeilMorphism{f.source, g.target, std::move(images)};
}

namespace detail {

inline WeilElement embed_element(const WeilElement& e, const WeilObject& into,
                                 std::size_t factor_shift) {
    WeilElement r{into, {}};
    for (const auto& [t, c] : e.coeffs) {
        std::vector<unsigned> n(into.factors(), 0);
        for (std::size_t i = 0; i < t.size(); ++i) n[i + factor_shift] = t[i];
        r.coeffs.emplace(std::move(n), c);
    }
    return r;
}

} // namespace detail

inline WeilMorphism tensor_mor(const WeilMorphism& f, const WeilMorphism& g) {
    WeilObject src = tensor_obj(f.source, g.source);
    WeilObject tgt = tensor_obj(f.target, g.target);
    std::vector<std::vector<WeilElement>> images;
    for (const auto& fac : f.images) {
        images.emplace_back();
        for (const auto& e : fac) images.back().push_back(detail::embed_element(e, tgt, 0));
    }
    for (const auto& fac : g.images) {
        images.emplace_back();
        for (const auto& e : fac)
            images.back().push_back(detail::embed_element(e, tgt, f.target.factors()));
    }
    return WeilMorphism{std::move(src), std::move(tgt), std::move(images)};
}

// ---------------------------------------------------------------------------
// Generator morphisms
// ---------------------------------------------------------------------------

// p : W -> N   the augmentation, p(a + b e) = a
// z : N -> W   the inclusion
// s : W_2 -> W the sum, s(x_1) = e = s(x_2)
// l : W -> W(x)W   e |-> e(x)e
// c : W(x)W -> W(x)W  the symmetry of the tensor product
inline WeilMorphism generator(const std::string& name) {
    const WeilObject N = weil_unit();
    const WeilObject W = weil_W();
    const WeilObject WW = tensor_obj(W, W);
    if (name == "p") return make_morphism(W, N, {{WeilElement::zero(N)}});
    if (name == "z") return make_morphism(N, W, {});
    if (name == "s") {
        WeilElement eps = WeilElement::basis(W, {1});
        return make_morphism(make_object({2}), W, {{eps, eps}});
    }
    if (name == "l") return make_morphism(W, WW, {{WeilElement::basis(WW, {1, 1})}});
    if (name == "c")
        return make_morphism(WW, WW,
                             {{WeilElement::basis(WW, {0, 1})}, {WeilElement::basis(WW, {1, 0})}});
    throw std::invalid_argument("unknown Weil generator: " + name);
}

// pi_k : W_n -> W, the k-th pullback projection (1-based).
inline WeilMorphism weil_power_proj(unsigned n, unsigned k) {
    if (k < 1 || k > n) throw std::out_of_range("weil_power_proj index");
    const WeilObject W = weil_W();
    std::vector<WeilElement> images;
    for (unsigned j = 1; j <= n; ++j)
        images.push_back(j == k ? WeilElement::basis(W, {1}) : WeilElement::zero(W));
    return WeilMorphism{make_object({n}), W, {std::move(images)}};
}

// ---------------------------------------------------------------------------
// The generator relation suite
// ---------------------------------------------------------------------------

namespace detail {

inline void weil_diagram(Report& rep, std::string id, const WeilMorphism& lhs,
                         const WeilMorphism& rhs) {
    bool ok = lhs == rhs;
    rep.add(std::move(id), "", ok, ok ? "" : "lhs = " + lhs.str() + "; rhs = " + rhs.str());
}

} // namespace detail

// Every diagram of the tangent structure axioms, translated to Weil generator
// relations and checked on basis elements.
inline Report verify_relations() {
    Report rep;
    const WeilObject N = weil_unit();
    const WeilObject W = weil_W();
    const WeilObject W2 = make_object({2});
    const WeilObject W3 = make_object({3});
    const WeilObject WW = tensor_obj(W, W);

    const WeilMorphism p = generator("p"), z = generator("z"), s = generator("s"),
                       l = generator("l"), c = generator("c");
    const WeilMorphism idW = weil_identity(W), idWW = weil_identity(WW);
    const WeilMorphism pi1 = weil_power_proj(2, 1), pi2 = weil_power_proj(2, 2);

    // cone morphisms used by the diagrams, each pinned down by its composites
    // with the projections (verified below)

    // <z.p, id> : W -> W_2
    const WeilMorphism zp_id = make_morphism(W, W2, {{WeilElement::basis(W2, {2})}});
    // the symmetry of W_2
    const WeilMorphism swap2 = make_morphism(
        W2, W2, {{WeilElement::basis(W2, {2}), WeilElement::basis(W2, {1})}});
    // s x id and id x s : W_3 -> W_2
    const WeilMorphism s12 = make_morphism(
        W3, W2,
        {{WeilElement::basis(W2, {1}), WeilElement::basis(W2, {1}), WeilElement::basis(W2, {2})}});
    const WeilMorphism s23 = make_morphism(
        W3, W2,
        {{WeilElement::basis(W2, {1}), WeilElement::basis(W2, {2}), WeilElement::basis(W2, {2})}});
    // <l.pi1, l.pi2> into W (x) W_2
    const WeilObject W_W2 = tensor_obj(W, W2);
    const WeilMorphism l_pair = make_morphism(
        W2, W_W2, {{WeilElement::basis(W_W2, {1, 1}), WeilElement::basis(W_W2, {1, 2})}});
    // the flip pairing W (x) W_2 -> W_2 (x) W
    const WeilObject W2_W = tensor_obj(W2, W);
    const WeilMorphism c_pair = make_morphism(
        W_W2, W2_W,
        {{WeilElement::basis(W2_W, {0, 1})},
         {WeilElement::basis(W2_W, {1, 0}), WeilElement::basis(W2_W, {2, 0})}});

    // cone morphisms satisfy their defining projections
    detail::weil_diagram(rep, "weil/cone/zp-id-pi1", compose(pi1, zp_id), compose(z, p));
    detail::weil_diagram(rep, "weil/cone/zp-id-pi2", compose(pi2, zp_id), idW);
    detail::weil_diagram(rep, "weil/cone/swap-pi1", compose(pi1, swap2), pi2);
    detail::weil_diagram(rep, "weil/cone/swap-pi2", compose(pi2, swap2), pi1);
    detail::weil_diagram(rep, "weil/cone/l-pair-pi1", compose(tensor_mor(idW, pi1), l_pair),
                         compose(l, pi1));
    detail::weil_diagram(rep, "weil/cone/l-pair-pi2", compose(tensor_mor(idW, pi2), l_pair),
                         compose(l, pi2));
    detail::weil_diagram(rep, "weil/cone/c-pair-pi1", compose(tensor_mor(pi1, idW), c_pair),
                         compose(c, tensor_mor(idW, pi1)));
    detail::weil_diagram(rep, "weil/cone/c-pair-pi2", compose(tensor_mor(pi2, idW), c_pair),
                         compose(c, tensor_mor(idW, pi2)));

    // additive bundle of (p, z, s)
    detail::weil_diagram(rep, "weil/p-section", compose(p, z), weil_identity(N));
    detail::weil_diagram(rep, "weil/s-proj-compat", compose(p, s), compose(p, pi1));
    detail::weil_diagram(rep, "weil/s-assoc", compose(s, s12), compose(s, s23));
    detail::weil_diagram(rep, "weil/s-unit", compose(s, zp_id), idW);
    detail::weil_diagram(rep, "weil/s-comm", compose(s, swap2), s);

    // (z, l) : p -> Tp additive bundle morphism
    detail::weil_diagram(rep, "weil/zl-base", compose(tensor_mor(idW, p), l), compose(z, p));
    detail::weil_diagram(rep, "weil/zl-zero", compose(l, z), compose(tensor_mor(idW, z), z));
    detail::weil_diagram(rep, "weil/zl-sum", compose(tensor_mor(idW, s), l_pair), compose(l, s));

    // (id, c) : Tp -> p_T additive bundle morphism
    detail::weil_diagram(rep, "weil/idc-base", compose(tensor_mor(p, idW), c),
                         tensor_mor(idW, p));
    detail::weil_diagram(rep, "weil/idc-zero", compose(c, tensor_mor(idW, z)),
                         tensor_mor(z, idW));
    detail::weil_diagram(rep, "weil/idc-sum", compose(c, tensor_mor(idW, s)),
                         compose(tensor_mor(s, idW), c_pair));

    // coherence of l and c
    detail::weil_diagram(rep, "weil/l-coassoc", compose(tensor_mor(idW, l), l),
                         compose(tensor_mor(l, idW), l));
    detail::weil_diagram(rep, "weil/cl-fix", compose(c, l), l);
    detail::weil_diagram(rep, "weil/lc-exchange",
                         compose(tensor_mor(c, idW),
                                 compose(tensor_mor(idW, c), tensor_mor(l, idW))),
                         compose(tensor_mor(idW, l), c));
    detail::weil_diagram(rep, "weil/c-involution", compose(c, c), idWW);
    {
        const WeilMorphism cW = tensor_mor(c, idW);
        const WeilMorphism Wc = tensor_mor(idW, c);
        detail::weil_diagram(rep, "weil/c-braid", compose(Wc, compose(cW, Wc)),
                             compose(cW, compose(Wc, cW)));
    }

    return rep;
}

// Rig homomorphism property of a morphism, checked on the finite basis:
// multiplicativity on all basis pairs, unit preservation (additivity holds by
// construction of apply).
inline Report check_rig_hom(const WeilMorphism& f, const std::string& label) {
    Report rep;
    const auto n = f.source.basis_size();
    bool mult_ok = true;
    std::string witness;
    for (std::size_t i = 0; i < n && mult_ok; ++i)
        for (std::size_t j = 0; j < n && mult_ok; ++j) {
            auto a = f.source.basis_tuple(i), b = f.source.basis_tuple(j);
            WeilElement lhs;
            if (auto ab = mul_basis(f.source, a, b))
                lhs = f.apply_basis(*ab);
            else
                lhs = WeilElement::zero(f.target);
            WeilElement rhs = f.apply_basis(a) * f.apply_basis(b);
            if (!(lhs == rhs)) {
                mult_ok = false;
                witness = "basis " + std::to_string(i) + "," + std::to_string(j) + ": lhs = " +
                          lhs.str() + "; rhs = " + rhs.str();
            }
        }
    rep.add("weil/hom-mult", label, mult_ok, witness);
    bool unit_ok = f.apply(WeilElement::unit(f.source)) == WeilElement::unit(f.target);
    rep.add("weil/hom-unit", label, unit_ok, "");
    return rep;
}

// ---------------------------------------------------------------------------
// Fundamental pullback probes
// ---------------------------------------------------------------------------

namespace detail {

// N-linear view of a Weil morphism: matrix over the naturals acting on basis
// coordinate vectors.
struct LinMap {
    std::size_t rows = 0, cols = 0;
    std::vector<Nat> m; // row-major

    Nat at(std::size_t r, std::size_t c) const { return m[r * cols + c]; }

    std::vector<Nat> apply(const std::vector<Nat>& x) const {
        std::vector<Nat> y(rows, 0);
        for (std::size_t c = 0; c < cols; ++c) {
            if (x[c] == 0) continue;
            for (std::size_t r = 0; r < rows; ++r) y[r] += at(r, c) * x[c];
        }
        return y;
    }
};

inline LinMap linearize(const WeilMorphism& f) {
    LinMap lm;
    lm.rows = f.target.basis_size();
    lm.cols = f.source.basis_size();
    lm.m.assign(lm.rows * lm.cols, 0);
    for (std::size_t c = 0; c < lm.cols; ++c) {
        WeilElement e = f.apply_basis(f.source.basis_tuple(c));
        for (const auto& [t, k] : e.coeffs) lm.m[f.target.basis_index(t) * lm.cols + c] += k;
    }
    return lm;
}

struct PullbackSquare {
    std::string id;
    WeilObject apex;                    // the claimed limit object
    std::vector<WeilMorphism> legs;     // apex -> cone targets
    std::vector<WeilMorphism> closures; // cone compatibility maps, one per leg
    // compat: closures[i] . legs[i] must agree for all i (the cone condition)
};

// Column structure of an N-linear map whose columns are basis-to-basis:
// col_row[c] is the row hit by column c, or npos when the column is zero.
struct BasisMap {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t rows = 0, cols = 0;
    std::vector<std::size_t> col_row;
    std::vector<std::size_t> row_col; // inverse; npos when the row is not hit
    bool valid = true;                // entries in {0,1}, one per column/row

    static BasisMap build(const LinMap& L) {
        BasisMap b;
        b.rows = L.rows;
        b.cols = L.cols;
        b.col_row.assign(L.cols, npos);
        b.row_col.assign(L.rows, npos);
        for (std::size_t c = 0; c < L.cols; ++c)
            for (std::size_t r = 0; r < L.rows; ++r) {
                Nat v = L.at(r, c);
                if (v == 0) continue;
                if (v != 1 || b.col_row[c] != npos || b.row_col[r] != npos) b.valid = false;
                b.col_row[c] = r;
                b.row_col[r] = c;
            }
        return b;
    }

    // Scatter-apply into out (size rows).
    void apply(const std::vector<Nat>& x, std::vector<Nat>& out) const {
        std::fill(out.begin(), out.end(), Nat(0));
        for (std::size_t c = 0; c < cols; ++c)
            if (col_row[c] != npos) out[col_row[c]] = x[c];
    }
};

// Exhaustively enumerates cone tuples with coefficients <= bound and checks
// that exactly one bounded factorization through the apex exists. The legs
// and closures are verified to send basis elements to basis elements or
// zero; apex coordinates are then pinned through the legs, so a pinned
// coordinate admits one value at any height, and unpinned coordinates fall
// back to enumeration up to the bound.
inline void probe_square(Report& rep, const PullbackSquare& sq, Nat bound) {
    const std::size_t nlegs = sq.legs.size();
    std::vector<BasisMap> legs, closures;
    for (const auto& f : sq.legs) legs.push_back(BasisMap::build(linearize(f)));
    for (const auto& f : sq.closures) closures.push_back(BasisMap::build(linearize(f)));

    // commutativity: all closure . leg composites agree as morphisms
    {
        bool ok = true;
        std::string witness;
        WeilMorphism ref = compose(sq.closures[0], sq.legs[0]);
        for (std::size_t i = 1; i < nlegs && ok; ++i) {
            if (!(compose(sq.closures[i], sq.legs[i]) == ref)) {
                ok = false;
                witness = "closure composite " + std::to_string(i) + " differs";
            }
        }
        rep.add("weil/pullback-commutes/" + sq.id, "", ok, witness);
    }

    bool structure_ok = true;
    for (const auto& b : legs) structure_ok = structure_ok && b.valid;
    for (const auto& b : closures) structure_ok = structure_ok && b.valid;
    rep.add("weil/pullback-structure/" + sq.id, "", structure_ok,
            structure_ok ? "" : "a leg or closure is not basis-to-basis");
    if (!structure_ok) return;

    const std::size_t apex_dim = sq.apex.basis_size();

    // pinning: apex coordinate c is read off leg i at the row its column hits
    struct Pin {
        std::size_t leg, row;
    };
    std::vector<std::optional<Pin>> pin(apex_dim);
    for (std::size_t i = 0; i < nlegs; ++i)
        for (std::size_t c = 0; c < apex_dim; ++c)
            if (!pin[c] && legs[i].col_row[c] != BasisMap::npos)
                pin[c] = Pin{i, legs[i].col_row[c]};
    std::vector<std::size_t> unpinned;
    for (std::size_t c = 0; c < apex_dim; ++c)
        if (!pin[c]) unpinned.push_back(c);

    std::vector<std::size_t> dims;
    for (const auto& L : legs) dims.push_back(L.rows);
    const std::size_t ref_dim = closures[0].rows;

    std::vector<std::vector<Nat>> cone(nlegs);
    for (std::size_t i = 0; i < nlegs; ++i) cone[i].assign(dims[i], 0);
    std::vector<Nat> ref(ref_dim, 0);

    // free coordinates of components >= 1: killed by their closure
    std::vector<std::pair<std::size_t, std::size_t>> free_coords; // (component, coord)
    for (std::size_t i = 1; i < nlegs; ++i)
        for (std::size_t c = 0; c < dims[i]; ++c)
            if (closures[i].col_row[c] == BasisMap::npos) free_coords.emplace_back(i, c);

    std::uint64_t cones_checked = 0, failures = 0;
    std::string witness;
    std::vector<Nat> w(apex_dim, 0), image(0);
    std::vector<Nat> uvals(unpinned.size(), 0), fvals(free_coords.size(), 0);

    auto record_failure = [&](std::size_t solutions) {
        if (failures++ != 0) return;
        std::ostringstream os;
        os << "cone (";
        for (std::size_t i = 0; i < nlegs; ++i) {
            if (i) os << " | ";
            for (std::size_t r = 0; r < dims[i]; ++r) os << (r ? "," : "") << cone[i][r];
        }
        os << ") has " << solutions << " bounded factorizations";
        witness = os.str();
    };

    auto check_cone = [&]() {
        ++cones_checked;
        for (std::size_t c = 0; c < apex_dim; ++c)
            w[c] = pin[c] ? cone[pin[c]->leg][pin[c]->row] : 0;
        auto matches = [&]() {
            for (std::size_t i = 0; i < nlegs; ++i) {
                image.assign(dims[i], 0);
                legs[i].apply(w, image);
                if (image != cone[i]) return false;
            }
            return true;
        };
        std::size_t solutions = 0;
        std::fill(uvals.begin(), uvals.end(), Nat(0));
        while (true) {
            for (std::size_t k = 0; k < unpinned.size(); ++k) w[unpinned[k]] = uvals[k];
            if (matches()) ++solutions;
            std::size_t k = 0;
            for (; k < uvals.size(); ++k) {
                if (uvals[k] < bound) {
                    ++uvals[k];
                    break;
                }
                uvals[k] = 0;
            }
            if (k == uvals.size()) break;
        }
        if (solutions != 1) record_failure(solutions);
    };

    // enumerate the first component freely; the others are forced by the
    // closure compatibility up to their free coordinates
    std::vector<Nat> base(dims[0], 0);
    while (true) {
        cone[0] = base;
        closures[0].apply(cone[0], ref);
        bool extendable = true;
        for (std::size_t i = 1; i < nlegs && extendable; ++i) {
            for (std::size_t c = 0; c < dims[i]; ++c) {
                std::size_t r = closures[i].col_row[c];
                cone[i][c] = (r == BasisMap::npos) ? 0 : ref[r];
            }
            // rows of ref the closure cannot reach must vanish
            for (std::size_t r = 0; r < ref_dim && extendable; ++r)
                if (closures[i].row_col[r] == BasisMap::npos && ref[r] != 0) extendable = false;
        }
        if (extendable) {
            std::fill(fvals.begin(), fvals.end(), Nat(0));
            while (true) {
                for (std::size_t k = 0; k < free_coords.size(); ++k)
                    cone[free_coords[k].first][free_coords[k].second] = fvals[k];
                check_cone();
                std::size_t k = 0;
                for (; k < fvals.size(); ++k) {
                    if (fvals[k] < bound) {
                        ++fvals[k];
                        break;
                    }
                    fvals[k] = 0;
                }
                if (k == fvals.size()) break;
            }
        }
        std::size_t k = 0;
        for (; k < base.size(); ++k) {
            if (base[k] < bound) {
                ++base[k];
                break;
            }
            base[k] = 0;
        }
        if (k == base.size()) break;
    }

    std::ostringstream note;
    note << cones_checked << " cones";
    rep.add("weil/pullback-universal/" + sq.id, note.str(), failures == 0, witness);
}

} // namespace detail

// Tensor a morphism with W^{(x)t} on the left.
inline WeilMorphism tensor_power_left(const WeilMorphism& f, unsigned t) {
    WeilMorphism r = f;
    for (unsigned i = 0; i < t; ++i) r = tensor_mor(weil_identity(weil_W()), r);
    return r;
}

// Probes the two fundamental pullback squares, tensored on the left by
// W^{(x)t} for several t, exhaustively over cone elements with coefficients
// bounded by `height_bound`.
inline Report probe_fundamental_pullbacks(Nat height_bound) {
    Report rep;
    const WeilObject W = weil_W();
    const WeilMorphism p = generator("p"), z = generator("z"), s = generator("s"),
                       l = generator("l");

    // n-fold pullback of p along itself
    auto power_square = [&](unsigned n, unsigned t) {
        detail::PullbackSquare sq;
        sq.id = "power-n" + std::to_string(n) + "-t" + std::to_string(t);
        WeilObject apex = make_object({n});
        for (unsigned i = 0; i < t; ++i) apex = tensor_obj(W, apex);
        sq.apex = apex;
        for (unsigned k = 1; k <= n; ++k) {
            sq.legs.push_back(tensor_power_left(weil_power_proj(n, k), t));
            sq.closures.push_back(tensor_power_left(p, t));
        }
        return sq;
    };

    // the universality square of the vertical lift:
    //   W_2 --< l.pi1, (z (x) W).pi2 >--> W (x) W_2 --W (x) s--> W (x) W
    //   with closures W (x) p and z . (p . pi1)
    auto lift_square = [&](unsigned t) {
        detail::PullbackSquare sq;
        sq.id = "lift-t" + std::to_string(t);
        const WeilObject W2 = make_object({2});
        WeilObject apex = W2;
        for (unsigned i = 0; i < t; ++i) apex = tensor_obj(W, apex);

        const WeilObject W_W2 = tensor_obj(W, W2);
        // x1 |-> e (x) x1, x2 |-> 1 (x) x2 (pinned by the projections, see
        // the cone checks in verify_relations)
        const WeilMorphism pair = make_morphism(
            W2, W_W2, {{WeilElement::basis(W_W2, {1, 1}), WeilElement::basis(W_W2, {0, 2})}});
        const WeilMorphism top = compose(tensor_mor(weil_identity(W), s), pair);
        const WeilMorphism left = compose(p, weil_power_proj(2, 1));

        sq.apex = apex;
        sq.legs.push_back(tensor_power_left(top, t));
        sq.closures.push_back(tensor_power_left(tensor_mor(weil_identity(W), p), t));
        // second leg: down to N (tensored), closed by z (tensored)
        sq.legs.push_back(tensor_power_left(left, t));
        sq.closures.push_back(tensor_power_left(z, t));
        return sq;
    };

    for (auto [n, t] : std::vector<std::pair<unsigned, unsigned>>{{2, 0}, {2, 1}, {2, 2}, {3, 0}})
        detail::probe_square(rep, power_square(n, t), height_bound);
    for (unsigned t : {0u, 1u}) detail::probe_square(rep, lift_square(t), height_bound);

    return rep;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline nlohmann::json weil_object_to_json(const WeilObject& o) {
    return nlohmann::json{{"widths", o.widths}};
}

inline WeilObject weil_object_from_json(const nlohmann::json& j) {
    return make_object(j.at("widths").get<std::vector<unsigned>>());
}

inline nlohmann::json weil_element_to_json(const WeilElement& e) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [t, c] : e.coeffs) terms.push_back({t, c});
    return {{"parent", weil_object_to_json(e.parent)}, {"terms", terms}};
}

inline WeilElement weil_element_from_json(const nlohmann::json& j) {
    WeilElement e{weil_object_from_json(j.at("parent")), {}};
    for (const auto& t : j.at("terms"))
        e.add_term(t.at(0).get<std::vector<unsigned>>(), t.at(1).get<Nat>());
    return e;
}

inline nlohmann::json weil_morphism_to_json(const WeilMorphism& f) {
    nlohmann::json images = nlohmann::json::array();
    for (const auto& fac : f.images) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& e : fac) row.push_back(weil_element_to_json(e));
        images.push_back(row);
    }
    return {{"source", weil_object_to_json(f.source)},
            {"target", weil_object_to_json(f.target)},
            {"images", images}};
}

inline WeilMorphism weil_morphism_from_json(const nlohmann::json& j) {
    WeilObject src = weil_object_from_json(j.at("source"));
    WeilObject tgt = weil_object_from_json(j.at("target"));
    std::vector<std::vector<WeilElement>> images;
    for (const auto& row : j.at("images")) {
        images.emplace_back();
        for (const auto& e : row) images.back().push_back(weil_element_from_json(e));
    }
    return make_morphism(std::move(src), std::move(tgt), std::move(images));
}

} // namespace tangentad
