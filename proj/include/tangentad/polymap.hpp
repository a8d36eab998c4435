#pragma once

// Polynomial maps between affine spaces Q^m -> Q^n and the symbolic
// dual-number tangent structure on them.
//
// Coordinate conventions, fixed once:
//   T M    = Q^{2m}      (x, v)
//   T^2 M  = Q^{4m}      (x, a, b, q)  encoding x + e1*a + e2*b + e1*e2*q,
//                        with e1 the inner tangent: T^2 = T applied to (x, a)
//   T_n M  = Q^{(n+1)m}  (x, v_1, ..., v_n)

#include "tangentad/errors.hpp"
#include "tangentad/poly.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tangentad {

struct PolyMap {
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    std::vector<Poly> components; // target_dim polys in source_dim variables

    PolyMap() = default;
    PolyMap(std::size_t src, std::vector<Poly> comps)
        : source_dim(src), target_dim(comps.size()), components(std::move(comps)) {
        for (const auto& p : components)
            if (p.nvars() != source_dim) throw std::invalid_argument("PolyMap component arity");
    }

    static PolyMap identity(std::size_t m) {
        std::vector<Poly> comps;
        comps.reserve(m);
        for (std::size_t i = 0; i < m; ++i) comps.push_back(Poly::variable(m, i));
        return PolyMap(m, std::move(comps));
    }

    std::vector<Rat> eval(const std::vector<Rat>& x) const {
        std::vector<Rat> y;
        y.reserve(target_dim);
        for (const auto& p : components) y.push_back(p.eval(x));
        return y;
    }

    std::vector<double> eval_double(const std::vector<double>& x) const {
        std::vector<double> y;
        y.reserve(target_dim);
        for (const auto& p : components) y.push_back(p.eval_double(x));
        return y;
    }

    friend bool operator==(const PolyMap& a, const PolyMap& b) {
        return a.source_dim == b.source_dim && a.components == b.components;
    }
    friend bool operator!=(const PolyMap& a, const PolyMap& b) { return !(a == b); }

    std::string str() const {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < components.size(); ++i)
            os << (i ? ", " : "") << components[i].str();
        os << ")";
        return os.str();
    }
};

// g after f.
inline PolyMap compose(const PolyMap& g, const PolyMap& f) {
    if (f.target_dim != g.source_dim)
        throw std::invalid_argument("compose: dimension mismatch");
    std::vector<Poly> comps;
    comps.reserve(g.target_dim);
    for (const auto& p : g.components) comps.push_back(p.substituted(f.components));
    return PolyMap(f.source_dim, std::move(comps));
}

// (x, v) |-> (f(x), Jf(x) v); applying it twice gives the T^2 coordinates.
inline PolyMap tangent_map(const PolyMap& f) {
    const std::size_t m = f.source_dim;
    std::vector<Poly> comps;
    comps.reserve(2 * f.target_dim);
    for (const auto& p : f.components) comps.push_back(p.embedded(2 * m, 0));
    for (const auto& p : f.components) {
        Poly d(2 * m);
        for (std::size_t i = 0; i < m; ++i)
            d += p.derivative(i).embedded(2 * m, 0) * Poly::variable(2 * m, m + i);
        comps.push_back(std::move(d));
    }
    return PolyMap(2 * m, std::move(comps));
}

namespace poly_structural {

inline PolyMap proj(std::size_t m) { // p : TM -> M
    std::vector<Poly> c;
    for (std::size_t i = 0; i < m; ++i) c.push_back(Poly::variable(2 * m, i));
    return PolyMap(2 * m, std::move(c));
}

inline PolyMap zero(std::size_t m) { // z : M -> TM
    std::vector<Poly> c;
    for (std::size_t i = 0; i < m; ++i) c.push_back(Poly::variable(m, i));
    for (std::size_t i = 0; i < m; ++i) c.push_back(Poly(m));
    return PolyMap(m, std::move(c));
}

inline PolyMap sum(std::size_t m) { // s : T_2 M -> TM, (x,v,w) |-> (x, v+w)
    std::vector<Poly> c;
    for (std::size_t i = 0; i < m; ++i) c.push_back(Poly::variable(3 * m, i));
    for (std::size_t i = 0; i < m; ++i)
        c.push_back(Poly::variable(3 * m, m + i) + Poly::variable(3 * m, 2 * m + i));
    return PolyMap(3 * m, std::move(c));
}

inline PolyMap lift(std::size_t m) { // l : TM -> T^2 M, (x,v) |-> (x,0,0,v)
    std::vector<Poly> c;
    for (std::size_t i = 0; i < m; ++i) c.push_back(Poly::variable(2 * m, i));
    for (std::size_t i = 0; i < 2 * m; ++i) c.push_back(Poly(2 * m));
    for (std::size_t i = 0; i < m; ++i) c.push_back(Poly::variable(2 * m, m + i));
    return PolyMap(2 * m, std::move(c));
}

inline PolyMap flip(std::size_t m) { // c : T^2 M -> T^2 M, (x,a,b,q) |-> (x,b,a,q)
    std::vector<Poly> c;
    for (std::size_t i = 0; i < m; ++i) c.push_back(Poly::variable(4 * m, i));
    for (std::size_t i = 0; i < m; ++i) c.push_back(Poly::variable(4 * m, 2 * m + i));
    for (std::size_t i = 0; i < m; ++i) c.push_back(Poly::variable(4 * m, m + i));
    for (std::size_t i = 0; i < m; ++i) c.push_back(Poly::variable(4 * m, 3 * m + i));
    return PolyMap(4 * m, std::move(c));
}

inline PolyMap negate(std::size_t m) { // n : TM -> TM, (x,v) |-> (x,-v)
    std::vector<Poly> c;
    for (std::size_t i = 0; i < m; ++i) c.push_back(Poly::variable(2 * m, i));
    for (std::size_t i = 0; i < m; ++i) c.push_back(-Poly::variable(2 * m, m + i));
    return PolyMap(2 * m, std::move(c));
}

} // namespace poly_structural

// Name-based access to the structural morphisms at an object.
inline PolyMap structural(const std::string& name, std::size_t m) {
    if (name == "p") return poly_structural::proj(m);
    if (name == "z") return poly_structural::zero(m);
    if (name == "s") return poly_structural::sum(m);
    if (name == "l") return poly_structural::lift(m);
    if (name == "c") return poly_structural::flip(m);
    if (name == "n") return poly_structural::negate(m);
    throw std::invalid_argument("unknown structural morphism: " + name);
}

// pi_k : T_n M -> TM, (x, v_1..v_n) |-> (x, v_k) with 1-based k.
inline PolyMap poly_power_proj(std::size_t m, std::size_t n, std::size_t k) {
    if (k < 1 || k > n) throw std::out_of_range("poly_power_proj index");
    const std::size_t d = (n + 1) * m;
    std::vector<Poly> c;
    for (std::size_t i = 0; i < m; ++i) c.push_back(Poly::variable(d, i));
    for (std::size_t i = 0; i < m; ++i) c.push_back(Poly::variable(d, k * m + i));
    return PolyMap(d, std::move(c));
}

// Tuple K -> T^t(T_n M) of maps f_k : K -> T^t(TM) that agree under T^t p.
// T^t of an object is 2^t coordinate blocks; assembly is per block.
inline PolyMap poly_power_tuple(std::size_t m, unsigned t, const std::vector<PolyMap>& fs) {
    if (fs.empty()) throw std::invalid_argument("poly_power_tuple: empty family");
    const std::size_t n = fs.size();
    const std::size_t blocks = std::size_t(1) << t;
    const std::size_t src = fs.front().source_dim;
    for (const auto& f : fs) {
        if (f.source_dim != src || f.target_dim != blocks * 2 * m)
            throw std::invalid_argument("poly_power_tuple: shape mismatch");
    }
    for (std::size_t b = 0; b < blocks; ++b)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 1; k < n; ++k)
                if (fs[k].components[b * 2 * m + i] != fs[0].components[b * 2 * m + i])
                    throw ConeError("poly_power_tuple: maps disagree on the base");
    std::vector<Poly> comps;
    comps.reserve(blocks * (n + 1) * m);
    for (std::size_t b = 0; b < blocks; ++b) {
        for (std::size_t i = 0; i < m; ++i) comps.push_back(fs[0].components[b * 2 * m + i]);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < m; ++i)
                comps.push_back(fs[k].components[b * 2 * m + m + i]);
    }
    return PolyMap(src, std::move(comps));
}

struct LiftSolveError : std::runtime_error {
    Poly witness;
    LiftSolveError(std::string msg, Poly w)
        : std::runtime_error(std::move(msg)), witness(std::move(w)) {}
};

// {h} for h : K -> T^2 M whose e2 block vanishes: the unique map K -> TM
// through which h factors across the vertical lift. Returns (base of p_T h,
// e1*e2 block of h).
inline PolyMap poly_lift_solve(std::size_t m, const PolyMap& h) {
    if (h.target_dim != 4 * m) throw std::invalid_argument("poly_lift_solve: not a map into T^2");
    for (std::size_t i = 0; i < m; ++i) {
        const Poly& b = h.components[2 * m + i];
        if (!b.is_zero())
            throw LiftSolveError("lift_solve: nonzero e2 block in component " + std::to_string(i),
                                 b);
    }
    std::vector<Poly> comps;
    comps.reserve(2 * m);
    for (std::size_t i = 0; i < m; ++i) comps.push_back(h.components[i]);
    for (std::size_t i = 0; i < m; ++i) comps.push_back(h.components[3 * m + i]);
    return PolyMap(h.source_dim, std::move(comps));
}

} // namespace tangentad
