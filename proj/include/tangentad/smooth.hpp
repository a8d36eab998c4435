#pragma once

// Floating-point smooth maps as expression DAGs with forward-mode dual-number
// evaluation. The tangent of a map is a DAG transform, so the functor nests;
// nested duals are flat 4-tuples so the canonical flip is literally a
// component transposition.

#include "tangentad/errors.hpp"
#include "tangentad/polymap.hpp"
#include "tangentad/rng.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tangentad {

struct Dual {
    double v = 0, d = 0;
};

inline Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.d + b.d}; }
inline Dual operator-(Dual a, Dual b) { return {a.v - b.v, a.d - b.d}; }
inline Dual operator-(Dual a) { return {-a.v, -a.d}; }
inline Dual operator*(Dual a, Dual b) { return {a.v * b.v, a.v * b.d + a.d * b.v}; }
inline Dual operator/(Dual a, Dual b) {
    return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)};
}
inline Dual sin(Dual a) { return {std::sin(a.v), std::cos(a.v) * a.d}; }
inline Dual cos(Dual a) { return {std::cos(a.v), -std::sin(a.v) * a.d}; }
inline Dual exp(Dual a) {
    double e = std::exp(a.v);
    return {e, e * a.d};
}
inline Dual log(Dual a) { return {std::log(a.v), a.d / a.v}; }

// x + e1 d1 + e2 d2 + e1 e2 d12 with e1^2 = e2^2 = 0.
struct Dual2 {
    double v = 0, d1 = 0, d2 = 0, d12 = 0;
};

inline Dual2 operator+(Dual2 a, Dual2 b) {
    return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2, a.d12 + b.d12};
}
inline Dual2 operator-(Dual2 a, Dual2 b) {
    return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2, a.d12 - b.d12};
}
inline Dual2 operator-(Dual2 a) { return {-a.v, -a.d1, -a.d2, -a.d12}; }
inline Dual2 operator*(Dual2 a, Dual2 b) {
    return {a.v * b.v, a.v * b.d1 + a.d1 * b.v, a.v * b.d2 + a.d2 * b.v,
            a.v * b.d12 + a.d1 * b.d2 + a.d2 * b.d1 + a.d12 * b.v};
}
inline Dual2 operator/(Dual2 a, Dual2 b) {
    double w = b.v, w2 = w * w, w3 = w2 * w;
    Dual2 inv{1.0 / w, -b.d1 / w2, -b.d2 / w2, -b.d12 / w2 + 2 * b.d1 * b.d2 / w3};
    return a * inv;
}
inline Dual2 sin(Dual2 a) {
    double s = std::sin(a.v), c = std::cos(a.v);
    return {s, c * a.d1, c * a.d2, c * a.d12 - s * a.d1 * a.d2};
}
inline Dual2 cos(Dual2 a) {
    double s = std::sin(a.v), c = std::cos(a.v);
    return {c, -s * a.d1, -s * a.d2, -s * a.d12 - c * a.d1 * a.d2};
}
inline Dual2 exp(Dual2 a) {
    double e = std::exp(a.v);
    return {e, e * a.d1, e * a.d2, e * (a.d12 + a.d1 * a.d2)};
}
inline Dual2 log(Dual2 a) {
    double w = a.v;
    return {std::log(w), a.d1 / w, a.d2 / w, a.d12 / w - a.d1 * a.d2 / (w * w)};
}

// ---------------------------------------------------------------------------

struct SmoothMap {
    enum class Op : std::uint8_t { var, cnst, add, sub, mul, div, neg, sin, cos, exp, log };

    struct Node {
        Op op = Op::cnst;
        std::size_t a = 0, b = 0; // operand node indices
        double value = 0;         // cnst payload
        std::size_t var = 0;      // var payload
    };

    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    std::vector<Node> nodes;
    std::vector<std::size_t> outputs;

    template <class S>
    std::vector<S> eval_with(std::span<const S> in) const {
        using std::cos, std::exp, std::log, std::sin;
        if (in.size() != source_dim) throw std::invalid_argument("SmoothMap eval arity");
        std::vector<S> val(nodes.size());
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const Node& n = nodes[i];
            switch (n.op) {
                case Op::var: val[i] = in[n.var]; break;
                case Op::cnst: val[i] = S{} + n.value; break;
                case Op::add: val[i] = val[n.a] + val[n.b]; break;
                case Op::sub: val[i] = val[n.a] - val[n.b]; break;
                case Op::mul: val[i] = val[n.a] * val[n.b]; break;
                case Op::div: val[i] = val[n.a] / val[n.b]; break;
                case Op::neg: val[i] = -val[n.a]; break;
                case Op::sin: val[i] = sin(val[n.a]); break;
                case Op::cos: val[i] = cos(val[n.a]); break;
                case Op::exp: val[i] = exp(val[n.a]); break;
                case Op::log: val[i] = log(val[n.a]); break;
            }
        }
        std::vector<S> out;
        out.reserve(target_dim);
        for (std::size_t o : outputs) out.push_back(val[o]);
        return out;
    }

    std::vector<double> eval(const std::vector<double>& x) const {
        return eval_with<double>(std::span<const double>(x));
    }
};

inline Dual operator+(Dual a, double b) { return {a.v + b, a.d}; }
inline Dual2 operator+(Dual2 a, double b) { return {a.v + b, a.d1, a.d2, a.d12}; }

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

class SmoothBuilder {
public:
    explicit SmoothBuilder(std::size_t source_dim) { map_.source_dim = source_dim; }

    std::size_t var(std::size_t i) {
        if (i >= map_.source_dim) throw std::out_of_range("SmoothBuilder::var");
        return push({SmoothMap::Op::var, 0, 0, 0, i});
    }
    std::size_t cnst(double v) { return push({SmoothMap::Op::cnst, 0, 0, v, 0}); }
    std::size_t add(std::size_t a, std::size_t b) { return push({SmoothMap::Op::add, a, b, 0, 0}); }
    std::size_t sub(std::size_t a, std::size_t b) { return push({SmoothMap::Op::sub, a, b, 0, 0}); }
    std::size_t mul(std::size_t a, std::size_t b) { return push({SmoothMap::Op::mul, a, b, 0, 0}); }
    std::size_t div(std::size_t a, std::size_t b) { return push({SmoothMap::Op::div, a, b, 0, 0}); }
    std::size_t neg(std::size_t a) { return push({SmoothMap::Op::neg, a, 0, 0, 0}); }
    std::size_t sin(std::size_t a) { return push({SmoothMap::Op::sin, a, 0, 0, 0}); }
    std::size_t cos(std::size_t a) { return push({SmoothMap::Op::cos, a, 0, 0, 0}); }
    std::size_t exp(std::size_t a) { return push({SmoothMap::Op::exp, a, 0, 0, 0}); }
    std::size_t log(std::size_t a) { return push({SmoothMap::Op::log, a, 0, 0, 0}); }

    void output(std::size_t node) { map_.outputs.push_back(node); }

    SmoothMap finish() {
        map_.target_dim = map_.outputs.size();
        return std::move(map_);
    }

private:
    static bool is_binary(SmoothMap::Op op) {
        return op == SmoothMap::Op::add || op == SmoothMap::Op::sub ||
               op == SmoothMap::Op::mul || op == SmoothMap::Op::div;
    }

    std::size_t push(SmoothMap::Node n) {
        bool leaf = n.op == SmoothMap::Op::var || n.op == SmoothMap::Op::cnst;
        if (!leaf && (n.a >= map_.nodes.size() || (is_binary(n.op) && n.b >= map_.nodes.size())))
            throw std::invalid_argument("SmoothBuilder: operand out of range");
        map_.nodes.push_back(n);
        return map_.nodes.size() - 1;
    }

    SmoothMap map_;
};

inline SmoothMap smooth_identity(std::size_t m) {
    SmoothBuilder b(m);
    for (std::size_t i = 0; i < m; ++i) b.output(b.var(i));
    return b.finish();
}

// Linear coordinate map given per-output lists of (sign, input index) plus
// constants; used by the structural morphisms.
inline SmoothMap smooth_linear(std::size_t src,
                               const std::vector<std::vector<std::pair<int, std::size_t>>>& rows) {
    SmoothBuilder b(src);
    for (const auto& row : rows) {
        if (row.empty()) {
            b.output(b.cnst(0));
            continue;
        }
        std::size_t acc = SIZE_MAX;
        for (auto [sign, idx] : row) {
            std::size_t v = b.var(idx);
            if (sign < 0) v = b.neg(v);
            acc = acc == SIZE_MAX ? v : b.add(acc, v);
        }
        b.output(acc);
    }
    return b.finish();
}

// g after f by grafting f's outputs into g's variables.
inline SmoothMap compose(const SmoothMap& g, const SmoothMap& f) {
    if (f.target_dim != g.source_dim) throw std::invalid_argument("smooth compose: dimensions");
    SmoothMap r;
    r.source_dim = f.source_dim;
    r.nodes = f.nodes;
    std::vector<std::size_t> remap(g.nodes.size());
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const auto& n = g.nodes[i];
        if (n.op == SmoothMap::Op::var) {
            remap[i] = f.outputs[n.var];
            continue;
        }
        SmoothMap::Node m = n;
        if (n.op != SmoothMap::Op::cnst) {
            m.a = remap[n.a];
            m.b = remap[n.b];
        }
        r.nodes.push_back(m);
        remap[i] = r.nodes.size() - 1;
    }
    for (std::size_t o : g.outputs) r.outputs.push_back(remap[o]);
    r.target_dim = g.target_dim;
    return r;
}

// (x, v) |-> (f(x), Df(x) v) as a DAG transform; applying it twice yields the
// four T^2 component blocks.
inline SmoothMap smooth_tangent(const SmoothMap& f) {
    const std::size_t m = f.source_dim;
    SmoothMap r;
    r.source_dim = 2 * m;
    r.target_dim = 2 * f.target_dim;
    std::vector<std::size_t> val(f.nodes.size()), der(f.nodes.size());
    auto push = [&](SmoothMap::Node n) {
        r.nodes.push_back(n);
        return r.nodes.size() - 1;
    };
    using Op = SmoothMap::Op;
    for (std::size_t i = 0; i < f.nodes.size(); ++i) {
        const auto& n = f.nodes[i];
        switch (n.op) {
            case Op::var:
                val[i] = push({Op::var, 0, 0, 0, n.var});
                der[i] = push({Op::var, 0, 0, 0, n.var + m});
                break;
            case Op::cnst:
                val[i] = push({Op::cnst, 0, 0, n.value, 0});
                der[i] = push({Op::cnst, 0, 0, 0.0, 0});
                break;
            case Op::add:
                val[i] = push({Op::add, val[n.a], val[n.b], 0, 0});
                der[i] = push({Op::add, der[n.a], der[n.b], 0, 0});
                break;
            case Op::sub:
                val[i] = push({Op::sub, val[n.a], val[n.b], 0, 0});
                der[i] = push({Op::sub, der[n.a], der[n.b], 0, 0});
                break;
            case Op::mul: {
                val[i] = push({Op::mul, val[n.a], val[n.b], 0, 0});
                std::size_t t1 = push({Op::mul, der[n.a], val[n.b], 0, 0});
                std::size_t t2 = push({Op::mul, val[n.a], der[n.b], 0, 0});
                der[i] = push({Op::add, t1, t2, 0, 0});
                break;
            }
            case Op::div: {
                val[i] = push({Op::div, val[n.a], val[n.b], 0, 0});
                std::size_t t1 = push({Op::mul, der[n.a], val[n.b], 0, 0});
                std::size_t t2 = push({Op::mul, val[n.a], der[n.b], 0, 0});
                std::size_t num = push({Op::sub, t1, t2, 0, 0});
                std::size_t den = push({Op::mul, val[n.b], val[n.b], 0, 0});
                der[i] = push({Op::div, num, den, 0, 0});
                break;
            }
            case Op::neg:
                val[i] = push({Op::neg, val[n.a], 0, 0, 0});
                der[i] = push({Op::neg, der[n.a], 0, 0, 0});
                break;
            case Op::sin: {
                val[i] = push({Op::sin, val[n.a], 0, 0, 0});
                std::size_t c = push({Op::cos, val[n.a], 0, 0, 0});
                der[i] = push({Op::mul, c, der[n.a], 0, 0});
                break;
            }
            case Op::cos: {
                val[i] = push({Op::cos, val[n.a], 0, 0, 0});
                std::size_t s = push({Op::sin, val[n.a], 0, 0, 0});
                std::size_t ms = push({Op::neg, s, 0, 0, 0});
                der[i] = push({Op::mul, ms, der[n.a], 0, 0});
                break;
            }
            case Op::exp: {
                val[i] = push({Op::exp, val[n.a], 0, 0, 0});
                der[i] = push({Op::mul, val[i], der[n.a], 0, 0});
                break;
            }
            case Op::log: {
                val[i] = push({Op::log, val[n.a], 0, 0, 0});
                der[i] = push({Op::div, der[n.a], val[n.a], 0, 0});
                break;
            }
        }
    }
    for (std::size_t o : f.outputs) r.outputs.push_back(val[o]);
    for (std::size_t o : f.outputs) r.outputs.push_back(der[o]);
    return r;
}

// ---------------------------------------------------------------------------
// Forward-mode evaluation entry points
// ---------------------------------------------------------------------------

inline std::pair<std::vector<double>, std::vector<double>>
dual_eval(const SmoothMap& f, const std::vector<double>& point,
          const std::vector<double>& tangent) {
    if (point.size() != f.source_dim || tangent.size() != f.source_dim)
        throw std::invalid_argument("dual_eval arity");
    std::vector<Dual> in(f.source_dim);
    for (std::size_t i = 0; i < f.source_dim; ++i) in[i] = {point[i], tangent[i]};
    auto out = f.eval_with<Dual>(std::span<const Dual>(in));
    std::vector<double> v(f.target_dim), d(f.target_dim);
    for (std::size_t i = 0; i < f.target_dim; ++i) {
        v[i] = out[i].v;
        d[i] = out[i].d;
    }
    return {v, d};
}

// Nested evaluation with two independent tangent seeds; returns the four
// T^2 component blocks per output.
inline std::vector<Dual2> dual2_eval(const SmoothMap& f, const std::vector<double>& point,
                                     const std::vector<double>& t1,
                                     const std::vector<double>& t2,
                                     const std::vector<double>& t12) {
    std::vector<Dual2> in(f.source_dim);
    for (std::size_t i = 0; i < f.source_dim; ++i) in[i] = {point[i], t1[i], t2[i], t12[i]};
    return f.eval_with<Dual2>(std::span<const Dual2>(in));
}

// Exact polynomial maps reinterpreted as smooth maps, for cross-model checks.
inline SmoothMap poly_to_smooth(const PolyMap& f) {
    SmoothBuilder b(f.source_dim);
    for (const auto& comp : f.components) {
        if (comp.is_zero()) {
            b.output(b.cnst(0));
            continue;
        }
        std::size_t acc = SIZE_MAX;
        for (const auto& [e, c] : comp.terms()) {
            std::size_t term = b.cnst(rat_double(c));
            for (std::size_t i = 0; i < f.source_dim; ++i)
                for (unsigned k = 0; k < e[i]; ++k) term = b.mul(term, b.var(i));
            acc = acc == SIZE_MAX ? term : b.add(acc, term);
        }
        b.output(acc);
    }
    return b.finish();
}

// ---------------------------------------------------------------------------
// The tangent model facade: equality is sampled with relative tolerance.
// ---------------------------------------------------------------------------

struct SmoothModel {
    using Object = std::size_t;
    using Morphism = SmoothMap;

    double tolerance = 1e-9;
    std::size_t sample_points = 32;
    std::uint64_t eq_seed = 0x5eed;

    std::string name() const { return "smooth"; }

    bool obj_equal(Object a, Object b) const { return a == b; }
    Object source_obj(const Morphism& f) const { return f.source_dim; }
    Object target_obj(const Morphism& f) const { return f.target_dim; }

    Morphism identity(Object m) const { return smooth_identity(m); }
    Morphism compose(const Morphism& g, const Morphism& f) const { return tangentad::compose(g, f); }

    bool equal(const Morphism& f, const Morphism& g) const {
        if (f.source_dim != g.source_dim || f.target_dim != g.target_dim) return false;
        Rng rng(eq_seed + 0x9e37 * f.source_dim);
        for (std::size_t k = 0; k < sample_points; ++k) {
            std::vector<double> x(f.source_dim);
            for (auto& xi : x) xi = rng.real(-1.0, 1.0);
            auto a = f.eval(x), b = g.eval(x);
            for (std::size_t i = 0; i < f.target_dim; ++i) {
                double scale = std::max({1.0, std::abs(a[i]), std::abs(b[i])});
                if (std::abs(a[i] - b[i]) > tolerance * scale) return false;
            }
        }
        return true;
    }

    std::string show(const Morphism& f) const {
        return "smooth(" + std::to_string(f.source_dim) + "->" + std::to_string(f.target_dim) +
               ", " + std::to_string(f.nodes.size()) + " nodes)";
    }

    Object tangent_obj(Object m) const { return 2 * m; }
    Morphism tangent_mor(const Morphism& f) const { return smooth_tangent(f); }

    Morphism proj(Object m) const {
        std::vector<std::vector<std::pair<int, std::size_t>>> rows;
        for (std::size_t i = 0; i < m; ++i) rows.push_back({{1, i}});
        return smooth_linear(2 * m, rows);
    }
    Morphism zero(Object m) const {
        std::vector<std::vector<std::pair<int, std::size_t>>> rows;
        for (std::size_t i = 0; i < m; ++i) rows.push_back({{1, i}});
        for (std::size_t i = 0; i < m; ++i) rows.push_back({});
        return smooth_linear(m, rows);
    }
    Morphism sum(Object m) const {
        std::vector<std::vector<std::pair<int, std::size_t>>> rows;
        for (std::size_t i = 0; i < m; ++i) rows.push_back({{1, i}});
        for (std::size_t i = 0; i < m; ++i) rows.push_back({{1, m + i}, {1, 2 * m + i}});
        return smooth_linear(3 * m, rows);
    }
    Morphism lift(Object m) const {
        std::vector<std::vector<std::pair<int, std::size_t>>> rows;
        for (std::size_t i = 0; i < m; ++i) rows.push_back({{1, i}});
        for (std::size_t i = 0; i < 2 * m; ++i) rows.push_back({});
        for (std::size_t i = 0; i < m; ++i) rows.push_back({{1, m + i}});
        return smooth_linear(2 * m, rows);
    }
    Morphism flip(Object m) const {
        std::vector<std::vector<std::pair<int, std::size_t>>> rows;
        for (std::size_t i = 0; i < m; ++i) rows.push_back({{1, i}});
        for (std::size_t i = 0; i < m; ++i) rows.push_back({{1, 2 * m + i}});
        for (std::size_t i = 0; i < m; ++i) rows.push_back({{1, m + i}});
        for (std::size_t i = 0; i < m; ++i) rows.push_back({{1, 3 * m + i}});
        return smooth_linear(4 * m, rows);
    }
    bool has_negatives() const { return true; }
    Morphism negate(Object m) const {
        std::vector<std::vector<std::pair<int, std::size_t>>> rows;
        for (std::size_t i = 0; i < m; ++i) rows.push_back({{1, i}});
        for (std::size_t i = 0; i < m; ++i) rows.push_back({{-1, m + i}});
        return smooth_linear(2 * m, rows);
    }

    Object power_obj(Object m, std::size_t n) const { return (n + 1) * m; }
    Morphism power_proj(Object m, std::size_t n, std::size_t k) const {
        if (k < 1 || k > n) throw std::out_of_range("power_proj index");
        std::vector<std::vector<std::pair<int, std::size_t>>> rows;
        for (std::size_t i = 0; i < m; ++i) rows.push_back({{1, i}});
        for (std::size_t i = 0; i < m; ++i) rows.push_back({{1, k * m + i}});
        return smooth_linear((n + 1) * m, rows);
    }
    Morphism power_tuple(Object m, unsigned t, const std::vector<Morphism>& fs) const {
        if (fs.empty()) throw std::invalid_argument("power_tuple: empty family");
        const std::size_t blocks = std::size_t(1) << t;
        const std::size_t src = fs.front().source_dim;
        for (const auto& f : fs)
            if (f.source_dim != src || f.target_dim != blocks * 2 * m)
                throw std::invalid_argument("power_tuple: shape mismatch");
        // sampled base agreement
        for (std::size_t j = 1; j < fs.size(); ++j) {
            Rng rng(eq_seed + 17 * src);
            for (std::size_t k = 0; k < sample_points; ++k) {
                std::vector<double> x(src);
                for (auto& xi : x) xi = rng.real(-1.0, 1.0);
                auto a = fs[0].eval(x), b = fs[j].eval(x);
                for (std::size_t bl = 0; bl < blocks; ++bl)
                    for (std::size_t i = 0; i < m; ++i) {
                        double av = a[bl * 2 * m + i], bv = b[bl * 2 * m + i];
                        double scale = std::max({1.0, std::abs(av), std::abs(bv)});
                        if (std::abs(av - bv) > tolerance * scale)
                            throw ConeError("smooth power_tuple: bases disagree");
                    }
            }
        }
        // merge DAGs; outputs reassembled per block
        SmoothMap r;
        r.source_dim = src;
        std::vector<std::size_t> offs;
        for (const auto& f : fs) {
            offs.push_back(r.nodes.size());
            for (const auto& n : f.nodes) {
                auto c = n;
                if (n.op != SmoothMap::Op::var && n.op != SmoothMap::Op::cnst) {
                    c.a += offs.back();
                    c.b += offs.back();
                }
                r.nodes.push_back(c);
            }
        }
        const std::size_t n = fs.size();
        for (std::size_t bl = 0; bl < blocks; ++bl) {
            for (std::size_t i = 0; i < m; ++i)
                r.outputs.push_back(fs[0].outputs[bl * 2 * m + i] + offs[0]);
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t i = 0; i < m; ++i)
                    r.outputs.push_back(fs[j].outputs[bl * 2 * m + m + i] + offs[j]);
        }
        r.target_dim = r.outputs.size();
        return r;
    }

    bool has_lift_solve() const { return false; }
    Morphism lift_solve(Object, const Morphism&) const {
        throw std::logic_error("smooth model does not solve lifts");
    }
};

// Random smooth expressions over the everywhere-defined primitives.
inline SmoothMap random_smooth_map(Rng& rng, std::size_t src, std::size_t dst,
                                   unsigned depth = 3) {
    SmoothBuilder b(src);
    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < src; ++i) pool.push_back(b.var(i));
    pool.push_back(b.cnst(rng.real(-2, 2)));
    auto pick = [&] { return pool[rng.below(pool.size())]; };
    for (unsigned d = 0; d < depth * (src + dst); ++d) {
        switch (rng.below(6)) {
            case 0: pool.push_back(b.add(pick(), pick())); break;
            case 1: pool.push_back(b.sub(pick(), pick())); break;
            case 2: pool.push_back(b.mul(pick(), pick())); break;
            case 3: pool.push_back(b.sin(pick())); break;
            case 4: pool.push_back(b.exp(b.mul(b.cnst(0.3), pick()))); break;
            case 5: pool.push_back(b.neg(pick())); break;
        }
    }
    for (std::size_t i = 0; i < dst; ++i) b.output(pool[pool.size() - 1 - rng.below(pool.size())]);
    return b.finish();
}

// ---------------------------------------------------------------------------
// JSON: serialized DAG with primitive op-codes
// ---------------------------------------------------------------------------

inline const char* smooth_op_name(SmoothMap::Op op) {
    switch (op) {
        case SmoothMap::Op::var: return "var";
        case SmoothMap::Op::cnst: return "const";
        case SmoothMap::Op::add: return "add";
        case SmoothMap::Op::sub: return "sub";
        case SmoothMap::Op::mul: return "mul";
        case SmoothMap::Op::div: return "div";
        case SmoothMap::Op::neg: return "neg";
        case SmoothMap::Op::sin: return "sin";
        case SmoothMap::Op::cos: return "cos";
        case SmoothMap::Op::exp: return "exp";
        case SmoothMap::Op::log: return "log";
    }
    return "?";
}

inline SmoothMap::Op smooth_op_from_name(const std::string& s) {
    using Op = SmoothMap::Op;
    if (s == "var") return Op::var;
    if (s == "const") return Op::cnst;
    if (s == "add") return Op::add;
    if (s == "sub") return Op::sub;
    if (s == "mul") return Op::mul;
    if (s == "div") return Op::div;
    if (s == "neg") return Op::neg;
    if (s == "sin") return Op::sin;
    if (s == "cos") return Op::cos;
    if (s == "exp") return Op::exp;
    if (s == "log") return Op::log;
    throw InputError("unknown smooth op-code: " + s);
}

inline nlohmann::json smooth_to_json(const SmoothMap& f) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& n : f.nodes) {
        nlohmann::json e{{"op", smooth_op_name(n.op)}};
        switch (n.op) {
            case SmoothMap::Op::var: e["i"] = n.var; break;
            case SmoothMap::Op::cnst: e["v"] = n.value; break;
            case SmoothMap::Op::neg:
            case SmoothMap::Op::sin:
            case SmoothMap::Op::cos:
            case SmoothMap::Op::exp:
            case SmoothMap::Op::log: e["a"] = n.a; break;
            default:
                e["a"] = n.a;
                e["b"] = n.b;
        }
        nodes.push_back(e);
    }
    return {{"source_dim", f.source_dim},
            {"target_dim", f.target_dim},
            {"nodes", nodes},
            {"outputs", f.outputs}};
}

inline SmoothMap smooth_from_json(const nlohmann::json& j) {
    SmoothMap f;
    f.source_dim = j.at("source_dim").get<std::size_t>();
    f.target_dim = j.at("target_dim").get<std::size_t>();
    for (const auto& e : j.at("nodes")) {
        SmoothMap::Node n;
        n.op = smooth_op_from_name(e.at("op").get<std::string>());
        if (e.contains("i")) n.var = e.at("i").get<std::size_t>();
        if (e.contains("v")) n.value = e.at("v").get<double>();
        if (e.contains("a")) n.a = e.at("a").get<std::size_t>();
        if (e.contains("b")) n.b = e.at("b").get<std::size_t>();
        bool leaf = n.op == SmoothMap::Op::var || n.op == SmoothMap::Op::cnst;
        if (n.op == SmoothMap::Op::var && n.var >= f.source_dim)
            throw InputError("smooth json: var index out of range");
        if (!leaf && (n.a >= f.nodes.size() || n.b >= f.nodes.size() + (e.contains("b") ? 0 : 1)))
            throw InputError("smooth json: operand out of range");
        f.nodes.push_back(n);
    }
    f.outputs = j.at("outputs").get<std::vector<std::size_t>>();
    for (std::size_t o : f.outputs)
        if (o >= f.nodes.size()) throw InputError("smooth json: output out of range");
    return f;
}

} // namespace tangentad
