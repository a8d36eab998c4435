#pragma once

// Exact multivariate polynomials over the rationals. Terms are kept in a
// sorted map from exponent vector to nonzero coefficient, so equality of
// normal forms is plain container equality and serialization is bit-stable.

#include "tangentad/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tangentad {

using Exponents = std::vector<unsigned>;

class Poly {
public:
    using Terms = std::map<Exponents, Rat>;

    explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, Rat c) {
        Poly p(nvars);
        if (c != 0) p.terms_.emplace(Exponents(nvars, 0), std::move(c));
        return p;
    }

    static Poly variable(std::size_t nvars, std::size_t i) {
        if (i >= nvars) throw std::out_of_range("Poly::variable index");
        Poly p(nvars);
        Exponents e(nvars, 0);
        e[i] = 1;
        p.terms_.emplace(std::move(e), Rat(1));
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && total_degree() == 0;
    }

    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        auto it = terms_.find(Exponents(nvars_, 0));
        return it == terms_.end() ? Rat(0) : it->second;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_)
            d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
        return d;
    }

    unsigned degree_in(std::size_t var) const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }

    void add_term(const Exponents& e, const Rat& c) {
        if (e.size() != nvars_) throw std::invalid_argument("Poly::add_term arity");
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly operator-() const {
        Poly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    Poly& operator+=(const Poly& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_arity(b);
        Poly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(a.nvars_);
                for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    friend Poly operator*(const Rat& c, const Poly& p) {
        Poly r(p.nvars_);
        if (c == 0) return r;
        for (const auto& [e, k] : p.terms_) r.terms_.emplace(e, c * k);
        return r;
    }

    Poly derivative(std::size_t var) const {
        Poly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponents d = e;
            d[var] -= 1;
            r.add_term(d, c * Rat(e[var]));
        }
        return r;
    }

    // Substitute args[i] for variable i; args must all share one arity.
    Poly substituted(const std::vector<Poly>& args) const {
        if (args.size() != nvars_) throw std::invalid_argument("Poly::substituted arity");
        std::size_t out_vars = nvars_ == 0 ? 0 : args.front().nvars();
        for (const auto& a : args)
            if (a.nvars() != out_vars) throw std::invalid_argument("Poly::substituted mixed arities");

        // Cache powers of each argument up to the degree actually used.
        std::vector<std::vector<Poly>> powers(args.size());
        for (std::size_t i = 0; i < args.size(); ++i)
            powers[i].push_back(Poly::constant(out_vars, Rat(1)));

        Poly r(out_vars);
        for (const auto& [e, c] : terms_) {
            Poly term = Poly::constant(out_vars, c);
            for (std::size_t i = 0; i < nvars_; ++i) {
                while (powers[i].size() <= e[i]) powers[i].push_back(powers[i].back() * args[i]);
                if (e[i] > 0) term = term * powers[i][e[i]];
            }
            r += term;
        }
        return r;
    }

    Rat eval(const std::vector<Rat>& x) const {
        if (x.size() != nvars_) throw std::invalid_argument("Poly::eval arity");
        Rat r(0);
        for (const auto& [e, c] : terms_) {
            Rat t = c;
            for (std::size_t i = 0; i < nvars_; ++i)
                for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
            r += t;
        }
        return r;
    }

    double eval_double(const std::vector<double>& x) const {
        if (x.size() != nvars_) throw std::invalid_argument("Poly::eval_double arity");
        double r = 0;
        for (const auto& [e, c] : terms_) {
            double t = rat_double(c);
            for (std::size_t i = 0; i < nvars_; ++i)
                for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
            r += t;
        }
        return r;
    }

    // Reinterpret in a wider variable space, variable i becoming i + shift.
    Poly embedded(std::size_t new_nvars, std::size_t shift = 0) const {
        if (shift + nvars_ > new_nvars) throw std::invalid_argument("Poly::embedded range");
        Poly r(new_nvars);
        for (const auto& [e, c] : terms_) {
            Exponents n(new_nvars, 0);
            for (std::size_t i = 0; i < nvars_; ++i) n[i + shift] = e[i];
            r.terms_.emplace(std::move(n), c);
        }
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend bool operator<(const Poly& a, const Poly& b) {
        if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
        return a.terms_ < b.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // Print highest monomial first for readability.
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << "-";
            first = false;
            Rat a = abs(c);
            bool has_vars = std::any_of(e.begin(), e.end(), [](unsigned k) { return k > 0; });
            if (a != 1 || !has_vars) os << rat_str(a);
            bool star = a != 1 || !has_vars;
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (star) os << "*";
                star = true;
                os << "x" << i;
                if (e[i] > 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

private:
    void check_arity(const Poly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("Poly arity mismatch");
    }

    std::size_t nvars_;
    Terms terms_;
};

// ---------------------------------------------------------------------------
// Integer normalization, gcd and squarefree parts. These serve the canonical
// form of restriction idempotents; gcds are computed on primitive integer
// polynomials via a primitive pseudo-remainder sequence.
// ---------------------------------------------------------------------------

// Leading coefficient sign w.r.t. the monomial order (largest exponent vector).
inline int lead_sign(const Poly& p) {
    if (p.is_zero()) return 0;
    return p.terms().rbegin()->second < 0 ? -1 : 1;
}

// Scale so coefficients are coprime integers and the leading one is positive.
inline Poly primitive_part(const Poly& p) {
    if (p.is_zero()) return p;
    Int den_lcm = 1, num_gcd = 0;
    for (const auto& [e, c] : p.terms())
        den_lcm = lcm(den_lcm, denominator(c));
    for (const auto& [e, c] : p.terms())
        num_gcd = gcd(num_gcd, Int(numerator(c) * (den_lcm / denominator(c))));
    Rat scale = Rat(den_lcm, num_gcd);
    if (lead_sign(p) < 0) scale = -scale;
    return scale * p;
}

namespace detail {

// View p as a univariate polynomial in `var`: coefficient of var^k, with the
// var-slot zeroed so coefficients live in the same variable space.
inline Poly coeff_in(const Poly& p, std::size_t var, unsigned k) {
    Poly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[var] != k) continue;
        Exponents d = e;
        d[var] = 0;
        r.add_term(d, c);
    }
    return r;
}

inline Poly shift_in(const Poly& p, std::size_t var, unsigned k) {
    Poly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        Exponents d = e;
        d[var] += k;
        r.add_term(d, c);
    }
    return r;
}

inline std::optional<std::size_t> pick_main_var(const Poly& a, const Poly& b) {
    for (std::size_t i = a.nvars(); i-- > 0;)
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) return i;
    return std::nullopt;
}

inline Poly pseudo_rem(Poly a, const Poly& b, std::size_t var) {
    const unsigned db = b.degree_in(var);
    const Poly lb = coeff_in(b, var, db);
    while (!a.is_zero() && a.degree_in(var) >= db) {
        const unsigned da = a.degree_in(var);
        const Poly la = coeff_in(a, var, da);
        a = lb * a - shift_in(la, var, da - db) * b;
    }
    return a;
}

} // namespace detail

Poly poly_gcd(const Poly& a, const Poly& b);

namespace detail {

// gcd of the univariate-view coefficients of p w.r.t. var.
inline Poly content_wrt(const Poly& p, std::size_t var) {
    Poly g(p.nvars());
    for (unsigned k = 0; k <= p.degree_in(var); ++k) {
        Poly c = coeff_in(p, var, k);
        if (!c.is_zero()) g = g.is_zero() ? primitive_part(c) : poly_gcd(g, c);
    }
    return g;
}

} // namespace detail

// Exact division; nullopt when b does not divide a. Leading-term cancellation
// in the graded map order is complete for exact multivariate division over Q.
inline std::optional<Poly> poly_div_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) return std::nullopt;
    Poly r = a;
    Poly q(a.nvars());
    const auto& [eb, cb] = *b.terms().rbegin();
    while (!r.is_zero()) {
        const auto& [er, cr] = *r.terms().rbegin();
        Exponents e(r.nvars());
        for (std::size_t i = 0; i < r.nvars(); ++i) {
            if (er[i] < eb[i]) return std::nullopt;
            e[i] = er[i] - eb[i];
        }
        Poly t(a.nvars());
        t.add_term(e, cr / cb);
        q += t;
        r -= t * b;
    }
    return q;
}

// Primitive gcd over Z, positive leading coefficient; gcd(0,0) = 0. Every
// stage of the remainder sequence is renormalized to an integer-primitive
// polynomial, keeping coefficient growth in check.
inline Poly poly_gcd(const Poly& a0, const Poly& b0) {
    if (a0.is_zero()) return primitive_part(b0);
    if (b0.is_zero()) return primitive_part(a0);
    Poly a = primitive_part(a0), b = primitive_part(b0);
    auto var = detail::pick_main_var(a, b);
    if (!var) return Poly::constant(a.nvars(), Rat(1));

    Poly ca = detail::content_wrt(a, *var), cb = detail::content_wrt(b, *var);
    Poly cont = poly_gcd(ca, cb);
    Poly pa = primitive_part(*poly_div_exact(a, ca));
    Poly pb = primitive_part(*poly_div_exact(b, cb));
    if (pa.degree_in(*var) < pb.degree_in(*var)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        Poly r = detail::pseudo_rem(pa, pb, *var);
        pa = std::move(pb);
        if (r.is_zero()) {
            pb = Poly(a.nvars());
        } else {
            Poly cr = detail::content_wrt(r, *var);
            pb = primitive_part(*poly_div_exact(r, cr));
        }
    }
    return primitive_part(cont * pa);
}

// Product of the distinct irreducible factors, primitive with positive lead.
inline Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) return p;
    Poly q = primitive_part(p);
    Poly g = q;
    for (std::size_t i = 0; i < q.nvars(); ++i) {
        if (q.degree_in(i) == 0) continue;
        g = poly_gcd(g, q.derivative(i));
    }
    auto d = poly_div_exact(q, g);
    if (!d) throw std::logic_error("squarefree_part: gcd does not divide");
    return primitive_part(*d);
}

} // namespace tangentad
