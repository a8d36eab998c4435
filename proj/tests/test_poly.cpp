#include "tangentad/poly.hpp"
#include "tangentad/poly_model.hpp"
#include "tangentad/rng.hpp"

#include "catch_amalgamated.hpp"

using namespace tangentad;

namespace {

Poly x(std::size_t n, std::size_t i) { return Poly::variable(n, i); }
Poly k(std::size_t n, long long num, long long den = 1) {
    return Poly::constant(n, rat(num, den));
}

} // namespace

TEST_CASE("polynomial arithmetic normal forms") {
    Poly s = x(2, 0) + x(2, 1);
    Poly sq = s * s;
    Poly expected = x(2, 0) * x(2, 0) + rat(2) * (x(2, 0) * x(2, 1)) + x(2, 1) * x(2, 1);
    CHECK(sq == expected);

    CHECK((s - s).is_zero());
    CHECK(sq.total_degree() == 2);
    CHECK(sq.eval({rat(1, 2), rat(1, 2)}) == rat(1));
}

TEST_CASE("substitution agrees with evaluation at random points") {
    Rng rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        Poly p = random_poly(rng, 2, 3, 3);
        Poly a = random_poly(rng, 1, 2, 3);
        Poly b = random_poly(rng, 1, 2, 3);
        Poly composed = p.substituted({a, b});
        std::vector<Rat> t{rat(rng.range(-3, 3), rng.range(1, 3))};
        CHECK(composed.eval(t) == p.eval({a.eval(t), b.eval(t)}));
    }
}

TEST_CASE("derivative satisfies the product rule") {
    Rng rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        Poly p = random_poly(rng, 2, 3, 3);
        Poly q = random_poly(rng, 2, 3, 3);
        for (std::size_t v = 0; v < 2; ++v)
            CHECK((p * q).derivative(v) == p.derivative(v) * q + p * q.derivative(v));
    }
}

TEST_CASE("primitive part normalizes scale and sign") {
    Poly p = rat(-4, 6) * (x(1, 0) * x(1, 0)) + rat(-2, 3) * k(1, 1);
    Poly pp = primitive_part(p);
    CHECK(pp == x(1, 0) * x(1, 0) + k(1, 1));
}

TEST_CASE("exact division") {
    Poly a = (x(2, 0) + x(2, 1)) * (x(2, 0) - x(2, 1));
    auto q = poly_div_exact(a, x(2, 0) + x(2, 1));
    REQUIRE(q.has_value());
    CHECK(*q == x(2, 0) - x(2, 1));
    CHECK_FALSE(poly_div_exact(a, x(2, 0) + k(2, 1)).has_value());
}

TEST_CASE("gcd on known factorizations") {
    // univariate
    Poly f = (x(1, 0) + k(1, 1)) * (x(1, 0) + k(1, 2));
    Poly g = (x(1, 0) + k(1, 1)) * (x(1, 0) + k(1, 3));
    CHECK(poly_gcd(f, g) == x(1, 0) + k(1, 1));

    // bivariate with content
    Poly u = (x(2, 0) + x(2, 1)) * (x(2, 0) * x(2, 1) + k(2, 1));
    Poly v = (x(2, 0) + x(2, 1)) * (x(2, 0) - x(2, 1));
    CHECK(poly_gcd(u, v) == x(2, 0) + x(2, 1));

    // coprime
    CHECK(poly_gcd(x(2, 0), x(2, 1)) == k(2, 1));

    // gcd is insensitive to rational scaling
    CHECK(poly_gcd(rat(3, 5) * f, rat(-7, 2) * g) == x(1, 0) + k(1, 1));
}

TEST_CASE("gcd of random products has the common factor") {
    Rng rng(23);
    int done = 0;
    for (int trial = 0; trial < 40 && done < 20; ++trial) {
        Poly common = random_poly(rng, 2, 2, 2);
        Poly a = random_poly(rng, 2, 2, 2);
        Poly b = random_poly(rng, 2, 2, 2);
        if (common.is_constant() || a.is_zero() || b.is_zero()) continue;
        ++done;
        Poly g = poly_gcd(common * a, common * b);
        // the common factor divides the gcd
        auto q = poly_div_exact(g, primitive_part(common));
        CHECK(q.has_value());
        // and the gcd divides both products
        CHECK(poly_div_exact(common * a, g).has_value());
        CHECK(poly_div_exact(common * b, g).has_value());
    }
    REQUIRE(done >= 20);
}

TEST_CASE("squarefree part drops multiplicities") {
    Poly f = x(1, 0) * x(1, 0) * (x(1, 0) + k(1, 1));
    CHECK(squarefree_part(f) == x(1, 0) * (x(1, 0) + k(1, 1)));

    Poly g = (x(2, 0) + x(2, 1)) * (x(2, 0) + x(2, 1));
    CHECK(squarefree_part(g) == x(2, 0) + x(2, 1));

    // already squarefree stays put, up to normalization
    Poly h = rat(2) * x(2, 0) * x(2, 1) + rat(2) * k(2, 1);
    CHECK(squarefree_part(h) == x(2, 0) * x(2, 1) + k(2, 1));
}

TEST_CASE("poly json round trip is exact") {
    Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        Poly p = random_poly(rng, 3, 3, 3);
        CHECK(poly_from_json(poly_to_json(p), 3) == p);
    }
    // big coefficients survive via the string form
    Poly big(1);
    big.add_term({1}, Rat(Int("123456789012345678901234567890"), Int(7)));
    CHECK(poly_from_json(poly_to_json(big), 1) == big);
}
