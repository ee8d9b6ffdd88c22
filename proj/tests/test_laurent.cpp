#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kcanon/laurent.hpp"

using namespace kcanon;

namespace {

LaurentPoly v_pow(int c, std::int64_t k) { return LaurentPoly::monomial(c, k); }

LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 5, int max_exp = 6, int max_coeff = 9) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<std::int64_t> exp(-max_exp, max_exp);
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    LaurentPoly p;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i)
        p += LaurentPoly::monomial(coeff(rng), exp(rng));
    return p;
}

} // namespace

TEST_CASE("ring operations") {
    const LaurentPoly v = v_pow(1, 1);
    const LaurentPoly one = LaurentPoly::one();

    CHECK((v + one) * (v - one) == v_pow(1, 2) - one);          // difference of squares
    CHECK(v_pow(1, -1) + v + (-v) == v_pow(1, -1));
    CHECK(LaurentPoly::minus_v_pow(3) == v_pow(-1, 3));          // odd power sign
    CHECK(LaurentPoly::minus_v_pow(-2) == v_pow(1, -2));
    CHECK((v - v).is_zero());
    CHECK(v.scaled(0).is_zero());
    CHECK(v.shifted(-3) == v_pow(1, -2));
    CHECK((v + one).eval_at_one() == 2);
}

TEST_CASE("canonical sparse form drops zeros") {
    LaurentPoly p = v_pow(2, 3);
    p += v_pow(-2, 3);
    CHECK(p.is_zero());
    CHECK(p.coeffs().empty());
    p.set_coeff(5, 7);
    p.set_coeff(5, 0);
    CHECK(p.is_zero());
}

TEST_CASE("bar maps exponents to their negatives") {
    CHECK((v_pow(1, 2) - LaurentPoly::one()).bar() == v_pow(1, -2) - LaurentPoly::one());
    CHECK(LaurentPoly().bar().is_zero());
    CHECK((v_pow(1, -1) + v_pow(1, -3)).bar() == v_pow(1, 1) + v_pow(1, 3));
}

TEST_CASE("is_strictly_negative") {
    CHECK((v_pow(1, -1) + v_pow(1, -3)).is_strictly_negative());
    CHECK_FALSE((LaurentPoly::one() + v_pow(1, -1)).is_strictly_negative());
    CHECK(LaurentPoly().is_strictly_negative()); // empty support
    CHECK_FALSE(v_pow(-3, 2).is_strictly_negative());
}

TEST_CASE("solve_antiinvariant worked examples") {
    const LaurentPoly f = v_pow(1, -1) - v_pow(1, 1);
    const LaurentPoly g = solve_antiinvariant(f);
    CHECK(g == v_pow(1, -1));
    CHECK(g - g.bar() == f); // the defining identity, checked directly

    CHECK(solve_antiinvariant(LaurentPoly()).is_zero());

    const LaurentPoly f2 = v_pow(2, -3) - v_pow(2, 3);
    CHECK(solve_antiinvariant(f2) == v_pow(2, -3));

    CHECK_THROWS_AS(solve_antiinvariant(LaurentPoly::one()), NotAntiInvariant);
    CHECK_THROWS_AS(solve_antiinvariant(v_pow(1, -1) + v_pow(1, 1)), NotAntiInvariant);
}

TEST_CASE("bar is an involutive ring automorphism") {
    std::mt19937_64 rng(20240901);
    for (int trial = 0; trial < 300; ++trial) {
        const LaurentPoly a = random_poly(rng);
        const LaurentPoly b = random_poly(rng);
        CHECK((a * b).bar() == a.bar() * b.bar());
        CHECK((a + b).bar() == a.bar() + b.bar());
        CHECK(a.bar().bar() == a);
    }
}

TEST_CASE("ring axioms at random inputs") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const LaurentPoly a = random_poly(rng);
        const LaurentPoly b = random_poly(rng);
        const LaurentPoly c = random_poly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + (-a) == LaurentPoly());
    }
}

TEST_CASE("solve_antiinvariant picks the unique strictly negative solution") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly g;
        std::uniform_int_distribution<std::int64_t> exp(-6, -1);
        std::uniform_int_distribution<int> coeff(-4, 4);
        for (int i = 0; i < 4; ++i)
            g += LaurentPoly::monomial(coeff(rng), exp(rng));
        const LaurentPoly f = g - g.bar();
        CHECK(solve_antiinvariant(f) == g);

        // Perturbing by a bar-invariant pair still solves g' - bar(g') = f
        // but leaves the strictly negative cone.
        const LaurentPoly g2 = g + v_pow(1, -2) + v_pow(1, 2);
        CHECK(g2 - g2.bar() == f);
        CHECK_FALSE(g2.is_strictly_negative());
    }
}

TEST_CASE("string rendering") {
    CHECK(LaurentPoly().str() == "0");
    CHECK(v_pow(1, -1).str() == "v^-1");
    CHECK((v_pow(1, -1) + v_pow(1, -3)).str() == "v^-1 + v^-3");
    CHECK((v_pow(-1, 2) + v_pow(3, 0)).str() == "-v^2 + 3");
    CHECK(v_pow(1, 1).str() == "v");
    CHECK(v_pow(-2, -1).str() == "-2*v^-1");
}

TEST_CASE("exponent overflow fails loudly") {
    const LaurentPoly big = v_pow(1, INT64_MAX - 1);
    CHECK_THROWS_AS(big * big, ExponentOverflow);
    CHECK_THROWS_AS(big.shifted(10), ExponentOverflow);
}
