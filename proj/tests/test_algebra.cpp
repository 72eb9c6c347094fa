#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <utility>
#include <vector>

#include "gsm/algebra.hpp"
#include "gsm/verify.hpp"

using namespace gsm;

namespace {

// Reference sign rule: concatenate the generator lists, bubble-sort counting
// transpositions, then cancel adjacent equal generators with e_i^2 = -1.
std::pair<int, BladeIndex> blade_product_reference(BladeIndex a, BladeIndex b) {
    std::vector<int> gens;
    for (int i = 0; i < AlgebraContext::max_generators; ++i)
        if ((a >> i) & 1u) gens.push_back(i);
    for (int i = 0; i < AlgebraContext::max_generators; ++i)
        if ((b >> i) & 1u) gens.push_back(i);
    int sign = 1;
    bool swapped = true;
    while (swapped) {
        swapped = false;
        for (std::size_t i = 0; i + 1 < gens.size(); ++i)
            if (gens[i] > gens[i + 1]) {
                std::swap(gens[i], gens[i + 1]);
                sign = -sign;
                swapped = true;
            }
    }
    for (std::size_t i = 0; i + 1 < gens.size();) {
        if (gens[i] == gens[i + 1]) {
            sign = -sign;
            gens.erase(gens.begin() + static_cast<long>(i), gens.begin() + static_cast<long>(i) + 2);
        } else {
            ++i;
        }
    }
    BladeIndex mask = 0;
    for (int g : gens) mask |= BladeIndex{1} << g;
    return {sign, mask};
}

Multivector<Rational> random_mv(std::mt19937_64& rng, const AlgebraContext& ctx) {
    Multivector<Rational> out(ctx);
    for (int t = 0; t < 3; ++t)
        out[static_cast<BladeIndex>(rand_below(rng, ctx.dim()))] += random_coeff(rng);
    return out;
}

}  // namespace

TEST_CASE("algebra context invariants", "[algebra]") {
    CHECK_THROWS_AS(AlgebraContext(-1, 1), Error);
    CHECK_THROWS_AS(AlgebraContext(0, 0), Error);
    CHECK_THROWS_AS(AlgebraContext(10, 3), Error);
    CHECK(AlgebraContext(2, 3).n() == 5);
    CHECK(AlgebraContext(2, 3).dim() == 32);
}

TEST_CASE("blade product basics", "[algebra]") {
    auto [s1, b1] = blade_product(0b1, 0b1);  // e1 e1
    CHECK(s1 == -1);
    CHECK(b1 == 0);

    auto [s2, b2] = blade_product(0, 0b10);  // 1 * e2
    CHECK(s2 == +1);
    CHECK(b2 == 0b10);

    // e1e2 * e2 = e1 (e2 e2) = -e1, confirmed by the transposition oracle
    auto [s3, b3] = blade_product(0b11, 0b10);
    auto [sr, br] = blade_product_reference(0b11, 0b10);
    CHECK(s3 == sr);
    CHECK(b3 == br);
    CHECK(s3 == -1);
    CHECK(b3 == 0b01);
}

TEST_CASE("blade product matches the transposition oracle exhaustively", "[algebra]") {
    const int n = 5;
    for (BladeIndex a = 0; a < (1u << n); ++a)
        for (BladeIndex b = 0; b < (1u << n); ++b) {
            auto fast = blade_product(a, b);
            auto ref = blade_product_reference(a, b);
            REQUIRE(fast.sign == ref.first);
            REQUIRE(fast.blade == ref.second);
        }
}

TEST_CASE("multivector product examples", "[algebra]") {
    AlgebraContext ctx(0, 3);
    auto one = Multivector<Rational>::scalar(ctx, 1);
    auto e1 = Multivector<Rational>::generator(ctx, 1);
    auto e2 = Multivector<Rational>::generator(ctx, 2);

    CHECK((one + e1) * (one - e1) == Multivector<Rational>::scalar(ctx, 2));
    CHECK((e1 * e2) * (e1 * e2) == Multivector<Rational>::scalar(ctx, -1));
    CHECK((e1 * e2 + e2 * e1).is_zero());
}

TEST_CASE("anticommutation relations", "[algebra]") {
    AlgebraContext ctx(1, 4);
    for (int i = 1; i <= ctx.n(); ++i)
        for (int j = 1; j <= ctx.n(); ++j) {
            auto ei = Multivector<Rational>::generator(ctx, i);
            auto ej = Multivector<Rational>::generator(ctx, j);
            auto lhs = ei * ej + ej * ei;
            auto rhs = Multivector<Rational>::scalar(ctx, i == j ? -2 : 0);
            REQUIRE(lhs == rhs);
        }
}

TEST_CASE("product is associative on random triples", "[algebra]") {
    AlgebraContext ctx(1, 3);
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 50; ++rep) {
        auto a = random_mv(rng, ctx);
        auto b = random_mv(rng, ctx);
        auto c = random_mv(rng, ctx);
        REQUIRE((a * b) * c == a * (b * c));
    }
}

TEST_CASE("clifford conjugation", "[algebra]") {
    AlgebraContext ctx(0, 3);
    auto e1 = Multivector<Rational>::generator(ctx, 1);
    auto e2 = Multivector<Rational>::generator(ctx, 2);
    CHECK(clifford_conjugate(e1) == -e1);
    CHECK(clifford_conjugate(Multivector<Rational>::scalar(ctx, 1)) ==
          Multivector<Rational>::scalar(ctx, 1));
    CHECK(clifford_conjugate(e1 * e2) == -(e1 * e2));

    SECTION("anti-automorphism on random pairs") {
        std::mt19937_64 rng(23);
        for (int rep = 0; rep < 50; ++rep) {
            auto a = random_mv(rng, ctx);
            auto b = random_mv(rng, ctx);
            REQUIRE(clifford_conjugate(a * b) ==
                    clifford_conjugate(b) * clifford_conjugate(a));
        }
    }
}

TEST_CASE("paravector inverse", "[algebra]") {
    AlgebraContext ctx(0, 3);
    auto one = Multivector<Rational>::scalar(ctx, 1);
    auto e1 = Multivector<Rational>::generator(ctx, 1);
    auto e2 = Multivector<Rational>::generator(ctx, 2);

    CHECK(paravector_inverse(one) == one);
    CHECK(paravector_inverse(e1) == -e1);

    auto x = Multivector<Rational>::scalar(ctx, 3) + e2 * Rational(4);
    auto inv = paravector_inverse(x);
    CHECK(inv[0] == Rational(3, 25));
    CHECK(inv[0b10] == Rational(-4, 25));
    CHECK(x * inv == one);

    CHECK_THROWS_AS(paravector_inverse(Multivector<Rational>(ctx)), Error);
    CHECK_THROWS_AS(paravector_inverse(e1 * e2), Error);

    SECTION("x * inverse(x) = 1 on random nonzero paravectors") {
        std::mt19937_64 rng(37);
        for (int rep = 0; rep < 50; ++rep) {
            Multivector<Rational> x(ctx);
            for (int i = 0; i <= ctx.n(); ++i)
                x[i == 0 ? 0 : BladeIndex{1} << (i - 1)] = random_coeff(rng);
            REQUIRE(x * paravector_inverse(x) == one);
        }
    }
}

TEST_CASE("norm consistency for paravectors", "[algebra]") {
    AlgebraContext ctx(1, 2);
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 30; ++rep) {
        Multivector<Rational> x(ctx);
        Rational norm2(0);
        for (int i = 0; i <= ctx.n(); ++i) {
            Rational c = random_coeff(rng);
            x[i == 0 ? 0 : BladeIndex{1} << (i - 1)] = c;
            norm2 += c * c;
        }
        auto prod = x * clifford_conjugate(x);
        REQUIRE(prod.scalar_part() == norm2);
        REQUIRE((prod - Multivector<Rational>::scalar(ctx, norm2)).is_zero());
    }
}

TEST_CASE("context mismatch is rejected", "[algebra]") {
    auto a = Multivector<Rational>::scalar(AlgebraContext(0, 2), 1);
    auto b = Multivector<Rational>::scalar(AlgebraContext(0, 3), 1);
    CHECK_THROWS_AS(a + b, ContextMismatch);
    CHECK_THROWS_AS(a * b, ContextMismatch);
}

TEST_CASE("split_point", "[algebra]") {
    SECTION("3-4-5 triple") {
        AlgebraContext ctx(1, 2);
        auto s = split_point(PointFull{{1, 2, 3, 4}}, ctx);
        CHECK(s.xp == std::vector<double>{1, 2});
        CHECK(s.r == Catch::Approx(5.0));
        REQUIRE(s.omega.has_value());
        CHECK((*s.omega)[0] == Catch::Approx(0.6));
        CHECK((*s.omega)[1] == Catch::Approx(0.8));
    }
    SECTION("zero vector part has no direction") {
        AlgebraContext ctx(0, 3);
        auto s = split_point(PointFull{{7, 0, 0, 0}}, ctx);
        CHECK(s.xp == std::vector<double>{7});
        CHECK(s.r == 0.0);
        CHECK_FALSE(s.omega.has_value());
    }
    SECTION("negative single coordinate") {
        AlgebraContext ctx(0, 1);
        auto s = split_point(PointFull{{0, -2}}, ctx);
        CHECK(s.xp == std::vector<double>{0});
        CHECK(s.r == Catch::Approx(2.0));
        REQUIRE(s.omega.has_value());
        CHECK((*s.omega)[0] == Catch::Approx(-1.0));
    }
    SECTION("arity mismatch") {
        CHECK_THROWS_AS(split_point(PointFull{{1, 2}}, AlgebraContext(0, 3)), Error);
    }
}

TEST_CASE("blade names", "[algebra]") {
    AlgebraContext ctx(1, 3);
    CHECK(blade_name(0) == "");
    CHECK(blade_name(0b101) == "e1e3");
    CHECK(parse_blade_name("e1e3", ctx) == 0b101);
    CHECK(parse_blade_name("", ctx) == 0);
    CHECK_THROWS_AS(parse_blade_name("e3e1", ctx), Error);
    CHECK_THROWS_AS(parse_blade_name("e9", ctx), Error);
}
