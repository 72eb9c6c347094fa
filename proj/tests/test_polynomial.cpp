#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gsm/expr.hpp"
#include "gsm/polynomial.hpp"
#include "gsm/verify.hpp"

using namespace gsm;

namespace {

Poly parse_slice(const std::string& s, const AlgebraContext& ctx) {
    return parse_polynomial(s, ctx, VarSet::Slice);
}

Poly random_slice_poly(std::mt19937_64& rng, const AlgebraContext& ctx, int degree) {
    Poly out(ctx, VarSet::Slice);
    const int nterms = rand_int(rng, 1, 4);
    for (int t = 0; t < nterms; ++t) {
        Exponents e(variable_count(ctx, VarSet::Slice), 0);
        int budget = rand_int(rng, 0, degree);
        for (int u = 0; u < budget; ++u) e[rand_int(rng, 0, ctx.p + 1)] += 1;
        out.add_term(e, random_multivector(rng, ctx, false));
    }
    return out;
}

}  // namespace

TEST_CASE("polynomial product keeps coefficients on the left", "[poly]") {
    AlgebraContext ctx(0, 2);
    Poly x0e1 = parse_slice("x0 [e1]", ctx);
    CHECK(x0e1 * x0e1 == parse_slice("- x0^2", ctx));

    CHECK(parse_slice("x0 + r", ctx) * parse_slice("x0 - r", ctx) ==
          parse_slice("x0^2 - r^2", ctx));

    // e1 * (e2 x1): coefficients multiply through mv_mul
    AlgebraContext cxp(1, 2);
    Poly e1 = parse_polynomial("[e1]", cxp, VarSet::Slice);
    Poly e2x1 = parse_polynomial("x1 [e2]", cxp, VarSet::Slice);
    CHECK(e1 * e2x1 == parse_polynomial("x1 [e1e2]", cxp, VarSet::Slice));
}

TEST_CASE("formal differentiation", "[poly]") {
    AlgebraContext ctx(0, 2);
    CHECK(poly_diff(parse_slice("x0^2", ctx), 0) == parse_slice("2 x0", ctx));
    CHECK(poly_diff(parse_slice("x0", ctx), r_index(ctx)).is_zero());
    CHECK(poly_diff(parse_slice("x0 r^3 [e2]", ctx), r_index(ctx)) ==
          parse_slice("3 x0 r^2 [e2]", ctx));
    CHECK_THROWS_AS(poly_diff(parse_slice("x0", ctx), 9), Error);
}

TEST_CASE("exact division by r", "[poly]") {
    AlgebraContext ctx(0, 2);
    CHECK(divide_by_r(parse_slice("r^3", ctx)) == parse_slice("r^2", ctx));
    CHECK(divide_by_r(parse_slice("2 x0 r", ctx)) == parse_slice("2 x0", ctx));
    CHECK_THROWS_AS(divide_by_r(parse_slice("x0 + r", ctx)), NotDivisible);

    SECTION("round trips with multiplication by r") {
        std::mt19937_64 rng(5);
        Poly r = Poly::variable(ctx, VarSet::Slice, r_index(ctx));
        for (int rep = 0; rep < 30; ++rep) {
            Poly f = random_slice_poly(rng, ctx, 5);
            REQUIRE(divide_by_r(r * f) == f);
            if (!f.is_zero() && f.degree_in(r_index(ctx)) > 0) {
                bool divisible = true;
                for (const auto& [e, c] : f.terms()) divisible &= e[r_index(ctx)] >= 1;
                if (divisible) REQUIRE(r * divide_by_r(f) == f);
            }
        }
    }
}

TEST_CASE("parity split in r", "[poly]") {
    AlgebraContext ctx(0, 2);
    auto [even, odd] = parity_split_in_r(parse_slice("x0^2 - r^2 + 2 x0 r", ctx));
    CHECK(even == parse_slice("x0^2 - r^2", ctx));
    CHECK(odd == parse_slice("2 x0 r", ctx));

    auto [e2, o2] = parity_split_in_r(parse_slice("r", ctx));
    CHECK(e2.is_zero());
    CHECK(o2 == parse_slice("r", ctx));

    AlgebraContext cxp(1, 1);
    auto [e3, o3] = parity_split_in_r(parse_polynomial("x1", cxp, VarSet::Slice));
    CHECK(e3 == parse_polynomial("x1", cxp, VarSet::Slice));
    CHECK(o3.is_zero());

    SECTION("parts sum to the input with disjoint terms") {
        std::mt19937_64 rng(7);
        for (int rep = 0; rep < 30; ++rep) {
            Poly f = random_slice_poly(rng, ctx, 6);
            auto [ev, od] = parity_split_in_r(f);
            REQUIRE(ev + od == f);
            for (const auto& [e, c] : ev.terms()) REQUIRE(od.terms().count(e) == 0);
        }
    }
}

TEST_CASE("r^2 substitution", "[poly]") {
    SECTION("r^2 becomes |x_q|^2") {
        AlgebraContext ctx(0, 2);
        CHECK(r_square_substitute(parse_slice("r^2", ctx)) ==
              parse_polynomial("x1^2 + x2^2", ctx, VarSet::Full));
        CHECK(r_square_substitute(parse_slice("1", ctx)) ==
              parse_polynomial("1", ctx, VarSet::Full));
        CHECK_THROWS_AS(r_square_substitute(parse_slice("r", ctx)), OddPowerPresent);
    }
    SECTION("higher power, q = 3") {
        AlgebraContext ctx(0, 3);
        CHECK(r_square_substitute(parse_slice("x0^2 - r^2", ctx)) ==
              parse_polynomial("x0^2 - x1^2 - x2^2 - x3^2", ctx, VarSet::Full));
    }
}

TEST_CASE("polynomial evaluation", "[poly]") {
    AlgebraContext ctx(0, 2);
    auto v = poly_eval(parse_slice("x0^2 - r^2", ctx), {3.0, 1.0});
    CHECK(v.scalar_part() == Catch::Approx(8.0));

    AlgebraContext cxp(1, 1);
    auto w = poly_eval(parse_polynomial("x1 [e1]", cxp, VarSet::Slice), {0.0, 2.0, 0.0});
    CHECK(w[0b1] == Catch::Approx(2.0));

    auto u = poly_eval(parse_slice("x0 + r [e1]", ctx), {1.0, 2.0});
    CHECK(u.scalar_part() == Catch::Approx(1.0));
    CHECK(u[0b1] == Catch::Approx(2.0));

    CHECK_THROWS_AS(poly_eval(parse_slice("x0", ctx), {1.0}), Error);

    SECTION("evaluation is a ring homomorphism within 1e-12") {
        std::mt19937_64 rng(13);
        for (int rep = 0; rep < 20; ++rep) {
            Poly f = random_slice_poly(rng, ctx, 4);
            Poly g = random_slice_poly(rng, ctx, 4);
            auto x = random_unit_box_point(rng, variable_count(ctx, VarSet::Slice));
            auto sum = poly_eval(f + g, x) - (poly_eval(f, x) + poly_eval(g, x));
            auto prod = poly_eval(f * g, x) - poly_eval(f, x) * poly_eval(g, x);
            REQUIRE(max_abs_component(sum) < 1e-12);
            REQUIRE(max_abs_component(prod) < 1e-12);
        }
    }
}

TEST_CASE("ring laws on random polynomials", "[poly]") {
    AlgebraContext ctx(1, 2);
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 25; ++rep) {
        Poly a = random_slice_poly(rng, ctx, 3);
        Poly b = random_slice_poly(rng, ctx, 3);
        Poly c = random_slice_poly(rng, ctx, 3);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a + b) * c == a * c + b * c);
    }
}

TEST_CASE("variable set mismatch is rejected", "[poly]") {
    AlgebraContext ctx(0, 2);
    Poly slice = Poly::variable(ctx, VarSet::Slice, 0);
    Poly full = Poly::variable(ctx, VarSet::Full, 0);
    CHECK_THROWS_AS(slice + full, ContextMismatch);
    CHECK_THROWS_AS(slice * full, ContextMismatch);
}
