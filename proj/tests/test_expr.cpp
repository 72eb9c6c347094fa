#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gsm/expr.hpp"
#include "gsm/verify.hpp"

using namespace gsm;

TEST_CASE("expression parsing", "[expr]") {
    AlgebraContext ctx(0, 3);

    SECTION("slice polynomial with a blade") {
        Poly f = parse_polynomial("x0^2 - r^2 + 2 x0 r [e1]", ctx, VarSet::Slice);
        Exponents x0sq{2, 0}, rsq{0, 2}, cross{1, 1};
        REQUIRE(f.terms().size() == 3);
        CHECK(f.terms().at(x0sq).scalar_part() == 1);
        CHECK(f.terms().at(rsq).scalar_part() == -1);
        CHECK(f.terms().at(cross)[0b1] == 2);
    }
    SECTION("factors may come in any order") {
        Poly f = parse_polynomial("3/2 [e1e3] x1", AlgebraContext(1, 3), VarSet::Slice);
        Exponents e{0, 1, 0};
        CHECK(f.terms().at(e)[0b101] == Rational(3, 2));
    }
    SECTION("whitespace is insignificant") {
        CHECK(parse_polynomial("2x0r", ctx, VarSet::Slice) ==
              parse_polynomial("2 x0 r", ctx, VarSet::Slice));
    }
    SECTION("zero literal") {
        CHECK(parse_polynomial("0", ctx, VarSet::Slice).is_zero());
    }
    SECTION("unknown blade") {
        CHECK_THROWS_AS(parse_polynomial("x0 + [e99]", ctx, VarSet::Slice), ParseError);
    }
    SECTION("unknown variable") {
        CHECK_THROWS_AS(parse_polynomial("x7", ctx, VarSet::Slice), ParseError);
        CHECK_THROWS_AS(parse_polynomial("r", ctx, VarSet::Full), ParseError);
    }
    SECTION("syntax errors carry a position") {
        try {
            parse_polynomial("x0 + + x1", AlgebraContext(1, 1), VarSet::Slice);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.position == 5);
        }
        CHECK_THROWS_AS(parse_polynomial("x0 [e1", ctx, VarSet::Slice), ParseError);
        CHECK_THROWS_AS(parse_polynomial("1/0", ctx, VarSet::Slice), ParseError);
        CHECK_THROWS_AS(parse_polynomial("", ctx, VarSet::Slice), ParseError);
        CHECK_THROWS_AS(parse_polynomial("3 4 x0", ctx, VarSet::Slice), ParseError);
    }
}

TEST_CASE("printer emits canonical text", "[expr]") {
    AlgebraContext ctx(0, 3);
    CHECK(to_string(parse_polynomial("x0^2 - r^2", ctx, VarSet::Slice)) == "x0^2 - r^2");
    CHECK(to_string(parse_polynomial("2 x0 r", ctx, VarSet::Slice)) == "2 x0 r");
    CHECK(to_string(Poly::zero(ctx, VarSet::Slice)) == "0");
    CHECK(to_string(parse_polynomial("- x0 + 3/2 [e1e2]", ctx, VarSet::Slice)) ==
          "-x0 + 3/2 [e1e2]");
}

TEST_CASE("print/parse round trip on library-generated polynomials", "[expr]") {
    std::mt19937_64 rng(61);
    for (auto cell : {std::pair{0, 3}, std::pair{1, 2}, std::pair{2, 3}}) {
        AlgebraContext ctx(cell.first, cell.second);
        for (int rep = 0; rep < 20; ++rep) {
            auto F = random_slice_pair(rng, ctx, 6);
            REQUIRE(parse_polynomial(to_string(F.F1), ctx, VarSet::Slice) == F.F1);
            REQUIRE(parse_polynomial(to_string(F.F2), ctx, VarSet::Slice) == F.F2);
            Poly full = to_full(F);
            REQUIRE(parse_polynomial(to_string(full), ctx, VarSet::Full) == full);
        }
    }
}
