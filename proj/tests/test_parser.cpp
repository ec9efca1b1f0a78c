#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mgamma/parser.hpp"

using namespace mgamma;

TEST_CASE("parsing the three-term half-shift series") {
  const auto spec = parse_series("sum(k=1..inf, log(k+1/2) - 2*log(k) + log(k-1/2))");
  REQUIRE(spec.terms.size() == 3);
  CHECK(spec.start_index == 1);
  // normalized order: by (logpower, power, shift)
  CHECK(spec.terms[0].shift == Rational(-1, 2));
  CHECK(spec.terms[0].coeff == Rational(1));
  CHECK(spec.terms[1].shift == Rational(0));
  CHECK(spec.terms[1].coeff == Rational(-2));
  CHECK(spec.terms[2].shift == Rational(1, 2));
  CHECK(spec.terms[2].coeff == Rational(1));
  for (const auto& t : spec.terms) {
    CHECK(t.power == 0);
    CHECK(t.logpower == 1);
  }
}

TEST_CASE("single term and rich terms") {
  const auto s1 = parse_series("sum(k=1..inf, log(k))");
  REQUIRE(s1.terms.size() == 1);
  CHECK(s1.terms[0].coeff == Rational(1));

  const auto s2 = parse_series("sum(k=2..inf, 3/4*k^2*log^3(k+5/6))");
  REQUIRE(s2.terms.size() == 1);
  CHECK(s2.start_index == 2);
  CHECK(s2.terms[0].coeff == Rational(3, 4));
  CHECK(s2.terms[0].power == 2);
  CHECK(s2.terms[0].logpower == 3);
  CHECK(s2.terms[0].shift == Rational(5, 6));
}

TEST_CASE("whitespace is insignificant") {
  CHECK(parse_series("sum( k = 1 .. inf , log ( k + 1/2 ) )") ==
        parse_series("sum(k=1..inf,log(k+1/2))"));
}

TEST_CASE("semantic error for shifts at or below -1") {
  CHECK_THROWS_AS(parse_series("sum(k=1..inf, log(k-2))"), ParseError);
  CHECK_THROWS_AS(parse_series("sum(k=1..inf, log(k-1))"), ParseError);
  CHECK_NOTHROW(parse_series("sum(k=1..inf, log(k-99/100))"));
  try {
    parse_series("sum(k=1..inf, log(k-2))");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
    CHECK(e.expected().find("shift") != std::string::npos);
  }
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_series("sum(k=1..inf, lug(k))");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 14);
    CHECK(std::string(e.what()).find("offset 14") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_series(""), ParseError);
  CHECK_THROWS_AS(parse_series("sum(k=1..inf, log(k)) trailing"), ParseError);
  CHECK_THROWS_AS(parse_series("sum(k=1..inf, log(k)"), ParseError);
  CHECK_THROWS_AS(parse_series("sum(k=1..inf, 1/0*log(k))"), ParseError);
}

TEST_CASE("error messages are reproducible") {
  std::string first, second;
  try {
    parse_series("sum(k=1..inf, log(q))");
  } catch (const ParseError& e) {
    first = e.what();
  }
  try {
    parse_series("sum(k=1..inf, log(q))");
  } catch (const ParseError& e) {
    second = e.what();
  }
  CHECK(!first.empty());
  CHECK(first == second);
}

TEST_CASE("product parsing") {
  const auto m1 = parse_product("melzak(x=1)");
  CHECK(m1.kind == ProductKind::melzak_linear);
  CHECK(m1.x == Rational(1));
  CHECK(m1.start_index == 1);

  const auto m2 = parse_product("melzak2(x=1/2, start=2)");
  CHECK(m2.kind == ProductKind::melzak_squared);
  CHECK(m2.x == Rational(1, 2));
  CHECK(m2.start_index == 2);

  const auto m3 = parse_product("melzak(x=-1/4)");
  CHECK(m3.x == Rational(-1, 4));
}

TEST_CASE("product semantic errors") {
  CHECK_THROWS_AS(parse_product("melzak(x=-1)"), ParseError);
  CHECK_THROWS_AS(parse_product("melzak(x=-1/2)"), ParseError);
  CHECK_THROWS_AS(parse_product("melzak2(x=1/2)"), ParseError);  // vanishing factor at k = 1
  CHECK_NOTHROW(parse_product("melzak2(x=1/2, start=2)"));
  CHECK_THROWS_AS(parse_product("melzak2(x=3/2)"), ParseError);
  CHECK_THROWS_AS(parse_product("melzak(x=1, start=2)"), ParseError);  // start only for melzak2
}

TEST_CASE("round trips over a corpus") {
  const char* corpus[] = {
      "sum(k=1..inf, log(k+1/2) - 2*log(k) + log(k-1/2))",
      "sum(k=1..inf, log(k))",
      "sum(k=1..inf, log(k) + log(k+2) - 2*log(k+1))",
      "sum(k=1..inf, 3*log(k+1))",
      "sum(k=2..inf, k^2*log(k-1/3))",
      "sum(k=1..inf, 1/2*k^1*log^2(k+3))",
      "sum(k=1..inf, log^3(k+1/2))",
      "sum(k=1..inf, -2*log(k+1/7) + 2*log(k))",
      "sum(k=5..inf, log(k-3/4))",
      "sum(k=1..inf, 7/3*log^4(k))",
      "sum(k=1..inf, log(k+1/2)+log(k+1/2))",
      "sum(k=1..inf, k^3*log(k) - k^3*log(k+1))",
      "sum(k=1..inf, 0*log(k) + log(k+1))",
      "sum( k = 1 .. inf , log ( k + 1/2 ) )",
      "sum(k=1..inf, 10/4*log(k+2/6))",
      "sum(k=3..inf, log^2(k-2))",
      "sum(k=1..inf, 2*log(k) - log(k+1) - log(k-1/2))",
      "sum(k=1..inf, k^4*log(k+4))",
      "sum(k=1..inf, -1*log(k))",
      "sum(k=1..inf, 5*k^2*log^2(k+9/8))",
      "sum(k=1..inf, +2*log(k))",
  };
  for (const char* text : corpus) {
    const auto a = parse_series(text);
    const auto b = parse_series(unparse(a));
    CHECK(a == b);
  }
  const char* products[] = {"melzak(x=1)", "melzak(x=-1/4)", "melzak2(x=1/4)",
                            "melzak2(x=1/2, start=2)", "melzak2(x=0)"};
  for (const char* text : products) {
    const auto a = parse_product(text);
    const auto b = parse_product(unparse(a));
    CHECK(a.kind == b.kind);
    CHECK(a.x == b.x);
    CHECK(a.start_index == b.start_index);
  }
}

TEST_CASE("normalization equates syntactic variants") {
  CHECK(parse_series("sum(k=1..inf, log(k+1/2)+log(k+1/2))") ==
        parse_series("sum(k=1..inf, 2*log(k+1/2))"));
  CHECK(parse_series("sum(k=1..inf, 2/4*log(k))") == parse_series("sum(k=1..inf, 1/2*log(k))"));
}

TEST_CASE("fuzzing never crashes the parsers") {
  std::mt19937 rng(12345);
  const std::string alphabet = "sumk=().infloge^*+-/0123456789 melzahrtx,";
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(0, 64);
  for (int i = 0; i < 10000; ++i) {
    std::string s;
    const int L = len(rng);
    for (int j = 0; j < L; ++j) s += alphabet[pick(rng)];
    try {
      parse_series(s);
    } catch (const ParseError&) {
    }
    try {
      parse_product(s);
    } catch (const ParseError&) {
    }
  }
  CHECK(true);
}
