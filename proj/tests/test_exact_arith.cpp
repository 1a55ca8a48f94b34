#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "surfsing/errors.hpp"
#include "surfsing/qdivisor.hpp"
#include "surfsing/rational.hpp"

using surfsing::Integer;
using surfsing::QDivisor;
using surfsing::Rational;

TEST_SUITE("exact_arith") {

TEST_CASE("rationals are kept in lowest terms with positive denominator") {
  Rational q(Integer(6), Integer(-4));
  CHECK(q.numerator() == -3);
  CHECK(q.denominator() == 2);
  CHECK(q.str() == "-3/2");
  CHECK(Rational(Integer(10), Integer(5)).str() == "2");
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("parse accepts p and p/q") {
  CHECK(Rational::parse("3") == 3);
  CHECK(Rational::parse("-15/37") == Rational(-15, 37));
  CHECK(Rational::parse("4/-6") == Rational(-2, 3));
  CHECK(Rational::parse("+7/2") == Rational(7, 2));
  CHECK_THROWS_AS(Rational::parse(""), surfsing::InputError);
  CHECK_THROWS_AS(Rational::parse("1/"), surfsing::InputError);
  CHECK_THROWS_AS(Rational::parse("1/0"), surfsing::InputError);
  CHECK_THROWS_AS(Rational::parse("0.5"), surfsing::InputError);
}

TEST_CASE("ceil and floor on the documented examples") {
  CHECK(Rational(3).ceil() == 3);
  CHECK(Rational(3).floor() == 3);

  // -105/37 against a linear scan over [-4, 0].
  Rational q(-105, 37);
  CHECK(q.ceil() == oracle::scan_ceil(-105, 37, -4, 0));
  CHECK(q.floor() == oracle::scan_floor(-105, 37, -4, 0));
  CHECK(q.ceil() == -2);
  CHECK(q.floor() == -3);

  CHECK(Rational(-42, 19).ceil() == oracle::scan_ceil(-42, 19, -4, 0));
  CHECK(Rational(-42, 19).ceil() == -2);
  CHECK(Rational(-15, 37).ceil() == 0);
}

TEST_CASE("ceil and floor agree with a scan on random fractions") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-500, 500);
  std::uniform_int_distribution<std::int64_t> den(1, 60);
  for (int trial = 0; trial < 2000; ++trial) {
    std::int64_t p = num(rng);
    std::int64_t d = den(rng);
    Rational q{Integer(p), Integer(d)};
    CHECK(q.ceil() == oracle::scan_ceil(p, d, -600, 600));
    CHECK(q.floor() == oracle::scan_floor(p, d, -600, 600));
    CHECK(q.ceil() == -(-q).floor());
    CHECK(Rational(q.ceil()) - 1 < q);
    CHECK(q <= Rational(q.ceil()));
  }
}

TEST_CASE("field axioms hold exactly on random triples") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> num(-10'000, 10'000);
  std::uniform_int_distribution<std::int64_t> den(1, 997);
  auto draw = [&] { return Rational(Integer(num(rng)), Integer(den(rng))); };
  for (int trial = 0; trial < 500; ++trial) {
    Rational a = draw(), b = draw(), c = draw();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == 0);
    if (b != 0) CHECK((a / b) * b == a);
  }
}

TEST_CASE("values beyond 64 bits stay exact") {
  Integer big = Integer(1) << 100;
  Rational q(big + 1, big);
  CHECK(q.ceil() == 2);
  CHECK(q.floor() == 1);
  CHECK((q - 1) * Rational(big) == 1);
  CHECK_THROWS_AS(surfsing::to_int64(big), std::overflow_error);
  CHECK(surfsing::to_int64(Integer(-5)) == -5);
}

TEST_CASE("lcm") {
  CHECK(surfsing::lcm(37, 19) == 703);
  CHECK(surfsing::lcm(4, 6) == 12);
  CHECK(surfsing::lcm(-4, 6) == 12);
}

TEST_CASE("QDivisor never stores zero coefficients") {
  QDivisor d;
  d.set("E1", 0);
  CHECK(d.empty());
  d.set("E1", Rational(1, 2));
  d -= QDivisor({{"E1", Rational(1, 2)}});
  CHECK(d == QDivisor{});
  CHECK(QDivisor({{"E1", 0}, {"E2", 3}}) == QDivisor({{"E2", 3}}));
  CHECK((Rational(0) * QDivisor({{"E1", 5}})).empty());
}

TEST_CASE("round_up and round_down") {
  CHECK(surfsing::round_up(QDivisor({{"E1", 0}})).empty());
  CHECK(surfsing::round_up(QDivisor({{"E1", Rational(-15, 37)}})).empty());
  CHECK(surfsing::round_up(QDivisor({{"E1", Rational(-105, 37)}})) == QDivisor({{"E1", -2}}));
  CHECK(surfsing::round_down(QDivisor({{"E1", Rational(-105, 37)}})) == QDivisor({{"E1", -3}}));

  QDivisor d({{"A", Rational(-30, 37)}, {"B", Rational(7, 3)}, {"C", 4}});
  CHECK(surfsing::round_up(d) == QDivisor({{"B", 3}, {"C", 4}}));
  CHECK(surfsing::round_down(d) == QDivisor({{"A", -1}, {"B", 2}, {"C", 4}}));
  CHECK(surfsing::round_up(d).is_integral());
  CHECK_FALSE(d.is_integral());
  CHECK(d.str() == "-30/37*A + 7/3*B + 4*C");
}

TEST_CASE("round_up minus d lies in [0, 1) coefficientwise") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> num(-300, 300);
  std::uniform_int_distribution<std::int64_t> den(1, 40);
  for (int trial = 0; trial < 300; ++trial) {
    QDivisor d;
    for (const char* id : {"E1", "E2", "E3", "E4"}) d.set(id, Rational(Integer(num(rng)), Integer(den(rng))));
    QDivisor diff = surfsing::round_up(d) - d;
    for (const auto& [id, c] : diff.terms()) {
      CHECK(c >= 0);
      CHECK(c < 1);
    }
  }
}

}  // TEST_SUITE
