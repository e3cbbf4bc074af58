#include <catch2/catch_amalgamated.hpp>

#include "cantor/kernel.hpp"

using namespace cantor;

namespace {
Rational q(long n, long d = 1) { return make_rational(n, d); }
}  // namespace

TEST_CASE("geometric kernel evaluates powers of the ratio") {
    Kernel g = Kernel::geometric(q(3, 2), Alphabet(2));
    CHECK(g.eval(0) == 1);
    CHECK(g.eval(1) == q(3, 2));
    CHECK(g.eval(5) == q(243, 32));
    CHECK_THROWS_AS(g.eval(-1), DomainError);
}

TEST_CASE("geometric tail weights are closed-form") {
    // tw(k) = r^k * b / (b - r)
    Kernel g = Kernel::geometric(q(3, 2), Alphabet(2));
    CHECK(g.tail_weight(0) == 4);
    CHECK(g.tail_weight(1) == 6);
    CHECK(g.tail_weight(2) == 9);

    Kernel unit = Kernel::geometric(q(1), Alphabet(2));
    CHECK(unit.tail_weight(0) == 2);
    CHECK(unit.tail_weight(7) == 2);

    Kernel t3 = Kernel::geometric(q(5, 3), Alphabet(3));
    CHECK(t3.tail_weight(0) == q(9, 4));
    CHECK(t3.tail_weight(1) == q(15, 4));
}

TEST_CASE("polynomial kernel values and tail weights") {
    Kernel p1 = Kernel::polynomial(1, Alphabet(2));
    CHECK(p1.eval(0) == 0);
    CHECK(p1.eval(6) == 6);
    // tw(k) = 2k + 2 over the binary alphabet
    CHECK(p1.tail_weight(0) == 2);
    CHECK(p1.tail_weight(1) == 4);
    CHECK(p1.tail_weight(10) == 22);

    Kernel p0 = Kernel::polynomial(0, Alphabet(2));
    CHECK(p0.tail_weight(0) == 2);
    CHECK(p0.tail_weight(3) == 2);

    // Sum of n^2 2^-n from 0 is 6; shifted sums follow the square expansion.
    Kernel p2 = Kernel::polynomial(2, Alphabet(2));
    CHECK(p2.tail_weight(0) == 6);
    CHECK(p2.tail_weight(1) == 6 + 2 * 2 + 2);  // (n+1)^2 = n^2 + 2n + 1 termwise
}

TEST_CASE("table kernel is a finite partial sum") {
    Kernel t = Kernel::table({q(1), q(1, 2), q(1, 4)}, Alphabet(2));
    CHECK(t.eval(0) == 1);
    CHECK(t.eval(2) == q(1, 4));
    CHECK(t.eval(3) == 0);
    CHECK(t.eval(99) == 0);
    CHECK(t.tail_weight(0) == 1 + q(1, 4) + q(1, 16));
    CHECK(t.tail_weight(2) == q(1, 4));
    CHECK(t.tail_weight(3) == 0);
    CHECK(t.has_finite_support());
    CHECK_FALSE(Kernel::geometric(q(1, 2), Alphabet(2)).has_finite_support());
}

TEST_CASE("shifted kernel relabels indices") {
    Kernel base = Kernel::polynomial(1, Alphabet(2));
    Kernel s = Kernel::shift(base, 3);
    for (long n = 0; n <= 6; ++n) CHECK(s.eval(n) == base.eval(n + 3));
    for (long k = 0; k <= 6; ++k) CHECK(s.tail_weight(k) == base.tail_weight(k + 3));
    Kernel ss = Kernel::shift(s, 2);
    CHECK(ss.eval(0) == base.eval(5));
    CHECK_THROWS_AS(Kernel::shift(base, -1), DomainError);
}

TEST_CASE("weight sums distinguish convergent and divergent kernels") {
    Kernel small = Kernel::geometric(q(1, 2), Alphabet(2));
    CHECK(small.weight_sum(0) == ExtValue(q(2)));
    CHECK(small.weight_sum(2) == ExtValue(q(1, 2)));
    CHECK(Kernel::geometric(q(3, 2), Alphabet(2)).weight_sum(0).is_infinite());
    CHECK(Kernel::geometric(q(1), Alphabet(2)).weight_sum(0).is_infinite());
    CHECK(Kernel::polynomial(1, Alphabet(2)).weight_sum(5).is_infinite());
    Kernel t = Kernel::table({q(1), q(1, 2)}, Alphabet(2));
    CHECK(t.weight_sum(0) == ExtValue(q(3, 2)));
    CHECK(t.weight_sum(1) == ExtValue(q(1, 2)));
    CHECK(t.weight_sum(2) == ExtValue(q(0)));
}

TEST_CASE("norm bounds certify the online approximation constant") {
    // Geometric: f(k)/tw(k+1) is the constant (b - r)/(r b).
    Kernel g = Kernel::geometric(q(3, 2), Alphabet(2));
    CHECK(g.norm_bound() == q(1, 6));
    CHECK(g.eval(0) / g.tail_weight(1) == q(1, 6));
    CHECK(2 * g.norm_bound() + 2 == q(7, 3));

    Kernel unit = Kernel::geometric(q(1), Alphabet(2));
    CHECK(unit.norm_bound() == q(1, 2));

    // Polynomial: the supremum over k of f(k)/tw(k+1) is (b-1)/b.
    Kernel p1 = Kernel::polynomial(1, Alphabet(2));
    CHECK(p1.norm_bound() == q(1, 2));
    for (long k = 0; k <= 40; ++k) CHECK(p1.eval(k) <= p1.norm_bound() * p1.tail_weight(k + 1));

    CHECK(g.is_amicable());
    CHECK(p1.is_amicable());
    CHECK(Kernel::shift(p1, 4).is_amicable());
    CHECK(Kernel::shift(p1, 4).norm_bound() == p1.norm_bound());
    Kernel t = Kernel::table({q(1)}, Alphabet(2));
    CHECK_FALSE(t.is_amicable());
    CHECK_THROWS_AS(t.norm_bound(), DomainError);
}

TEST_CASE("kernel factories validate their domains") {
    CHECK_THROWS_AS(Kernel::geometric(q(0), Alphabet(2)), DomainError);
    CHECK_THROWS_AS(Kernel::geometric(q(-1, 2), Alphabet(2)), DomainError);
    CHECK_THROWS_AS(Kernel::geometric(q(2), Alphabet(2)), DomainError);  // r = b diverges
    CHECK_THROWS_AS(Kernel::geometric(q(7, 2), Alphabet(3)), DomainError);
    CHECK_NOTHROW(Kernel::geometric(q(2), Alphabet(3)));
    CHECK_THROWS_AS(Kernel::polynomial(-1, Alphabet(2)), DomainError);
    CHECK_THROWS_AS(Kernel::table({}, Alphabet(2)), DomainError);
    CHECK_THROWS_AS(Kernel::table({q(-1)}, Alphabet(2)), DomainError);
    CHECK_THROWS_AS(Alphabet(1), DomainError);
    CHECK_THROWS_AS(Alphabet(11), DomainError);
}

TEST_CASE("energy-family shorthands map to kernels") {
    // 2^s = r with 1 < r < 2: geometric over the binary alphabet.
    Kernel s = Kernel::from_s_energy(q(3, 2));
    CHECK(s.alphabet().size() == 2);
    CHECK(s.eval(1) == q(3, 2));
    CHECK_THROWS_AS(Kernel::from_s_energy(q(1)), DomainError);
    CHECK_THROWS_AS(Kernel::from_s_energy(q(2)), DomainError);

    // log^k family: n^(k-1) over the binary alphabet.
    Kernel l2 = Kernel::from_log_energy(2);
    CHECK(l2.eval(5) == 5);
    Kernel l1 = Kernel::from_log_energy(1);
    CHECK(l1.eval(5) == 1);
    CHECK_THROWS_AS(Kernel::from_log_energy(0), DomainError);
}

TEST_CASE("kernel JSON round trips and rejects malformed input") {
    for (const auto& k :
         {Kernel::geometric(q(3, 2), Alphabet(2)), Kernel::polynomial(2, Alphabet(3)),
          Kernel::table({q(1), q(2, 3)}, Alphabet(2)),
          Kernel::shift(Kernel::geometric(q(1, 2), Alphabet(2)), 2)}) {
        Kernel back = Kernel::from_json(k.to_json());
        CHECK(back.to_json() == k.to_json());
        CHECK(back.tail_weight(3) == k.tail_weight(3));
    }

    CHECK_THROWS_AS(Kernel::from_json(nlohmann::json::parse(R"({"kind": "nope"})")), ParseError);
    CHECK_THROWS_AS(Kernel::from_json(nlohmann::json::parse(R"({"ratio": "3/2"})")), ParseError);
    CHECK_THROWS_AS(
        Kernel::from_json(nlohmann::json::parse(R"({"kind": "geometric", "ratio": "x"})")),
        ParseError);
    CHECK_THROWS_AS(
        Kernel::from_json(nlohmann::json::parse(R"({"kind": "geometric", "ratio": "5/2"})")),
        ParseError);  // out of range for the default binary alphabet
    CHECK_THROWS_AS(Kernel::from_json(nlohmann::json::parse(
                        R"({"kind": "table", "values": ["1", "-2"]})")),
                    ParseError);

    // Alphabet defaults to binary when absent.
    Kernel g = Kernel::from_json(nlohmann::json::parse(R"({"kind": "geometric", "ratio": "3/2"})"));
    CHECK(g.alphabet().size() == 2);
    CHECK(g.tail_weight(0) == 4);
}

TEST_CASE("rational parsing is strict") {
    CHECK(parse_rational("3/2") == q(3, 2));
    CHECK(parse_rational("6/4") == q(3, 2));
    CHECK(parse_rational("-7") == q(-7));
    CHECK(parse_rational("0") == 0);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("3/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("2/-3"), ParseError);
    CHECK_THROWS_AS(parse_rational(" 1"), ParseError);
    CHECK(rational_str(q(6, 4)) == "3/2");
    CHECK(rational_str(q(5)) == "5");
    CHECK(rational_str(q(-1, 3)) == "-1/3");
}

TEST_CASE("extended values add, scale and compare") {
    ExtValue two{q(2)};
    ExtValue inf = ExtValue::infinity();
    CHECK((two + two) == ExtValue(q(4)));
    CHECK((two + inf).is_infinite());
    CHECK(scale(q(3), two) == ExtValue(q(6)));
    CHECK(scale(q(3), inf).is_infinite());
    CHECK(scale(q(0), inf) == ExtValue(q(0)));  // 0 * infinity = 0
    CHECK(two < inf);
    CHECK(inf <= inf);
    CHECK(inf == inf);
    CHECK(two.finite_value() == 2);
    CHECK_THROWS_AS(inf.finite_value(), DomainError);
    CHECK_THROWS_AS(scale(q(-1), two), DomainError);
    CHECK(inf.str() == "inf");
    CHECK(two.str() == "2");
}
