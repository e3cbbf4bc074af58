#include <catch2/catch_amalgamated.hpp>

#include "cantor/measure.hpp"

using namespace cantor;

namespace {
Rational q(long n, long d = 1) { return make_rational(n, d); }
const Alphabet b2{2};
Word w(const char* s) { return Word::parse(s, b2); }
EventuallyPeriodicSequence pt(const char* s) { return EventuallyPeriodicSequence::parse(s, b2); }
Kernel geo32() { return Kernel::geometric(q(3, 2), b2); }
}  // namespace

TEST_CASE("uniform measure splits mass along cylinders") {
    TrieMeasure mu = TrieMeasure::uniform(q(1), b2);
    CHECK(mu.total_mass() == 1);
    CHECK(mu.cylinder_mass(w("")) == 1);
    CHECK(mu.cylinder_mass(w("0")) == q(1, 2));
    CHECK(mu.cylinder_mass(w("0110")) == q(1, 16));
    CHECK_FALSE(mu.has_atoms());
    CHECK(mu.depth() == 0);
    CHECK_FALSE(mu.is_zero());
    CHECK(TrieMeasure::zero(b2).is_zero());
    CHECK(TrieMeasure::zero(b2).cylinder_mass(w("01")) == 0);
}

TEST_CASE("uniform_on concentrates on one cylinder") {
    TrieMeasure mu = TrieMeasure::uniform_on(w("01"), q(3), b2);
    CHECK(mu.total_mass() == 3);
    CHECK(mu.cylinder_mass(w("0")) == 3);
    CHECK(mu.cylinder_mass(w("01")) == 3);
    CHECK(mu.cylinder_mass(w("00")) == 0);
    CHECK(mu.cylinder_mass(w("1")) == 0);
    CHECK(mu.cylinder_mass(w("010")) == q(3, 2));
    CHECK(mu.cylinder_mass(w("0111")) == q(3, 4));
}

TEST_CASE("point mass follows its atom") {
    TrieMeasure mu = TrieMeasure::point_mass(pt("01:10"), q(2), b2);
    CHECK(mu.has_atoms());
    CHECK(mu.total_mass() == 2);
    CHECK(mu.cylinder_mass(w("0")) == 2);
    CHECK(mu.cylinder_mass(w("01")) == 2);
    CHECK(mu.cylinder_mass(w("011")) == 2);
    CHECK(mu.cylinder_mass(w("0110")) == 2);
    CHECK(mu.cylinder_mass(w("010")) == 0);
    CHECK(mu.cylinder_mass(w("1")) == 0);
}

TEST_CASE("adding measures is exact and validates") {
    TrieMeasure a = TrieMeasure::uniform_on(w("00"), q(1, 3), b2);
    TrieMeasure b = TrieMeasure::uniform_on(w("1"), q(1, 6), b2);
    TrieMeasure sum = add(a, b);
    sum.validate();
    CHECK(sum.total_mass() == q(1, 2));
    CHECK(sum.cylinder_mass(w("00")) == q(1, 3));
    CHECK(sum.cylinder_mass(w("01")) == 0);
    CHECK(sum.cylinder_mass(w("1")) == q(1, 6));
    CHECK(sum.cylinder_mass(w("11")) == q(1, 12));

    TrieMeasure scaled = sum.scaled(q(6));
    CHECK(scaled.total_mass() == 3);
    CHECK(scaled.cylinder_mass(w("00")) == 2);
    CHECK_THROWS_AS(sum.scaled(q(-1)), DomainError);
    CHECK_THROWS_AS(sum.scaled(q(0)), DomainError);

    // Adding uniform tails at different depths refines the shallower one.
    TrieMeasure c = add(TrieMeasure::uniform(q(1), b2), TrieMeasure::uniform_on(w("0"), q(1), b2));
    CHECK(c.total_mass() == 2);
    CHECK(c.cylinder_mass(w("0")) == q(3, 2));
    CHECK(c.cylinder_mass(w("1")) == q(1, 2));
    CHECK(c.cylinder_mass(w("00")) == q(3, 4));

    // Equal atoms merge; mixing a point tail into a spread tail is not
    // representable in this trie format.
    TrieMeasure p = TrieMeasure::point_mass(pt(":0"), q(1), b2);
    TrieMeasure pp = add(p, TrieMeasure::point_mass(pt("00:0"), q(1), b2));
    CHECK(pp.total_mass() == 2);
    CHECK(pp.cylinder_mass(w("0000")) == 2);
    CHECK_THROWS_AS(add(p, TrieMeasure::uniform(q(1), b2)), DomainError);
}

TEST_CASE("distinct atoms below one node split at their disagreement") {
    TrieMeasure s = add(TrieMeasure::point_mass(pt(":01"), q(1), b2),
                        TrieMeasure::point_mass(pt(":011"), q(2), b2));
    // :01 = 010101..., :011 = 011011... disagree at index 2.
    CHECK(s.total_mass() == 3);
    CHECK(s.cylinder_mass(w("01")) == 3);
    CHECK(s.cylinder_mass(w("010")) == 1);
    CHECK(s.cylinder_mass(w("011")) == 2);
}

TEST_CASE("potential accumulates weighted prefix masses") {
    Kernel g = geo32();
    // Uniform probability: P(X) = sum f(n) 2^-n = 4 at every point.
    TrieMeasure flat = TrieMeasure::uniform(q(1), b2);
    CHECK(potential(g, flat, pt(":0")) == ExtValue(q(4)));
    CHECK(potential(g, flat, pt("1101:10")) == ExtValue(q(4)));
    // Shifted kernel: sum f(n+1) 2^-n = 6.
    CHECK(potential(g, flat, pt(":0"), 1) == ExtValue(q(6)));

    // Concentrated mass: on-cylinder potential picks up the tail weight.
    TrieMeasure on0 = TrieMeasure::uniform_on(w("0"), q(1, 7), b2);
    CHECK(potential(g, on0, pt(":0")) == ExtValue(q(1, 7) + q(1, 7) * 6));
    CHECK(potential(g, on0, pt(":1")) == ExtValue(q(1, 7)));

    // An atom's own potential diverges for divergent-sum kernels only.
    TrieMeasure atom = TrieMeasure::point_mass(pt(":0"), q(1), b2);
    CHECK(potential(g, atom, pt(":0")).is_infinite());
    CHECK(potential(g, atom, pt("1:0")) == ExtValue(q(1)));
    Kernel half = Kernel::geometric(q(1, 2), b2);
    CHECK(potential(half, atom, pt(":0")) == ExtValue(q(2)));

    CHECK(potential(g, TrieMeasure::zero(b2), pt(":0")) == ExtValue(q(0)));
}

TEST_CASE("energy of the uniform probability measure") {
    // E = sum_n f(n) sum_{|w|=n} (2^-n)^2 = sum f(n) 2^-n = tw(0).
    CHECK(energy(geo32(), TrieMeasure::uniform(q(1), b2)) == ExtValue(q(4)));
    CHECK(energy(Kernel::polynomial(1, b2), TrieMeasure::uniform(q(1), b2)) == ExtValue(q(2)));
    CHECK(energy(geo32(), TrieMeasure::zero(b2)) == ExtValue(q(0)));
    CHECK(energy(geo32(), TrieMeasure::point_mass(pt(":0"), q(1), b2)).is_infinite());
    // Convergent kernel: an atom's self-energy is the full weight sum.
    CHECK(energy(Kernel::geometric(q(1, 2), b2), TrieMeasure::point_mass(pt(":0"), q(3), b2)) ==
          ExtValue(q(18)));
}

TEST_CASE("mutual energy agrees with hand-computed splits") {
    Kernel g = geo32();
    TrieMeasure flat = TrieMeasure::uniform(q(1), b2);
    TrieMeasure on0 = TrieMeasure::uniform_on(w("0"), q(1), b2);
    // Level 0 contributes f(0)*1*1 = 1; level n >= 1 has 2^(n-1) words under
    // "0" contributing f(n) * 2^-n * 2^(1-n) each, so sum_n (3/4)^n = 3.
    ExtValue m = mutual_energy(g, flat, on0);
    CHECK(m == ExtValue(q(4)));
    CHECK(mutual_energy(g, on0, flat) == m);
    CHECK(energy(g, on0) == ExtValue(q(7)));
    CHECK(energy(g, add(flat, on0)) ==
          energy(g, flat) + energy(g, on0) + scale(q(2), m));

    // Distinct atoms interact through their common prefixes only.
    TrieMeasure a = TrieMeasure::point_mass(pt(":0"), q(1), b2);
    TrieMeasure b = TrieMeasure::point_mass(pt("001:0"), q(1), b2);
    // Common prefix length 2: f(0) + f(1) + f(2) = 1 + 3/2 + 9/4.
    CHECK(mutual_energy(g, a, b) == ExtValue(q(1) + q(3, 2) + q(9, 4)));
    CHECK(mutual_energy(g, a, a).is_infinite());
}

TEST_CASE("distance-based energy and potential at ratio 3/2") {
    Rational r = q(3, 2);
    TrieMeasure flat = TrieMeasure::uniform(q(1), b2);
    CHECK(riesz_energy(flat, r) == ExtValue(q(2)));
    CHECK(riesz_potential(flat, pt(":0"), r) == ExtValue(q(2)));
    CHECK(riesz_potential(flat, pt("0110:01"), r) == ExtValue(q(2)));

    // Concentrating the same mass raises the energy. Under geometric(3/2)
    // the cylinder [00] has E = f(0) + f(1) + tw(2) = 1 + 3/2 + 9 = 23/2,
    // so RE = (2/3) * 1 + (1/3) * 23/2 = 9/2.
    TrieMeasure on00 = TrieMeasure::uniform_on(w("00"), q(1), b2);
    CHECK(energy(Kernel::geometric(r, b2), on00) == ExtValue(q(23, 2)));
    CHECK(riesz_energy(on00, r) == ExtValue(q(9, 2)));
    CHECK(riesz_energy(on00, r) > riesz_energy(flat, r));

    CHECK(riesz_energy(TrieMeasure::point_mass(pt(":1"), q(1), b2), r).is_infinite());
    CHECK(riesz_energy(TrieMeasure::zero(b2), r) == ExtValue(q(0)));
    CHECK_THROWS_AS(riesz_energy(flat, q(2)), DomainError);
    CHECK_THROWS_AS(riesz_energy(flat, q(1)), DomainError);
    CHECK_THROWS_AS(riesz_energy(TrieMeasure::uniform(q(1), Alphabet(3)), r), DomainError);
}

TEST_CASE("measure JSON serialization") {
    TrieMeasure mu = add(TrieMeasure::uniform_on(w("00"), q(1, 14), b2),
                         add(TrieMeasure::uniform_on(w("01"), q(1, 14), b2),
                             TrieMeasure::point_mass(pt("1:1"), q(1, 2), b2)));
    nlohmann::json j = mu.to_json();
    TrieMeasure back = TrieMeasure::from_json(j, b2);
    CHECK(back.to_json() == j);
    CHECK(back.total_mass() == mu.total_mass());
    CHECK(back.cylinder_mass(w("01")) == q(1, 14));
    CHECK(back.cylinder_mass(w("111")) == q(1, 2));

    CHECK(TrieMeasure::from_json(nlohmann::json::parse(R"({"mass": "0", "tail": "uniform"})"), b2)
              .is_zero());

    // Exactly one of "children"/"tail"; masses must add up; keys must be
    // digits inside the alphabet.
    auto parse = [](const char* text) {
        return TrieMeasure::from_json(nlohmann::json::parse(text), b2);
    };
    CHECK_THROWS_AS(parse(R"({"mass": "1"})"), ParseError);
    CHECK_THROWS_AS(parse(R"({"mass": "1", "tail": "uniform", "children": {}})"), ParseError);
    CHECK_THROWS_AS(parse(R"({"tail": "uniform"})"), ParseError);
    CHECK_THROWS_AS(parse(R"({"mass": "1", "tail": "spread"})"), ParseError);
    CHECK_THROWS_AS(parse(R"({"mass": "-1", "tail": "uniform"})"), ParseError);
    CHECK_THROWS_AS(
        parse(R"({"mass": "1", "children": {"0": {"mass": "1/3", "tail": "uniform"}}})"),
        ParseError);
    CHECK_THROWS_AS(
        parse(R"({"mass": "1", "children": {"2": {"mass": "1", "tail": "uniform"}}})"),
        ParseError);
    CHECK_THROWS_AS(parse(R"({"mass": "1", "children": {}})"), ParseError);

    // The diagnostics carry the node path.
    try {
        parse(R"({"mass": "1", "children": {"0": {"mass": "1", "children": {"1": {"mass": "1/2", "tail": "uniform"}}}}})");
        FAIL("expected a mass mismatch error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("/0") != std::string::npos);
    }
}

TEST_CASE("words and sequences parse strictly") {
    CHECK(w("0110").size() == 4);
    CHECK(w("").empty());
    CHECK_THROWS_AS(Word::parse("012", b2), ParseError);
    CHECK_THROWS_AS(Word::parse("0a", b2), ParseError);
    CHECK(Word::parse("012", Alphabet(3)).size() == 3);

    EventuallyPeriodicSequence x = pt("01:10");
    CHECK(x.at(0) == 0);
    CHECK(x.at(1) == 1);
    CHECK(x.at(2) == 1);
    CHECK(x.at(3) == 0);
    CHECK(x.at(4) == 1);
    CHECK(x.prefix(6) == w("011010"));
    CHECK(x.str() == "01:10");
    CHECK(x.drop(2).str() == ":10");
    CHECK(x.drop(3).str() == ":01");
    CHECK_THROWS_AS(pt("01"), ParseError);
    CHECK_THROWS_AS(pt("01:"), ParseError);
    CHECK_THROWS_AS(pt(":2"), ParseError);

    // Eventual-periodicity equality is decidable.
    CHECK(pt(":0101").same_sequence(pt(":01")));
    CHECK(pt("0:10").same_sequence(pt(":01")));
    CHECK_FALSE(pt(":01").same_sequence(pt(":0110")));
    CHECK(EventuallyPeriodicSequence::first_disagreement(pt(":01"), pt(":0110")).value() == 2);
    CHECK(EventuallyPeriodicSequence::cylinder_point(w("01")).str() == "01:0");
}
