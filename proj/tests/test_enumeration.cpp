#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <sstream>

#include "cantor/enumeration.hpp"

using namespace cantor;

namespace {
Rational q(long n, long d = 1) { return make_rational(n, d); }
const Alphabet b2{2};
Kernel geo32() { return Kernel::geometric(q(3, 2), b2); }

GoodEnumeration enum_of(std::initializer_list<const char*> words) {
    std::vector<Word> order;
    for (const char* s : words) order.push_back(Word::parse(s, b2));
    return GoodEnumeration::from_words(std::move(order), b2);
}
}  // namespace

TEST_CASE("online weight of a single word equals its capacity") {
    Kernel g = geo32();
    DynamicWeightTrace t = dynamic_weight(g, enum_of({"0"}));
    REQUIRE(t.stages.size() == 1);
    CHECK(t.stages[0].stage == 1);
    CHECK(t.stages[0].word == Word::parse("0", b2));
    CHECK(t.stages[0].increment == q(1, 7));
    CHECK(t.stages[0].ww == q(1, 7));
    CHECK(t.final_ww == q(1, 7));

    CHECK(dynamic_weight(g, enum_of({"0"}), 1).final_ww ==
          capacity(g, PrefixFreeSet::from_words({Word::parse("0", b2)}, b2), 1));
    CHECK(dynamic_weight(g, enum_of({})).final_ww == 0);
    CHECK(dynamic_weight(g, enum_of({""})).final_ww == q(1, 4));
}

TEST_CASE("online weight accumulates stage by stage") {
    DynamicWeightTrace t = dynamic_weight(geo32(), enum_of({"00", "01"}));
    REQUIRE(t.stages.size() == 2);
    CHECK(t.stages[0].increment == q(2, 23));
    CHECK(t.stages[0].ww == q(2, 23));
    CHECK(t.stages[1].increment == q(7, 99));
    CHECK(t.stages[1].ww == q(359, 2277));
    CHECK(t.final_ww == q(359, 2277));

    // Increments are strictly positive, so the weight strictly grows.
    Rational prev = 0;
    for (const auto& s : t.stages) {
        CHECK(sgn(s.increment) > 0);
        CHECK(s.ww == prev + s.increment);
        prev = s.ww;
    }

    // Truncating the enumeration reproduces its own early stages.
    GoodEnumeration full = enum_of({"00", "01"});
    CHECK(dynamic_weight(geo32(), full.prefix(1)).final_ww == q(2, 23));
    CHECK(full.prefix(1).set() ==
          PrefixFreeSet::from_words({Word::parse("00", b2)}, b2));
    CHECK(full.set_after(0).is_empty());
    CHECK(full.set() == PrefixFreeSet::from_words(
                            {Word::parse("00", b2), Word::parse("01", b2)}, b2));
}

TEST_CASE("online weight depends on the order") {
    Kernel g = geo32();
    // Sibling cylinders are symmetric: both orders give the same weight.
    CHECK(dynamic_weight(g, enum_of({"0", "1"})).final_ww == q(15, 56));
    CHECK(dynamic_weight(g, enum_of({"1", "0"})).final_ww == q(15, 56));

    // Different depths interact: discovering the deep word first costs more.
    CHECK(dynamic_weight(g, enum_of({"0", "10"})).final_ww == q(81, 371));
    CHECK(dynamic_weight(g, enum_of({"10", "0"})).final_ww == q(267, 1219));

    OrderDependenceWitness w = order_dependence_witness(g, 2);
    REQUIRE(w.found);
    auto sorted = [](std::vector<Word> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(sorted(w.order_a) == sorted(w.order_b));
    CHECK(w.ww_a != w.ww_b);
    CHECK(dynamic_weight(g, GoodEnumeration::from_words(w.order_a, b2)).final_ww == w.ww_a);
    CHECK(dynamic_weight(g, GoodEnumeration::from_words(w.order_b, b2)).final_ww == w.ww_b);

    // Depth-1 antichains are all symmetric, so the search comes back empty:
    // the only multi-word set is {0, 1}, checked in both orders.
    OrderDependenceWitness none = order_dependence_witness(g, 1);
    CHECK_FALSE(none.found);
    CHECK(none.sets_searched == 1);
    CHECK(none.orders_searched == 2);
}

TEST_CASE("staged measure deposits each increment uniformly") {
    Kernel g = geo32();
    GoodEnumeration e = enum_of({"00", "01"});
    TrieMeasure mu = staged_measure(g, e);
    mu.validate();
    CHECK(mu.total_mass() == q(359, 2277));
    CHECK(mu.cylinder_mass(Word::parse("00", b2)) == q(2, 23));
    CHECK(mu.cylinder_mass(Word::parse("01", b2)) == q(7, 99));
    CHECK(mu.cylinder_mass(Word::parse("1", b2)) == 0);

    // The potential clears 1 on every enumerated cylinder (these exact
    // values certify the two stages interact as expected).
    CHECK(potential(g, mu, EventuallyPeriodicSequence::parse("00:0", b2)) ==
          ExtValue(q(233, 198)));
    CHECK(potential(g, mu, EventuallyPeriodicSequence::parse("01:1", b2)) ==
          ExtValue(q(4693, 4554)));
    CHECK(staged_measure(g, enum_of({})).is_zero());
}

TEST_CASE("weight is sandwiched between capacity and a kernel constant") {
    Kernel g = geo32();
    SandwichReport r = check_sandwich(g, enum_of({"00", "01"}));
    CHECK(r.capacity_value == q(1, 7));
    CHECK(r.ww == q(359, 2277));
    CHECK(r.bound_constant == q(7, 3));
    CHECK(r.lower_ok);
    CHECK(r.upper_ok);
    CHECK(r.pass());
    // 1/7 <= 359/2277 <= 7/3 * 1/7 = 1/3, exactly as reported.
    CHECK(r.capacity_value <= r.ww);
    CHECK(r.ww <= r.bound_constant * r.capacity_value);

    SandwichReport empty = check_sandwich(g, enum_of({}));
    CHECK(empty.capacity_value == 0);
    CHECK(empty.ww == 0);
    CHECK(empty.pass());
}

TEST_CASE("enumeration validation points at the offending stage") {
    CHECK_THROWS_AS(enum_of({"0", "0"}), DomainError);
    CHECK_THROWS_AS(enum_of({"0", "01"}), DomainError);
    CHECK_THROWS_AS(enum_of({"01", "0"}), DomainError);
    try {
        enum_of({"1", "0", "01"});
        FAIL("expected a prefix overlap error");
    } catch (const DomainError& e) {
        std::string msg = e.what();
        CHECK(msg.find("stage 3") != std::string::npos);
        CHECK(msg.find("stage 2") != std::string::npos);
        CHECK(msg.find("'01'") != std::string::npos);
    }
    try {
        enum_of({"1", "1"});
        FAIL("expected a duplicate error");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("already entered at stage 1") != std::string::npos);
    }

    // The online weight rejects kernels without a finite norm bound.
    Kernel t = Kernel::table({q(1), q(1, 2)}, b2);
    CHECK_THROWS_AS(dynamic_weight(t, enum_of({"0"})), DomainError);
    CHECK_THROWS_AS(dynamic_weight(geo32(), enum_of({"0"}), -1), DomainError);
}

TEST_CASE("enumerations parse one word per line") {
    std::istringstream in("00\n\n  01\r\n");
    GoodEnumeration e = GoodEnumeration::parse_lines(in, b2);
    REQUIRE(e.stages() == 2);
    CHECK(e.order()[0] == Word::parse("00", b2));
    CHECK(e.order()[1] == Word::parse("01", b2));

    std::istringstream whole("-\n");
    CHECK(GoodEnumeration::parse_lines(whole, b2).set().is_whole_space());

    std::istringstream bad("0\n01\n");
    CHECK_THROWS_AS(GoodEnumeration::parse_lines(bad, b2), ParseError);
    std::istringstream junk("0x\n");
    CHECK_THROWS_AS(GoodEnumeration::parse_lines(junk, b2), ParseError);
}

TEST_CASE("trace CSV is byte-for-byte reproducible") {
    Kernel g = geo32();

    GoodEnumeration single = enum_of({"0"});
    std::ostringstream out;
    write_trace_csv(out, g, single, dynamic_weight(g, single));
    CHECK(out.str() ==
          "stage,word,increment,ww,capacity,bound_A,ratio\n"
          "1,0,1/7,1/7,1/7,7/3,1\n"
          "final,PASS,,1/7,1/7,7/3,1\n");

    GoodEnumeration pair = enum_of({"00", "01"});
    std::ostringstream out2;
    write_trace_csv(out2, g, pair, dynamic_weight(g, pair));
    CHECK(out2.str() ==
          "stage,word,increment,ww,capacity,bound_A,ratio\n"
          "1,00,2/23,2/23,2/23,7/3,1\n"
          "2,01,7/99,359/2277,1/7,7/3,2513/2277\n"
          "final,PASS,,359/2277,1/7,7/3,2513/2277\n");

    // Empty enumeration: capacity 0 leaves the ratio column blank.
    GoodEnumeration none = enum_of({});
    std::ostringstream out3;
    write_trace_csv(out3, g, none, dynamic_weight(g, none));
    CHECK(out3.str() ==
          "stage,word,increment,ww,capacity,bound_A,ratio\n"
          "final,PASS,,0,0,7/3,\n");

    // The empty word prints as '-'.
    GoodEnumeration whole = enum_of({""});
    std::ostringstream out4;
    write_trace_csv(out4, g, whole, dynamic_weight(g, whole));
    CHECK(out4.str() ==
          "stage,word,increment,ww,capacity,bound_A,ratio\n"
          "1,-,1/4,1/4,1/4,7/3,1\n"
          "final,PASS,,1/4,1/4,7/3,1\n");
}

TEST_CASE("logarithm inequality holds on the sampled interval") {
    CalcInequalityReport r = calc_inequality_check(q(7, 3), 200);
    CHECK(r.a == q(7, 3));
    CHECK(r.samples == 200);
    CHECK(r.pass);
    CHECK(r.worst_margin >= -1e-12);

    // a = 2 collapses the interval to the equality point y = 0.
    CalcInequalityReport edge = calc_inequality_check(q(2), 10);
    CHECK(edge.pass);

    CHECK(calc_inequality_check(q(5), 500).pass);
    CHECK_THROWS_AS(calc_inequality_check(q(3, 2)), DomainError);
    CHECK_THROWS_AS(calc_inequality_check(q(7, 3), 0), DomainError);
}
