#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "structalg/errors.hpp"
#include "structalg/field.hpp"
#include "test_util.hpp"

using structalg::DivisionByZero;
using structalg::GQ;
using structalg::sqrt_in_field;
using structalg::sqrt_rational;

TEST_CASE("construction and accessors") {
    GQ zero;
    CHECK(zero.is_zero());
    GQ three(3);
    CHECK(three.is_real());
    CHECK(three.re() == 3);
    GQ i = GQ::i();
    CHECK(i.re() == 0);
    CHECK(i.im() == 1);
    CHECK(GQ::rational(6, 4).re() == mpq_class(3, 2));
}

TEST_CASE("field axioms on random values") {
    testutil::Rng rng(7);
    for (int t = 0; t < 300; ++t) {
        GQ a = rng.scalar(), b = rng.scalar(), c = rng.scalar();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + GQ(0) == a);
        CHECK(a * GQ(1) == a);
        CHECK((a - a).is_zero());
        if (!a.is_zero()) CHECK(a / a == GQ(1));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("conjugation and norm") {
    testutil::Rng rng(11);
    for (int t = 0; t < 100; ++t) {
        GQ a = rng.scalar(), b = rng.scalar();
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(a.norm() == (a * a.conj()).re());
        CHECK((a * a.conj()).im() == 0);
    }
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(GQ(1) / GQ(0), DivisionByZero);
}

TEST_CASE("parse/str round-trip is bit-exact") {
    for (const char* s : {"0", "3", "-1/2", "i", "-i", "2*i", "-3/4*i", "1+i", "3-1/2*i",
                          "-2/7+5/3*i", "1/2-i"}) {
        GQ v = GQ::parse(s);
        CHECK(v.str() == s);
        CHECK(GQ::parse(v.str()) == v);
    }
    testutil::Rng rng(13);
    for (int t = 0; t < 300; ++t) {
        GQ v = rng.scalar();
        CHECK(GQ::parse(v.str()) == v);
    }
}

TEST_CASE("parse rejects malformed input") {
    for (const char* s : {"", "x", "1//2", "1+", "i*i", "3..5", "1/0"})
        CHECK_THROWS_AS(GQ::parse(s), structalg::EngineError);
}

TEST_CASE("rational square roots") {
    CHECK(sqrt_rational(mpq_class(9, 4)) == mpq_class(3, 2));
    CHECK(sqrt_rational(mpq_class(0)) == mpq_class(0));
    CHECK(!sqrt_rational(mpq_class(2)).has_value());
    CHECK(!sqrt_rational(mpq_class(-1)).has_value());
}

TEST_CASE("square roots in Q(i)") {
    // -1 has root i; 2i has root 1+i; 2 has no root in Q(i).
    CHECK(sqrt_in_field(GQ(-1)) == GQ::i());
    CHECK(sqrt_in_field(GQ::parse("2*i")) == GQ::parse("1+i"));
    CHECK(!sqrt_in_field(GQ(2)).has_value());
    CHECK(!sqrt_in_field(GQ::i()).has_value());
    testutil::Rng rng(17);
    for (int t = 0; t < 200; ++t) {
        GQ a = rng.scalar();
        GQ sq = a * a;
        auto r = sqrt_in_field(sq);
        REQUIRE(r.has_value());
        CHECK(*r * *r == sq);
        // Sign convention: positive real part, or zero real part and
        // nonnegative imaginary part.
        CHECK((r->re() > 0 || (r->re() == 0 && r->im() >= 0)));
    }
}
