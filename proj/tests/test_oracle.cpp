#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <type_traits>

#include "qmodw/errors.hpp"
#include "qmodw/oracle.hpp"
#include "qmodw/subroutines.hpp"
#include "test_support.hpp"

using namespace qmodw;

namespace {

// The hidden string has no accessor: these probes must all fail to compile.
template <typename T>
concept exposes_bits = requires(T& o) { o.bits(); } || requires(T& o) { o.hidden(); } ||
                       requires(T& o) { o.input(); } || requires(T& o) { o.data(); } ||
                       requires(T& o) { o[0]; } || requires(T& o) { o.begin(); };

}  // namespace

TEST_CASE("hidden string is only reachable through queries") {
    static_assert(!exposes_bits<CountingOracle>);
    static_assert(!std::is_copy_constructible_v<CountingOracle>);
    static_assert(!std::is_copy_assignable_v<CountingOracle>);
}

TEST_CASE("phase_apply") {
    CountingOracle o(parse_bits("101"));
    const BlockView view{{1, 2, 3}, 2};
    const AlgebraicNumber s = AlgebraicNumber::one() / AlgebraicNumber(5L);  // any common scale
    const StateVector v{s, s, s, s, s};
    CHECK(o.phase_apply(view, v) == StateVector{-s, s, -s, s, s});
    CHECK(o.query_count() == 1);

    // padding dimensions are untouched but still cost a query
    const StateVector pad = StateVector::basis(5, 4);
    CHECK(o.phase_apply(view, pad) == pad);
    CHECK(o.query_count() == 2);

    CHECK_THROWS_AS(o.phase_apply(BlockView{{1, 4}, 0}, StateVector(2)), IndexOutOfRange);
    CHECK_THROWS_AS(o.phase_apply(BlockView{{0, 1}, 0}, StateVector(2)), IndexOutOfRange);
    CHECK_THROWS_AS(o.phase_apply(view, StateVector(4)), DimensionMismatch);
    CHECK_THROWS_AS(o.phase_apply(BlockView{{1, 1}, 0}, StateVector(2)), DomainError);
    CHECK(o.query_count() == 2);
}

TEST_CASE("query_bit") {
    CountingOracle o(parse_bits("10"));
    CHECK(o.query_bit(1) == 1);
    CHECK(o.query_count() == 1);
    CHECK(o.query_bit(2) == 0);
    CHECK(o.query_count() == 2);
    CHECK_THROWS_AS(o.query_bit(3), IndexOutOfRange);
    CHECK_THROWS_AS(o.query_bit(0), IndexOutOfRange);
}

TEST_CASE("query_count") {
    CountingOracle fresh(parse_bits("000"));
    CHECK(query_count(fresh) == 0);
    deutsch(fresh, 1, 2);
    CHECK(query_count(fresh) == 1);
    CountingOracle other(parse_bits("011"));
    mod3(other, 1, 2, 3);
    CHECK(query_count(other) == 2);
}

TEST_CASE("oracle is an involution that costs two queries") {
    std::mt19937_64 rng(41);
    CountingOracle o(parse_bits("1101"));
    const BlockView view{{4, 2, 1}, 1};
    for (int trial = 0; trial < 20; ++trial) {
        const StateVector v = qmodw::testing::random_state(rng, 4);
        const auto before = o.query_count();
        CHECK(o.phase_apply(view, o.phase_apply(view, v)) == v);
        CHECK(o.query_count() == before + 2);
    }
}

TEST_CASE("transcript") {
    CountingOracle o(parse_bits("0110"));
    o.record_transcript(true);
    o.phase_apply(BlockView{{2, 3}, 1}, StateVector(3));
    o.query_bit(4);
    REQUIRE(o.transcript().size() == 2);
    const Json j = to_json(o.transcript());
    CHECK(j.dump() ==
          R"([{"kind":"phase","map":[2,3],"padding":1,"count":1},{"kind":"bit","index":4,"count":2}])");
}

TEST_CASE("bit strings") {
    CHECK(parse_bits("0110") == BitString{0, 1, 1, 0});
    CHECK(format_bits(BitString{1, 0, 1}) == "101");
    CHECK_THROWS_AS(parse_bits(""), ParseError);
    CHECK_THROWS_AS(parse_bits("012"), ParseError);
    CHECK_THROWS_AS(CountingOracle(BitString{0, 2}), DomainError);
}
