#include "doctest.h"

#include "trop/partition.hpp"
#include "trop/rational.hpp"

using namespace trop;

TEST_CASE("rational arithmetic stays reduced") {
    Rational a(1, 2), b(1, 3);
    CHECK((a + b) == Rational(5, 6));
    CHECK((a - b) == Rational(1, 6));
    CHECK((a * b) == Rational(1, 6));
    CHECK((a / b) == Rational(3, 2));
    CHECK(Rational(4, 8) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7).str() == "0");
}

TEST_CASE("rational string form has no decimals") {
    CHECK(Rational(1, 2).str() == "1/2");
    CHECK(Rational(4).str() == "4");
    CHECK(Rational(8, 2).str() == "4");
    CHECK(Rational(-1, 2).str() == "-1/2");
}

TEST_CASE("rational overflow is an error, not wraparound") {
    Rational big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * Rational(4), Error);
}

TEST_CASE("partition normalization and centralizer order") {
    Partition p(std::vector<int>{1, 2});
    CHECK(p.parts() == std::vector<int>{2, 1});
    CHECK(p.sum() == 3);
    CHECK(p.length() == 2);
    CHECK(p.str() == "(2,1)");
    CHECK_THROWS_AS(Partition(std::vector<int>{0}), Error);

    // z((2)) = 2, z((1,1)) = 2, z((2,1)) = 2, z((3)) = 3, z((2,2)) = 8
    CHECK(Partition::single(2).centralizer_order() == 2);
    CHECK(Partition::ones(2).centralizer_order() == 2);
    CHECK(Partition(std::vector<int>{2, 1}).centralizer_order() == 2);
    CHECK(Partition::single(3).centralizer_order() == 3);
    CHECK(Partition(std::vector<int>{2, 2}).centralizer_order() == 8);
}

TEST_CASE("partitions_of enumerates in reverse lexicographic order") {
    auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4.front().parts() == std::vector<int>{4});
    CHECK(p4.back().parts() == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("simple profile") {
    CHECK(Partition::simple(4).parts() == std::vector<int>{2, 1, 1});
    CHECK(Partition::simple(2).parts() == std::vector<int>{2});
}

TEST_CASE("submultisets_with_sum") {
    std::vector<int> pool{2, 1, 1};
    auto subs = submultisets_with_sum(pool, 2);
    // (2) and (1,1)
    CHECK(subs.size() == 2);
    CHECK(multiset_minus(pool, std::vector<int>{1, 1}) == std::vector<int>{2});
}
