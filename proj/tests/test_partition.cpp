#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hedonic/errors.hpp"
#include "hedonic/partition.hpp"

using hedonic::Partition;
using hedonic::PartitionStream;
using hedonic::PlayerSet;

TEST_CASE("partition canonicalizes by minimum member") {
    const Partition pi(4, {PlayerSet{2}, PlayerSet{1, 4}, PlayerSet{3}});
    CHECK(pi.blocks()[0] == PlayerSet{1, 4});
    CHECK(pi.blocks()[1] == PlayerSet{2});
    CHECK(pi.blocks()[2] == PlayerSet{3});
    CHECK(pi.to_string() == "{1,4|2|3}");
    CHECK(pi.block_of(4) == PlayerSet{1, 4});
    CHECK(pi == Partition(4, {PlayerSet{3}, PlayerSet{2}, PlayerSet{1, 4}}));
}

TEST_CASE("partition validation") {
    CHECK_THROWS_WITH_AS(Partition(4, {PlayerSet{1, 4}, PlayerSet{2}}),
                         "player 3 missing from partition", std::invalid_argument);
    CHECK_THROWS_AS(Partition(3, {PlayerSet{1, 2}, PlayerSet{2, 3}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Partition(2, {PlayerSet{1, 2}, PlayerSet{}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Partition(2, {PlayerSet{1, 2, 3}}), std::invalid_argument);
}

TEST_CASE("singletons and grand") {
    CHECK(Partition::singletons(3).to_string() == "{1|2|3}");
    CHECK(Partition::grand(3).to_string() == "{1,2,3}");
    CHECK(Partition::singletons(1) == Partition::grand(1));
}

namespace {

std::uint64_t count_partitions(int n) {
    PartitionStream stream(n);
    std::uint64_t count = 0;
    while (stream.next()) ++count;
    return count;
}

}  // namespace

TEST_CASE("enumeration counts match Bell numbers") {
    const std::uint64_t bell[] = {1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
    for (int n = 1; n <= 10; ++n)
        CHECK(count_partitions(n) == bell[n - 1]);
}

TEST_CASE("n=1 yields exactly the trivial partition") {
    PartitionStream stream(1);
    auto first = stream.next();
    REQUIRE(first.has_value());
    CHECK(first->to_string() == "{1}");
    CHECK(!stream.next().has_value());
}

TEST_CASE("n=3 enumeration order is restricted-growth lexicographic") {
    PartitionStream stream(3);
    std::vector<std::string> seen;
    while (auto pi = stream.next()) seen.push_back(pi->to_string());
    const std::vector<std::string> expected = {
        "{1,2,3}", "{1,2|3}", "{1,3|2}", "{1|2,3}", "{1|2|3}"};
    CHECK(seen == expected);
}

TEST_CASE("enumeration is capped") {
    CHECK_THROWS_AS(PartitionStream(14), hedonic::LimitExceededError);
    CHECK_THROWS_AS(PartitionStream(0), std::invalid_argument);
}

TEST_CASE("streams are independent") {
    PartitionStream a(4), b(4);
    a.next();
    a.next();
    auto first_b = b.next();
    REQUIRE(first_b.has_value());
    CHECK(first_b->to_string() == "{1,2,3,4}");
}
