#include <doctest.h>

#include <stdexcept>

#include "pervhilb/partition.hpp"

using namespace pervhilb;

namespace {

// Independent count: p(n) via the parts-bounded recursion.
long long count_partitions(int n, int max_part) {
  if (n == 0) return 1;
  if (n < 0 || max_part == 0) return 0;
  return count_partitions(n - max_part, max_part) + count_partitions(n, max_part - 1);
}

}  // namespace

TEST_CASE("partitions of small n") {
  CHECK(partitions(0) == std::vector<Partition>{Partition::empty()});
  CHECK(partitions(1) == std::vector<Partition>{Partition({1})});
  // lexicographically decreasing multiplicity vectors: 1^2 before 2^1
  CHECK(partitions(2) == std::vector<Partition>{Partition({2}), Partition({0, 1})});
  CHECK(partitions(5).size() == 7);
}

TEST_CASE("partition counts match the recursion") {
  for (int n = 0; n <= 22; ++n)
    CHECK(static_cast<long long>(partitions(n).size()) == count_partitions(n, n));
}

TEST_CASE("weight and length invariants") {
  for (int n = 0; n <= 10; ++n) {
    for (const Partition& nu : partitions(n)) {
      CHECK(nu.weight() == n);
      if (n >= 1) {
        CHECK(nu.length() >= 1);
        CHECK(nu.length() <= n);
      } else {
        CHECK(nu.length() == 0);
      }
    }
  }
}

TEST_CASE("multiplicity access and part removal") {
  const Partition nu({1, 1});  // 1^1 2^1, weight 3
  CHECK(nu.weight() == 3);
  CHECK(nu.length() == 2);
  CHECK(nu.multiplicity(1) == 1);
  CHECK(nu.multiplicity(2) == 1);
  CHECK(nu.multiplicity(3) == 0);

  const Partition less = nu.remove_one_part(2);
  CHECK(less == Partition({1}));
  CHECK(less.weight() == 1);
  CHECK_THROWS_AS(nu.remove_one_part(3), std::invalid_argument);

  CHECK(Partition::single(3) == Partition({0, 0, 1}));
  CHECK(nu.str() == "1^1 2^1");
  CHECK(Partition::empty().str() == "()");
}

TEST_CASE("trailing zeros are trimmed") {
  CHECK(Partition({2, 0, 0}) == Partition({2}));
  CHECK_THROWS_AS(Partition({1, -1}), std::invalid_argument);
}
