#include <doctest.h>

#include "stringex/error.hpp"
#include "stringex/mutation.hpp"
#include "stringex/oracle.hpp"
#include "support.hpp"

using namespace stringex;
using namespace stringex::test;

TEST_SUITE("oracle") {
  TEST_CASE("four-term entries of the three-level example") {
    const auto w = tri_word(cartan_tri_a1());
    CHECK(oracle::entry_by_four_terms(w, id(1, 2), id(3, 1)) == 7);
    CHECK(oracle::entry_by_four_terms(w, id(2, 1), id(3, 1)) == -9);
    CHECK(oracle::entry_by_four_terms(w, id(1, 1), id(2, 1)) == 0);
    CHECK_THROWS_AS(oracle::entry_by_four_terms(w, id(1, 1), id(1, 2)), Error);
    CHECK(oracle::same_level_entry(w, id(1, 1), id(1, 2)) == 1);
    CHECK(oracle::same_level_entry(w, id(3, 2), id(3, 1)) == 1);
  }

  TEST_CASE("entry ranges of built and mutated matrices") {
    for (const auto& w : {tri_word(cartan_tri_a1()), tri_word(cartan_tri_a2()),
                          tri_word(cartan_tri_sparse()), bfz_word(), seven_word()})
      CHECK(oracle::check_entry_ranges(exchange_matrix(w), w.cartan()));
    // Mutating the 4x4 example at 1:2 happens to stay in range.
    CHECK(oracle::check_entry_ranges(mutate(exchange_matrix(bfz_word()), id(1, 2)), cartan_a2()));
    const auto w = tri_word(cartan_tri_a1());
    CHECK_FALSE(oracle::check_entry_ranges(mutate(exchange_matrix(w), id(3, 1)), w.cartan()));
  }

  TEST_CASE("oracle matrix equals the exchange construction") {
    std::mt19937_64 rng(seed());
    for (int trial = 0; trial < 300; ++trial) {
      const auto w = random_instance(rng, 4, 12);
      CHECK(oracle::compare_with_exchange(w).empty());
      CHECK(oracle::check_entry_ranges(exchange_matrix(w), w.cartan()));
    }
  }
}
