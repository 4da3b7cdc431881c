#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stringex/core.hpp"
#include "stringex/diagram.hpp"
#include "stringex/exchange.hpp"

// Brute-force cross-checks for the exchange-matrix construction. Nothing here
// calls into exchange.cpp: endpoints and crossings are recomputed from the
// raw word, so agreement with exchange_matrix() is independent evidence.
// Not part of the stable API.
namespace stringex::oracle {

/// b_xz for closed strings on different levels, as the sum of the
/// contributions of the four endpoint nodes of x and z.
/// Throws Error{MalformedInput} when x and z share a level.
Integer entry_by_four_terms(const ShuffleWord& word, const ClosedStringId& x,
                            const ClosedStringId& z);

/// b_xy for strings on the same level: +-1 through the shared node, else 0.
Integer same_level_entry(const ShuffleWord& word, const ClosedStringId& x,
                         const ClosedStringId& y);

/// Whole matrix assembled entry by entry from the two rules above.
ExchangeMatrix exchange_matrix_by_entries(const ShuffleWord& word);

/// Same-level entries in {0, +-1}, cross-level entries in {0, +-a_kj}.
bool check_entry_ranges(const ExchangeMatrix& m, const CartanMatrix& cartan);

struct Mismatch {
  ClosedStringId x;
  ClosedStringId z;
  Integer expected;
  Integer actual;
};

/// Entries where exchange_matrix(word) disagrees with the oracle.
std::vector<Mismatch> compare_with_exchange(const ShuffleWord& word);

}  // namespace stringex::oracle
