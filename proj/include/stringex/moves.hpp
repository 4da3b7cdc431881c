#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "stringex/core.hpp"
#include "stringex/diagram.hpp"
#include "stringex/mutation.hpp"

namespace stringex {

/// What a flip does to the exchange matrix: nothing, or a single mutation.
struct FlipEffect {
  std::optional<ClosedStringId> mutated;

  static FlipEffect identity() { return {}; }
  static FlipEffect mutate_at(ClosedStringId v) { return {v}; }
  bool is_identity() const { return !mutated.has_value(); }

  friend bool operator==(const FlipEffect&, const FlipEffect&) = default;
};

struct FlipResult {
  ShuffleWord word;
  FlipEffect effect;
};

/// Flips the diagonal between triangles pos and pos+1 (1-based), which must
/// have opposite origins. Equal letters v give MutateAt(v:r), r the rank of
/// the node at pos on level v, read off the word before the flip.
///
/// Throws Error{PositionOutOfRange} or Error{NotAQuadrilateral}.
FlipResult flip(const ShuffleWord& word, int pos);

struct FlipStep {
  int pos;
  FlipEffect effect;

  friend bool operator==(const FlipStep&, const FlipStep&) = default;
};

/// Adjacent-transposition path from one triangulation to another of the
/// same trapezoid. Throws Error{NotSameShuffleClass}.
std::vector<FlipStep> flip_path(const ShuffleWord& from, const ShuffleWord& to);

/// Mutation sequence s with apply_seq(exchange_matrix(from), s) equal to
/// exchange_matrix(to) for the path's endpoints.
MutationSeq path_mutations(const std::vector<FlipStep>& path);

enum class ReductionKind { Ld, Lu, Rd, Ru };

std::string_view to_string(ReductionKind kind);

/// Accepts "Ld", "Lu", "Rd", "Ru". Throws Error{MalformedInput}.
ReductionKind parse_reduction_kind(std::string_view text);

/// Toggles the origin of the first (L) or last (R) triangle: Ld and Rd need a
/// Bottom letter there and move it to the top base, Lu and Ru the reverse.
/// Throws Error{ReductionNotApplicable}.
ShuffleWord reduce(const ShuffleWord& word, ReductionKind kind);

struct BottomReduction {
  /// All-Bottom word for i^-1 ∘ j.
  ShuffleWord bottom;
  /// apply_seq(exchange_matrix(bottom), mutations), renamed through
  /// label_map, equals exchange_matrix(word).
  MutationSeq mutations;
  /// Bottom-word vertex -> original-word vertex.
  std::map<ClosedStringId, ClosedStringId> label_map;
  /// Every flip performed, in order; reductions are not listed.
  std::vector<FlipStep> flips;
};

/// Repeatedly bubbles the leftmost Top letter to the front by flips and
/// toggles it to the bottom base, until no Top letter remains.
BottomReduction reduce_to_bottom(const ShuffleWord& word);

}  // namespace stringex
