#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stringex/exchange.hpp"
#include "stringex/mutation.hpp"

namespace stringex {

/// Cross entries b_xy, x in part and y outside it, are all >= 0 or all <= 0.
/// Throws Error{UnknownVertex}.
template <typename Scalar>
bool is_triangular_extension(const BasicExchangeMatrix<Scalar>& m,
                             const std::set<ClosedStringId>& part) {
  for (const auto& id : part) m.require(id);
  bool any_pos = false;
  bool any_neg = false;
  for (Eigen::Index r = 0; r < m.size(); ++r) {
    if (!part.contains(m.labels()[static_cast<std::size_t>(r)])) continue;
    for (Eigen::Index c = 0; c < m.size(); ++c) {
      if (part.contains(m.labels()[static_cast<std::size_t>(c)])) continue;
      any_pos |= m.entries()(r, c) > 0;
      any_neg |= m.entries()(r, c) < 0;
    }
  }
  return !(any_pos && any_neg);
}

/// Column of v (off the diagonal) is sign-coherent, i.e. removing v leaves
/// a matrix of which m is a source-sink extension.
template <typename Scalar>
bool is_source_sink_extension(const BasicExchangeMatrix<Scalar>& m, const ClosedStringId& v) {
  const Eigen::Index c = m.require(v);
  bool any_pos = false;
  bool any_neg = false;
  for (Eigen::Index r = 0; r < m.size(); ++r) {
    if (r == c) continue;
    any_pos |= m.entries()(r, c) > 0;
    any_neg |= m.entries()(r, c) < 0;
  }
  return !(any_pos && any_neg);
}

/// For an all-Bottom word with m >= 1 closed strings on the level j1 of its
/// first letter: mu_(j1:2) ∘ ... ∘ mu_(j1:m), after which the column of j1:1
/// is entrywise non-negative. Throws Error{LevelEmpty} when m = 0 and
/// Error{MalformedInput} for words with a Top letter.
MutationSeq source_mutation_seq(const ShuffleWord& word);

/// Mirror image on the last letter j_l with m' closed strings on its level:
/// mu_(j_l:m'-1) ∘ ... ∘ mu_(j_l:1), after which the column of j_l:m' is
/// entrywise non-positive.
MutationSeq sink_mutation_seq(const ShuffleWord& word);

/// One layer of the recursion on the all-Bottom word. Peeling the first
/// letter (on `level`) deletes vertex level:1; the remaining strings on that
/// level are renumbered level:k -> level:k-1.
struct CertificateStep {
  int level = 0;
  bool skipped = false;           // no closed string on `level`, nothing adjoined
  ClosedStringId vertex;          // level:1 unless skipped
  MutationSeq mu;                 // in this layer's labels
  std::map<ClosedStringId, Integer> connection;  // column of vertex in mu(B)
};

/// Replayable witness that an exchange matrix lies in the class generated
/// from the empty matrix by mutations and source-sink extensions.
struct Certificate {
  std::vector<CertificateStep> steps;  // outermost layer first
  MutationSeq outer_mutations;
  std::map<ClosedStringId, ClosedStringId> label_map;  // bottom-word -> target
  std::vector<ClosedStringId> target_labels;
  std::vector<Integer> symmetrizer;  // s_1..s_n of the Cartan matrix

  std::size_t extension_count() const;
};

/// Builds the certificate by reducing to the all-Bottom word and peeling
/// letters from the left. Throws Error{InternalLemmaViolation} if a
/// connection column fails to be non-negative or a peeled matrix disagrees
/// with the freshly built one.
Certificate certify_pprime(const ShuffleWord& word);

struct VerificationResult {
  bool ok = false;
  std::optional<std::size_t> failing_step;  // index into Certificate::steps
  std::string detail;

  explicit operator bool() const { return ok; }
};

/// Replays the certificate from the empty matrix, innermost layer first:
/// rename into the layer's labels, apply mu, adjoin the vertex with its
/// stored column (the row follows from the symmetrizer), check the
/// source-sink condition, undo mu. Then applies the outer mutations and the
/// label map and compares with m entrywise.
VerificationResult verify_certificate(const Certificate& cert, const ExchangeMatrix& m);

}  // namespace stringex
