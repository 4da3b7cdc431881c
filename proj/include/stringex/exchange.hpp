#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "stringex/core.hpp"
#include "stringex/diagram.hpp"
#include "stringex/error.hpp"

namespace stringex {

/// Integer matrix indexed by closed-string labels. Row/column i of entries
/// belongs to labels[i]; the level of a vertex is carried by its label.
template <typename Scalar>
class BasicExchangeMatrix {
 public:
  using Matrix = MatrixX<Scalar>;

  BasicExchangeMatrix() = default;

  BasicExchangeMatrix(std::vector<ClosedStringId> labels, Matrix entries)
      : labels_(std::move(labels)), entries_(std::move(entries)) {
    if (entries_.rows() != static_cast<Eigen::Index>(labels_.size()) ||
        entries_.cols() != entries_.rows())
      throw Error(ErrorCode::MalformedInput, "label count does not match matrix shape");
    std::set<ClosedStringId> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size())
      throw Error(ErrorCode::MalformedInput, "duplicate vertex label");
  }

  Eigen::Index size() const { return entries_.rows(); }
  bool empty() const { return labels_.empty(); }

  const std::vector<ClosedStringId>& labels() const { return labels_; }
  const Matrix& entries() const { return entries_; }
  Matrix& entries() { return entries_; }

  std::optional<Eigen::Index> index_of(const ClosedStringId& id) const {
    const auto it = std::find(labels_.begin(), labels_.end(), id);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<Eigen::Index>(it - labels_.begin());
  }

  /// Throws Error{UnknownVertex}.
  Eigen::Index require(const ClosedStringId& id) const {
    const auto i = index_of(id);
    if (!i) throw Error(ErrorCode::UnknownVertex, "no vertex " + to_string(id));
    return *i;
  }

  bool contains(const ClosedStringId& id) const { return index_of(id).has_value(); }

  /// b_xz by label.
  Scalar operator()(const ClosedStringId& x, const ClosedStringId& z) const {
    return entries_(require(x), require(z));
  }

  /// Column of v, without the diagonal entry, keyed by label.
  std::map<ClosedStringId, Scalar> column(const ClosedStringId& v) const {
    const Eigen::Index c = require(v);
    std::map<ClosedStringId, Scalar> out;
    for (Eigen::Index r = 0; r < size(); ++r)
      if (r != c) out.emplace(labels_[static_cast<std::size_t>(r)], entries_(r, c));
    return out;
  }

  friend bool operator==(const BasicExchangeMatrix& lhs, const BasicExchangeMatrix& rhs) {
    return lhs.labels_ == rhs.labels_ && lhs.entries_ == rhs.entries_;
  }

 private:
  std::vector<ClosedStringId> labels_;
  Matrix entries_;
};

using ExchangeMatrix = BasicExchangeMatrix<Integer>;

/// Same vertices, rows and columns listed in the given order.
template <typename Scalar>
BasicExchangeMatrix<Scalar> reordered(const BasicExchangeMatrix<Scalar>& m,
                                      const std::vector<ClosedStringId>& order) {
  if (order.size() != m.labels().size())
    throw Error(ErrorCode::UnknownVertex, "reordering must list every vertex exactly once");
  std::vector<Eigen::Index> idx;
  idx.reserve(order.size());
  for (const auto& id : order) idx.push_back(m.require(id));
  typename BasicExchangeMatrix<Scalar>::Matrix out(m.size(), m.size());
  for (Eigen::Index r = 0; r < m.size(); ++r)
    for (Eigen::Index c = 0; c < m.size(); ++c)
      out(r, c) = m.entries()(idx[static_cast<std::size_t>(r)], idx[static_cast<std::size_t>(c)]);
  return BasicExchangeMatrix<Scalar>(order, std::move(out));
}

/// Rows and columns sorted by the vertex order on labels.
template <typename Scalar>
BasicExchangeMatrix<Scalar> canonical(const BasicExchangeMatrix<Scalar>& m) {
  auto order = m.labels();
  std::sort(order.begin(), order.end());
  return reordered(m, order);
}

/// Renames vertices through map (labels absent from map keep their name).
template <typename Scalar>
BasicExchangeMatrix<Scalar> relabeled(const BasicExchangeMatrix<Scalar>& m,
                                      const std::map<ClosedStringId, ClosedStringId>& map) {
  std::vector<ClosedStringId> labels;
  labels.reserve(m.labels().size());
  for (const auto& id : m.labels()) {
    const auto it = map.find(id);
    labels.push_back(it == map.end() ? id : it->second);
  }
  return BasicExchangeMatrix<Scalar>(std::move(labels), m.entries());
}

/// Deletes row and column v.
template <typename Scalar>
BasicExchangeMatrix<Scalar> without_vertex(const BasicExchangeMatrix<Scalar>& m,
                                           const ClosedStringId& v) {
  const Eigen::Index drop = m.require(v);
  const Eigen::Index n = m.size() - 1;
  std::vector<ClosedStringId> labels;
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i <= n; ++i) {
    if (i == drop) continue;
    keep.push_back(i);
    labels.push_back(m.labels()[static_cast<std::size_t>(i)]);
  }
  typename BasicExchangeMatrix<Scalar>::Matrix out(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      out(r, c) = m.entries()(keep[static_cast<std::size_t>(r)], keep[static_cast<std::size_t>(c)]);
  return BasicExchangeMatrix<Scalar>(std::move(labels), std::move(out));
}

/// Entrywise equality up to row/column order.
template <typename Scalar>
bool same_matrix(const BasicExchangeMatrix<Scalar>& lhs, const BasicExchangeMatrix<Scalar>& rhs) {
  if (lhs.size() != rhs.size()) return false;
  for (const auto& id : lhs.labels())
    if (!rhs.contains(id)) return false;
  return reordered(rhs, lhs.labels()).entries() == lhs.entries();
}

/// 2 * B^(m) for the node at triangle node_pos, as a sparse matrix over the
/// diagram's vertex order. Doubling keeps the half-integer contributions
/// exact.
Eigen::SparseMatrix<Integer> node_contribution(const StringDiagram& diagram, int node_pos);

/// B = sum over nodes of B^(m). Throws Error{IntegralityViolation} if a
/// doubled entry is odd, which valid input never produces.
ExchangeMatrix exchange_matrix(const StringDiagram& diagram);
ExchangeMatrix exchange_matrix(const ShuffleWord& word);

/// s'_x = s_{level(x)}, checked against D * B being skew-symmetric.
/// Throws Error{SymmetrizerCheckFailed}.
VectorX<Integer> skew_symmetrizer(const ExchangeMatrix& m, const CartanMatrix& cartan);

/// True iff diag(d) * B is skew-symmetric.
template <typename Scalar>
bool is_skew_symmetrized_by(const BasicExchangeMatrix<Scalar>& m, const VectorX<Integer>& d) {
  const auto& b = m.entries();
  for (Eigen::Index i = 0; i < m.size(); ++i)
    for (Eigen::Index j = i; j < m.size(); ++j)
      if (Scalar(d(i)) * b(i, j) != -Scalar(d(j)) * b(j, i)) return false;
  return true;
}

template <typename Scalar>
bool is_skew_symmetric(const BasicExchangeMatrix<Scalar>& m) {
  return m.entries() == (-m.entries().transpose()).eval();
}

using Arrow = std::pair<ClosedStringId, ClosedStringId>;

struct ColouredQuiver {
  std::vector<ClosedStringId> vertices;
  std::set<Arrow> horizontal;  // same level, b_xz = -1
  std::set<Arrow> inclined;    // levels k != j, b_xz = a_kj < 0

  friend bool operator==(const ColouredQuiver&, const ColouredQuiver&) = default;
};

/// Throws Error{EntryOutOfRange} if some entry is not of the form produced
/// by exchange_matrix (e.g. after a mutation).
ColouredQuiver coloured_quiver(const ExchangeMatrix& m, const CartanMatrix& cartan);

/// Inverse of coloured_quiver given the Cartan matrix.
ExchangeMatrix from_coloured_quiver(const ColouredQuiver& q, const CartanMatrix& cartan);

/// Multigraph of a skew-symmetric matrix: b_ij > 0 means b_ij arrows j -> i.
struct UsualQuiver {
  std::vector<ClosedStringId> vertices;
  std::map<Arrow, Integer> arrows;  // (from, to) -> multiplicity > 0

  Integer multiplicity(const ClosedStringId& from, const ClosedStringId& to) const {
    const auto it = arrows.find({from, to});
    return it == arrows.end() ? 0 : it->second;
  }

  friend bool operator==(const UsualQuiver&, const UsualQuiver&) = default;
};

/// Throws Error{NotSkewSymmetric}.
UsualQuiver usual_quiver(const ExchangeMatrix& m);

/// b_ij = |j -> i| - |i -> j|.
ExchangeMatrix matrix_of(const UsualQuiver& q);

std::string to_dot(const UsualQuiver& q);
std::string to_dot(const ColouredQuiver& q, const ExchangeMatrix& m);

}  // namespace stringex
