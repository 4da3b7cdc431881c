#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "stringex/exchange.hpp"

namespace stringex {

/// A mutation sequence in composition order: directions {a, b, c} denotes
/// mu_a ∘ mu_b ∘ mu_c, so c is applied first and a last. This matches the
/// way sequences are written as composed maps. Use from_application_order()
/// when the steps are known in the order they are performed.
struct MutationSeq {
  std::vector<ClosedStringId> directions;

  static MutationSeq from_application_order(std::vector<ClosedStringId> steps) {
    std::reverse(steps.begin(), steps.end());
    return MutationSeq{std::move(steps)};
  }

  std::vector<ClosedStringId> application_order() const {
    return {directions.rbegin(), directions.rend()};
  }

  /// Each mutation is an involution, so the inverse is the reversed list.
  MutationSeq inverse() const { return from_application_order(directions); }

  /// later ∘ (*this): apply *this first, then later.
  MutationSeq then(const MutationSeq& later) const {
    MutationSeq out{later.directions};
    out.directions.insert(out.directions.end(), directions.begin(), directions.end());
    return out;
  }

  std::size_t size() const { return directions.size(); }
  bool empty() const { return directions.empty(); }

  friend bool operator==(const MutationSeq&, const MutationSeq&) = default;
};

template <typename Scalar>
constexpr Scalar sign(Scalar v) {
  return static_cast<Scalar>((Scalar(0) < v) - (v < Scalar(0)));
}

/// Mutation of a (possibly extended, rows >= cols) matrix in column k. Rows
/// beyond the square part mutate by the same rule, which is how frozen or
/// framing rows behave.
template <typename Derived>
typename Derived::PlainObject mutate_columns(const Eigen::MatrixBase<Derived>& b, Eigen::Index k) {
  using Scalar = typename Derived::Scalar;
  typename Derived::PlainObject out(b.rows(), b.cols());
  for (Eigen::Index i = 0; i < b.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      if (i == k || j == k) {
        out(i, j) = -b(i, j);
      } else {
        const Scalar prod = b(i, k) * b(k, j);
        out(i, j) = b(i, j) + sign(b(i, k)) * std::max(prod, Scalar(0));
      }
    }
  }
  return out;
}

/// mu_k(B). Throws Error{UnknownVertex}.
template <typename Scalar>
BasicExchangeMatrix<Scalar> mutate(const BasicExchangeMatrix<Scalar>& m, const ClosedStringId& k) {
  const Eigen::Index col = m.require(k);
  return BasicExchangeMatrix<Scalar>(m.labels(), mutate_columns(m.entries(), col));
}

/// Folds mutate over s, rightmost direction first.
template <typename Scalar>
BasicExchangeMatrix<Scalar> apply_seq(BasicExchangeMatrix<Scalar> m, const MutationSeq& s) {
  for (auto it = s.directions.rbegin(); it != s.directions.rend(); ++it) m = mutate(m, *it);
  return m;
}

/// Intermediate quivers of the three-step quiver mutation.
struct QuiverMutationTrace {
  UsualQuiver with_composites;  // after adding i -> j for every path i -> k -> j
  UsualQuiver reversed;         // after reversing the arrows at k
  UsualQuiver reduced;          // after cancelling 2-cycles
};

/// Quiver mutation at k by the arrow-level rule. Throws Error{UnknownVertex}.
QuiverMutationTrace mutate_quiver_traced(const UsualQuiver& q, const ClosedStringId& k);
UsualQuiver mutate_quiver(const UsualQuiver& q, const ClosedStringId& k);

/// Exchange matrix stacked over its C-matrix. C starts as the identity and
/// mutates with the principal part as the lower block of the extended matrix.
template <typename Scalar>
class BasicFramedMatrix {
 public:
  explicit BasicFramedMatrix(BasicExchangeMatrix<Scalar> principal)
      : labels_(principal.labels()) {
    const Eigen::Index n = principal.size();
    stacked_.resize(2 * n, n);
    stacked_.topRows(n) = principal.entries();
    stacked_.bottomRows(n).setIdentity();
  }

  Eigen::Index size() const { return stacked_.cols(); }
  const std::vector<ClosedStringId>& labels() const { return labels_; }

  BasicExchangeMatrix<Scalar> principal() const {
    return BasicExchangeMatrix<Scalar>(labels_, stacked_.topRows(size()));
  }
  MatrixX<Scalar> c_matrix() const { return stacked_.bottomRows(size()); }
  const MatrixX<Scalar>& stacked() const { return stacked_; }

  void mutate_at(Eigen::Index k) { stacked_ = mutate_columns(stacked_, k); }

  void mutate_at(const ClosedStringId& k) {
    const auto it = std::find(labels_.begin(), labels_.end(), k);
    if (it == labels_.end()) throw Error(ErrorCode::UnknownVertex, "no vertex " + to_string(k));
    mutate_at(static_cast<Eigen::Index>(it - labels_.begin()));
  }

  /// Every column of C is entrywise >= 0 or entrywise <= 0.
  bool c_columns_sign_coherent() const {
    const auto c = stacked_.bottomRows(size());
    for (Eigen::Index j = 0; j < c.cols(); ++j) {
      if ((c.col(j).array() > Scalar(0)).any() && (c.col(j).array() < Scalar(0)).any())
        return false;
    }
    return true;
  }

  /// Reddened: every C entry is <= 0.
  bool is_red() const { return (stacked_.bottomRows(size()).array() <= Scalar(0)).all(); }

 private:
  std::vector<ClosedStringId> labels_;
  MatrixX<Scalar> stacked_;
};

using FramedMatrix = BasicFramedMatrix<Integer>;

struct ReddeningOptions {
  int max_depth = 12;
  /// Refuse inputs with more vertices than this unless allow_large is set.
  Eigen::Index max_vertices = 6;
  bool allow_large = false;
};

struct ReddeningResult {
  /// Shortest reddening sequence, lexicographically least in application
  /// order among the shortest; nullopt when every reachable framed state has
  /// been explored without finding one.
  std::optional<MutationSeq> sequence;
  std::size_t states_explored = 0;
};

namespace detail {

template <typename Scalar>
struct StateHash {
  std::size_t operator()(const std::vector<Scalar>& v) const noexcept {
    std::size_t h = v.size();
    for (const Scalar x : v)
      h ^= std::hash<Scalar>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace detail

/// Breadth-first search over framed mutation sequences for one that makes
/// the C-matrix entrywise non-positive. Successors are expanded in vertex
/// order, so the result does not depend on hashing or scheduling.
///
/// Throws Error{DepthExceeded} when the depth budget runs out with states
/// still unexplored (no conclusion either way), Error{InstanceTooLarge} when
/// the vertex guard trips, and Error{SignCoherenceViolation} if some C-matrix
/// column ever mixes signs.
template <typename Scalar>
ReddeningResult search_reddening(const BasicExchangeMatrix<Scalar>& m,
                                 const ReddeningOptions& options = {}) {
  if (m.size() > options.max_vertices && !options.allow_large)
    throw Error(ErrorCode::InstanceTooLarge,
                std::to_string(m.size()) + " vertices exceeds search guard of " +
                    std::to_string(options.max_vertices));

  struct Visit {
    std::ptrdiff_t parent;
    Eigen::Index move;
  };
  const auto key_of = [](const BasicFramedMatrix<Scalar>& f) {
    const auto& s = f.stacked();
    return std::vector<Scalar>(s.data(), s.data() + s.size());
  };

  // Vertex order, not storage order, decides expansion order.
  std::vector<Eigen::Index> moves(static_cast<std::size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.size(); ++i) moves[static_cast<std::size_t>(i)] = i;
  std::sort(moves.begin(), moves.end(), [&](Eigen::Index a, Eigen::Index b) {
    return m.labels()[static_cast<std::size_t>(a)] < m.labels()[static_cast<std::size_t>(b)];
  });

  ReddeningResult result;
  BasicFramedMatrix<Scalar> start(m);
  if (start.is_red()) {
    result.sequence = MutationSeq{};
    result.states_explored = 1;
    return result;
  }

  std::vector<Visit> visits{{-1, -1}};
  std::unordered_map<std::vector<Scalar>, std::size_t, detail::StateHash<Scalar>> seen;
  seen.emplace(key_of(start), 0);
  std::vector<std::pair<std::size_t, BasicFramedMatrix<Scalar>>> frontier{{0, start}};

  const auto path_to = [&](std::size_t id) {
    std::vector<ClosedStringId> steps;
    for (auto at = static_cast<std::ptrdiff_t>(id); visits[static_cast<std::size_t>(at)].parent >= 0;
         at = visits[static_cast<std::size_t>(at)].parent)
      steps.push_back(m.labels()[static_cast<std::size_t>(visits[static_cast<std::size_t>(at)].move)]);
    std::reverse(steps.begin(), steps.end());
    return MutationSeq::from_application_order(std::move(steps));
  };

  for (int depth = 1; depth <= options.max_depth; ++depth) {
    std::vector<std::pair<std::size_t, BasicFramedMatrix<Scalar>>> next;
    for (const auto& [id, state] : frontier) {
      for (const Eigen::Index k : moves) {
        if (visits[id].move == k) continue;
        BasicFramedMatrix<Scalar> child = state;
        child.mutate_at(k);
        if (!child.c_columns_sign_coherent())
          throw Error(ErrorCode::SignCoherenceViolation, "C-matrix column with mixed signs");
        auto [it, inserted] = seen.emplace(key_of(child), visits.size());
        if (!inserted) continue;
        visits.push_back({static_cast<std::ptrdiff_t>(id), k});
        if (child.is_red()) {
          result.sequence = path_to(visits.size() - 1);
          result.states_explored = visits.size();
          return result;
        }
        next.emplace_back(visits.size() - 1, std::move(child));
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) {
      result.states_explored = visits.size();
      return result;
    }
  }
  throw Error(ErrorCode::DepthExceeded,
              "no reddening sequence of length <= " + std::to_string(options.max_depth));
}

}  // namespace stringex
