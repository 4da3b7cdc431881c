#include "stringex/exchange.hpp"

#include <sstream>

namespace stringex {

Eigen::SparseMatrix<Integer> node_contribution(const StringDiagram& diagram, int node_pos) {
  const auto& strings = diagram.closed_strings();
  const auto n = static_cast<Eigen::Index>(strings.size());
  Eigen::SparseMatrix<Integer> out(n, n);

  const Node& m = diagram.node_at(node_pos);
  const CartanMatrix& a = diagram.word().cartan();
  const int k = m.level;
  const Integer eps = m.epsilon;
  const auto x = diagram.left_string(node_pos);
  const auto y = diagram.right_string(node_pos);
  if (!x && !y) return out;

  const auto index = [&](const ClosedStringId& id) {
    return static_cast<Eigen::Index>(*diagram.find(id));
  };

  std::vector<Eigen::Triplet<Integer>> triplets;
  if (x && y) {
    triplets.emplace_back(index(*x), index(*y), 2 * eps);
    triplets.emplace_back(index(*y), index(*x), -2 * eps);
  }
  for (const auto& z : strings) {
    const int j = z.id.level;
    if (j == k || !(z.left_pos < node_pos && node_pos < z.right_pos)) continue;
    const Eigen::Index zi = index(z.id);
    if (x) {
      triplets.emplace_back(index(*x), zi, a.a(k, j) * eps);
      triplets.emplace_back(zi, index(*x), -a.a(j, k) * eps);
    }
    if (y) {
      triplets.emplace_back(index(*y), zi, -a.a(k, j) * eps);
      triplets.emplace_back(zi, index(*y), a.a(j, k) * eps);
    }
  }
  out.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

ExchangeMatrix exchange_matrix(const StringDiagram& diagram) {
  const auto labels = diagram.labels();
  const auto n = static_cast<Eigen::Index>(labels.size());
  MatrixX<Integer> doubled = MatrixX<Integer>::Zero(n, n);
  for (int t = 1; t <= diagram.length(); ++t) doubled += MatrixX<Integer>(node_contribution(diagram, t));

  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (doubled(i, j) % 2 != 0)
        throw Error(ErrorCode::IntegralityViolation,
                    "odd doubled entry at (" + to_string(labels[static_cast<std::size_t>(i)]) +
                        "," + to_string(labels[static_cast<std::size_t>(j)]) + ")");
  return ExchangeMatrix(labels, doubled / 2);
}

ExchangeMatrix exchange_matrix(const ShuffleWord& word) {
  return exchange_matrix(build_diagram(word));
}

VectorX<Integer> skew_symmetrizer(const ExchangeMatrix& m, const CartanMatrix& cartan) {
  VectorX<Integer> d(m.size());
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const int level = m.labels()[static_cast<std::size_t>(i)].level;
    if (level < 1 || level > cartan.rank())
      throw Error(ErrorCode::SymmetrizerCheckFailed, "vertex level outside Cartan rank");
    d(i) = cartan.s(level);
  }
  if (!is_skew_symmetrized_by(m, d))
    throw Error(ErrorCode::SymmetrizerCheckFailed, "Diag(s') B is not skew-symmetric");
  return d;
}

ColouredQuiver coloured_quiver(const ExchangeMatrix& m, const CartanMatrix& cartan) {
  ColouredQuiver q;
  q.vertices = m.labels();
  const auto& b = m.entries();
  for (Eigen::Index r = 0; r < m.size(); ++r) {
    for (Eigen::Index c = 0; c < m.size(); ++c) {
      if (r == c) {
        if (b(r, c) != 0) throw Error(ErrorCode::EntryOutOfRange, "non-zero diagonal");
        continue;
      }
      const auto& x = m.labels()[static_cast<std::size_t>(r)];
      const auto& z = m.labels()[static_cast<std::size_t>(c)];
      const Integer v = b(r, c);
      if (v == 0) continue;
      if (x.level == z.level) {
        if (v == -1)
          q.horizontal.insert({x, z});
        else if (v != 1)
          throw Error(ErrorCode::EntryOutOfRange,
                      "same-level entry " + std::to_string(v) + " at (" + to_string(x) + "," +
                          to_string(z) + ")");
      } else {
        const Integer akj = cartan.a(x.level, z.level);
        if (akj != 0 && v == akj)
          q.inclined.insert({x, z});
        else if (akj == 0 || v != -akj)
          throw Error(ErrorCode::EntryOutOfRange,
                      "cross-level entry " + std::to_string(v) + " at (" + to_string(x) + "," +
                          to_string(z) + ")");
      }
    }
  }
  return q;
}

ExchangeMatrix from_coloured_quiver(const ColouredQuiver& q, const CartanMatrix& cartan) {
  const auto n = static_cast<Eigen::Index>(q.vertices.size());
  MatrixX<Integer> b = MatrixX<Integer>::Zero(n, n);
  ExchangeMatrix shape(q.vertices, b);
  for (const auto& [x, z] : q.horizontal) {
    b(shape.require(x), shape.require(z)) = -1;
    b(shape.require(z), shape.require(x)) = 1;
  }
  for (const auto& [x, z] : q.inclined) {
    b(shape.require(x), shape.require(z)) = cartan.a(x.level, z.level);
    b(shape.require(z), shape.require(x)) = -cartan.a(z.level, x.level);
  }
  return ExchangeMatrix(q.vertices, std::move(b));
}

UsualQuiver usual_quiver(const ExchangeMatrix& m) {
  if (!is_skew_symmetric(m)) throw Error(ErrorCode::NotSkewSymmetric, "B^T != -B");
  UsualQuiver q;
  q.vertices = m.labels();
  for (Eigen::Index i = 0; i < m.size(); ++i)
    for (Eigen::Index j = 0; j < m.size(); ++j)
      if (m.entries()(i, j) > 0)
        q.arrows[{m.labels()[static_cast<std::size_t>(j)], m.labels()[static_cast<std::size_t>(i)]}] =
            m.entries()(i, j);
  return q;
}

ExchangeMatrix matrix_of(const UsualQuiver& q) {
  const auto n = static_cast<Eigen::Index>(q.vertices.size());
  ExchangeMatrix shape(q.vertices, MatrixX<Integer>::Zero(n, n));
  MatrixX<Integer> b = MatrixX<Integer>::Zero(n, n);
  for (const auto& [arrow, count] : q.arrows) {
    const auto from = shape.require(arrow.first);
    const auto to = shape.require(arrow.second);
    b(to, from) += count;
    b(from, to) -= count;
  }
  return ExchangeMatrix(q.vertices, std::move(b));
}

namespace {

void dot_vertices(std::ostringstream& os, const std::vector<ClosedStringId>& vertices) {
  auto sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& v : sorted) os << "  \"" << to_string(v) << "\";\n";
}

}  // namespace

std::string to_dot(const UsualQuiver& q) {
  std::ostringstream os;
  os << "digraph usual_quiver {\n";
  dot_vertices(os, q.vertices);
  for (const auto& [arrow, count] : q.arrows)
    os << "  \"" << to_string(arrow.first) << "\" -> \"" << to_string(arrow.second)
       << "\" [label=" << count << "];\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const ColouredQuiver& q, const ExchangeMatrix& m) {
  std::ostringstream os;
  os << "digraph coloured_quiver {\n";
  dot_vertices(os, q.vertices);
  for (const auto& [from, to] : q.horizontal)
    os << "  \"" << to_string(from) << "\" -> \"" << to_string(to) << "\";\n";
  for (const auto& [from, to] : q.inclined)
    os << "  \"" << to_string(from) << "\" -> \"" << to_string(to)
       << "\" [style=dashed, label=" << -m(from, to) << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace stringex
