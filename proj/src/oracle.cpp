#include "stringex/oracle.hpp"

#include "stringex/error.hpp"

namespace stringex::oracle {

namespace {

struct Endpoint {
  int pos;
  Integer eps;
};

// i-th occurrence (1-based) of value k in the word.
Endpoint occurrence(const ShuffleWord& word, int k, int i) {
  int seen = 0;
  for (int t = 1; t <= word.length(); ++t) {
    if (word.at(t).value != k) continue;
    if (++seen == i) return {t, word.at(t).origin == Origin::Bottom ? 1 : -1};
  }
  throw Error(ErrorCode::UnknownString,
              "no closed string " + std::to_string(k) + ":" + std::to_string(i - 1));
}

std::pair<Endpoint, Endpoint> endpoints(const ShuffleWord& word, const ClosedStringId& id) {
  return {occurrence(word, id.level, id.index), occurrence(word, id.level, id.index + 1)};
}

bool inside(int t, const std::pair<Endpoint, Endpoint>& span) {
  return span.first.pos < t && t < span.second.pos;
}

int count_value(const ShuffleWord& word, int k) {
  int c = 0;
  for (const auto& l : word.letters())
    if (l.value == k) ++c;
  return c;
}

}  // namespace

Integer entry_by_four_terms(const ShuffleWord& word, const ClosedStringId& x,
                            const ClosedStringId& z) {
  if (x.level == z.level)
    throw Error(ErrorCode::MalformedInput, "four-term rule needs strings on different levels");
  const auto& a = word.cartan();
  const int k = x.level;
  const int j = z.level;
  const auto xs = endpoints(word, x);
  const auto zs = endpoints(word, z);

  Integer doubled = 0;
  // left end of x: x is the string to the node's right
  if (inside(xs.first.pos, zs)) doubled += -a.a(k, j) * xs.first.eps;
  // right end of x: x is the string to the node's left
  if (inside(xs.second.pos, zs)) doubled += a.a(k, j) * xs.second.eps;
  // left end of z, seen from x
  if (inside(zs.first.pos, xs)) doubled += a.a(k, j) * zs.first.eps;
  // right end of z, seen from x
  if (inside(zs.second.pos, xs)) doubled += -a.a(k, j) * zs.second.eps;

  if (doubled % 2 != 0)
    throw Error(ErrorCode::IntegralityViolation,
                "odd four-term sum at (" + to_string(x) + "," + to_string(z) + ")");
  return doubled / 2;
}

Integer same_level_entry(const ShuffleWord& word, const ClosedStringId& x,
                         const ClosedStringId& y) {
  if (x.level != y.level)
    throw Error(ErrorCode::MalformedInput, "same-level rule needs strings on one level");
  endpoints(word, x);
  endpoints(word, y);
  if (y.index == x.index + 1) return occurrence(word, x.level, y.index).eps;
  if (x.index == y.index + 1) return -occurrence(word, x.level, x.index).eps;
  return 0;
}

ExchangeMatrix exchange_matrix_by_entries(const ShuffleWord& word) {
  std::vector<ClosedStringId> labels;
  for (int k = 1; k <= word.cartan().rank(); ++k)
    for (int i = 1; i < count_value(word, k); ++i) labels.push_back({k, i});
  const auto n = static_cast<Eigen::Index>(labels.size());
  MatrixX<Integer> b = MatrixX<Integer>::Zero(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const auto& x = labels[static_cast<std::size_t>(r)];
      const auto& z = labels[static_cast<std::size_t>(c)];
      b(r, c) = x.level == z.level ? same_level_entry(word, x, z) : entry_by_four_terms(word, x, z);
    }
  }
  return ExchangeMatrix(std::move(labels), std::move(b));
}

bool check_entry_ranges(const ExchangeMatrix& m, const CartanMatrix& cartan) {
  for (Eigen::Index r = 0; r < m.size(); ++r) {
    for (Eigen::Index c = 0; c < m.size(); ++c) {
      const auto& x = m.labels()[static_cast<std::size_t>(r)];
      const auto& z = m.labels()[static_cast<std::size_t>(c)];
      const Integer v = m.entries()(r, c);
      if (v == 0) continue;
      if (x.level == z.level) {
        if (v != 1 && v != -1) return false;
      } else {
        const Integer akj = cartan.a(x.level, z.level);
        if (v != akj && v != -akj) return false;
      }
    }
  }
  return true;
}

std::vector<Mismatch> compare_with_exchange(const ShuffleWord& word) {
  const ExchangeMatrix expected = exchange_matrix_by_entries(word);
  const ExchangeMatrix actual = exchange_matrix(word);
  std::vector<Mismatch> out;
  if (actual.labels() != expected.labels()) {
    out.push_back({{}, {}, expected.size(), actual.size()});
    return out;
  }
  for (Eigen::Index r = 0; r < expected.size(); ++r)
    for (Eigen::Index c = 0; c < expected.size(); ++c)
      if (expected.entries()(r, c) != actual.entries()(r, c))
        out.push_back({expected.labels()[static_cast<std::size_t>(r)],
                       expected.labels()[static_cast<std::size_t>(c)], expected.entries()(r, c),
                       actual.entries()(r, c)});
  return out;
}

}  // namespace stringex::oracle
