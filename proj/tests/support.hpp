#pragma once

// Shared fixtures for the test binaries: the worked instances and seeded
// random generators. The framed-mutation and mutation-formula helpers here
// are deliberately written against plain nested vectors so they share no
// code with the library routines they check.

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "stringex/core.hpp"
#include "stringex/exchange.hpp"

namespace stringex::test {

using Grid = std::vector<std::vector<Integer>>;

inline std::uint64_t seed() {
  if (const char* env = std::getenv("STRINGEX_SEED")) return std::strtoull(env, nullptr, 10);
  return 20231018ULL;
}

inline CartanMatrix cartan(const Grid& g) { return validate_cartan(g); }

// Worked instances.
inline CartanMatrix cartan_tri_a1() { return cartan({{2, -5, -7}, {-5, 2, -9}, {-7, -9, 2}}); }
inline CartanMatrix cartan_tri_a2() { return cartan({{2, -6, -8}, {-3, 2, -10}, {-4, -10, 2}}); }
inline CartanMatrix cartan_tri_sparse() { return cartan({{2, -6, -8}, {-3, 2, 0}, {-4, 0, 2}}); }
inline CartanMatrix cartan_a2() { return cartan({{2, -1}, {-1, 2}}); }
inline CartanMatrix cartan_gls() { return cartan({{2, -3, -2}, {-3, 2, -2}, {-2, -2, 2}}); }
inline CartanMatrix cartan_final() { return cartan({{2, -2, -3}, {-2, 2, -4}, {-3, -4, 2}}); }

inline ShuffleWord tri_word(const CartanMatrix& a) {
  return make_word({1, 2, 3}, {3, 1, 1, 3, 2}, "BBBTTTBB", a);
}
inline ShuffleWord bfz_word() { return make_word({1, 2, 1}, {1, 2, 1}, "BBBTTT", cartan_a2()); }
inline ShuffleWord gls_word() { return bottom_word({1, 2, 1, 3, 1, 2, 1, 2, 3, 2}, cartan_gls()); }
inline ShuffleWord seven_word() { return bottom_word({1, 2, 1, 3, 1, 3, 2}, cartan_tri_a2()); }
inline ShuffleWord final_word() {
  return bottom_word({2, 1, 3, 2, 1, 3, 1, 3, 2, 2, 1}, cartan_final());
}

inline ClosedStringId id(int level, int index) { return {level, index}; }

inline ExchangeMatrix matrix(std::vector<ClosedStringId> labels, const Grid& rows) {
  const auto n = static_cast<Eigen::Index>(labels.size());
  MatrixX<Integer> b(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      b(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return ExchangeMatrix(std::move(labels), std::move(b));
}

inline std::vector<ClosedStringId> plain_labels(int n) {
  std::vector<ClosedStringId> out;
  for (int i = 1; i <= n; ++i) out.push_back({1, i});
  return out;
}

// Random symmetrizable Cartan matrix of rank n built from a random
// symmetrizer, so every cycle condition holds.
inline CartanMatrix random_cartan(std::mt19937_64& rng, int n, bool symmetric) {
  std::uniform_int_distribution<Integer> sym(1, 3);
  std::uniform_int_distribution<Integer> mult(1, 3);
  std::bernoulli_distribution connect(0.7);
  std::vector<Integer> s(static_cast<std::size_t>(n), 1);
  if (!symmetric)
    for (auto& v : s) v = sym(rng);
  Grid g(static_cast<std::size_t>(n), std::vector<Integer>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    g[i][i] = 2;
    for (int j = i + 1; j < n; ++j) {
      if (!connect(rng)) continue;
      const Integer t = mult(rng);
      const Integer gc = std::gcd(s[i], s[j]);
      g[i][j] = -t * s[j] / gc;
      g[j][i] = -t * s[i] / gc;
    }
  }
  return validate_cartan(g);
}

inline ShuffleWord random_word(std::mt19937_64& rng, const CartanMatrix& a, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<int> letter(1, a.rank());
  std::bernoulli_distribution top(0.5);
  const int l = len(rng);
  std::vector<Letter> letters;
  for (int t = 0; t < l; ++t)
    letters.push_back({letter(rng), top(rng) ? Origin::Top : Origin::Bottom});
  return ShuffleWord::from_letters(std::move(letters), std::make_shared<const CartanMatrix>(a));
}

inline ShuffleWord random_instance(std::mt19937_64& rng, int max_rank, int max_len,
                                   bool symmetric = false) {
  std::uniform_int_distribution<int> rank(1, max_rank);
  return random_word(rng, random_cartan(rng, rank(rng), symmetric), max_len);
}

inline ShuffleWord random_bottom_instance(std::mt19937_64& rng, int max_rank, int max_len,
                                          int min_len = 1) {
  std::uniform_int_distribution<int> rank(1, max_rank);
  const CartanMatrix a = random_cartan(rng, rank(rng), false);
  std::uniform_int_distribution<int> len(min_len, max_len);
  std::uniform_int_distribution<int> letter(1, a.rank());
  LabelSequence j;
  for (int t = len(rng); t > 0; --t) j.push_back(letter(rng));
  return bottom_word(j, a);
}

// Random skew-symmetrizable matrix with the given symmetrizer d:
// d_i b_ij = -d_j b_ji by construction.
inline ExchangeMatrix random_skew_symmetrizable(std::mt19937_64& rng,
                                                const std::vector<Integer>& d, Integer max_mult) {
  const auto n = static_cast<Eigen::Index>(d.size());
  std::uniform_int_distribution<Integer> mult(-max_mult, max_mult);
  MatrixX<Integer> b = MatrixX<Integer>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const Integer t = mult(rng);
      const Integer g = std::gcd(d[i], d[j]);
      b(i, j) = t * d[j] / g;
      b(j, i) = -t * d[i] / g;
    }
  }
  return ExchangeMatrix(plain_labels(static_cast<int>(n)), std::move(b));
}

inline ExchangeMatrix random_skew_symmetric(std::mt19937_64& rng, int n, Integer max_mult) {
  return random_skew_symmetrizable(rng, std::vector<Integer>(static_cast<std::size_t>(n), 1),
                                   max_mult);
}

// Mutation via b'_ij = b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2, an
// algebraically different route to the same matrix.
inline std::vector<std::vector<Integer>> mutate_by_abs_formula(
    const std::vector<std::vector<Integer>>& b, std::size_t k) {
  auto out = b;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b[i].size(); ++j) {
      if (i == k || j == k)
        out[i][j] = -b[i][j];
      else
        out[i][j] = b[i][j] + (std::abs(b[i][k]) * b[k][j] + b[i][k] * std::abs(b[k][j])) / 2;
    }
  }
  return out;
}

inline std::vector<std::vector<Integer>> to_grid(const MatrixX<Integer>& m) {
  std::vector<std::vector<Integer>> out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i)].push_back(m(i, j));
  return out;
}

// [B; I] mutated along application-order steps (column indices).
inline std::vector<std::vector<Integer>> framed_after(const MatrixX<Integer>& b,
                                                      const std::vector<std::size_t>& steps) {
  const auto n = static_cast<std::size_t>(b.rows());
  auto ext = to_grid(b);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Integer> row(n, 0);
    row[i] = 1;
    ext.push_back(row);
  }
  for (const std::size_t k : steps) ext = mutate_by_abs_formula(ext, k);
  return ext;
}

inline bool c_part_red(const std::vector<std::vector<Integer>>& ext) {
  const std::size_t n = ext.empty() ? 0 : ext[0].size();
  for (std::size_t i = n; i < ext.size(); ++i)
    for (const Integer v : ext[i])
      if (v > 0) return false;
  return true;
}

}  // namespace stringex::test
