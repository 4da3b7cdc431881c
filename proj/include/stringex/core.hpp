#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace stringex {

using Integer = std::int64_t;

/// Dense dynamic matrix, templated on scalar.
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Dense dynamic column vector, templated on scalar.
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Symmetrizable generalized Cartan matrix together with its minimal
/// integral symmetrizer. Only obtainable through validate_cartan(), so every
/// instance satisfies the Cartan axioms.
///
/// Levels are 1-based throughout the public API: a(k, j) is the entry in
/// row k, column j, with 1 <= k, j <= rank().
class CartanMatrix {
 public:
  int rank() const { return static_cast<int>(entries_.rows()); }

  Integer a(int k, int j) const { return entries_(k - 1, j - 1); }

  /// s_k, the k-th symmetrizer entry (1-based).
  Integer s(int k) const { return symmetrizer_(k - 1); }

  const MatrixX<Integer>& entries() const { return entries_; }
  const VectorX<Integer>& symmetrizer() const { return symmetrizer_; }

  bool is_symmetric() const { return entries_ == entries_.transpose(); }

  friend bool operator==(const CartanMatrix& lhs, const CartanMatrix& rhs) {
    return lhs.entries_ == rhs.entries_;
  }

 private:
  CartanMatrix(MatrixX<Integer> entries, VectorX<Integer> symmetrizer)
      : entries_(std::move(entries)), symmetrizer_(std::move(symmetrizer)) {}

  friend CartanMatrix validate_cartan(const MatrixX<Integer>& entries);

  MatrixX<Integer> entries_;
  VectorX<Integer> symmetrizer_;
};

/// Checks the generalized Cartan axioms and computes the symmetrizer.
///
/// The symmetrizer is found by propagating s_j = s_i * a_ij / a_ji along the
/// support graph of the off-diagonal entries, then scaling each connected
/// component to the smallest positive integer solution.
///
/// Throws Error{NotGeneralizedCartan} or Error{NotSymmetrizable}.
CartanMatrix validate_cartan(const MatrixX<Integer>& entries);

/// Row-major grid overload; rejects ragged or non-square input.
CartanMatrix validate_cartan(const std::vector<std::vector<Integer>>& grid);

/// A [1,n]-sequence. Letters are 1-based; the empty sequence is legal.
using LabelSequence = std::vector<int>;

enum class Origin : char { Top = 'T', Bottom = 'B' };

struct Letter {
  int value;
  Origin origin;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A triangulation of the trapezoid with top sequence i and bottom sequence
/// j, encoded as a shuffle of the two sequences. Each letter is a triangle;
/// its origin says whether the labelled edge lies on the top or bottom base.
class ShuffleWord {
 public:
  /// Validates every letter against the Cartan rank.
  static ShuffleWord from_letters(std::vector<Letter> letters,
                                  std::shared_ptr<const CartanMatrix> cartan);

  const std::vector<Letter>& letters() const { return letters_; }
  const CartanMatrix& cartan() const { return *cartan_; }
  const std::shared_ptr<const CartanMatrix>& cartan_ptr() const { return cartan_; }

  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  /// Letter at triangle position t, 1 <= t <= length().
  const Letter& at(int t) const { return letters_.at(static_cast<std::size_t>(t - 1)); }

  LabelSequence top() const;
  LabelSequence bottom() const;
  std::vector<Origin> origins() const;
  std::string origin_string() const;
  LabelSequence values() const;

  bool is_all_bottom() const;

  /// Same Cartan matrix, different letters (validated).
  ShuffleWord with_letters(std::vector<Letter> letters) const;

  friend bool operator==(const ShuffleWord& lhs, const ShuffleWord& rhs) {
    return lhs.letters_ == rhs.letters_ && *lhs.cartan_ == *rhs.cartan_;
  }

 private:
  ShuffleWord(std::vector<Letter> letters, std::shared_ptr<const CartanMatrix> cartan)
      : letters_(std::move(letters)), cartan_(std::move(cartan)) {}

  std::vector<Letter> letters_;
  std::shared_ptr<const CartanMatrix> cartan_;
};

/// Interleaves top and bottom per the origin flags.
/// Throws Error{LengthMismatch} or Error{LetterOutOfRange}.
ShuffleWord make_word(const LabelSequence& top, const LabelSequence& bottom,
                      std::span<const Origin> origins, const CartanMatrix& cartan);

/// Origins given as a string of 'T' / 'B' characters.
ShuffleWord make_word(const LabelSequence& top, const LabelSequence& bottom,
                      std::string_view origins, const CartanMatrix& cartan);

/// The unique triangulation of the trapezoid with empty top.
ShuffleWord bottom_word(const LabelSequence& bottom, const CartanMatrix& cartan);
ShuffleWord bottom_word(const LabelSequence& bottom,
                        std::shared_ptr<const CartanMatrix> cartan);

/// Throws Error{MalformedInput} on characters other than 'T' and 'B'.
std::vector<Origin> parse_origins(std::string_view text);

}  // namespace stringex
