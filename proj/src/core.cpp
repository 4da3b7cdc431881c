#include "stringex/core.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>

#include "stringex/error.hpp"

namespace stringex {

namespace {

struct Ratio {
  Integer num;
  Integer den;

  static Ratio make(Integer n, Integer d) {
    const Integer g = std::gcd(n, d);
    return {n / g, d / g};
  }

  friend bool operator==(const Ratio&, const Ratio&) = default;
};

std::string entry_name(Eigen::Index i, Eigen::Index j) {
  std::ostringstream os;
  os << "a(" << i + 1 << "," << j + 1 << ")";
  return os.str();
}

void check_cartan_axioms(const MatrixX<Integer>& a) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a(i, i) != 2)
      throw Error(ErrorCode::NotGeneralizedCartan, entry_name(i, i) + " != 2");
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a(i, j) > 0)
        throw Error(ErrorCode::NotGeneralizedCartan, entry_name(i, j) + " > 0");
      if ((a(i, j) == 0) != (a(j, i) == 0))
        throw Error(ErrorCode::NotGeneralizedCartan,
                    entry_name(i, j) + " and " + entry_name(j, i) + " differ in zero pattern");
    }
  }
}

void check_letters(const LabelSequence& seq, int rank, const char* which) {
  for (const int k : seq) {
    if (k < 1 || k > rank)
      throw Error(ErrorCode::LetterOutOfRange,
                  std::string(which) + " letter " + std::to_string(k) + " outside [1," +
                      std::to_string(rank) + "]");
  }
}

}  // namespace

CartanMatrix validate_cartan(const MatrixX<Integer>& entries) {
  const Eigen::Index n = entries.rows();
  if (n < 1 || entries.cols() != n)
    throw Error(ErrorCode::NotGeneralizedCartan, "matrix must be square with n >= 1");
  check_cartan_axioms(entries);

  std::vector<std::optional<Ratio>> ratio(static_cast<std::size_t>(n));
  VectorX<Integer> sym(n);

  for (Eigen::Index root = 0; root < n; ++root) {
    if (ratio[root]) continue;
    std::vector<Eigen::Index> component;
    std::queue<Eigen::Index> pending;
    ratio[root] = Ratio{1, 1};
    pending.push(root);
    while (!pending.empty()) {
      const Eigen::Index i = pending.front();
      pending.pop();
      component.push_back(i);
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i || entries(i, j) == 0) continue;
        // s_i a_ij = s_j a_ji
        const Ratio expected =
            Ratio::make(ratio[i]->num * -entries(i, j), ratio[i]->den * -entries(j, i));
        if (!ratio[j]) {
          ratio[j] = expected;
          pending.push(j);
        } else if (!(*ratio[j] == expected)) {
          throw Error(ErrorCode::NotSymmetrizable,
                      "inconsistent ratio constraint at " + entry_name(i, j));
        }
      }
    }
    Integer den_lcm = 1;
    for (const auto i : component) den_lcm = std::lcm(den_lcm, ratio[i]->den);
    Integer num_gcd = 0;
    for (const auto i : component) {
      sym(i) = ratio[i]->num * (den_lcm / ratio[i]->den);
      num_gcd = std::gcd(num_gcd, sym(i));
    }
    for (const auto i : component) sym(i) /= num_gcd;
  }

  return CartanMatrix(entries, std::move(sym));
}

CartanMatrix validate_cartan(const std::vector<std::vector<Integer>>& grid) {
  const auto n = grid.size();
  if (n == 0) throw Error(ErrorCode::NotGeneralizedCartan, "empty grid");
  MatrixX<Integer> m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (grid[i].size() != n)
      throw Error(ErrorCode::NotGeneralizedCartan, "grid is not square");
    for (std::size_t j = 0; j < n; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = grid[i][j];
  }
  return validate_cartan(m);
}

ShuffleWord ShuffleWord::from_letters(std::vector<Letter> letters,
                                      std::shared_ptr<const CartanMatrix> cartan) {
  const int rank = cartan->rank();
  for (const auto& letter : letters) {
    if (letter.value < 1 || letter.value > rank)
      throw Error(ErrorCode::LetterOutOfRange,
                  "letter " + std::to_string(letter.value) + " outside [1," +
                      std::to_string(rank) + "]");
  }
  return ShuffleWord(std::move(letters), std::move(cartan));
}

LabelSequence ShuffleWord::top() const {
  LabelSequence out;
  for (const auto& l : letters_)
    if (l.origin == Origin::Top) out.push_back(l.value);
  return out;
}

LabelSequence ShuffleWord::bottom() const {
  LabelSequence out;
  for (const auto& l : letters_)
    if (l.origin == Origin::Bottom) out.push_back(l.value);
  return out;
}

std::vector<Origin> ShuffleWord::origins() const {
  std::vector<Origin> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) out.push_back(l.origin);
  return out;
}

std::string ShuffleWord::origin_string() const {
  std::string out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) out.push_back(static_cast<char>(l.origin));
  return out;
}

LabelSequence ShuffleWord::values() const {
  LabelSequence out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) out.push_back(l.value);
  return out;
}

bool ShuffleWord::is_all_bottom() const {
  for (const auto& l : letters_)
    if (l.origin != Origin::Bottom) return false;
  return true;
}

ShuffleWord ShuffleWord::with_letters(std::vector<Letter> letters) const {
  return from_letters(std::move(letters), cartan_);
}

ShuffleWord make_word(const LabelSequence& top, const LabelSequence& bottom,
                      std::span<const Origin> origins, const CartanMatrix& cartan) {
  const auto tops = std::count(origins.begin(), origins.end(), Origin::Top);
  const auto bottoms = static_cast<std::ptrdiff_t>(origins.size()) - tops;
  if (static_cast<std::size_t>(tops) != top.size() ||
      static_cast<std::size_t>(bottoms) != bottom.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "origins have " + std::to_string(tops) + " T / " + std::to_string(bottoms) +
                    " B, sequences have lengths " + std::to_string(top.size()) + " / " +
                    std::to_string(bottom.size()));
  }
  check_letters(top, cartan.rank(), "top");
  check_letters(bottom, cartan.rank(), "bottom");

  std::vector<Letter> letters;
  letters.reserve(origins.size());
  auto t = top.begin();
  auto b = bottom.begin();
  for (const Origin o : origins) {
    if (o == Origin::Top)
      letters.push_back({*t++, o});
    else
      letters.push_back({*b++, o});
  }
  return ShuffleWord::from_letters(std::move(letters),
                                   std::make_shared<const CartanMatrix>(cartan));
}

ShuffleWord make_word(const LabelSequence& top, const LabelSequence& bottom,
                      std::string_view origins, const CartanMatrix& cartan) {
  const auto parsed = parse_origins(origins);
  return make_word(top, bottom, parsed, cartan);
}

ShuffleWord bottom_word(const LabelSequence& bottom, std::shared_ptr<const CartanMatrix> cartan) {
  check_letters(bottom, cartan->rank(), "bottom");
  std::vector<Letter> letters;
  letters.reserve(bottom.size());
  for (const int k : bottom) letters.push_back({k, Origin::Bottom});
  return ShuffleWord::from_letters(std::move(letters), std::move(cartan));
}

ShuffleWord bottom_word(const LabelSequence& bottom, const CartanMatrix& cartan) {
  return bottom_word(bottom, std::make_shared<const CartanMatrix>(cartan));
}

std::vector<Origin> parse_origins(std::string_view text) {
  std::vector<Origin> out;
  out.reserve(text.size());
  for (const char c : text) {
    if (c == 'T')
      out.push_back(Origin::Top);
    else if (c == 'B')
      out.push_back(Origin::Bottom);
    else
      throw Error(ErrorCode::MalformedInput,
                  std::string("origin character '") + c + "' is not 'T' or 'B'");
  }
  return out;
}

}  // namespace stringex
