#include "stringex/moves.hpp"

#include "stringex/error.hpp"

namespace stringex {

FlipResult flip(const ShuffleWord& word, int pos) {
  if (pos < 1 || pos >= word.length())
    throw Error(ErrorCode::PositionOutOfRange,
                "flip position " + std::to_string(pos) + " outside [1," +
                    std::to_string(word.length() - 1) + "]");
  const Letter& left = word.at(pos);
  const Letter& right = word.at(pos + 1);
  if (left.origin == right.origin)
    throw Error(ErrorCode::NotAQuadrilateral,
                "triangles " + std::to_string(pos) + " and " + std::to_string(pos + 1) +
                    " share an origin");

  FlipEffect effect;
  if (left.value == right.value) {
    // rank of the node at pos among level-v nodes, counted on the pre-flip word
    int rank = 0;
    for (int t = 1; t <= pos; ++t)
      if (word.at(t).value == left.value) ++rank;
    effect = FlipEffect::mutate_at({left.value, rank});
  }

  auto letters = word.letters();
  std::swap(letters[static_cast<std::size_t>(pos - 1)], letters[static_cast<std::size_t>(pos)]);
  return {word.with_letters(std::move(letters)), effect};
}

std::vector<FlipStep> flip_path(const ShuffleWord& from, const ShuffleWord& to) {
  if (!(from.cartan() == to.cartan()) || from.top() != to.top() || from.bottom() != to.bottom())
    throw Error(ErrorCode::NotSameShuffleClass, "words are not shuffles of the same (i, j)");

  std::vector<FlipStep> path;
  ShuffleWord current = from;
  const int len = from.length();
  for (int t = 1; t <= len; ++t) {
    const Origin wanted = to.at(t).origin;
    if (current.at(t).origin == wanted) continue;
    int s = t + 1;
    while (current.at(s).origin != wanted) ++s;
    // everything in [t, s) has the other origin, so each swap is a flip
    for (int q = s - 1; q >= t; --q) {
      auto [next, effect] = flip(current, q);
      path.push_back({q, effect});
      current = std::move(next);
    }
  }
  return path;
}

MutationSeq path_mutations(const std::vector<FlipStep>& path) {
  std::vector<ClosedStringId> steps;
  for (const auto& step : path)
    if (step.effect.mutated) steps.push_back(*step.effect.mutated);
  return MutationSeq::from_application_order(std::move(steps));
}

std::string_view to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::Ld: return "Ld";
    case ReductionKind::Lu: return "Lu";
    case ReductionKind::Rd: return "Rd";
    case ReductionKind::Ru: return "Ru";
  }
  return "?";
}

ReductionKind parse_reduction_kind(std::string_view text) {
  if (text == "Ld") return ReductionKind::Ld;
  if (text == "Lu") return ReductionKind::Lu;
  if (text == "Rd") return ReductionKind::Rd;
  if (text == "Ru") return ReductionKind::Ru;
  throw Error(ErrorCode::MalformedInput,
              "reduction kind '" + std::string(text) + "' is not one of Ld, Lu, Rd, Ru");
}

ShuffleWord reduce(const ShuffleWord& word, ReductionKind kind) {
  if (word.empty())
    throw Error(ErrorCode::ReductionNotApplicable, "empty word has no end triangle");
  const bool left = kind == ReductionKind::Ld || kind == ReductionKind::Lu;
  const Origin required =
      (kind == ReductionKind::Ld || kind == ReductionKind::Rd) ? Origin::Bottom : Origin::Top;
  const int pos = left ? 1 : word.length();
  if (word.at(pos).origin != required)
    throw Error(ErrorCode::ReductionNotApplicable,
                std::string(to_string(kind)) + " needs a " +
                    (required == Origin::Bottom ? "Bottom" : "Top") + " letter at triangle " +
                    std::to_string(pos));

  auto letters = word.letters();
  auto& end = letters[static_cast<std::size_t>(pos - 1)];
  end.origin = required == Origin::Bottom ? Origin::Top : Origin::Bottom;
  return word.with_letters(std::move(letters));
}

BottomReduction reduce_to_bottom(const ShuffleWord& word) {
  ShuffleWord current = word;
  std::vector<FlipStep> flips;
  for (;;) {
    const auto& letters = current.letters();
    const auto first_top = std::find_if(letters.begin(), letters.end(),
                                        [](const Letter& l) { return l.origin == Origin::Top; });
    if (first_top == letters.end()) break;
    const int p = static_cast<int>(first_top - letters.begin()) + 1;
    for (int q = p - 1; q >= 1; --q) {
      auto [next, effect] = flip(current, q);
      flips.push_back({q, effect});
      current = std::move(next);
    }
    current = reduce(current, ReductionKind::Lu);
  }

  // Flips and end toggles keep the left-to-right order of closed strings on
  // every level, so vertices correspond by label.
  std::map<ClosedStringId, ClosedStringId> label_map;
  for (const auto& id : build_diagram(current).labels()) label_map.emplace(id, id);

  std::vector<ClosedStringId> steps;
  for (const auto& f : flips)
    if (f.effect.mutated) steps.push_back(*f.effect.mutated);
  // B(bottom) = mu_vk ... mu_v1 B(word), so B(word) = mu_v1 ∘ ... ∘ mu_vk B(bottom).
  return {current, MutationSeq{std::move(steps)}, std::move(label_map), std::move(flips)};
}

}  // namespace stringex
