#include "stringex/pprime.hpp"

#include "stringex/moves.hpp"

namespace stringex {

namespace {

void require_all_bottom(const ShuffleWord& word) {
  if (!word.is_all_bottom())
    throw Error(ErrorCode::MalformedInput, "expected a word with every letter on the bottom");
  if (word.empty()) throw Error(ErrorCode::LevelEmpty, "empty word");
}

std::map<ClosedStringId, ClosedStringId> shift_level(const std::vector<ClosedStringId>& labels,
                                                     int level, int by) {
  std::map<ClosedStringId, ClosedStringId> map;
  for (const auto& id : labels)
    if (id.level == level) map.emplace(id, ClosedStringId{level, id.index + by});
  return map;
}

}  // namespace

MutationSeq source_mutation_seq(const ShuffleWord& word) {
  require_all_bottom(word);
  const int level = word.at(1).value;
  const int m = build_diagram(word).closed_count(level);
  if (m == 0)
    throw Error(ErrorCode::LevelEmpty, "no closed string on level " + std::to_string(level));
  MutationSeq seq;
  for (int r = 2; r <= m; ++r) seq.directions.push_back({level, r});
  return seq;
}

MutationSeq sink_mutation_seq(const ShuffleWord& word) {
  require_all_bottom(word);
  const int level = word.at(word.length()).value;
  const int m = build_diagram(word).closed_count(level);
  if (m == 0)
    throw Error(ErrorCode::LevelEmpty, "no closed string on level " + std::to_string(level));
  MutationSeq seq;
  for (int r = m - 1; r >= 1; --r) seq.directions.push_back({level, r});
  return seq;
}

std::size_t Certificate::extension_count() const {
  std::size_t n = 0;
  for (const auto& s : steps)
    if (!s.skipped) ++n;
  return n;
}

Certificate certify_pprime(const ShuffleWord& word) {
  const BottomReduction reduction = reduce_to_bottom(word);
  const auto values = reduction.bottom.values();
  const auto cartan = word.cartan_ptr();

  Certificate cert;
  cert.outer_mutations = reduction.mutations;
  cert.label_map = reduction.label_map;
  cert.target_labels = build_diagram(word).labels();
  const auto& s = cartan->symmetrizer();
  cert.symmetrizer.assign(s.data(), s.data() + s.size());

  // layer `start` handles the suffix values[start..]; a suffix of length <= 1
  // has no closed strings and is the empty base
  for (std::size_t start = 0; start + 1 < values.size(); ++start) {
    const ShuffleWord layer =
        bottom_word(LabelSequence(values.begin() + static_cast<std::ptrdiff_t>(start), values.end()),
                    cartan);
    const StringDiagram diagram = build_diagram(layer);
    const int level = values[start];
    CertificateStep step;
    step.level = level;
    if (diagram.closed_count(level) == 0) {
      step.skipped = true;
      cert.steps.push_back(std::move(step));
      continue;
    }

    const ExchangeMatrix b = exchange_matrix(diagram);
    step.vertex = {level, 1};
    step.mu = source_mutation_seq(layer);
    const ExchangeMatrix mutated = apply_seq(b, step.mu);
    step.connection = mutated.column(step.vertex);
    for (const auto& [id, value] : step.connection)
      if (value < 0)
        throw Error(ErrorCode::InternalLemmaViolation,
                    "connection entry " + to_string(id) + " of " + to_string(step.vertex) +
                        " is negative");

    // deleting level:1 from B must give the next layer's matrix
    const ShuffleWord inner =
        bottom_word(LabelSequence(values.begin() + static_cast<std::ptrdiff_t>(start) + 1, values.end()),
                    cartan);
    const auto peeled = relabeled(without_vertex(b, step.vertex),
                                  shift_level(b.labels(), level, -1));
    if (!same_matrix(peeled, exchange_matrix(inner)))
      throw Error(ErrorCode::InternalLemmaViolation,
                  "deleting " + to_string(step.vertex) + " does not give the suffix matrix");
    cert.steps.push_back(std::move(step));
  }
  return cert;
}

VerificationResult verify_certificate(const Certificate& cert, const ExchangeMatrix& m) {
  VerificationResult result;
  const auto fail = [&](std::optional<std::size_t> step, std::string detail) {
    result.ok = false;
    result.failing_step = step;
    result.detail = std::move(detail);
    return result;
  };
  const auto weight = [&](const ClosedStringId& id) -> std::optional<Integer> {
    if (id.level < 1 || static_cast<std::size_t>(id.level) > cert.symmetrizer.size())
      return std::nullopt;
    const Integer s = cert.symmetrizer[static_cast<std::size_t>(id.level - 1)];
    if (s < 1) return std::nullopt;
    return s;
  };

  ExchangeMatrix state;
  for (std::size_t back = cert.steps.size(); back-- > 0;) {
    const CertificateStep& step = cert.steps[back];
    if (step.skipped) continue;
    if (step.vertex != ClosedStringId{step.level, 1})
      return fail(back, "adjoined vertex must be the first string of its level");
    try {
      state = relabeled(state, shift_level(state.labels(), step.level, +1));
      if (state.contains(step.vertex))
        return fail(back, "vertex " + to_string(step.vertex) + " already present");
      state = apply_seq(state, step.mu);

      const Eigen::Index n = state.size();
      if (step.connection.size() != static_cast<std::size_t>(n))
        return fail(back, "connection does not cover the current vertex set");
      const auto sv = weight(step.vertex);
      if (!sv) return fail(back, "no symmetrizer entry for " + to_string(step.vertex));

      auto labels = state.labels();
      labels.push_back(step.vertex);
      MatrixX<Integer> b = MatrixX<Integer>::Zero(n + 1, n + 1);
      b.topLeftCorner(n, n) = state.entries();
      for (Eigen::Index i = 0; i < n; ++i) {
        const auto& x = labels[static_cast<std::size_t>(i)];
        const auto it = step.connection.find(x);
        if (it == step.connection.end())
          return fail(back, "connection lacks an entry for " + to_string(x));
        const auto sx = weight(x);
        if (!sx) return fail(back, "no symmetrizer entry for " + to_string(x));
        // s_x b_xv = -s_v b_vx
        const Integer scaled = -*sx * it->second;
        if (scaled % *sv != 0)
          return fail(back, "row entry for " + to_string(x) + " is not integral");
        b(i, n) = it->second;
        b(n, i) = scaled / *sv;
      }
      state = canonical(ExchangeMatrix(std::move(labels), std::move(b)));
      if (!is_source_sink_extension(state, step.vertex))
        return fail(back, "column of " + to_string(step.vertex) + " is not sign-coherent");
      state = apply_seq(state, step.mu.inverse());
    } catch (const Error& e) {
      return fail(back, e.what());
    }
  }

  try {
    state = apply_seq(state, cert.outer_mutations);
    state = relabeled(state, cert.label_map);
    if (state.size() != static_cast<Eigen::Index>(cert.target_labels.size()))
      return fail(std::nullopt, "replayed matrix has the wrong number of vertices");
    for (const auto& id : cert.target_labels)
      if (!state.contains(id) || !m.contains(id))
        return fail(std::nullopt, "target vertex " + to_string(id) + " missing");
    if (!same_matrix(state, m)) return fail(std::nullopt, "replayed matrix differs from target");
  } catch (const Error& e) {
    return fail(std::nullopt, e.what());
  }
  result.ok = true;
  return result;
}

}  // namespace stringex
