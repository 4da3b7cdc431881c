#include "stringex/io.hpp"

#include "stringex/error.hpp"

namespace stringex::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

const json& member(const json& j, const char* key) {
  if (!j.is_object()) malformed("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing field \"") + key + "\"");
  return *it;
}

Integer as_integer(const json& j, const char* what) {
  if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
  return j.get<Integer>();
}

LabelSequence as_sequence(const json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array");
  LabelSequence out;
  for (const auto& v : j) out.push_back(static_cast<int>(as_integer(v, what)));
  return out;
}

ClosedStringId as_label(const json& j) {
  if (!j.is_string()) malformed("vertex labels must be strings \"k:i\"");
  return parse_string_id(j.get<std::string>());
}

}  // namespace

ShuffleWord word_from_json(const json& instance) {
  const json& grid = member(instance, "cartan");
  if (!grid.is_array()) malformed("cartan must be an array of rows");
  std::vector<std::vector<Integer>> rows;
  for (const auto& row : grid) {
    if (!row.is_array()) malformed("cartan rows must be arrays");
    std::vector<Integer> r;
    for (const auto& v : row) r.push_back(as_integer(v, "cartan entry"));
    rows.push_back(std::move(r));
  }
  const CartanMatrix cartan = validate_cartan(rows);

  const LabelSequence top =
      instance.contains("top") ? as_sequence(instance["top"], "top") : LabelSequence{};
  const LabelSequence bottom = as_sequence(member(instance, "bottom"), "bottom");
  if (!instance.contains("origins")) {
    if (!top.empty()) malformed("origins are required when top is non-empty");
    return bottom_word(bottom, cartan);
  }
  const json& origins = instance["origins"];
  if (!origins.is_string()) malformed("origins must be a string of 'T'/'B'");
  return make_word(top, bottom, origins.get<std::string>(), cartan);
}

json word_to_json(const ShuffleWord& word) {
  json rows = json::array();
  const auto& a = word.cartan().entries();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"cartan", rows},
              {"top", word.top()},
              {"bottom", word.bottom()},
              {"origins", word.origin_string()}};
}

json matrix_to_json(const ExchangeMatrix& m) {
  json labels = json::array();
  for (const auto& id : m.labels()) labels.push_back(to_string(id));
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.size(); ++j) row.push_back(m.entries()(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"labels", labels}, {"rows", rows}};
}

ExchangeMatrix matrix_from_json(const json& j) {
  const json& labels_json = member(j, "labels");
  const json& rows = member(j, "rows");
  if (!labels_json.is_array() || !rows.is_array()) malformed("labels and rows must be arrays");
  std::vector<ClosedStringId> labels;
  for (const auto& l : labels_json) labels.push_back(as_label(l));
  const auto n = static_cast<Eigen::Index>(labels.size());
  if (static_cast<Eigen::Index>(rows.size()) != n) malformed("row count differs from label count");
  MatrixX<Integer> b(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      malformed("matrix rows must have one entry per label");
    for (Eigen::Index c = 0; c < n; ++c)
      b(i, c) = as_integer(row[static_cast<std::size_t>(c)], "matrix entry");
  }
  return ExchangeMatrix(std::move(labels), std::move(b));
}

json seq_to_json(const MutationSeq& s) {
  json out = json::array();
  for (const auto& id : s.directions) out.push_back(to_string(id));
  return out;
}

MutationSeq seq_from_json(const json& j) {
  if (!j.is_array()) malformed("mutation sequences must be arrays of labels");
  MutationSeq s;
  for (const auto& l : j) s.directions.push_back(as_label(l));
  return s;
}

json label_map_to_json(const std::map<ClosedStringId, ClosedStringId>& map) {
  json out = json::object();
  for (const auto& [from, to] : map) out[to_string(from)] = to_string(to);
  return out;
}

std::map<ClosedStringId, ClosedStringId> label_map_from_json(const json& j) {
  if (!j.is_object()) malformed("label_map must be an object");
  std::map<ClosedStringId, ClosedStringId> out;
  for (const auto& [from, to] : j.items()) out.emplace(parse_string_id(from), as_label(to));
  return out;
}

json certificate_to_json(const Certificate& cert) {
  json steps = json::array();
  for (const auto& s : cert.steps) {
    json connection = json::object();
    for (const auto& [id, v] : s.connection) connection[to_string(id)] = v;
    steps.push_back(json{{"level", s.level},
                         {"skipped", s.skipped},
                         {"vertex", s.skipped ? json(nullptr) : json(to_string(s.vertex))},
                         {"mu", seq_to_json(s.mu)},
                         {"connection", connection}});
  }
  json targets = json::array();
  for (const auto& id : cert.target_labels) targets.push_back(to_string(id));
  return json{{"steps", steps},
              {"outer_mutations", seq_to_json(cert.outer_mutations)},
              {"label_map", label_map_to_json(cert.label_map)},
              {"target_labels", targets},
              {"symmetrizer", cert.symmetrizer}};
}

Certificate certificate_from_json(const json& j) {
  Certificate cert;
  const json& steps = member(j, "steps");
  if (!steps.is_array()) malformed("steps must be an array");
  for (const auto& s : steps) {
    CertificateStep step;
    step.level = static_cast<int>(as_integer(member(s, "level"), "level"));
    const json& skipped = member(s, "skipped");
    if (!skipped.is_boolean()) malformed("skipped must be a boolean");
    step.skipped = skipped.get<bool>();
    if (!step.skipped) {
      step.vertex = as_label(member(s, "vertex"));
      step.mu = seq_from_json(member(s, "mu"));
      const json& connection = member(s, "connection");
      if (!connection.is_object()) malformed("connection must be an object");
      for (const auto& [label, v] : connection.items())
        step.connection.emplace(parse_string_id(label), as_integer(v, "connection entry"));
    }
    cert.steps.push_back(std::move(step));
  }
  cert.outer_mutations = seq_from_json(member(j, "outer_mutations"));
  cert.label_map = label_map_from_json(member(j, "label_map"));
  const json& targets = member(j, "target_labels");
  if (!targets.is_array()) malformed("target_labels must be an array");
  for (const auto& t : targets) cert.target_labels.push_back(as_label(t));
  const json& sym = member(j, "symmetrizer");
  if (!sym.is_array()) malformed("symmetrizer must be an array");
  for (const auto& v : sym) cert.symmetrizer.push_back(as_integer(v, "symmetrizer entry"));
  return cert;
}

}  // namespace stringex::io
