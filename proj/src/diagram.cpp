#include "stringex/diagram.hpp"

#include <charconv>

#include "stringex/error.hpp"

namespace stringex {

std::string to_string(const ClosedStringId& id) {
  return std::to_string(id.level) + ":" + std::to_string(id.index);
}

ClosedStringId parse_string_id(std::string_view text) {
  const auto colon = text.find(':');
  ClosedStringId id;
  if (colon == std::string_view::npos)
    throw Error(ErrorCode::MalformedInput, "label '" + std::string(text) + "' is not k:i");
  const auto level_part = text.substr(0, colon);
  const auto index_part = text.substr(colon + 1);
  const auto parse = [&](std::string_view part, int& out) {
    const auto* end = part.data() + part.size();
    const auto [ptr, ec] = std::from_chars(part.data(), end, out);
    if (part.empty() || ec != std::errc() || ptr != end || out < 1)
      throw Error(ErrorCode::MalformedInput, "label '" + std::string(text) + "' is not k:i");
  };
  parse(level_part, id.level);
  parse(index_part, id.index);
  return id;
}

StringDiagram::StringDiagram(ShuffleWord word) : word_(std::move(word)) {
  const int n = word_.cartan().rank();
  nodes_by_level_.resize(static_cast<std::size_t>(n));
  const int len = word_.length();
  nodes_.reserve(static_cast<std::size_t>(len));
  ranks_.reserve(static_cast<std::size_t>(len));

  for (int t = 1; t <= len; ++t) {
    const Letter& l = word_.at(t);
    const Node node{t, l.value, l.origin == Origin::Bottom ? 1 : -1};
    auto& row = nodes_by_level_[static_cast<std::size_t>(l.value - 1)];
    row.push_back(node);
    nodes_.push_back(node);
    ranks_.push_back(static_cast<int>(row.size()));
  }

  for (int k = 1; k <= n; ++k) {
    const auto& row = nodes_by_level_[static_cast<std::size_t>(k - 1)];
    for (std::size_t r = 0; r + 1 < row.size(); ++r)
      closed_.push_back({{k, static_cast<int>(r + 1)}, row[r].triangle_pos, row[r + 1].triangle_pos});
  }
}

std::vector<ClosedStringId> StringDiagram::labels() const {
  std::vector<ClosedStringId> out;
  out.reserve(closed_.size());
  for (const auto& c : closed_) out.push_back(c.id);
  return out;
}

int StringDiagram::closed_count(int level) const {
  const auto m = static_cast<int>(nodes_on(level).size());
  return m > 0 ? m - 1 : 0;
}

std::optional<std::size_t> StringDiagram::find(const ClosedStringId& id) const {
  if (id.level < 1 || id.level > levels()) return std::nullopt;
  if (id.index < 1 || id.index > closed_count(id.level)) return std::nullopt;
  // closed_ is grouped by level in order
  std::size_t offset = 0;
  for (int k = 1; k < id.level; ++k) offset += static_cast<std::size_t>(closed_count(k));
  return offset + static_cast<std::size_t>(id.index - 1);
}

const ClosedString& StringDiagram::at(const ClosedStringId& id) const {
  const auto pos = find(id);
  if (!pos) throw Error(ErrorCode::UnknownString, "no closed string " + to_string(id));
  return closed_[*pos];
}

std::optional<ClosedStringId> StringDiagram::left_string(int t) const {
  const Node& node = node_at(t);
  const int r = rank_of(t);
  if (r == 1) return std::nullopt;
  return ClosedStringId{node.level, r - 1};
}

std::optional<ClosedStringId> StringDiagram::right_string(int t) const {
  const Node& node = node_at(t);
  const int r = rank_of(t);
  if (r == static_cast<int>(nodes_on(node.level).size())) return std::nullopt;
  return ClosedStringId{node.level, r};
}

StringDiagram build_diagram(const ShuffleWord& word) { return StringDiagram(word); }

bool crosses(const StringDiagram& diagram, const ClosedStringId& z, int t) {
  if (t < 1 || t > diagram.length())
    throw Error(ErrorCode::PositionOutOfRange,
                "triangle " + std::to_string(t) + " outside [1," +
                    std::to_string(diagram.length()) + "]");
  const ClosedString& s = diagram.at(z);
  return s.left_pos < t && t < s.right_pos;
}

std::string render_ascii(const StringDiagram& diagram) {
  const int n = diagram.levels();
  const std::string widest = std::to_string(n);
  const std::size_t cell = widest.size() + 3;
  std::string out;
  for (int k = 1; k <= n; ++k) {
    const std::string level = std::to_string(k);
    out.append(widest.size() - level.size(), ' ');
    out += level;
    out += " |-";
    for (int t = 1; t <= diagram.length(); ++t) {
      const Node& node = diagram.node_at(t);
      if (node.level == k) {
        const std::string glyph =
            std::string("(") + (node.epsilon > 0 ? "+" : "-") + level + ")";
        out.append(cell - glyph.size(), '-');
        out += glyph;
      } else {
        out.append(cell, '-');
      }
      out += '-';
    }
    out += '\n';
  }
  return out;
}

}  // namespace stringex
