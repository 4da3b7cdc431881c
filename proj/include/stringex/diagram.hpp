#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stringex/core.hpp"
#include "stringex/error.hpp"

namespace stringex {

/// Label of a closed string: its level and its left-to-right rank on that
/// level, both 1-based. Rendered as "level:index". The default ordering is
/// the vertex order used for matrix rows: by level, then by index.
struct ClosedStringId {
  int level = 0;
  int index = 0;

  friend auto operator<=>(const ClosedStringId&, const ClosedStringId&) = default;
};

std::string to_string(const ClosedStringId& id);

/// Parses "k:i". Throws Error{MalformedInput}.
ClosedStringId parse_string_id(std::string_view text);

struct Node {
  int triangle_pos;  // 1-based
  int level;
  int epsilon;       // +1 for a bottom-labelled triangle, -1 for top
};

struct ClosedString {
  ClosedStringId id;
  int left_pos;   // triangle position of the left endpoint node
  int right_pos;  // triangle position of the right endpoint node
};

class StringDiagram {
 public:
  explicit StringDiagram(ShuffleWord word);

  const ShuffleWord& word() const { return word_; }
  int levels() const { return static_cast<int>(nodes_by_level_.size()); }
  int length() const { return word_.length(); }

  /// Nodes on level k (1-based), left to right.
  const std::vector<Node>& nodes_on(int level) const {
    return nodes_by_level_.at(static_cast<std::size_t>(level - 1));
  }

  /// Node in triangle t (1-based).
  const Node& node_at(int t) const {
    if (t < 1 || t > static_cast<int>(nodes_.size()))
      throw Error(ErrorCode::PositionOutOfRange, "node position " + std::to_string(t));
    return nodes_[static_cast<std::size_t>(t - 1)];
  }

  /// Rank (1-based) of the node at triangle t among the nodes of its level.
  int rank_of(int t) const { return ranks_.at(static_cast<std::size_t>(t - 1)); }

  /// All closed strings in vertex order.
  const std::vector<ClosedString>& closed_strings() const { return closed_; }

  /// The ordered vertex set I.
  std::vector<ClosedStringId> labels() const;

  int closed_count(int level) const;

  /// Position of id in closed_strings(), if it exists.
  std::optional<std::size_t> find(const ClosedStringId& id) const;

  /// Throws Error{UnknownString}.
  const ClosedString& at(const ClosedStringId& id) const;

  /// Closed string ending at the node of triangle t from the left (the string
  /// to the node's left), if that string is closed.
  std::optional<ClosedStringId> left_string(int t) const;

  /// Closed string starting at the node of triangle t, if closed.
  std::optional<ClosedStringId> right_string(int t) const;

 private:
  ShuffleWord word_;
  std::vector<Node> nodes_;
  std::vector<int> ranks_;
  std::vector<std::vector<Node>> nodes_by_level_;
  std::vector<ClosedString> closed_;
};

StringDiagram build_diagram(const ShuffleWord& word);

/// True iff closed string z passes through triangle t, i.e. t lies strictly
/// between the triangles of z's two endpoint nodes.
/// Throws Error{UnknownString} or Error{PositionOutOfRange}.
bool crosses(const StringDiagram& diagram, const ClosedStringId& z, int t);

/// Fixed-width text rendering, one row per level:
///
///   <k right-aligned to width of n> " |-" cell_1 "-" cell_2 ... cell_L "-\n"
///
/// Each cell is w = len("(+n)") characters wide, n the Cartan rank. The cell
/// of a triangle whose node lies on the row's level holds "(+k)" or "(-k)"
/// left-padded with '-'; all other cells are w dashes. An empty word renders
/// every row as "<k> |-\n".
std::string render_ascii(const StringDiagram& diagram);

}  // namespace stringex
