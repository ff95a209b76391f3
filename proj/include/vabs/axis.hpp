#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vabs/alphabet.hpp"

namespace vabs {

enum class RepresentationKind { Data, Visual };

std::string_view to_string(RepresentationKind k);
std::optional<RepresentationKind> parse_representation_kind(std::string_view text);

// One stage of an abstraction axis. `information` is the entropy of the
// node's alphabet when one is modelled, or a supplied value in bits.
struct RepresentationNode {
  std::string id;
  RepresentationKind kind = RepresentationKind::Visual;
  std::optional<std::string> alphabet;
  double information = 0;
  std::set<std::string> attributes;

  static RepresentationNode from_alphabet(std::string id, RepresentationKind kind, const Alphabet& alphabet,
                                          std::set<std::string> attributes);

  bool operator==(const RepresentationNode&) const = default;
};

class AbstractionAxis {
 public:
  AbstractionAxis(std::string id, std::vector<RepresentationNode> nodes, std::string purpose)
      : id_(std::move(id)), nodes_(std::move(nodes)), purpose_(std::move(purpose)) {}

  const std::string& id() const noexcept { return id_; }
  const std::vector<RepresentationNode>& nodes() const noexcept { return nodes_; }
  const std::string& purpose() const noexcept { return purpose_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  // Union of the attribute tags of all nodes.
  std::set<std::string> attributes() const;

  bool operator==(const AbstractionAxis&) const = default;

 private:
  std::string id_;
  std::vector<RepresentationNode> nodes_;
  std::string purpose_;
};

// Throws ValidationError for fewer than two nodes, duplicate node ids, or
// negative / non-finite information.
AbstractionAxis build_axis(std::string id, std::vector<RepresentationNode> nodes, std::string purpose);

enum class TransitionKind { Removes, Adds, RemovesAndAdds, Preserves };

std::string_view to_string(TransitionKind k);

// Classifies the step from node i to node i + 1.
//
// Attribute changes take precedence: tags lost and gained is RemovesAndAdds.
// A one-sided attribute change only counts as a pure removal (addition) when
// the information also strictly drops (rises); otherwise detail was replaced
// and the step is RemovesAndAdds. Without attribute changes the information
// difference decides, with a 1e-9 dead band for Preserves.
//
// Throws std::out_of_range unless i + 1 < axis.size().
TransitionKind classify_transition(const AbstractionAxis& axis, std::size_t i);

// True when information strictly decreases at every step.
bool is_monotone_decreasing(const AbstractionAxis& axis);

// A combination of axes acting on pairwise disjoint visual attributes. Its
// points are tuples of per-axis node indices.
class AbstractionSpace {
 public:
  const std::vector<AbstractionAxis>& axes() const noexcept { return axes_; }

  // Product of axis lengths.
  std::size_t point_count() const noexcept;
  // Mixed-radix decoding of a flat index, first axis varying slowest.
  std::vector<std::size_t> point(std::size_t flat) const;
  std::vector<std::vector<std::size_t>> points() const;

 private:
  friend AbstractionSpace combine_space(std::vector<AbstractionAxis> axes);
  explicit AbstractionSpace(std::vector<AbstractionAxis> axes) : axes_(std::move(axes)) {}

  std::vector<AbstractionAxis> axes_;
};

// Throws ValidationError for fewer than two axes and OverlappingAttributes
// when a tag appears on two axes.
AbstractionSpace combine_space(std::vector<AbstractionAxis> axes);

// Two axes that share a leading run of node ids and then diverge.
struct ForkPoint {
  std::string axis_a;
  std::string axis_b;
  std::vector<std::string> shared_prefix;
  std::string next_a;  // first node after the fork on each axis
  std::string next_b;

  bool operator==(const ForkPoint&) const = default;
};

// Pairwise fork detection. An axis that merely extends another, or two
// identical axes, never fork.
std::vector<ForkPoint> detect_fork(std::span<const AbstractionAxis> axes);

}  // namespace vabs
