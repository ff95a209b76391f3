#include "vabs/axis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "vabs/error.hpp"

namespace vabs {

namespace {

constexpr double kInformationDeadBand = 1e-9;

}  // namespace

std::string_view to_string(RepresentationKind k) { return k == RepresentationKind::Data ? "data" : "visual"; }

std::optional<RepresentationKind> parse_representation_kind(std::string_view text) {
  if (text == "data") return RepresentationKind::Data;
  if (text == "visual") return RepresentationKind::Visual;
  return std::nullopt;
}

std::string_view to_string(TransitionKind k) {
  switch (k) {
    case TransitionKind::Removes: return "Removes";
    case TransitionKind::Adds: return "Adds";
    case TransitionKind::RemovesAndAdds: return "RemovesAndAdds";
    case TransitionKind::Preserves: return "Preserves";
  }
  return "?";
}

RepresentationNode RepresentationNode::from_alphabet(std::string id, RepresentationKind kind,
                                                     const Alphabet& alphabet, std::set<std::string> attributes) {
  return RepresentationNode{std::move(id), kind, alphabet.id(), entropy(alphabet), std::move(attributes)};
}

std::set<std::string> AbstractionAxis::attributes() const {
  std::set<std::string> all;
  for (const auto& n : nodes_) all.insert(n.attributes.begin(), n.attributes.end());
  return all;
}

AbstractionAxis build_axis(std::string id, std::vector<RepresentationNode> nodes, std::string purpose) {
  std::vector<std::string> problems;
  if (nodes.size() < 2) {
    problems.push_back("axis '" + id + "' needs at least 2 nodes, got " + std::to_string(nodes.size()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : nodes) {
    if (!seen.insert(n.id).second) problems.push_back("axis '" + id + "': duplicate node id '" + n.id + "'");
    if (!std::isfinite(n.information) || n.information < 0) {
      problems.push_back("axis '" + id + "': node '" + n.id + "' has invalid information");
    }
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));
  return AbstractionAxis(std::move(id), std::move(nodes), std::move(purpose));
}

TransitionKind classify_transition(const AbstractionAxis& axis, std::size_t i) {
  if (i + 1 >= axis.size()) {
    throw std::out_of_range("transition " + std::to_string(i) + " outside axis '" + axis.id() + "' of " +
                            std::to_string(axis.size()) + " nodes");
  }
  const RepresentationNode& a = axis.nodes()[i];
  const RepresentationNode& b = axis.nodes()[i + 1];

  const bool lost = !std::includes(b.attributes.begin(), b.attributes.end(), a.attributes.begin(), a.attributes.end());
  const bool gained =
      !std::includes(a.attributes.begin(), a.attributes.end(), b.attributes.begin(), b.attributes.end());
  const double delta = b.information - a.information;
  const bool info_down = delta < -kInformationDeadBand;
  const bool info_up = delta > kInformationDeadBand;

  if (lost && gained) return TransitionKind::RemovesAndAdds;
  if (lost) return info_down ? TransitionKind::Removes : TransitionKind::RemovesAndAdds;
  if (gained) return info_up ? TransitionKind::Adds : TransitionKind::RemovesAndAdds;
  if (info_down) return TransitionKind::Removes;
  if (info_up) return TransitionKind::Adds;
  return TransitionKind::Preserves;
}

bool is_monotone_decreasing(const AbstractionAxis& axis) {
  for (std::size_t i = 0; i + 1 < axis.size(); ++i) {
    if (!(axis.nodes()[i + 1].information < axis.nodes()[i].information)) return false;
  }
  return true;
}

std::size_t AbstractionSpace::point_count() const noexcept {
  std::size_t n = 1;
  for (const auto& a : axes_) n *= a.size();
  return n;
}

std::vector<std::size_t> AbstractionSpace::point(std::size_t flat) const {
  if (flat >= point_count()) throw std::out_of_range("space point " + std::to_string(flat) + " out of range");
  std::vector<std::size_t> idx(axes_.size());
  for (std::size_t k = axes_.size(); k-- > 0;) {
    idx[k] = flat % axes_[k].size();
    flat /= axes_[k].size();
  }
  return idx;
}

std::vector<std::vector<std::size_t>> AbstractionSpace::points() const {
  std::vector<std::vector<std::size_t>> all;
  const std::size_t n = point_count();
  all.reserve(n);
  for (std::size_t i = 0; i < n; ++i) all.push_back(point(i));
  return all;
}

AbstractionSpace combine_space(std::vector<AbstractionAxis> axes) {
  if (axes.size() < 2) {
    throw ValidationError({"an abstraction space needs at least 2 axes, got " + std::to_string(axes.size())});
  }
  std::map<std::string, std::string> owner;  // tag -> axis id
  std::size_t count = 1;
  for (const auto& axis : axes) {
    for (const auto& tag : axis.attributes()) {
      const auto [it, inserted] = owner.emplace(tag, axis.id());
      if (!inserted) throw OverlappingAttributes(tag, it->second, axis.id());
    }
    if (axis.size() == 0 || count > std::numeric_limits<std::size_t>::max() / axis.size()) {
      throw ValidationError({"abstraction space is too large to index"});
    }
    count *= axis.size();
  }
  return AbstractionSpace(std::move(axes));
}

std::vector<ForkPoint> detect_fork(std::span<const AbstractionAxis> axes) {
  std::vector<ForkPoint> forks;
  for (std::size_t i = 0; i < axes.size(); ++i) {
    for (std::size_t j = i + 1; j < axes.size(); ++j) {
      const auto& a = axes[i].nodes();
      const auto& b = axes[j].nodes();
      std::size_t k = 0;
      while (k < a.size() && k < b.size() && a[k].id == b[k].id) ++k;
      if (k == 0 || k == a.size() || k == b.size()) continue;
      ForkPoint f{axes[i].id(), axes[j].id(), {}, a[k].id, b[k].id};
      for (std::size_t m = 0; m < k; ++m) f.shared_prefix.push_back(a[m].id);
      forks.push_back(std::move(f));
    }
  }
  return forks;
}

}  // namespace vabs
