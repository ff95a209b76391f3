#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "vabs/alphabet.hpp"
#include "vabs/axis.hpp"
#include "vabs/channel.hpp"
#include "vabs/cost_benefit.hpp"
#include "vabs/error.hpp"

namespace vabs {

using Json = nlohmann::ordered_json;

// A scenario file failed to parse, referenced something undeclared, or broke
// an invariant. `path` names the offending element, e.g. "channels[0].from".
class ScenarioError : public Error {
 public:
  ScenarioError(std::string path, const std::string& message);

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// Declaration-ordered table of named values.
template <class T>
class Table {
 public:
  bool contains(const std::string& id) const { return items_.contains(id); }
  const T* find(const std::string& id) const {
    const auto it = items_.find(id);
    return it == items_.end() ? nullptr : &it->second;
  }
  const std::vector<std::string>& ids() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }

  void add(const std::string& id, T value) {
    items_.emplace(id, std::move(value));
    order_.push_back(id);
  }

 private:
  std::vector<std::string> order_;
  std::map<std::string, T> items_;
};

struct DirectRoute {
  std::string id;
  std::string stage;
  std::string pipeline;
};

struct ScenarioMeta {
  std::string title;
  std::optional<PointOfView> point_of_view;
  std::string intent;  // the designer's stated intent; recorded, never inferred
};

// A validated scenario: every declaration resolved into library values, plus
// the canonical document it was built from.
struct Scenario {
  ScenarioMeta meta;
  Table<Alphabet> alphabets;
  Table<Channel> channels;
  Table<Stage> stages;
  Table<Pipeline> pipelines;
  std::vector<DirectRoute> direct_routes;
  std::vector<AbstractionJudgment> judgments;
  std::vector<AbstractionAxis> axes;

  // Normalized declarations: known keys only, canonical order, defaults
  // filled in, derived alphabets kept in their compact form.
  Json document;
};

Scenario parse_scenario(const Json& document);
Scenario parse_scenario_text(std::string_view text);
// Throws ScenarioError (path "$") when the file cannot be read.
Scenario load_scenario(const std::filesystem::path& path);

// The canonical document; loading it again yields the same scenario.
const Json& serialize(const Scenario& scenario);

}  // namespace vabs
