#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vabs/axis.hpp"
#include "vabs/cost_benefit.hpp"
#include "vabs/scenario.hpp"

namespace vabs {

enum class ReportFormat { Table, Json, Csv };

std::optional<ReportFormat> parse_report_format(std::string_view text);

struct AnalyzeOptions {
  std::optional<std::string> pipeline;  // restrict to one pipeline and its routes
  std::optional<std::string> axis;      // restrict to one axis
};

struct TransitionReport {
  std::size_t index = 0;
  std::string from;
  std::string to;
  double information_from = 0;
  double information_to = 0;
  TransitionKind kind = TransitionKind::Preserves;
};

struct AxisReport {
  std::string id;
  std::string purpose;
  std::vector<TransitionReport> transitions;
  bool monotone_decreasing = false;
};

struct RouteReport {
  std::string id;
  std::string pipeline;
  std::string direct;
  RouteComparison comparison;
};

struct Report {
  std::string title;
  std::vector<CostBenefitReport> pipelines;
  std::vector<RouteReport> routes;
  std::vector<AbstractionJudgment> judgments;
  std::vector<AxisReport> axes;
  std::vector<ForkPoint> forks;
};

// Throws ScenarioError when an option names an unknown pipeline or axis.
Report analyze(const Scenario& scenario, const AnalyzeOptions& options = {});

AxisReport analyze_axis(const AbstractionAxis& axis);

// Machine formats carry full round-trip precision and write infinities as
// "+inf" / "-inf" (undefined ratios as "nan"); the table rounds to 4 decimals.
std::string render(const Report& report, ReportFormat format);
Json to_json(const Report& report);

}  // namespace vabs
