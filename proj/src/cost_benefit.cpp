#include "vabs/cost_benefit.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "vabs/error.hpp"
#include "vabs/numeric.hpp"

namespace vabs {

namespace {

constexpr double kTelescopingTolerance = 1e-9;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

StageReport evaluate_stage(const Stage& stage, const Pmf& prior) {
  const Channel& forward = stage.forward();
  if (!same_letters(prior.support(), forward.from())) {
    throw AlphabetMismatch("stage '" + stage.id() + "' expects a distribution over '" + forward.from_id() + "'");
  }
  const Pmf output = push_forward(prior, forward);

  StageReport r;
  r.stage = stage.id();
  r.input = forward.from_id();
  r.output = forward.to_id();
  r.entropy_in = entropy(prior);
  r.entropy_out = entropy(output);
  r.alphabet_compression = r.entropy_in - r.entropy_out;

  const Pmf q = std::visit(overloaded{
                               [&](const BayesReconstruction&) {
                                 return push_forward(output, bayes_inverse(forward, prior).channel());
                               },
                               [&](const ReconstructionChannel& rc) { return push_forward(output, rc.channel()); },
                               [&](const SuppliedReconstruction& s) { return s.q; },
                           },
                           stage.recon());
  r.potential_distortion = kl_divergence(q, prior);
  r.cost = stage.cost();
  r.benefit = std::isinf(r.potential_distortion) ? -kInfinity : r.alphabet_compression - r.potential_distortion;
  r.ratio = cost_benefit_ratio(r.alphabet_compression, r.potential_distortion, r.cost);
  return r;
}

CostBenefitReport single_stage_report(const Stage& stage, const Pmf& prior) {
  CostBenefitReport report;
  report.id = stage.id();
  report.stages.push_back(evaluate_stage(stage, prior));
  const StageReport& s = report.stages.front();
  report.entropies = {{s.input, s.entropy_in}, {s.output, s.entropy_out}};
  report.benefit = s.benefit;
  report.cost = s.cost;
  report.ratio = s.ratio;
  report.telescoping_residual = 0;
  return report;
}

}  // namespace

Stage::Stage(std::string id, Channel forward, Reconstruction recon, double cost)
    : id_(std::move(id)), forward_(std::move(forward)), recon_(std::move(recon)), cost_(cost) {
  if (!std::isfinite(cost_) || cost_ < 0) {
    throw ValidationError({"stage '" + id_ + "' cost must be a finite non-negative number"});
  }
  if (const auto* rc = std::get_if<ReconstructionChannel>(&recon_)) rc->require_reconstructs(forward_);
  if (const auto* s = std::get_if<SuppliedReconstruction>(&recon_)) {
    if (!same_letters(s->q.support(), forward_.from())) {
      throw AlphabetMismatch("stage '" + id_ + "': supplied reconstruction is not over '" + forward_.from_id() +
                             "'");
    }
  }
}

Pipeline::Pipeline(std::string id, std::vector<Stage> stages, Pmf prior)
    : id_(std::move(id)), stages_(std::move(stages)), prior_(std::move(prior)) {
  if (stages_.empty()) throw ValidationError({"pipeline '" + id_ + "' has no stages"});
  for (std::size_t i = 0; i + 1 < stages_.size(); ++i) {
    const Channel& a = stages_[i].forward();
    const Channel& b = stages_[i + 1].forward();
    if (!same_letters(a.to(), b.from())) {
      throw AlphabetMismatch("pipeline '" + id_ + "': stage '" + stages_[i].id() + "' ends on '" + a.to_id() +
                             "' but stage '" + stages_[i + 1].id() + "' starts on '" + b.from_id() + "'");
    }
  }
  if (!same_letters(prior_.support(), stages_.front().forward().from())) {
    throw AlphabetMismatch("pipeline '" + id_ + "': prior is not over '" + stages_.front().forward().from_id() +
                           "'");
  }
  require_valid(prior_);
}

double CostBenefitReport::alphabet_compression() const {
  double sum = 0;
  for (const auto& s : stages) sum += s.alphabet_compression;
  return sum;
}

double CostBenefitReport::potential_distortion() const {
  double sum = 0;
  for (const auto& s : stages) sum += s.potential_distortion;
  return sum;
}

double cost_benefit_ratio(double alphabet_compression, double potential_distortion, double cost) {
  if (std::isinf(potential_distortion)) return -kInfinity;
  const double benefit = alphabet_compression - potential_distortion;
  if (cost == 0) {
    if (std::abs(benefit) <= kCompareTolerance) return std::numeric_limits<double>::quiet_NaN();
    return benefit > 0 ? kInfinity : -kInfinity;
  }
  return benefit / cost;
}

CostBenefitReport stage_cost_benefit(const Stage& stage, const Pmf& prior) { return single_stage_report(stage, prior); }

CostBenefitReport pipeline_cost_benefit(const Pipeline& pipeline) {
  CostBenefitReport report;
  report.id = pipeline.id();

  Pmf current = pipeline.prior();
  report.entropies.emplace_back(pipeline.stages().front().forward().from_id(), entropy(current));
  for (const Stage& stage : pipeline.stages()) {
    report.stages.push_back(evaluate_stage(stage, current));
    report.entropies.emplace_back(stage.forward().to_id(), report.stages.back().entropy_out);
    current = push_forward(current, stage.forward());
  }

  const double ac = report.alphabet_compression();
  const double pd = report.potential_distortion();
  for (const auto& s : report.stages) report.cost += s.cost;
  report.benefit = std::isinf(pd) ? -kInfinity : ac - pd;
  report.ratio = cost_benefit_ratio(ac, pd, report.cost);

  const double end_to_end = report.entropies.front().second - report.entropies.back().second;
  report.telescoping_residual = std::abs(ac - end_to_end);
  if (report.telescoping_residual > kTelescopingTolerance) {
    throw Error("pipeline '" + pipeline.id() + "': stage compressions do not telescope (residual " +
                std::to_string(report.telescoping_residual) + ")");
  }
  return report;
}

CostBenefitReport direct_cost_benefit(const Stage& direct, const Pmf& prior) {
  return single_stage_report(direct, prior);
}

RouteComparison compare_routes(const Pipeline& via_vis, const Stage& direct) {
  const Channel& first = via_vis.stages().front().forward();
  const Channel& last = via_vis.stages().back().forward();
  if (!same_letters(first.from(), direct.forward().from()) || !same_letters(last.to(), direct.forward().to())) {
    throw AlphabetMismatch("routes differ in endpoints: pipeline '" + via_vis.id() + "' runs " + first.from_id() +
                           " -> " + last.to_id() + ", direct stage '" + direct.id() + "' runs " +
                           direct.forward().from_id() + " -> " + direct.forward().to_id());
  }

  RouteComparison c;
  c.via_vis = pipeline_cost_benefit(via_vis);
  c.direct = direct_cost_benefit(direct, via_vis.prior());
  c.ac_via_vis = c.via_vis.alphabet_compression();
  c.ac_direct = c.direct.alphabet_compression();
  c.ac_identity_residual = std::abs(c.ac_via_vis - c.ac_direct);
  c.ac_identity_holds = c.ac_identity_residual <= kTelescopingTolerance;
  c.cost_premise = c.direct.cost > c.via_vis.cost;
  c.distortion_premise = c.direct.potential_distortion() > c.via_vis.potential_distortion();
  c.premises_satisfied = c.cost_premise && c.distortion_premise;
  c.via_vis_more_cost_beneficial = c.via_vis.ratio > c.direct.ratio;
  return c;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::array<std::pair<ConditionB, std::string_view>, 3> kConditionB{{
    {ConditionB::Satisfied, "satisfied"},
    {ConditionB::NotApplicable, "na"},
    {ConditionB::Negated, "negated"},
}};
constexpr std::array<std::pair<Action, std::string_view>, 3> kActions{{
    {Action::Analyze, "analyze"},
    {Action::Search, "search"},
    {Action::Query, "query"},
}};
constexpr std::array<std::pair<Target, std::string_view>, 4> kTargets{{
    {Target::Data, "data"},
    {Target::Attributes, "attributes"},
    {Target::Networks, "networks"},
    {Target::Spatial, "spatial"},
}};

template <class E, std::size_t N>
std::string_view name_of(const std::array<std::pair<E, std::string_view>, N>& table, E e) {
  for (const auto& [k, v] : table) {
    if (k == e) return v;
  }
  return "?";
}

template <class E, std::size_t N>
std::optional<E> parse_in(const std::array<std::pair<E, std::string_view>, N>& table, std::string_view text) {
  for (const auto& [k, v] : table) {
    if (v == text) return k;
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(ConditionB b) { return name_of(kConditionB, b); }
std::string_view to_string(Action a) { return name_of(kActions, a); }
std::string_view to_string(Target t) { return name_of(kTargets, t); }

std::optional<ConditionB> parse_condition_b(std::string_view text) {
  if (text == "not_applicable") return ConditionB::NotApplicable;
  return parse_in(kConditionB, text);
}
std::optional<Action> parse_action(std::string_view text) { return parse_in(kActions, text); }
std::optional<Target> parse_target(std::string_view text) { return parse_in(kTargets, text); }

int abstraction_score(bool condition_a, ConditionB condition_b) {
  int score = condition_a ? 2 : 0;
  switch (condition_b) {
    case ConditionB::Satisfied: score += 1; break;
    case ConditionB::NotApplicable: break;
    case ConditionB::Negated: score -= 1; break;
  }
  return std::clamp(score, 0, 3);
}

bool is_abstraction(const Pmf& prior, const Channel& c) {
  return alphabet_compression(prior, c) > kCompareTolerance;
}

bool is_meaningful_visual_abstraction(double info_source, double info_target, double cost_source,
                                      double cost_target) {
  if (!std::isfinite(info_source) || !std::isfinite(info_target) || !std::isfinite(cost_source) ||
      !std::isfinite(cost_target)) {
    throw ValidationError({"information and cost must be finite"});
  }
  if (cost_source < 0 || cost_target < 0) throw ValidationError({"costs must be non-negative"});
  return info_target < info_source - kCompareTolerance && cost_target < cost_source;
}

}  // namespace vabs
