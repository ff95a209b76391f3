#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vabs/alphabet.hpp"
#include "vabs/channel.hpp"

namespace vabs {

// Reconstruction derived at evaluation time as the Bayes inverse of the
// forward channel under the stage's incoming distribution.
struct BayesReconstruction {};

// A reconstructed distribution supplied directly, for modelling reader biases
// that no channel captures. Must be over the stage's input letters.
struct SuppliedReconstruction {
  Pmf q;
};

using Reconstruction = std::variant<BayesReconstruction, ReconstructionChannel, SuppliedReconstruction>;

// A forward process P_i paired with its reconstruction Q_i and their cost.
class Stage {
 public:
  // Throws ValidationError for a negative or non-finite cost and
  // AlphabetMismatch when the reconstruction is oriented wrongly.
  Stage(std::string id, Channel forward, Reconstruction recon, double cost);

  const std::string& id() const noexcept { return id_; }
  const Channel& forward() const noexcept { return forward_; }
  const Reconstruction& recon() const noexcept { return recon_; }
  double cost() const noexcept { return cost_; }

 private:
  std::string id_;
  Channel forward_;
  Reconstruction recon_;
  double cost_;
};

// An ordered chain of stages Z_0 -> Z_1 -> ... -> Z_n with a prior over Z_0.
class Pipeline {
 public:
  // Throws AlphabetMismatch on a broken chain and ValidationError on an
  // empty stage list or invalid prior.
  Pipeline(std::string id, std::vector<Stage> stages, Pmf prior);

  const std::string& id() const noexcept { return id_; }
  const std::vector<Stage>& stages() const noexcept { return stages_; }
  const Pmf& prior() const noexcept { return prior_; }

 private:
  std::string id_;
  std::vector<Stage> stages_;
  Pmf prior_;
};

struct StageReport {
  std::string stage;
  std::string input;   // alphabet ids
  std::string output;
  double entropy_in = 0;
  double entropy_out = 0;
  double alphabet_compression = 0;
  double potential_distortion = 0;  // +inf when the reconstruction leaves the prior's support
  double cost = 0;
  double benefit = 0;
  double ratio = 0;
};

struct CostBenefitReport {
  std::string id;
  std::vector<StageReport> stages;
  // Induced entropy of each alphabet of the chain, Z_0 first.
  std::vector<std::pair<std::string, double>> entropies;
  double benefit = 0;
  double cost = 0;
  double ratio = 0;
  // |sum of stage AC - (H(Z_0) - H(Z_n))|.
  double telescoping_residual = 0;

  double alphabet_compression() const;
  double potential_distortion() const;
};

// (AC - PD) / cost with the signed-infinity conventions: infinite PD gives
// -inf; zero cost gives +inf / -inf by the sign of the benefit and NaN when
// the benefit is zero as well.
double cost_benefit_ratio(double alphabet_compression, double potential_distortion, double cost);

// Report for one stage; `prior` is the distribution entering it.
CostBenefitReport stage_cost_benefit(const Stage& stage, const Pmf& prior);

// Combined report over the chain: stage priors are the pushed-forward
// distributions; benefit and cost are sums over stages.
CostBenefitReport pipeline_cost_benefit(const Pipeline& pipeline);

// A single stage D -> T evaluated on its own, as the route without visualization.
CostBenefitReport direct_cost_benefit(const Stage& direct, const Pmf& prior);

struct RouteComparison {
  CostBenefitReport via_vis;
  CostBenefitReport direct;
  double ac_via_vis = 0;       // sum of stage AC along the pipeline
  double ac_direct = 0;
  double ac_identity_residual = 0;
  bool ac_identity_holds = false;  // residual <= 1e-9
  bool cost_premise = false;       // Ct_direct > sum of pipeline Ct
  bool distortion_premise = false; // PD_direct > sum of pipeline PD
  bool premises_satisfied = false;
  bool via_vis_more_cost_beneficial = false;  // strict CB(d->v->t) > CB(d->t)
};

// Throws AlphabetMismatch unless both routes start and end on the same letters.
RouteComparison compare_routes(const Pipeline& via_vis, const Stage& direct);

// ---------------------------------------------------------------------------
// Judgments

enum class ConditionB { Satisfied, NotApplicable, Negated };

std::string_view to_string(ConditionB b);
std::optional<ConditionB> parse_condition_b(std::string_view text);

// 2 for condition A, +1 / 0 / -1 for condition B satisfied / not applicable /
// negated, clamped to 0..3.
int abstraction_score(bool condition_a, ConditionB condition_b);

enum class Action { Analyze, Search, Query };
enum class Target { Data, Attributes, Networks, Spatial };

std::string_view to_string(Action a);
std::string_view to_string(Target t);
std::optional<Action> parse_action(std::string_view text);
std::optional<Target> parse_target(std::string_view text);

// The task a visualization serves: an action upon a target.
struct PointOfView {
  Action action = Action::Analyze;
  Target target = Target::Data;
  std::string refinement;

  bool operator==(const PointOfView&) const = default;
};

struct AbstractionJudgment {
  std::string id;
  bool condition_a = false;
  ConditionB condition_b = ConditionB::NotApplicable;
  std::optional<PointOfView> point_of_view;
  std::string note;

  int score() const { return abstraction_score(condition_a, condition_b); }
  bool operator==(const AbstractionJudgment&) const = default;
};

// True iff the channel loses information on this prior (AC > 1e-12).
bool is_abstraction(const Pmf& prior, const Channel& c);

// Less information and lower cognitive cost at the target than at the source.
// Throws ValidationError for non-finite inputs or negative costs.
bool is_meaningful_visual_abstraction(double info_source, double info_target, double cost_source,
                                      double cost_target);

}  // namespace vabs
