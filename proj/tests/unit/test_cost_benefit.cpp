#include <cmath>

#include "doctest.h"
#include "frozen.hpp"
#include "vabs/cost_benefit.hpp"
#include "vabs/error.hpp"
#include "vabs/numeric.hpp"

using namespace vabs;

namespace {

Alphabet listed(const std::string& id, std::size_t n) {
  std::vector<Letter> ls;
  for (std::size_t i = 0; i < n; ++i) ls.push_back({id + std::to_string(i), {}});
  return make_uniform(std::move(ls), id);
}

struct Routes {
  Alphabet d = listed("d", 4);
  Alphabet v = listed("v", 2);
  Alphabet t = listed("t", 2);
  Stage plot{"plot", Channel::deterministic("plot", d, v, {0, 0, 1, 1}), BayesReconstruction{}, 2};
  Stage read{"read", Channel::deterministic("read", v, t, {0, 1}),
             ReconstructionChannel(Channel::stochastic("guess", t, v,
                                                       std::vector<std::vector<double>>{{1, 0}, {0.5, 0.5}})),
             3};
  Channel inspect = Channel::deterministic("inspect", d, t, {0, 0, 1, 1});
  ReconstructionChannel inspect_guess{
      Channel::stochastic("inspect-guess", t, d, std::vector<std::vector<double>>{{1, 0, 0, 0}, {0, 0, 0.5, 0.5}})};

  Pipeline pipeline() const { return Pipeline("d-v-t", {plot, read}, d.pmf()); }
  Stage direct(double cost) const { return Stage("inspect", inspect, inspect_guess, cost); }
};

}  // namespace

TEST_CASE("ratio conventions") {
  CHECK(cost_benefit_ratio(3, 1, 2) == 1.0);
  CHECK(cost_benefit_ratio(3, kInfinity, 2) == -kInfinity);
  CHECK(cost_benefit_ratio(3, 1, 0) == kInfinity);
  CHECK(cost_benefit_ratio(1, 3, 0) == -kInfinity);
  CHECK(std::isnan(cost_benefit_ratio(1, 1, 0)));
  CHECK(cost_benefit_ratio(3, kInfinity, 0) == -kInfinity);
}

TEST_CASE("stage costs are validated") {
  const auto d = listed("d", 2);
  const auto c = Channel::identity("c", d);
  CHECK_THROWS_AS(Stage("s", c, BayesReconstruction{}, -1), ValidationError);
  CHECK_THROWS_AS(Stage("s", c, BayesReconstruction{}, NAN), ValidationError);
  CHECK_THROWS_AS(Stage("s", c, BayesReconstruction{}, INFINITY), ValidationError);
  CHECK_NOTHROW(Stage("s", c, BayesReconstruction{}, 0));
}

TEST_CASE("pipelines must chain end to end") {
  Routes r;
  CHECK_THROWS_AS(Pipeline("p", {r.read, r.plot}, r.v.pmf()), AlphabetMismatch);
  CHECK_THROWS_AS(Pipeline("p", {}, r.d.pmf()), ValidationError);
  CHECK_THROWS_AS(Pipeline("p", {r.plot}, r.v.pmf()), AlphabetMismatch);
}

TEST_CASE("pipeline report sums stages and telescopes") {
  Routes r;
  const auto rep = pipeline_cost_benefit(r.pipeline());
  REQUIRE(rep.stages.size() == 2);
  CHECK(rep.stages[0].alphabet_compression == doctest::Approx(1.0));
  CHECK(rep.stages[0].potential_distortion < 1e-12);
  CHECK(rep.stages[1].potential_distortion == doctest::Approx(frozen::kRoutePD_read).epsilon(1e-13));
  CHECK(rep.cost == 5.0);
  CHECK(rep.ratio == doctest::Approx(frozen::kRouteCB_pipeline).epsilon(1e-13));
  CHECK(rep.telescoping_residual < 1e-12);
  REQUIRE(rep.entropies.size() == 3);
  CHECK(rep.entropies[0].first == "d");
  CHECK(rep.entropies[2].second == doctest::Approx(1.0));
}

TEST_CASE("bar chart pipeline ratio") {
  const auto d = make_quantized_range(0.0, 10000.0, 0.01, "D");
  std::vector<Letter> bl;
  for (int i = 0; i <= 1000; ++i) bl.push_back({std::to_string(i), {}});
  const auto v = make_uniform(std::move(bl), "V");
  const auto t = make_uniform({{"below", {}}, {"above", {}}}, "T");
  std::vector<std::uint32_t> split(1001);
  for (std::size_t h = 0; h <= 1000; ++h) split[h] = h < 500 ? 0 : 1;
  const Pipeline p("d-v-t",
                   {Stage("plot", Channel::quantizer("plot", d, v, 1000), BayesReconstruction{}, 1),
                    Stage("decide", Channel::deterministic("decide", v, t, split), BayesReconstruction{}, 1)},
                   d.pmf());
  const auto rep = pipeline_cost_benefit(p);
  CHECK(std::abs(rep.entropies[2].second - frozen::kBarH_T) < 1e-12);
  CHECK(std::abs(rep.ratio - frozen::kBarPipelineRatio) < 1e-9);
}

TEST_CASE("route comparison with both premises") {
  Routes r;
  const auto cmp = compare_routes(r.pipeline(), r.direct(10));
  CHECK(cmp.cost_premise);
  CHECK(cmp.distortion_premise);
  CHECK(cmp.premises_satisfied);
  CHECK(cmp.ac_identity_holds);
  CHECK(cmp.direct.potential_distortion() == doctest::Approx(0.5));
  CHECK(cmp.direct.ratio == doctest::Approx(frozen::kRouteCB_direct));
  CHECK(cmp.via_vis_more_cost_beneficial);
}

TEST_CASE("route comparison flags a violated cost premise and still reports ratios") {
  Routes r;
  const auto cmp = compare_routes(r.pipeline(), r.direct(4));
  CHECK_FALSE(cmp.cost_premise);
  CHECK_FALSE(cmp.premises_satisfied);
  CHECK(cmp.direct.ratio == doctest::Approx(frozen::kRouteCB_direct_cheap));
  CHECK(cmp.via_vis.ratio == doctest::Approx(frozen::kRouteCB_pipeline));
}

TEST_CASE("routes must share endpoints") {
  Routes r;
  const Stage elsewhere("x", Channel::identity("x", r.d), BayesReconstruction{}, 1);
  CHECK_THROWS_AS(compare_routes(r.pipeline(), elsewhere), AlphabetMismatch);
}

TEST_CASE("supplied reconstruction pmf") {
  const auto d = listed("d", 3);
  const auto c = Channel::constant("c", d, listed("v", 1), 0);
  const Stage s("s", c, SuppliedReconstruction{Pmf(d.letters(), {0.5, 0.25, 0.25})}, 1);
  const auto rep = stage_cost_benefit(s, d.pmf());
  CHECK(rep.potential_distortion() == doctest::Approx(frozen::kBiasedThreePD).epsilon(1e-13));
  CHECK_THROWS_AS(Stage("s", c, SuppliedReconstruction{Pmf::uniform(listed("w", 3).letters())}, 1),
                  AlphabetMismatch);
}

TEST_CASE("reconstruction outside the prior support gives -inf ratio") {
  const auto d = listed("d", 2);
  const auto c = Channel::identity("c", d);
  const Pmf prior(d.letters(), {1.0, 0.0});
  const Stage s("s", c, ReconstructionChannel(Channel::constant("q", d, d, 1)), 1);
  const auto rep = stage_cost_benefit(s, prior);
  CHECK(std::isinf(rep.potential_distortion()));
  CHECK(rep.ratio == -kInfinity);
}

TEST_CASE("abstraction scores") {
  CHECK(abstraction_score(true, ConditionB::Satisfied) == 3);
  CHECK(abstraction_score(true, ConditionB::NotApplicable) == 2);
  CHECK(abstraction_score(true, ConditionB::Negated) == 1);
  CHECK(abstraction_score(false, ConditionB::Satisfied) == 1);
  CHECK(abstraction_score(false, ConditionB::NotApplicable) == 0);
  CHECK(abstraction_score(false, ConditionB::Negated) == 0);
  CHECK(parse_condition_b("na") == ConditionB::NotApplicable);
  CHECK(parse_condition_b("not_applicable") == ConditionB::NotApplicable);
  CHECK_FALSE(parse_condition_b("maybe").has_value());
}

TEST_CASE("abstraction and meaningful abstraction predicates") {
  const auto d = listed("d", 4);
  CHECK(is_abstraction(d.pmf(), Channel::constant("k", d, listed("v", 1), 0)));
  CHECK_FALSE(is_abstraction(d.pmf(), Channel::identity("i", d)));
  CHECK(is_meaningful_visual_abstraction(10, 4, 5, 2));
  CHECK_FALSE(is_meaningful_visual_abstraction(10, 4, 5, 6));
  CHECK_FALSE(is_meaningful_visual_abstraction(4, 10, 5, 2));
  CHECK_THROWS_AS(is_meaningful_visual_abstraction(NAN, 4, 5, 2), ValidationError);
  CHECK_THROWS_AS(is_meaningful_visual_abstraction(10, 4, -1, 2), ValidationError);
}

TEST_CASE("point of view parsing") {
  CHECK(parse_action("query") == Action::Query);
  CHECK(parse_target("networks") == Target::Networks);
  CHECK_FALSE(parse_action("explore").has_value());
  CHECK(to_string(Target::Spatial) == "spatial");
}
