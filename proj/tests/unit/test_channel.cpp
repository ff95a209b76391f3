#include <cmath>

#include "doctest.h"
#include "frozen.hpp"
#include "oracle.hpp"
#include "vabs/channel.hpp"
#include "vabs/error.hpp"

using namespace vabs;

namespace {

Alphabet listed(const std::string& id, std::size_t n) {
  std::vector<Letter> ls;
  for (std::size_t i = 0; i < n; ++i) ls.push_back({id + std::to_string(i), {}});
  return make_uniform(std::move(ls), id);
}

Alphabet bars() {
  std::vector<Letter> ls;
  for (int i = 0; i <= 1000; ++i) ls.push_back({std::to_string(i), {}});
  return make_uniform(std::move(ls), "V");
}

}  // namespace

TEST_CASE("identity keeps the distribution") {
  const auto d = listed("d", 4);
  const auto c = Channel::identity("id", d);
  CHECK(c.is_deterministic());
  CHECK(alphabet_compression(d.pmf(), c) == 0.0);
}

TEST_CASE("constant channel compresses everything") {
  const auto d = listed("d", 8);
  const auto c = Channel::constant("k", d, listed("v", 3), 1);
  CHECK(alphabet_compression(d.pmf(), c) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(push_forward(d.pmf(), c)[1] == 1.0);
}

TEST_CASE("deterministic channel validates its image") {
  const auto d = listed("d", 3);
  const auto v = listed("v", 2);
  CHECK_THROWS_AS(Channel::deterministic("c", d, v, {0, 1}), ValidationError);
  CHECK_THROWS_AS(Channel::deterministic("c", d, v, {0, 1, 2}), ValidationError);
}

TEST_CASE("stochastic rows must be distributions") {
  const auto d = listed("d", 2);
  const auto v = listed("v", 2);
  CHECK_THROWS_AS(Channel::stochastic("c", d, v, std::vector<std::vector<double>>{{0.5, 0.5}, {0.5, 0.4}}),
                  ValidationError);
  CHECK_THROWS_AS(Channel::stochastic("c", d, v, std::vector<std::vector<double>>{{1.5, -0.5}, {0.5, 0.5}}),
                  ValidationError);
  CHECK_THROWS_AS(Channel::stochastic("c", d, v, std::vector<std::vector<double>>{{0.5, 0.5}}), ValidationError);
  const auto ok = Channel::stochastic("c", d, v, std::vector<std::vector<double>>{{0.5, 0.5}, {0.0, 1.0}});
  CHECK(ok.outcome_count() == 3);
  CHECK(ok.probability(1, 0) == 0.0);
  CHECK_THROWS_AS(ok.image(0), Error);
}

TEST_CASE("a stochastic channel of single certain outcomes is deterministic") {
  const auto d = listed("d", 2);
  const auto c = Channel::stochastic("c", d, d, std::vector<std::vector<double>>{{0.0, 1.0}, {1.0, 0.0}});
  CHECK(c.is_deterministic());
  CHECK(c.image(0) == 1);
}

TEST_CASE("bar chart quantizer matches the brute-force bin count") {
  const auto d = make_quantized_range(0.0, 10000.0, 0.01, "D");
  const auto v = bars();
  const auto q = Channel::quantizer("plot", d, v, 1000);
  CHECK(q.image(0) == 0);
  CHECK(q.image(499) == 0);
  CHECK(q.image(500) == 1);  // 5.00 is exactly half a pixel: rounds up
  CHECK(q.image(1000000) == 1000);

  const auto counts = oracle::bar_counts(1000000, 1000);
  const auto out = push_forward(d.pmf(), q);
  for (std::size_t h = 0; h <= 1000; ++h) {
    REQUIRE(out[h] == doctest::Approx(static_cast<double>(counts[h]) / 1000001.0).epsilon(1e-12));
  }
  CHECK(counts.front() == 500);
  CHECK(counts.back() == 501);
  CHECK(counts[500] == 1000);

  CHECK(entropy(out) == doctest::Approx(frozen::kBarH_V).epsilon(1e-13));
  CHECK(std::abs(alphabet_compression(d.pmf(), q) - frozen::kBarAC) < 1e-9);
  CHECK(std::abs(static_cast<double>(oracle::entropy_of_counts(counts)) - frozen::kBarH_V) < 1e-12);
}

TEST_CASE("quantizer onto a wider canvas than the data is injective") {
  const auto d = make_quantized_range(0.0, 100.0, 1.0, "D");
  const auto q = Channel::quantizer("plot", d, bars(), 1000);
  CHECK(q.image(37) == 370);
  CHECK(std::abs(alphabet_compression(d.pmf(), q)) < 1e-12);
}

TEST_CASE("quantizer needs a grid input and pixels + 1 outputs") {
  CHECK_THROWS_AS(Channel::quantizer("q", listed("d", 3), listed("v", 3), 2), ValidationError);
  CHECK_THROWS_AS(Channel::quantizer("q", make_quantized_range(0, 1, 0.5, "D"), listed("v", 3), 3),
                  ValidationError);
}

TEST_CASE("one letter fanned out uniformly has negative compression") {
  const auto d = listed("d", 1);
  const auto v = bars();
  const std::vector<std::vector<double>> rows{std::vector<double>(1001, 1.0 / 1001)};
  const auto c = Channel::stochastic("fan", d, v, rows);
  CHECK(alphabet_compression(d.pmf(), c) == doctest::Approx(-frozen::kLog2_1001).epsilon(1e-13));
}

TEST_CASE("composition chains channels") {
  const auto d = listed("d", 4);
  const auto v = listed("v", 2);
  const auto t = listed("t", 2);
  const auto p1 = Channel::deterministic("p1", d, v, {0, 0, 1, 1});
  const auto p2 = Channel::stochastic("p2", v, t, std::vector<std::vector<double>>{{0.9, 0.1}, {0.2, 0.8}});
  const auto c = compose(p1, p2);
  CHECK(c.id() == "p1>p2");
  CHECK(c.from_id() == "d");
  CHECK(c.to_id() == "t");
  CHECK(c.probability(3, 0) == doctest::Approx(0.2));
  CHECK_THROWS_AS(compose(p2, p1), AlphabetMismatch);

  const auto dd = compose(p1, Channel::deterministic("p3", v, t, {1, 0}));
  CHECK(dd.is_deterministic());
  CHECK(dd.image(0) == 1);
}

TEST_CASE("bayes inverse of the bar chart reconstructs the prior") {
  const auto d = make_quantized_range(0.0, 10000.0, 0.01, "D");
  const auto q = Channel::quantizer("plot", d, bars(), 1000);
  const auto r = bayes_inverse(q, d.pmf());
  CHECK(r.channel().id() == "bayes(plot)");
  CHECK(r.channel().row(0).size() == 500);
  CHECK(r.channel().row(1).size() == 1000);
  CHECK(potential_distortion(d.pmf(), q, r) < 1e-9);
}

TEST_CASE("bayes inverse gives unreachable outputs the prior") {
  const auto d = listed("d", 2);
  const auto v = listed("v", 3);
  const auto c = Channel::deterministic("c", d, v, {0, 0});
  const auto r = bayes_inverse(c, d.pmf());
  CHECK(r.channel().probability(2, 1) == doctest::Approx(0.5));
  CHECK(potential_distortion(d.pmf(), c, r) < 1e-12);
}

TEST_CASE("a biased reader has positive distortion") {
  const auto d = listed("d", 3);
  const auto v = listed("v", 1);
  const auto c = Channel::constant("c", d, v, 0);
  const ReconstructionChannel r(Channel::stochastic("q", v, d, std::vector<std::vector<double>>{{0.5, 0.25, 0.25}}));
  CHECK(potential_distortion(d.pmf(), c, r) == doctest::Approx(frozen::kBiasedThreePD).epsilon(1e-13));
}

TEST_CASE("reconstructions must point back at the forward input") {
  const auto d = listed("d", 2);
  const auto v = listed("v", 2);
  const auto c = Channel::identity("c", d);
  const ReconstructionChannel wrong(Channel::identity("w", v));
  CHECK_THROWS_AS(wrong.require_reconstructs(c), AlphabetMismatch);
  CHECK_THROWS_AS(push_forward(v.pmf(), c), AlphabetMismatch);
}
