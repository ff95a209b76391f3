// Randomized invariants. Every suite runs a fixed seed and reports the
// failing case index through CAPTURE.

#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "gen.hpp"
#include "oracle.hpp"
#include "vabs/axis.hpp"
#include "vabs/cost_benefit.hpp"
#include "vabs/error.hpp"

using namespace vabs;

TEST_CASE("Gibbs inequality and the equality case") {
  gen::Rng rng(11);
  for (int k = 0; k < 1500; ++k) {
    CAPTURE(k);
    const auto ls = gen::letters(gen::size_in(rng, 2, 64));
    const Pmf p = gen::pmf(rng, ls, k % 3 == 0);
    // A third of the pairs are identical, the rest independent draws.
    const bool same = k % 3 == 1;
    const Pmf q = same ? Pmf(ls, std::vector<double>(p.mass().begin(), p.mass().end())) : gen::pmf(rng, ls, k % 2 == 0);
    const double d = kl_divergence(q, p);
    CHECK(d >= -1e-12);

    bool equal = true;
    for (std::size_t i = 0; i < ls->size(); ++i) equal = equal && std::abs(p[i] - q[i]) <= 1e-12;
    CHECK((d < 1e-12) == equal);

    const long double want = oracle::kl(gen::dist(q), gen::dist(p));
    if (std::isinf(want)) {
      CHECK(std::isinf(d));
    } else {
      CHECK(std::abs(d - static_cast<double>(want)) <= 1e-12 * std::max(1.0L, want));
    }
  }
}

TEST_CASE("entropy bounds, uniform maximality and permutation invariance") {
  gen::Rng rng(12);
  for (int k = 0; k < 500; ++k) {
    CAPTURE(k);
    const std::size_t n = gen::size_in(rng, 1, 64);
    const auto ls = gen::letters(n);
    const Pmf p = gen::pmf(rng, ls, k % 2 == 0);
    const double h = entropy(p);
    CHECK(h >= 0);
    CHECK(h <= std::log2(static_cast<double>(n)) + 1e-12);
    CHECK(h <= entropy(Pmf::uniform(ls)) + 1e-12);
    CHECK(std::abs(h - static_cast<double>(oracle::entropy(gen::dist(p)))) <= 1e-12);

    std::vector<double> shuffled(p.mass().begin(), p.mass().end());
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(std::abs(entropy(Pmf(ls, shuffled)) - h) <= 1e-12);
  }
}

TEST_CASE("deterministic channels never increase entropy") {
  gen::Rng rng(13);
  for (int k = 0; k < 600; ++k) {
    CAPTURE(k);
    const auto d = gen::alphabet(rng, gen::size_in(rng, 1, 64), "d", k % 2 == 0);
    const auto v = gen::alphabet(rng, gen::size_in(rng, 1, 64), "v");
    const auto c = gen::deterministic(rng, d, v);
    const double ac = alphabet_compression(d.pmf(), c);
    CHECK(ac >= -1e-12);
    const auto pushed = oracle::push(gen::dist(d.pmf()), gen::matrix(c));
    const long double want = oracle::entropy(gen::dist(d.pmf())) - oracle::entropy(pushed);
    CHECK(std::abs(ac - static_cast<double>(want)) <= 1e-12);
  }
}

TEST_CASE("Bayes reconstruction has no distortion") {
  gen::Rng rng(14);
  for (int k = 0; k < 300; ++k) {
    CAPTURE(k);
    const auto d = gen::alphabet(rng, gen::size_in(rng, 1, 48), "d", k % 2 == 0);
    const auto v = gen::alphabet(rng, gen::size_in(rng, 1, 48), "v");
    const auto c = gen::any_channel(rng, d, v, "c");
    const auto r = bayes_inverse(c, d.pmf());
    CHECK(potential_distortion(d.pmf(), c, r) <= 1e-9);

    const auto q = oracle::bayes(gen::dist(d.pmf()), gen::matrix(c));
    const auto qm = gen::matrix(r.channel());
    double worst = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = 0; j < q[i].size(); ++j) worst = std::max(worst, static_cast<double>(std::abs(q[i][j] - qm[i][j])));
    }
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("composition agrees with pushing through both channels") {
  gen::Rng rng(15);
  for (int k = 0; k < 300; ++k) {
    CAPTURE(k);
    const auto a = gen::alphabet(rng, gen::size_in(rng, 1, 32), "a", k % 2 == 0);
    const auto b = gen::alphabet(rng, gen::size_in(rng, 1, 32), "b");
    const auto c = gen::alphabet(rng, gen::size_in(rng, 1, 32), "c");
    const auto c1 = gen::any_channel(rng, a, b, "c1");
    const auto c2 = gen::any_channel(rng, b, c, "c2");
    const auto composed = compose(c1, c2);
    CHECK(composed.is_deterministic() == (c1.is_deterministic() && c2.is_deterministic()));
    const auto direct = push_forward(a.pmf(), composed);
    const auto want = oracle::push(oracle::push(gen::dist(a.pmf()), gen::matrix(c1)), gen::matrix(c2));
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(std::abs(direct[i] - static_cast<double>(want[i])) <= 1e-12);
  }
}

TEST_CASE("alphabet compression telescopes along a pipeline") {
  gen::Rng rng(16);
  for (int k = 0; k < 250; ++k) {
    CAPTURE(k);
    const std::size_t length = gen::size_in(rng, 2, 5);
    std::vector<Alphabet> zs;
    for (std::size_t i = 0; i <= length; ++i) {
      zs.push_back(gen::alphabet(rng, gen::size_in(rng, 1, 64), "z" + std::to_string(i), i == 0 && k % 2 == 0));
    }
    std::vector<Stage> stages;
    std::vector<oracle::Matrix> mats;
    for (std::size_t i = 0; i < length; ++i) {
      const auto c = gen::any_channel(rng, zs[i], zs[i + 1], "p" + std::to_string(i));
      mats.push_back(gen::matrix(c));
      stages.emplace_back("s" + std::to_string(i), c, BayesReconstruction{}, 1.0);
    }
    const Pipeline p("p", stages, zs[0].pmf());
    const auto rep = pipeline_cost_benefit(p);
    CHECK(std::abs(rep.alphabet_compression() - (rep.entropies.front().second - rep.entropies.back().second)) <= 1e-9);
    CHECK(rep.telescoping_residual <= 1e-9);

    auto dist = gen::dist(zs[0].pmf());
    const long double h0 = oracle::entropy(dist);
    for (const auto& m : mats) dist = oracle::push(dist, m);
    CHECK(std::abs(rep.alphabet_compression() - static_cast<double>(h0 - oracle::entropy(dist))) <= 1e-9);
    CHECK(rep.potential_distortion() <= 1e-9 * static_cast<double>(length));
  }
}

namespace {

std::vector<AbstractionAxis> random_axes(gen::Rng& rng, int k) {
  const std::vector<std::string> pool{"colour", "shape", "size", "texture", "outline", "fill", "label", "depth"};
  std::vector<AbstractionAxis> axes;
  const std::size_t count = gen::size_in(rng, 2, 4);
  for (std::size_t a = 0; a < count; ++a) {
    std::vector<RepresentationNode> nodes;
    const std::size_t len = gen::size_in(rng, 2, 5);
    for (std::size_t i = 0; i < len; ++i) {
      RepresentationNode n;
      n.id = "a" + std::to_string(a) + "n" + std::to_string(i);
      n.information = static_cast<double>(gen::size_in(rng, 0, 6));
      const std::size_t tags = gen::size_in(rng, 0, 2);
      for (std::size_t t = 0; t < tags; ++t) n.attributes.insert(pool[gen::size_in(rng, 0, pool.size() - 1)]);
      nodes.push_back(std::move(n));
    }
    axes.push_back(build_axis("axis" + std::to_string(a) + "-" + std::to_string(k), std::move(nodes), ""));
  }
  return axes;
}

}  // namespace

TEST_CASE("spaces exist exactly for pairwise disjoint attribute sets") {
  gen::Rng rng(17);
  int built = 0;
  for (int k = 0; k < 400; ++k) {
    CAPTURE(k);
    const auto axes = random_axes(rng, k);
    bool disjoint = true;
    for (std::size_t i = 0; i < axes.size(); ++i) {
      for (std::size_t j = i + 1; j < axes.size(); ++j) {
        const auto a = axes[i].attributes();
        const auto b = axes[j].attributes();
        std::vector<std::string> both;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
        disjoint = disjoint && both.empty();
      }
    }
    if (disjoint) {
      const auto space = combine_space(axes);
      std::size_t product = 1;
      for (const auto& a : axes) product *= a.size();
      CHECK(space.point_count() == product);
      ++built;
    } else {
      CHECK_THROWS_AS(combine_space(axes), OverlappingAttributes);
    }
  }
  CHECK(built > 0);
}

TEST_CASE("an axis of pure removals is monotone decreasing") {
  gen::Rng rng(18);
  for (int k = 0; k < 400; ++k) {
    CAPTURE(k);
    for (const auto& axis : random_axes(rng, k)) {
      bool all_removes = true;
      for (std::size_t i = 0; i + 1 < axis.size(); ++i) {
        const auto kind = classify_transition(axis, i);
        if (kind == TransitionKind::Removes) {
          CHECK(axis.nodes()[i + 1].information < axis.nodes()[i].information);
        }
        if (kind == TransitionKind::Adds) CHECK(axis.nodes()[i + 1].information > axis.nodes()[i].information);
        all_removes = all_removes && kind == TransitionKind::Removes;
      }
      if (all_removes) CHECK(is_monotone_decreasing(axis));
    }
  }
}

TEST_CASE("ratio falls with cost and distortion and rises with compression") {
  gen::Rng rng(19);
  std::uniform_real_distribution<double> u(0.0, 20.0);
  for (int k = 0; k < 500; ++k) {
    CAPTURE(k);
    const double ac = u(rng), pd = u(rng), c1 = u(rng) + 1e-3, c2 = c1 + u(rng) + 1e-3, extra = u(rng) + 1e-3;
    const double b = ac - pd;
    if (b > 0) CHECK(cost_benefit_ratio(ac, pd, c2) <= cost_benefit_ratio(ac, pd, c1));
    if (b < 0) CHECK(cost_benefit_ratio(ac, pd, c2) >= cost_benefit_ratio(ac, pd, c1));
    CHECK(cost_benefit_ratio(ac + extra, pd, c1) > cost_benefit_ratio(ac, pd, c1));
    CHECK(cost_benefit_ratio(ac, pd + extra, c1) < cost_benefit_ratio(ac, pd, c1));
  }
}
