#include "vabs/channel.hpp"

#include <algorithm>
#include <cmath>

#include "vabs/error.hpp"
#include "vabs/numeric.hpp"

namespace vabs {

struct Channel::Storage {
  std::string id;
  std::string from_id;
  std::string to_id;
  LetterSetPtr from;
  LetterSetPtr to;
  std::vector<std::size_t> offsets;  // row i is outcomes[offsets[i], offsets[i+1])
  std::vector<Outcome> outcomes;
  bool deterministic = false;
};

namespace {

constexpr std::size_t kMaxReportedViolations = 20;

void require_size(const LetterSetPtr& set, std::size_t limit, const std::string& what) {
  if (set->size() > limit) {
    throw ValidationError({what + " has " + std::to_string(set->size()) + " letters, limit is " +
                           std::to_string(limit)});
  }
}

}  // namespace

// Validates and freezes flat rows. Zero branches are dropped.
std::shared_ptr<const Channel::Storage> Channel::freeze(std::string id, std::string from_id, std::string to_id,
                                                        LetterSetPtr from, LetterSetPtr to,
                                                        std::vector<std::size_t> offsets,
                                                        std::vector<Outcome> outcomes) {
  auto s = std::make_shared<Storage>();
  std::vector<std::string> violations;
  std::size_t dropped = 0;
  auto note = [&](std::string v) {
    if (violations.size() < kMaxReportedViolations) {
      violations.push_back("channel '" + id + "': " + std::move(v));
    } else {
      ++dropped;
    }
  };

  s->offsets.reserve(offsets.size());
  s->offsets.push_back(0);
  s->outcomes.reserve(outcomes.size());
  bool deterministic = true;
  for (std::size_t row = 0; row + 1 < offsets.size(); ++row) {
    CompensatedSum total;
    const std::size_t start = s->outcomes.size();
    for (std::size_t k = offsets[row]; k < offsets[row + 1]; ++k) {
      const Outcome o = outcomes[k];
      if (o.letter >= to->size()) {
        note("row '" + from->id(row) + "' refers to output letter #" + std::to_string(o.letter) +
             " outside the target alphabet");
        continue;
      }
      if (!std::isfinite(o.p) || o.p < 0) {
        note("row '" + from->id(row) + "' has invalid probability for '" + to->id(o.letter) + "'");
        continue;
      }
      total.add(o.p);
      if (o.p > 0) s->outcomes.push_back(o);
    }
    if (std::abs(total.value() - 1.0) > kMassTolerance) {
      note("row '" + from->id(row) + "' sums to " + std::to_string(total.value()));
    }
    const std::size_t len = s->outcomes.size() - start;
    if (len != 1 || s->outcomes[start].p != 1.0) deterministic = false;
    s->offsets.push_back(s->outcomes.size());
  }
  if (dropped > 0) violations.push_back("... and " + std::to_string(dropped) + " more");
  if (!violations.empty()) throw ValidationError(std::move(violations));

  s->id = std::move(id);
  s->from_id = std::move(from_id);
  s->to_id = std::move(to_id);
  s->from = std::move(from);
  s->to = std::move(to);
  s->deterministic = deterministic;
  return s;
}

Channel Channel::build(std::string id, std::string from_id, std::string to_id, LetterSetPtr from, LetterSetPtr to,
                       std::vector<std::vector<Outcome>> rows) {
  if (rows.size() != from->size()) {
    throw ValidationError({"channel '" + id + "' has " + std::to_string(rows.size()) + " rows for " +
                           std::to_string(from->size()) + " input letters"});
  }
  std::vector<std::size_t> offsets;
  offsets.reserve(rows.size() + 1);
  offsets.push_back(0);
  std::vector<Outcome> outcomes;
  for (const auto& r : rows) {
    outcomes.insert(outcomes.end(), r.begin(), r.end());
    offsets.push_back(outcomes.size());
  }
  return Channel(Channel::freeze(std::move(id), std::move(from_id), std::move(to_id), std::move(from), std::move(to),
                        std::move(offsets), std::move(outcomes)));
}

Channel Channel::deterministic(std::string id, const Alphabet& from, const Alphabet& to,
                               std::vector<std::uint32_t> image) {
  require_size(from.letters(), kMaxDeterministicLetters, "input alphabet '" + from.id() + "'");
  if (image.size() != from.size()) {
    throw ValidationError({"channel '" + id + "' maps " + std::to_string(image.size()) + " of " +
                           std::to_string(from.size()) + " input letters"});
  }
  std::vector<std::size_t> offsets(image.size() + 1);
  std::vector<Outcome> outcomes(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    offsets[i + 1] = i + 1;
    outcomes[i] = Outcome{image[i], 1.0};
  }
  return Channel(Channel::freeze(std::move(id), from.id(), to.id(), from.letters(), to.letters(), std::move(offsets),
                        std::move(outcomes)));
}

Channel Channel::identity(std::string id, const Alphabet& alphabet) {
  std::vector<std::uint32_t> image(alphabet.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = static_cast<std::uint32_t>(i);
  return deterministic(std::move(id), alphabet, alphabet, std::move(image));
}

Channel Channel::constant(std::string id, const Alphabet& from, const Alphabet& to, std::size_t letter) {
  if (letter >= to.size()) throw ValidationError({"constant channel '" + id + "' targets a missing letter"});
  return deterministic(std::move(id), from, to,
                       std::vector<std::uint32_t>(from.size(), static_cast<std::uint32_t>(letter)));
}

Channel Channel::quantizer(std::string id, const Alphabet& from, const Alphabet& to, std::uint32_t pixels) {
  const auto& grid = from.letters()->grid();
  if (!grid) throw ValidationError({"quantizer '" + id + "' needs a uniform_range input alphabet"});
  if (pixels == 0) throw ValidationError({"quantizer '" + id + "' needs at least one pixel"});
  if (to.size() != std::size_t{pixels} + 1) {
    throw ValidationError({"quantizer '" + id + "' with " + std::to_string(pixels) + " pixels needs " +
                           std::to_string(std::size_t{pixels} + 1) + " output letters, target has " +
                           std::to_string(to.size())});
  }
  require_size(from.letters(), kMaxDeterministicLetters, "input alphabet '" + from.id() + "'");
  const std::uint64_t n = grid->steps;
  std::vector<std::uint32_t> image(grid->size(), 0);
  if (n > 0) {
    // floor(i * pixels / n + 1/2) in exact integer arithmetic.
    for (std::uint64_t i = 0; i <= n; ++i) {
      image[i] = static_cast<std::uint32_t>((2 * i * pixels + n) / (2 * n));
    }
  }
  return deterministic(std::move(id), from, to, std::move(image));
}

Channel Channel::stochastic(std::string id, const Alphabet& from, const Alphabet& to,
                            const std::vector<std::vector<double>>& rows) {
  require_size(from.letters(), kMaxStochasticLetters, "input alphabet '" + from.id() + "'");
  require_size(to.letters(), kMaxStochasticLetters, "output alphabet '" + to.id() + "'");
  std::vector<std::vector<Outcome>> sparse(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != to.size()) {
      throw ValidationError({"channel '" + id + "' row " + std::to_string(i) + " has " +
                             std::to_string(rows[i].size()) + " entries for " + std::to_string(to.size()) +
                             " output letters"});
    }
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      sparse[i].push_back(Outcome{static_cast<std::uint32_t>(j), rows[i][j]});
    }
  }
  return build(std::move(id), from.id(), to.id(), from.letters(), to.letters(), std::move(sparse));
}

Channel Channel::stochastic(std::string id, const Alphabet& from, const Alphabet& to,
                            std::vector<std::vector<Outcome>> rows) {
  require_size(from.letters(), kMaxStochasticLetters, "input alphabet '" + from.id() + "'");
  require_size(to.letters(), kMaxStochasticLetters, "output alphabet '" + to.id() + "'");
  return build(std::move(id), from.id(), to.id(), from.letters(), to.letters(), std::move(rows));
}

const std::string& Channel::id() const noexcept { return s_->id; }
const std::string& Channel::from_id() const noexcept { return s_->from_id; }
const std::string& Channel::to_id() const noexcept { return s_->to_id; }
const LetterSetPtr& Channel::from() const noexcept { return s_->from; }
const LetterSetPtr& Channel::to() const noexcept { return s_->to; }
bool Channel::is_deterministic() const noexcept { return s_->deterministic; }
std::size_t Channel::outcome_count() const noexcept { return s_->outcomes.size(); }

std::span<const Outcome> Channel::row(std::size_t input) const {
  const auto b = s_->offsets.at(input);
  const auto e = s_->offsets.at(input + 1);
  return std::span<const Outcome>(s_->outcomes).subspan(b, e - b);
}

std::size_t Channel::image(std::size_t input) const {
  if (!s_->deterministic) throw Error("channel '" + s_->id + "' is stochastic and has no single image");
  return s_->outcomes.at(input).letter;
}

double Channel::probability(std::size_t input, std::size_t output) const {
  for (const Outcome& o : row(input)) {
    if (o.letter == output) return o.p;
  }
  return 0.0;
}

void ReconstructionChannel::require_reconstructs(const Channel& forward) const {
  if (!same_letters(channel_.from(), forward.to()) || !same_letters(channel_.to(), forward.from())) {
    throw AlphabetMismatch("reconstruction '" + channel_.id() + "' (" + channel_.from_id() + " -> " +
                           channel_.to_id() + ") does not invert '" + forward.id() + "' (" + forward.from_id() +
                           " -> " + forward.to_id() + ")");
  }
}

// ---------------------------------------------------------------------------

namespace {

void require_over_input(const Pmf& prior, const Channel& c) {
  if (!same_letters(prior.support(), c.from())) {
    throw AlphabetMismatch("distribution is not over the input alphabet '" + c.from_id() + "' of channel '" +
                           c.id() + "'");
  }
}

}  // namespace

Pmf push_forward(const Pmf& prior, const Channel& c) {
  require_over_input(prior, c);
  require_valid(prior);
  std::vector<double> out(c.to()->size(), 0.0);
  const auto mass = prior.mass();
  for (std::size_t d = 0; d < mass.size(); ++d) {
    if (mass[d] == 0) continue;
    for (const Outcome& o : c.row(d)) out[o.letter] += mass[d] * o.p;
  }
  return Pmf(c.to(), std::move(out));
}

Channel compose(const Channel& c1, const Channel& c2) {
  if (!same_letters(c1.to(), c2.from())) {
    throw AlphabetMismatch("cannot compose '" + c1.id() + "' (-> " + c1.to_id() + ") with '" + c2.id() + "' (" +
                           c2.from_id() + " ->)");
  }
  const std::size_t n = c1.from()->size();
  std::vector<std::size_t> offsets(n + 1, 0);
  std::vector<Outcome> outcomes;

  if (c1.is_deterministic() && c2.is_deterministic()) {
    outcomes.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      outcomes[i] = Outcome{static_cast<std::uint32_t>(c2.image(c1.image(i))), 1.0};
      offsets[i + 1] = i + 1;
    }
  } else {
    std::vector<double> acc(c2.to()->size(), 0.0);
    std::vector<std::uint32_t> touched;
    for (std::size_t i = 0; i < n; ++i) {
      for (const Outcome& mid : c1.row(i)) {
        for (const Outcome& o : c2.row(mid.letter)) {
          if (acc[o.letter] == 0) touched.push_back(o.letter);
          acc[o.letter] += mid.p * o.p;
        }
      }
      std::sort(touched.begin(), touched.end());
      for (const auto k : touched) {
        outcomes.push_back(Outcome{k, acc[k]});
        acc[k] = 0;
      }
      touched.clear();
      if (outcomes.size() > kMaxOutcomes) throw Error("composition of '" + c1.id() + "' and '" + c2.id() + "' is too large");
      offsets[i + 1] = outcomes.size();
    }
  }
  return Channel(Channel::freeze(c1.id() + ">" + c2.id(), c1.from_id(), c2.to_id(), c1.from(), c2.to(), std::move(offsets),
                        std::move(outcomes)));
}

ReconstructionChannel bayes_inverse(const Channel& c, const Pmf& prior) {
  const Pmf marginal = push_forward(prior, c);
  const auto pm = prior.mass();
  const auto mm = marginal.mass();
  const std::size_t n_out = mm.size();

  std::size_t prior_support = 0;
  for (const double p : pm) prior_support += p > 0 ? 1 : 0;

  // Counting sort of the joint prior(d) c(v|d) by output letter v.
  std::vector<std::size_t> offsets(n_out + 1, 0);
  for (std::size_t d = 0; d < pm.size(); ++d) {
    if (pm[d] <= 0) continue;
    for (const Outcome& o : c.row(d)) {
      if (pm[d] * o.p > 0) ++offsets[o.letter + 1];
    }
  }
  for (std::size_t v = 0; v < n_out; ++v) {
    if (mm[v] <= 0) offsets[v + 1] = prior_support;
    offsets[v + 1] += offsets[v];
    if (offsets[v + 1] > kMaxOutcomes) throw Error("bayes inverse of '" + c.id() + "' is too large");
  }

  std::vector<Outcome> outcomes(offsets[n_out]);
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (std::size_t d = 0; d < pm.size(); ++d) {
    if (pm[d] <= 0) continue;
    for (const Outcome& o : c.row(d)) {
      const double joint = pm[d] * o.p;
      if (joint > 0) outcomes[cursor[o.letter]++] = Outcome{static_cast<std::uint32_t>(d), joint / mm[o.letter]};
    }
  }
  for (std::size_t v = 0; v < n_out; ++v) {
    if (mm[v] > 0) continue;
    for (std::size_t d = 0; d < pm.size(); ++d) {
      if (pm[d] > 0) outcomes[cursor[v]++] = Outcome{static_cast<std::uint32_t>(d), pm[d]};
    }
  }
  return ReconstructionChannel(Channel(Channel::freeze("bayes(" + c.id() + ")", c.to_id(), c.from_id(), c.to(), c.from(),
                                              std::move(offsets), std::move(outcomes))));
}

Pmf reconstructed_pmf(const Pmf& prior, const Channel& forward, const ReconstructionChannel& recon) {
  recon.require_reconstructs(forward);
  return push_forward(push_forward(prior, forward), recon.channel());
}

double alphabet_compression(const Pmf& prior, const Channel& c) {
  return entropy(prior) - entropy(push_forward(prior, c));
}

double potential_distortion(const Pmf& prior, const Channel& forward, const ReconstructionChannel& recon) {
  return kl_divergence(reconstructed_pmf(prior, forward, recon), prior);
}

}  // namespace vabs
