#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "vabs/alphabet.hpp"

namespace vabs {

// One branch of a conditional distribution: output letter index and its probability.
struct Outcome {
  std::uint32_t letter = 0;
  double p = 0.0;
};

class ReconstructionChannel;

// Largest input alphabet a deterministic channel may map.
inline constexpr std::size_t kMaxDeterministicLetters = std::size_t{1} << 21;
// Largest alphabet on either side of a declared stochastic channel.
inline constexpr std::size_t kMaxStochasticLetters = 4096;
// Cap on stored branches for derived channels (Bayes inverses, compositions).
inline constexpr std::size_t kMaxOutcomes = std::size_t{1} << 24;

// A transformation process between two alphabets: deterministic (each input
// letter has one image) or stochastic (each input letter has a row-stochastic
// conditional over the output letters).
//
// Channels are validated on construction and immutable afterwards; copies
// share storage.
class Channel {
 public:
  // `image[i]` is the output letter index for input letter i.
  static Channel deterministic(std::string id, const Alphabet& from, const Alphabet& to,
                               std::vector<std::uint32_t> image);
  static Channel identity(std::string id, const Alphabet& alphabet);
  static Channel constant(std::string id, const Alphabet& from, const Alphabet& to, std::size_t letter);

  // Bar-chart style quantizer over a grid alphabet: value v goes to bar height
  // round-half-up((v - min) * pixels / (max - min)). `to` needs pixels + 1 letters.
  static Channel quantizer(std::string id, const Alphabet& from, const Alphabet& to, std::uint32_t pixels);

  // Dense rows, one per input letter, each of to.size() probabilities.
  static Channel stochastic(std::string id, const Alphabet& from, const Alphabet& to,
                            const std::vector<std::vector<double>>& rows);
  // Sparse rows; zero-probability outcomes are dropped.
  static Channel stochastic(std::string id, const Alphabet& from, const Alphabet& to,
                            std::vector<std::vector<Outcome>> rows);

  const std::string& id() const noexcept;
  const std::string& from_id() const noexcept;
  const std::string& to_id() const noexcept;
  const LetterSetPtr& from() const noexcept;
  const LetterSetPtr& to() const noexcept;
  bool is_deterministic() const noexcept;

  std::span<const Outcome> row(std::size_t input) const;
  // Image of an input letter; throws Error on a stochastic channel.
  std::size_t image(std::size_t input) const;
  // Probability of `output` given `input`.
  double probability(std::size_t input, std::size_t output) const;
  std::size_t outcome_count() const noexcept;

 private:
  struct Storage;

  explicit Channel(std::shared_ptr<const Storage> storage) : s_(std::move(storage)) {}
  static std::shared_ptr<const Storage> freeze(std::string id, std::string from_id, std::string to_id,
                                               LetterSetPtr from, LetterSetPtr to, std::vector<std::size_t> offsets,
                                               std::vector<Outcome> outcomes);
  static Channel build(std::string id, std::string from_id, std::string to_id, LetterSetPtr from, LetterSetPtr to,
                       std::vector<std::vector<Outcome>> rows);

  friend Channel compose(const Channel&, const Channel&);
  friend class ReconstructionChannel;
  friend ReconstructionChannel bayes_inverse(const Channel&, const Pmf&);

  std::shared_ptr<const Storage> s_;
};

// A viewer's interpretation process Q, oriented output -> input of the forward
// channel it reconstructs (V -> D for P: D -> V).
class ReconstructionChannel {
 public:
  explicit ReconstructionChannel(Channel channel) : channel_(std::move(channel)) {}

  const Channel& channel() const noexcept { return channel_; }

  // Throws AlphabetMismatch unless this maps forward.to() back onto forward.from().
  void require_reconstructs(const Channel& forward) const;

 private:
  Channel channel_;
};

// v -> sum_d prior(d) c(v | d).
Pmf push_forward(const Pmf& prior, const Channel& c);

// c1 then c2; deterministic stays deterministic.
Channel compose(const Channel& c1, const Channel& c2);

// Posterior reconstruction Q(d | v) = prior(d) c(v | d) / sum_d' prior(d') c(v | d').
// Outputs the prior cannot reach get the prior itself as their row.
ReconstructionChannel bayes_inverse(const Channel& c, const Pmf& prior);

// Distribution of reconstructed input letters: prior pushed through forward
// then through the reconstruction.
Pmf reconstructed_pmf(const Pmf& prior, const Channel& forward, const ReconstructionChannel& recon);

// H(prior) - H(push_forward(prior, c)) in bits. Negative for channels that add variation.
double alphabet_compression(const Pmf& prior, const Channel& c);

// D_KL(reconstructed || prior) in bits; +infinity when the reconstruction
// puts mass on letters the prior excludes.
double potential_distortion(const Pmf& prior, const Channel& forward, const ReconstructionChannel& recon);

}  // namespace vabs
