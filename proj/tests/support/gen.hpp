#pragma once

// Hand-rolled generators for the property suites. Seeds are fixed so a
// failure reproduces; each case reports its index.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "vabs/alphabet.hpp"
#include "vabs/channel.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline std::size_t size_in(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline vabs::LetterSetPtr letters(std::size_t n, const std::string& prefix = "x") {
  std::vector<vabs::Letter> ls;
  for (std::size_t i = 0; i < n; ++i) ls.push_back(vabs::Letter{prefix + std::to_string(i), std::nullopt});
  return vabs::LetterSet::make(std::move(ls));
}

// Random weights normalized to 1; with `sparse` some letters get no mass.
inline std::vector<double> weights(Rng& rng, std::size_t n, bool sparse) {
  std::exponential_distribution<double> expo(1.0);
  std::bernoulli_distribution zero(0.25);
  std::vector<double> w(n);
  double total = 0;
  for (auto& x : w) {
    x = (sparse && zero(rng)) ? 0.0 : expo(rng);
    total += x;
  }
  if (total == 0) {
    w[size_in(rng, 0, n - 1)] = 1.0;
    total = 1.0;
  }
  for (auto& x : w) x /= total;
  return w;
}

inline vabs::Pmf pmf(Rng& rng, const vabs::LetterSetPtr& support, bool sparse = false) {
  return vabs::Pmf(support, weights(rng, support->size(), sparse));
}

inline vabs::Alphabet alphabet(Rng& rng, std::size_t n, const std::string& id, bool sparse = false) {
  const auto ls = letters(n, id);
  return vabs::Alphabet(id, ls, pmf(rng, ls, sparse));
}

inline vabs::Channel deterministic(Rng& rng, const vabs::Alphabet& from, const vabs::Alphabet& to,
                                   const std::string& id = "det") {
  std::vector<std::uint32_t> image(from.size());
  for (auto& v : image) v = static_cast<std::uint32_t>(size_in(rng, 0, to.size() - 1));
  return vabs::Channel::deterministic(id, from, to, std::move(image));
}

inline vabs::Channel stochastic(Rng& rng, const vabs::Alphabet& from, const vabs::Alphabet& to,
                                const std::string& id = "sto") {
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < from.size(); ++i) rows.push_back(weights(rng, to.size(), true));
  return vabs::Channel::stochastic(id, from, to, rows);
}

inline vabs::Channel any_channel(Rng& rng, const vabs::Alphabet& from, const vabs::Alphabet& to,
                                 const std::string& id) {
  return std::bernoulli_distribution(0.5)(rng) ? deterministic(rng, from, to, id) : stochastic(rng, from, to, id);
}

inline oracle::Dist dist(const vabs::Pmf& p) {
  return oracle::Dist(p.mass().begin(), p.mass().end());
}

inline oracle::Matrix matrix(const vabs::Channel& c) {
  oracle::Matrix m(c.from()->size(), oracle::Dist(c.to()->size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (const auto& o : c.row(i)) m[i][o.letter] += o.p;
  }
  return m;
}

}  // namespace gen
