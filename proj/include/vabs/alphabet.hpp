#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace vabs {

struct Letter {
  std::string id;
  std::optional<std::string> label;
};

// A regular decimal grid min, min+step, ..., min+steps*step. Values are held
// as integer multiples of 10^-decimals so ids and bin assignments are exact.
struct Grid {
  std::int64_t min_units = 0;
  std::int64_t step_units = 1;
  std::uint64_t steps = 0;
  int decimals = 0;

  std::size_t size() const noexcept { return static_cast<std::size_t>(steps) + 1; }
  std::int64_t units(std::size_t i) const noexcept {
    return min_units + static_cast<std::int64_t>(i) * step_units;
  }
  double value(std::size_t i) const;
  double min() const { return value(0); }
  double max() const { return value(static_cast<std::size_t>(steps)); }
  std::string format(std::size_t i) const;

  bool operator==(const Grid&) const = default;
};

// The ordered, immutable letter set of an alphabet. Primed alphabets (the
// reconstructed D', V', ...) share one LetterSet with their original.
class LetterSet {
 public:
  // Throws ValidationError on an empty list or duplicate ids.
  static std::shared_ptr<const LetterSet> make(std::vector<Letter> letters);
  static std::shared_ptr<const LetterSet> make_grid(const Grid& grid);

  std::size_t size() const noexcept;
  std::string id(std::size_t i) const;
  std::optional<std::string> label(std::size_t i) const;
  std::optional<std::size_t> find(std::string_view id) const;

  // Present only for grid letter sets.
  const std::optional<Grid>& grid() const noexcept { return grid_; }

  bool same_as(const LetterSet& other) const;

 private:
  LetterSet() = default;

  std::vector<Letter> letters_;
  std::unordered_map<std::string, std::size_t> index_;
  std::optional<Grid> grid_;
};

using LetterSetPtr = std::shared_ptr<const LetterSet>;

// True when both pointers denote the same ordered id sequence.
bool same_letters(const LetterSetPtr& a, const LetterSetPtr& b);

// Probability mass over a LetterSet, stored densely in letter order.
//
// A Pmf may be structurally invalid (negative mass, bad total, keys that did
// not match the support when built from a map). validate() reports those
// problems; every information measure validates before computing.
class Pmf {
 public:
  // Throws AlphabetMismatch when mass.size() != support->size().
  Pmf(LetterSetPtr support, std::vector<double> mass);

  static Pmf uniform(LetterSetPtr support);
  static Pmf degenerate(LetterSetPtr support, std::size_t letter);
  // Letters missing from `mass` get 0 and are reported by validate(), as are
  // keys that name no letter.
  static Pmf from_map(LetterSetPtr support, const std::map<std::string, double>& mass);

  const LetterSetPtr& support() const noexcept { return support_; }
  std::size_t size() const noexcept { return mass_->size(); }
  std::span<const double> mass() const noexcept { return *mass_; }
  double operator[](std::size_t i) const noexcept { return (*mass_)[i]; }
  // Throws AlphabetMismatch for an unknown id.
  double at(std::string_view id) const;

  const std::vector<std::string>& missing_keys() const noexcept { return missing_keys_; }
  const std::vector<std::string>& unknown_keys() const noexcept { return unknown_keys_; }

 private:
  LetterSetPtr support_;
  std::shared_ptr<const std::vector<double>> mass_;
  std::vector<std::string> missing_keys_;
  std::vector<std::string> unknown_keys_;
};

// A finite alphabet: an identified letter set with its probability mass.
class Alphabet {
 public:
  // Throws AlphabetMismatch when pmf is not over `letters`.
  Alphabet(std::string id, LetterSetPtr letters, Pmf pmf);

  const std::string& id() const noexcept { return id_; }
  const LetterSetPtr& letters() const noexcept { return letters_; }
  const Pmf& pmf() const noexcept { return pmf_; }
  std::size_t size() const noexcept { return letters_->size(); }

  // Same letters, different mass: the primed alphabet of a reconstruction.
  Alphabet with_pmf(Pmf pmf, std::string id) const;

 private:
  std::string id_;
  LetterSetPtr letters_;
  Pmf pmf_;
};

Alphabet make_uniform(std::vector<Letter> letters, std::string id = "uniform");

// Uniform alphabet over min, min+step, ..., max. The grid must close within
// 1e-6 steps; letter ids are the values at the step's decimal precision.
Alphabet make_quantized_range(double min, double max, double step, std::string id = "range");

// Every invariant violation, with letter-level detail. Empty means valid.
std::vector<std::string> validate(const Pmf& pmf);
std::vector<std::string> validate(const Alphabet& alphabet);

// Throws ValidationError when validate() reports anything.
void require_valid(const Pmf& pmf);

// Shannon entropy in bits, with 0 log 0 = 0.
double entropy(const Pmf& pmf);
double entropy(const Alphabet& alphabet);

// D_KL(q || p) in bits. Returns +infinity when q puts mass where p has none.
// Throws AlphabetMismatch when q and p live over different letters.
double kl_divergence(const Pmf& q, const Pmf& p);

}  // namespace vabs
