#include "vabs/alphabet.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "vabs/error.hpp"
#include "vabs/numeric.hpp"

namespace vabs {

namespace {

constexpr int kMaxDecimals = 12;
// Pmfs are dense, so grids are capped well below memory exhaustion.
constexpr std::size_t kMaxGridLetters = std::size_t{1} << 24;

std::int64_t pow10(int k) {
  std::int64_t r = 1;
  while (k-- > 0) r *= 10;
  return r;
}

// Smallest decimal count at which x is an integer number of units.
int decimals_of(double x) {
  for (int k = 0; k <= kMaxDecimals; ++k) {
    const double scaled = x * static_cast<double>(pow10(k));
    if (std::abs(scaled - std::round(scaled)) <= 1e-9 * std::max(1.0, std::abs(scaled))) return k;
  }
  return -1;
}

std::string number(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : Error([&] {
        std::string msg = "validation failed";
        for (const auto& v : violations) msg += "; " + v;
        return msg;
      }()),
      violations_(std::move(violations)) {}

OverlappingAttributes::OverlappingAttributes(std::string tag, std::string axis_a, std::string axis_b)
    : Error("attribute '" + tag + "' is affected by both axis '" + axis_a + "' and axis '" + axis_b + "'"),
      tag_(std::move(tag)),
      axis_a_(std::move(axis_a)),
      axis_b_(std::move(axis_b)) {}

// ---------------------------------------------------------------------------
// Grid

double Grid::value(std::size_t i) const {
  return static_cast<double>(units(i)) / static_cast<double>(pow10(decimals));
}

std::string Grid::format(std::size_t i) const {
  const std::int64_t u = units(i);
  const std::uint64_t mag = u < 0 ? static_cast<std::uint64_t>(-u) : static_cast<std::uint64_t>(u);
  const auto scale = static_cast<std::uint64_t>(pow10(decimals));

  char buf[48];
  char* p = buf;
  if (u < 0) *p++ = '-';
  p = std::to_chars(p, buf + sizeof buf, mag / scale).ptr;
  if (decimals > 0) {
    *p++ = '.';
    std::uint64_t frac = mag % scale;
    char* end = p + decimals;
    for (char* q = end; q != p;) {
      *--q = static_cast<char>('0' + frac % 10);
      frac /= 10;
    }
    p = end;
  }
  return std::string(buf, p);
}

// ---------------------------------------------------------------------------
// LetterSet

std::shared_ptr<const LetterSet> LetterSet::make(std::vector<Letter> letters) {
  if (letters.empty()) throw ValidationError({"letter list is empty"});
  std::shared_ptr<LetterSet> set(new LetterSet());
  set->index_.reserve(letters.size());
  std::vector<std::string> dups;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (!set->index_.emplace(letters[i].id, i).second) dups.push_back("duplicate letter id '" + letters[i].id + "'");
  }
  if (!dups.empty()) throw ValidationError(std::move(dups));
  set->letters_ = std::move(letters);
  return set;
}

std::shared_ptr<const LetterSet> LetterSet::make_grid(const Grid& grid) {
  if (grid.step_units <= 0) throw ValidationError({"grid step must be positive"});
  std::shared_ptr<LetterSet> set(new LetterSet());
  set->grid_ = grid;
  return set;
}

std::size_t LetterSet::size() const noexcept { return grid_ ? grid_->size() : letters_.size(); }

std::string LetterSet::id(std::size_t i) const { return grid_ ? grid_->format(i) : letters_[i].id; }

std::optional<std::string> LetterSet::label(std::size_t i) const {
  if (grid_) return grid_->format(i);
  return letters_[i].label;
}

std::optional<std::size_t> LetterSet::find(std::string_view id) const {
  if (!grid_) {
    const auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  double v = 0;
  const auto [ptr, ec] = std::from_chars(id.data(), id.data() + id.size(), v);
  if (ec != std::errc() || ptr != id.data() + id.size()) return std::nullopt;
  const double offset = (v * static_cast<double>(pow10(grid_->decimals)) - static_cast<double>(grid_->min_units)) /
                        static_cast<double>(grid_->step_units);
  const double idx = std::round(offset);
  if (idx < 0 || idx > static_cast<double>(grid_->steps)) return std::nullopt;
  const auto i = static_cast<std::size_t>(idx);
  if (grid_->format(i) != id) return std::nullopt;
  return i;
}

bool LetterSet::same_as(const LetterSet& other) const {
  if (this == &other) return true;
  if (grid_ && other.grid_) return *grid_ == *other.grid_;
  if (size() != other.size()) return false;
  if (!grid_ && !other.grid_) {
    return std::equal(letters_.begin(), letters_.end(), other.letters_.begin(),
                      [](const Letter& a, const Letter& b) { return a.id == b.id; });
  }
  for (std::size_t i = 0; i < size(); ++i) {
    if (id(i) != other.id(i)) return false;
  }
  return true;
}

bool same_letters(const LetterSetPtr& a, const LetterSetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

// ---------------------------------------------------------------------------
// Pmf

Pmf::Pmf(LetterSetPtr support, std::vector<double> mass) : support_(std::move(support)) {
  if (!support_) throw AlphabetMismatch("pmf has no support");
  if (mass.size() != support_->size()) {
    throw AlphabetMismatch("pmf has " + std::to_string(mass.size()) + " entries for " +
                           std::to_string(support_->size()) + " letters");
  }
  mass_ = std::make_shared<const std::vector<double>>(std::move(mass));
}

Pmf Pmf::uniform(LetterSetPtr support) {
  const std::size_t n = support->size();
  return Pmf(std::move(support), std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Pmf Pmf::degenerate(LetterSetPtr support, std::size_t letter) {
  std::vector<double> mass(support->size(), 0.0);
  mass.at(letter) = 1.0;
  return Pmf(std::move(support), std::move(mass));
}

Pmf Pmf::from_map(LetterSetPtr support, const std::map<std::string, double>& mass) {
  std::vector<double> dense(support->size(), 0.0);
  std::vector<bool> seen(support->size(), false);
  std::vector<std::string> unknown;
  for (const auto& [id, p] : mass) {
    if (const auto i = support->find(id)) {
      dense[*i] = p;
      seen[*i] = true;
    } else {
      unknown.push_back(id);
    }
  }
  std::vector<std::string> missing;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) missing.push_back(support->id(i));
  }
  Pmf pmf(std::move(support), std::move(dense));
  pmf.missing_keys_ = std::move(missing);
  pmf.unknown_keys_ = std::move(unknown);
  return pmf;
}

double Pmf::at(std::string_view id) const {
  const auto i = support_->find(id);
  if (!i) throw AlphabetMismatch("no letter '" + std::string(id) + "' in pmf support");
  return (*mass_)[*i];
}

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet(std::string id, LetterSetPtr letters, Pmf pmf)
    : id_(std::move(id)), letters_(std::move(letters)), pmf_(std::move(pmf)) {
  if (!same_letters(letters_, pmf_.support())) {
    throw AlphabetMismatch("pmf of alphabet '" + id_ + "' is not over its letters");
  }
}

Alphabet Alphabet::with_pmf(Pmf pmf, std::string id) const { return Alphabet(std::move(id), letters_, std::move(pmf)); }

Alphabet make_uniform(std::vector<Letter> letters, std::string id) {
  auto set = LetterSet::make(std::move(letters));
  auto pmf = Pmf::uniform(set);
  return Alphabet(std::move(id), std::move(set), std::move(pmf));
}

Alphabet make_quantized_range(double min, double max, double step, std::string id) {
  if (!std::isfinite(min) || !std::isfinite(max) || !std::isfinite(step)) {
    throw ValidationError({"range bounds and step must be finite"});
  }
  if (step <= 0) throw ValidationError({"step must be positive, got " + number(step)});
  if (max < min) throw ValidationError({"max " + number(max) + " is below min " + number(min)});
  const double span = (max - min) / step;
  const double steps = std::round(span);
  if (std::abs(span - steps) > 1e-6) {
    throw ValidationError({"(max - min) / step = " + number(span) + " is not an integer"});
  }
  if (steps + 1 > static_cast<double>(kMaxGridLetters)) {
    throw ValidationError({"range has " + number(steps + 1) + " letters, limit is " + number(kMaxGridLetters)});
  }
  const int step_decimals = decimals_of(step);
  const int min_decimals = decimals_of(min);
  if (step_decimals < 0 || min_decimals < 0) throw ValidationError({"range needs more than 12 decimals"});
  const int k = std::max(step_decimals, min_decimals);
  Grid grid;
  grid.decimals = k;
  grid.step_units = std::llround(step * static_cast<double>(pow10(k)));
  grid.min_units = std::llround(min * static_cast<double>(pow10(k)));
  grid.steps = static_cast<std::uint64_t>(steps);
  auto set = LetterSet::make_grid(grid);
  auto pmf = Pmf::uniform(set);
  return Alphabet(std::move(id), std::move(set), std::move(pmf));
}

// ---------------------------------------------------------------------------
// Validation and measures

std::vector<std::string> validate(const Pmf& pmf) {
  std::vector<std::string> out;
  for (const auto& k : pmf.unknown_keys()) out.push_back("unknown letter '" + k + "' in pmf");
  for (const auto& k : pmf.missing_keys()) out.push_back("letter '" + k + "' has no probability");

  CompensatedSum total;
  const auto mass = pmf.mass();
  for (std::size_t i = 0; i < mass.size(); ++i) {
    const double p = mass[i];
    if (!std::isfinite(p)) {
      out.push_back("non-finite mass at letter '" + pmf.support()->id(i) + "'");
      continue;
    }
    if (p < 0) out.push_back("negative mass " + number(p) + " at letter '" + pmf.support()->id(i) + "'");
    total.add(p);
  }
  if (std::abs(total.value() - 1.0) > kMassTolerance) out.push_back("mass sum " + number(total.value()));
  return out;
}

std::vector<std::string> validate(const Alphabet& alphabet) {
  auto out = validate(alphabet.pmf());
  for (auto& v : out) v = "alphabet '" + alphabet.id() + "': " + v;
  return out;
}

void require_valid(const Pmf& pmf) {
  if (auto v = validate(pmf); !v.empty()) throw ValidationError(std::move(v));
}

double entropy(const Pmf& pmf) {
  require_valid(pmf);
  CompensatedSum h;
  for (const double p : pmf.mass()) {
    if (p > 0) h.add(-p * std::log2(p));
  }
  return std::max(0.0, h.value());
}

double entropy(const Alphabet& alphabet) { return entropy(alphabet.pmf()); }

double kl_divergence(const Pmf& q, const Pmf& p) {
  if (!same_letters(q.support(), p.support())) {
    throw AlphabetMismatch("kl_divergence: q and p are over different letters");
  }
  require_valid(q);
  require_valid(p);
  CompensatedSum d;
  const auto qm = q.mass();
  const auto pm = p.mass();
  for (std::size_t i = 0; i < qm.size(); ++i) {
    if (qm[i] <= 0) continue;
    if (pm[i] <= 0) return kInfinity;
    d.add(qm[i] * std::log2(qm[i] / pm[i]));
  }
  return std::max(0.0, d.value());
}

}  // namespace vabs
