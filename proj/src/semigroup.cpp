#include "algknot/semigroup.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <limits>

#include "algknot/errors.hpp"

namespace algknot {

namespace mp = boost::multiprecision;

namespace {

constexpr std::uint64_t kMaxTable = std::uint64_t(1) << 32;

std::uint64_t to_index(const Int& m, const char* what) {
  if (m < 0) throw InvalidInput(Errc::QueryBeyondTable, std::string(what) + " is negative");
  if (m > kMaxTable)
    throw InvalidInput(Errc::QueryBeyondTable,
                       std::string(what) + " = " + m.str() + " exceeds the table limit");
  return m.convert_to<std::uint64_t>();
}

}  // namespace

NumericalSemigroup NumericalSemigroup::generate(std::vector<Int> generators,
                                                const Int& bound) {
  if (generators.empty())
    throw InvalidInput(Errc::NotCoprimeGenerators, "no generators");
  Int overall = 0;
  for (const Int& g : generators) {
    if (g <= 0)
      throw InvalidInput(Errc::NotCoprimeGenerators, "nonpositive generator " + g.str());
    overall = mp::gcd(overall, g);
  }
  if (overall != 1)
    throw InvalidInput(Errc::NotCoprimeGenerators,
                       "generators have common divisor " + overall.str());

  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  NumericalSemigroup s;
  s.gens_ = std::move(generators);
  const std::uint64_t a = to_index(s.gens_.front(), "smallest generator");
  std::uint64_t size = std::max<std::uint64_t>(to_index(bound, "bound"), 2 * a + 2);

  // Sieve, doubling until the last a entries are all members: then every
  // larger integer is a member too and the conductor lies inside the table.
  std::vector<std::uint64_t> small_gens;
  small_gens.reserve(s.gens_.size());
  for (const Int& gen : s.gens_)
    small_gens.push_back(to_index(gen, "generator"));

  while (true) {
    s.table_.assign(size, false);
    s.table_[0] = true;
    for (std::uint64_t m = 1; m < size; ++m) {
      for (std::uint64_t g : small_gens) {
        if (g > m) break;
        if (s.table_[m - g]) {
          s.table_[m] = true;
          break;
        }
      }
    }
    bool tail_full = true;
    for (std::uint64_t m = size - a; m < size; ++m) tail_full &= s.table_[m];
    if (tail_full) break;
    if (size >= kMaxTable)
      throw InvalidInput(Errc::QueryBeyondTable, "conductor beyond the table limit");
    size = std::min(kMaxTable, size * 2);
  }

  std::uint64_t last_gap = 0;
  bool has_gap = false;
  for (std::uint64_t m = 0; m < s.table_.size(); ++m) {
    if (!s.table_[m]) {
      last_gap = m;
      has_gap = true;
      ++s.gap_count_;
    }
  }
  s.conductor_ = has_gap ? last_gap + 1 : 0;

  s.prefix_.resize(s.table_.size() + 1);
  s.prefix_[0] = 0;
  for (std::uint64_t m = 0; m < s.table_.size(); ++m)
    s.prefix_[m + 1] = s.prefix_[m] + (s.table_[m] ? 1 : 0);
  return s;
}

Int NumericalSemigroup::min_positive() const { return gens_.front(); }

bool NumericalSemigroup::contains(const Int& m) const {
  if (m < 0) return false;
  if (m >= Int(table_.size())) return true;  // table always covers the conductor
  return table_[m.convert_to<std::uint64_t>()];
}

std::uint64_t NumericalSemigroup::count_below_idx(std::uint64_t m) const {
  return prefix_[m];
}

Int NumericalSemigroup::count_below(const Int& m) const {
  if (m < 0) return 0;
  const std::uint64_t idx = to_index(m, "count_below query");
  if (idx > table_.size())
    throw InvalidInput(Errc::QueryBeyondTable,
                       "count_below(" + m.str() + ") beyond table of size " +
                           std::to_string(table_.size()));
  return Int(count_below_idx(idx));
}

bool NumericalSemigroup::is_symmetric(const Int& genus) const {
  const std::uint64_t g2 = to_index(2 * genus, "symmetry bound 2g");
  if (g2 > table_.size())
    throw InvalidInput(Errc::QueryBeyondTable, "symmetry check needs table up to 2g");
  for (std::uint64_t m = 0; m < g2; ++m)
    if (table_[m] == table_[g2 - 1 - m]) return false;
  return true;
}

std::vector<Int> NumericalSemigroup::alexander_polynomial(const Int& genus) const {
  const std::uint64_t g2 = to_index(2 * genus, "Alexander degree 2g");
  if (g2 > table_.size())
    throw InvalidInput(Errc::QueryBeyondTable, "Alexander polynomial needs table up to 2g");
  // (1 - t) * sum_{s in S, s < 2g} t^s + t^{2g}
  std::vector<Int> coeff(g2 + 1, 0);
  for (std::uint64_t m = 0; m < g2; ++m) {
    if (!table_[m]) continue;
    coeff[m] += 1;
    coeff[m + 1] -= 1;
  }
  coeff[g2] += 1;
  return coeff;
}

std::vector<Int> NumericalSemigroup::gaps() const {
  std::vector<Int> out;
  out.reserve(gap_count_);
  for (std::uint64_t m = 0; m < conductor_; ++m)
    if (!table_[m]) out.emplace_back(m);
  return out;
}

}  // namespace algknot
