#include "comvar/character.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace comvar {

std::uint64_t Sl2Character::dimension() const {
  std::uint64_t d = 0;
  for (const auto& [w, m] : multiplicities) d += m;
  return d;
}

bool Sl2Character::is_symmetric() const {
  for (const auto& [w, m] : multiplicities) {
    auto it = multiplicities.find(-w);
    if (it == multiplicities.end() || it->second != m) return false;
  }
  return true;
}

Sl2Character& Sl2Character::operator+=(const Sl2Character& o) {
  for (const auto& [w, m] : o.multiplicities) {
    if (m != 0) multiplicities[w] += m;
  }
  return *this;
}

Sl2Character Sl2Character::scaled(std::uint64_t k) const {
  Sl2Character out;
  if (k == 0) return out;
  for (const auto& [w, m] : multiplicities) out.multiplicities[w] = m * k;
  return out;
}

std::uint64_t partition_count(int r, int n) {
  if (r < 1 || n < 0) throw std::invalid_argument("partition_count: need r >= 1, n >= 0");
  std::uint64_t top = static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(r) - 1;
  std::uint64_t k = static_cast<std::uint64_t>(r) - 1;
  if (k > top - k) k = top - k;
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) c = c * (top - k + i) / i;
  return static_cast<std::uint64_t>(c);
}

std::uint64_t partition_count_enumerated(int r, int n) {
  if (r < 1 || n < 0) throw std::invalid_argument("partition_count: need r >= 1, n >= 0");
  std::uint64_t count = 0;
  std::function<void(int, int)> rec = [&](int slot, int left) {
    if (slot == r - 1) {
      ++count;
      return;
    }
    for (int a = 0; a <= left; ++a) rec(slot + 1, left - a);
  };
  rec(0, n);
  return count;
}

Sl2Character weyl_character(int n) {
  if (n < 0) throw std::invalid_argument("weyl_character: n must be >= 0");
  Sl2Character ch;
  for (int w = -2 * n; w <= 2 * n; w += 2) ch.multiplicities[w] = 1;
  return ch;
}

std::vector<std::uint64_t> CharacterSeries::dimensions() const {
  std::vector<std::uint64_t> out;
  out.reserve(degrees.size());
  for (const auto& d : degrees) out.push_back(d.dimension());
  return out;
}

CharacterSeries character_series(int r, int N) {
  if (r < 1 || N < 0) throw std::invalid_argument("character_series: need r >= 1, N >= 0");
  CharacterSeries s;
  s.r = r;
  for (int n = 0; n <= N; ++n) s.degrees.push_back(weyl_character(n).scaled(partition_count(r, n)));
  return s;
}

MultiplicityTable decompose_good_filtration(const std::vector<Sl2Character>& degrees) {
  MultiplicityTable table;
  for (std::size_t deg = 0; deg < degrees.size(); ++deg) {
    std::map<int, std::uint64_t> rest;
    for (const auto& [w, m] : degrees[deg].multiplicities) {
      if (m != 0) rest[w] = m;
    }
    while (!rest.empty()) {
      auto [top, mult] = *rest.rbegin();
      if (top < 0 || top % 2 != 0) {
        throw std::invalid_argument("degree " + std::to_string(deg) +
                                    ": top weight " + std::to_string(top) +
                                    " is not a dominant root-lattice weight");
      }
      for (int w = -top; w <= top; w += 2) {
        auto it = rest.find(w);
        if (it == rest.end() || it->second < mult) {
          throw std::invalid_argument("degree " + std::to_string(deg) +
                                      " is not a nonnegative sum of chi(m alpha)");
        }
        it->second -= mult;
        if (it->second == 0) rest.erase(it);
      }
      table[static_cast<int>(deg)][top / 2] += mult;
    }
  }
  return table;
}

std::map<int, std::uint64_t> total_multiplicities(const MultiplicityTable& table) {
  std::map<int, std::uint64_t> out;
  for (const auto& [deg, row] : table) {
    for (const auto& [m, k] : row) out[m] += k;
  }
  return out;
}

}  // namespace comvar
