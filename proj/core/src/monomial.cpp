#include "bettilab/monomial.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "bettilab/linalg.hpp"

namespace bettilab {

namespace {

bool divides(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

}  // namespace

MonomialIdeal make_monomial_ideal(int nvars, std::vector<std::vector<int>> gens,
                                  bool* was_minimal) {
  if (nvars < 1) throw std::invalid_argument("monomial ideal: need at least one variable");
  if (gens.empty()) throw std::invalid_argument("monomial ideal: empty generator list");
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != nvars)
      throw std::invalid_argument("monomial ideal: exponent vector length mismatch");
    bool unit = true;
    for (int e : g) {
      if (e < 0) throw std::invalid_argument("monomial ideal: negative exponent");
      if (e > 0) unit = false;
    }
    if (unit) throw std::invalid_argument("monomial ideal: unit generator");
  }
  std::size_t before = gens.size();
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<std::vector<int>> kept;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (j != i && divides(gens[j], gens[i])) redundant = true;
    if (!redundant) kept.push_back(gens[i]);
  }
  if (was_minimal) *was_minimal = kept.size() == before;
  return MonomialIdeal{nvars, std::move(kept)};
}

BettiDiagram betti_table(const MonomialIdeal& I, std::uint64_t char_p) {
  const int r = static_cast<int>(I.gens.size());
  if (r < 1) throw std::invalid_argument("betti_table: empty ideal");
  if (r > 20) throw std::invalid_argument("betti_table: more than 20 generators");
  if (char_p != 0 && !is_prime_u32(char_p))
    throw std::invalid_argument("betti_table: characteristic must be 0 or a prime below 2^32");

  // lcm per generator subset, built by peeling the lowest bit
  const std::uint32_t full = r == 32 ? 0xFFFFFFFFu : (1u << r) - 1;
  std::vector<std::vector<int>> lcm(static_cast<std::size_t>(full) + 1);
  lcm[0].assign(static_cast<std::size_t>(I.nvars), 0);
  for (std::uint32_t m = 1; m <= full; ++m) {
    int low = std::countr_zero(m);
    const auto& rest = lcm[m & (m - 1)];
    const auto& g = I.gens[static_cast<std::size_t>(low)];
    auto& out = lcm[m];
    out.resize(static_cast<std::size_t>(I.nvars));
    for (int k = 0; k < I.nvars; ++k)
      out[static_cast<std::size_t>(k)] =
          std::max(rest[static_cast<std::size_t>(k)], g[static_cast<std::size_t>(k)]);
  }

  // strands: subsets grouped by lcm, then by cardinality
  std::map<std::vector<int>, std::vector<std::vector<std::uint32_t>>> strands;
  for (std::uint32_t m = 1; m <= full; ++m) {
    auto& by_size = strands[lcm[m]];
    std::size_t card = static_cast<std::size_t>(std::popcount(m));
    if (by_size.size() <= card) by_size.resize(card + 1);
    by_size[card].push_back(m);
  }

  std::map<std::pair<int, int>, Rat> entries;
  entries[{0, 0}] = 1;

  for (auto& [deg, by_size] : strands) {
    int total = std::accumulate(deg.begin(), deg.end(), 0);
    std::size_t top = by_size.size() - 1;
    // basis lists are ascending by construction; rank of each boundary map
    std::vector<int> ranks(top + 2, 0);
    for (std::size_t i = 1; i <= top; ++i) {
      const auto& dom = by_size[i];
      const auto& img = by_size[i - 1];
      if (dom.empty() || img.empty()) continue;
      int rows = static_cast<int>(img.size());
      int cols = static_cast<int>(dom.size());
      auto entry_of = [&](std::uint32_t face) -> int {
        auto it = std::lower_bound(img.begin(), img.end(), face);
        if (it == img.end() || *it != face) return -1;
        return static_cast<int>(it - img.begin());
      };
      if (char_p == 0) {
        RatMat d(rows, cols);
        for (int c = 0; c < cols; ++c) {
          std::uint32_t T = dom[static_cast<std::size_t>(c)];
          int pos = 0;
          for (std::uint32_t bits = T; bits; bits &= bits - 1, ++pos) {
            std::uint32_t face = T & ~(bits & (0u - bits));
            int row = entry_of(face);
            if (row >= 0) d.at(row, c) = (pos % 2 == 0) ? 1 : -1;
          }
        }
        ranks[i] = d.rank();
      } else {
        FpMat d(rows, cols, char_p);
        for (int c = 0; c < cols; ++c) {
          std::uint32_t T = dom[static_cast<std::size_t>(c)];
          int pos = 0;
          for (std::uint32_t bits = T; bits; bits &= bits - 1, ++pos) {
            std::uint32_t face = T & ~(bits & (0u - bits));
            int row = entry_of(face);
            if (row >= 0) d.at(row, c) = (pos % 2 == 0) ? 1 : char_p - 1;
          }
        }
        ranks[i] = d.rank();
      }
    }
    for (std::size_t i = 1; i <= top; ++i) {
      int dim = static_cast<int>(by_size[i].size());
      int h = dim - ranks[i] - ranks[i + 1];
      if (h > 0) entries[{static_cast<int>(i), total}] += h;
    }
  }

  return BettiDiagram::from_entries(entries, true);
}

MonomialIdeal random_squarefree(int n, int r, std::uint64_t seed) {
  if (n < 1 || n > 10) throw std::invalid_argument("random_squarefree: need 1 <= n <= 10");
  if (r < 1 || r > 10) throw std::invalid_argument("random_squarefree: need 1 <= r <= 10");
  std::mt19937_64 eng(seed);
  int mode = static_cast<int>(eng() % 3);
  std::vector<std::uint32_t> picked;
  auto minimal_against = [&](std::uint32_t m) {
    for (std::uint32_t q : picked)
      if ((q & m) == q || (q & m) == m) return false;
    return true;
  };
  const std::uint32_t full = (1u << n) - 1;
  for (int attempts = 0; static_cast<int>(picked.size()) < r && attempts < 400; ++attempts) {
    std::uint32_t m;
    if (mode == 2) {
      m = static_cast<std::uint32_t>(eng() % full) + 1;
    } else {
      int want = std::min(mode == 0 ? 2 : 3, n);
      m = 0;
      while (std::popcount(m) < want) m |= 1u << (eng() % static_cast<std::uint64_t>(n));
    }
    if (minimal_against(m)) picked.push_back(m);
  }
  std::sort(picked.begin(), picked.end());
  std::vector<std::vector<int>> gens;
  for (std::uint32_t m : picked) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k)
      if (m & (1u << k)) e[static_cast<std::size_t>(k)] = 1;
    gens.push_back(std::move(e));
  }
  return make_monomial_ideal(n, std::move(gens));
}

bool is_squarefree(const MonomialIdeal& I) {
  for (const auto& g : I.gens)
    for (int e : g)
      if (e > 1) return false;
  return true;
}

std::optional<int> equigenerated_degree(const MonomialIdeal& I) {
  std::optional<int> d;
  for (const auto& g : I.gens) {
    int t = std::accumulate(g.begin(), g.end(), 0);
    if (!d) d = t;
    if (t != *d) return std::nullopt;
  }
  return d;
}

int height(const MonomialIdeal& I) {
  if (I.nvars > 20) throw std::invalid_argument("height: too many variables");
  std::vector<std::uint32_t> supports;
  for (const auto& g : I.gens) {
    std::uint32_t s = 0;
    for (int k = 0; k < I.nvars; ++k)
      if (g[static_cast<std::size_t>(k)] > 0) s |= 1u << k;
    supports.push_back(s);
  }
  int best = I.nvars;
  const std::uint32_t full = (1u << I.nvars) - 1;
  for (std::uint32_t m = 0; m <= full; ++m) {
    if (std::popcount(m) >= best) continue;
    bool covers = std::all_of(supports.begin(), supports.end(),
                              [&](std::uint32_t s) { return (s & m) != 0; });
    if (covers) best = std::popcount(m);
  }
  return best;
}

}  // namespace bettilab
