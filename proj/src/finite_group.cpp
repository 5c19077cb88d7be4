#include "fspt/finite_group.hpp"

#include <algorithm>
#include <numeric>

namespace fspt {

namespace {

std::vector<int> cyclic_table(int n) {
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) t[static_cast<std::size_t>(g) * n + h] = (g + h) % n;
  return t;
}

}  // namespace

FiniteGroup::FiniteGroup(int order, std::vector<int> table, std::vector<std::string> names)
    : order_(order), table_(std::move(table)), names_(std::move(names)) {
  inverse_.assign(static_cast<std::size_t>(order_), -1);
  for (int g = 0; g < order_; ++g)
    for (int h = 0; h < order_; ++h)
      if (mul(g, h) == identity()) inverse_[g] = h;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<std::string> names(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) names[g] = std::to_string(g);
  return FiniteGroup(n, cyclic_table(n), std::move(names));
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 1) throw std::invalid_argument("dihedral parameter must be positive");
  const int order = 2 * n;
  std::vector<int> t(static_cast<std::size_t>(order) * order);
  auto idx = [n](int i, int j) { return i + n * j; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < 2; ++l) {
          // (r^i s^j)(r^k s^l) = r^{i + (-1)^j k} s^{j+l}
          const int rot = ((i + (j ? n - k : k)) % n + n) % n;
          t[static_cast<std::size_t>(idx(i, j)) * order + idx(k, l)] = idx(rot, (j + l) % 2);
        }
  std::vector<std::string> names(static_cast<std::size_t>(order));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j)
      names[idx(i, j)] = std::string(j ? "s" : "") + (i ? "r" + std::to_string(i) : (j ? "" : "e"));
  names[0] = "e";
  return FiniteGroup(order, std::move(t), std::move(names));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int n = g.order() * h.order();
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  auto idx = [&h](int a, int b) { return a * h.order() + b; };
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < h.order(); ++b)
      for (int c = 0; c < g.order(); ++c)
        for (int d = 0; d < h.order(); ++d)
          t[static_cast<std::size_t>(idx(a, b)) * n + idx(c, d)] = idx(g.mul(a, c), h.mul(b, d));
  std::vector<std::string> names(static_cast<std::size_t>(n));
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < h.order(); ++b) {
      const std::string an = a < static_cast<int>(g.names().size()) ? g.names()[a] : std::to_string(a);
      const std::string bn = b < static_cast<int>(h.names().size()) ? h.names()[b] : std::to_string(b);
      names[idx(a, b)] = "(" + an + "," + bn + ")";
    }
  return FiniteGroup(n, std::move(t), std::move(names));
}

FiniteGroup FiniteGroup::from_table(int order, std::vector<int> table,
                                    std::vector<std::string> names) {
  if (auto v = check_table(order, table)) throw GroupError(*v);
  if (!names.empty() && static_cast<int>(names.size()) != order)
    throw GroupError({"names", {-1, -1, -1}, "names list length does not match order"});
  return FiniteGroup(order, std::move(table), std::move(names));
}

std::optional<GroupViolation> check_table(int order, const std::vector<int>& table) {
  if (order < 1)
    return GroupViolation{"order", {-1, -1, -1}, "order must be positive"};
  if (table.size() != static_cast<std::size_t>(order) * order)
    return GroupViolation{"shape", {-1, -1, -1}, "table is not order x order"};
  for (int v : table)
    if (v < 0 || v >= order)
      return GroupViolation{"range", {v, -1, -1}, "table entry out of range"};

  auto at = [&](int g, int h) { return table[static_cast<std::size_t>(g) * order + h]; };

  for (int h = 0; h < order; ++h)
    if (at(0, h) != h)
      return GroupViolation{"identity-row", {0, h, -1},
                            "table[0][" + std::to_string(h) + "] != " + std::to_string(h)};
  for (int g = 0; g < order; ++g)
    if (at(g, 0) != g)
      return GroupViolation{"identity-column", {g, 0, -1},
                            "table[" + std::to_string(g) + "][0] != " + std::to_string(g)};

  for (int g = 0; g < order; ++g) {
    std::vector<char> seen(static_cast<std::size_t>(order), 0);
    for (int h = 0; h < order; ++h) {
      if (seen[at(g, h)]++)
        return GroupViolation{"latin-row", {g, h, -1},
                              "row " + std::to_string(g) + " is not a permutation"};
    }
  }
  for (int h = 0; h < order; ++h) {
    std::vector<char> seen(static_cast<std::size_t>(order), 0);
    for (int g = 0; g < order; ++g) {
      if (seen[at(g, h)]++)
        return GroupViolation{"latin-column", {g, h, -1},
                              "column " + std::to_string(h) + " is not a permutation"};
    }
  }

  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h)
      for (int k = 0; k < order; ++k)
        if (at(at(g, h), k) != at(g, at(h, k)))
          return GroupViolation{
              "associativity",
              {g, h, k},
              "(g h) k != g (h k) at (" + std::to_string(g) + "," + std::to_string(h) + "," +
                  std::to_string(k) + ")"};
  return std::nullopt;
}

std::optional<GroupViolation> check_axioms(const FiniteGroup& g) {
  return check_table(g.order(), g.table());
}

bool is_z2_hom(const FiniteGroup& g, const std::vector<Bit>& values) {
  if (values.size() != static_cast<std::size_t>(g.order())) return false;
  if (values[0] != 0) return false;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (values[g.mul(a, b)] != (values[a] ^ values[b])) return false;
  return true;
}

namespace {

// Greedy generating set: extend by the first element not yet generated.
std::vector<int> generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<char> reached(static_cast<std::size_t>(g.order()), 0);
  reached[0] = 1;
  int covered = 1;
  while (covered < g.order()) {
    int fresh = -1;
    for (int x = 0; x < g.order(); ++x)
      if (!reached[x]) {
        fresh = x;
        break;
      }
    gens.push_back(fresh);
    // closure of <gens>
    std::vector<int> frontier{fresh};
    reached[fresh] = 1;
    ++covered;
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier)
        for (int y = 0; y < g.order(); ++y)
          if (reached[y]) {
            for (int z : {g.mul(x, y), g.mul(y, x)})
              if (!reached[z]) {
                reached[z] = 1;
                ++covered;
                next.push_back(z);
              }
          }
      frontier = std::move(next);
    }
  }
  return gens;
}

}  // namespace

std::vector<Z2Hom> all_z2_homs(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<Z2Hom> out;
  if (n <= 16) {
    // Exhaustive scan of all bit arrays; lexicographic order on value arrays
    // corresponds to treating values[0] as the most significant bit.
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<Bit> values(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) values[x] = (mask >> (n - 1 - x)) & 1u;
      if (is_z2_hom(g, values)) out.push_back(Z2Hom{std::move(values)});
    }
    return out;
  }
  // Generator-image search: a homomorphism is determined by its generator
  // images; propagate by words and check consistency.
  const std::vector<int> gens = generating_set(g);
  for (std::uint32_t mask = 0; mask < (1u << gens.size()); ++mask) {
    std::vector<int> assigned(static_cast<std::size_t>(n), -1);
    assigned[0] = 0;
    bool ok = true;
    std::vector<int> frontier{0};
    for (std::size_t i = 0; i < gens.size() && ok; ++i) {
      const int img = (mask >> i) & 1u;
      if (assigned[gens[i]] == -1) {
        assigned[gens[i]] = img;
        frontier.push_back(gens[i]);
      } else if (assigned[gens[i]] != img) {
        ok = false;
      }
    }
    // close under multiplication
    bool changed = ok;
    while (changed) {
      changed = false;
      for (int x = 0; x < n && ok; ++x)
        for (int y = 0; y < n; ++y) {
          if (assigned[x] < 0 || assigned[y] < 0) continue;
          const int z = g.mul(x, y);
          const int v = assigned[x] ^ assigned[y];
          if (assigned[z] == -1) {
            assigned[z] = v;
            changed = true;
          } else if (assigned[z] != v) {
            ok = false;
            break;
          }
        }
    }
    if (!ok) continue;
    std::vector<Bit> values(static_cast<std::size_t>(n));
    bool total = true;
    for (int x = 0; x < n; ++x) {
      if (assigned[x] < 0) total = false;
      values[x] = static_cast<Bit>(assigned[x] == 1);
    }
    if (total && is_z2_hom(g, values)) out.push_back(Z2Hom{std::move(values)});
  }
  std::sort(out.begin(), out.end(),
            [](const Z2Hom& a, const Z2Hom& b) { return a.values < b.values; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace fspt
