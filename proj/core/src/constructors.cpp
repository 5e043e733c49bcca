#include "sasaki/constructors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace sasaki {

namespace {

std::string letter_label(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "a" + std::to_string(i);
}

std::string join_label(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += '|';
    s += parts[i];
  }
  return s;
}

// Masks ordered by popcount, then by their sorted member lists.
std::vector<std::uint32_t> canonical_masks(std::size_t k) {
  std::vector<std::uint32_t> masks(std::size_t{1} << k);
  std::iota(masks.begin(), masks.end(), 0U);
  auto bits_of = [](std::uint32_t m) {
    std::vector<int> v;
    for (int b = 0; m >> b; ++b) {
      if ((m >> b) & 1U) v.push_back(b);
    }
    return v;
  };
  std::sort(masks.begin(), masks.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    const auto ba = bits_of(a);
    const auto bb = bits_of(b);
    return ba < bb;
  });
  return masks;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

FiniteOml boolean_algebra(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::Malformed, "boolean_algebra(0) is the trivial lattice");
  if (k > 10) throw Error(ErrorCode::TooLarge, "boolean_algebra supports k <= 10");
  const auto masks = canonical_masks(k);
  const std::size_t n = masks.size();
  std::vector<Element> index_of(n);
  for (std::size_t i = 0; i < n; ++i) index_of[masks[i]] = static_cast<Element>(i);
  const std::uint32_t full = static_cast<std::uint32_t>(n - 1);

  OmlTables t;
  t.n = n;
  t.leq.assign(n * n, 0);
  t.ortho.resize(n);
  t.labels.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t m = masks[i];
    for (std::size_t j = 0; j < n; ++j) {
      if ((m & ~masks[j]) == 0) t.leq[i * n + j] = 1;
    }
    t.ortho[i] = index_of[full & ~m];
    if (m == 0) {
      t.labels[i] = "0";
    } else if (m == full) {
      t.labels[i] = "1";
    } else {
      std::vector<std::string> parts;
      for (std::size_t b = 0; b < k; ++b) {
        if ((m >> b) & 1U) parts.push_back(letter_label(b));
      }
      t.labels[i] = join_label(parts);
    }
  }
  return make_oml(t);
}

FiniteOml mo(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::Malformed, "mo(0) is the two-element chain; use boolean_algebra(1)");
  const std::size_t n = 2 * k + 2;
  OmlTables t;
  t.n = n;
  t.leq.assign(n * n, 0);
  t.ortho.resize(n);
  t.labels.resize(n);
  const Element top = static_cast<Element>(n - 1);
  t.labels[0] = "0";
  t.labels[top] = "1";
  t.ortho[0] = top;
  t.ortho[top] = 0;
  for (std::size_t p = 0; p < k; ++p) {
    const auto a = static_cast<Element>(1 + 2 * p);
    const auto ap = static_cast<Element>(2 + 2 * p);
    t.labels[a] = letter_label(p);
    t.labels[ap] = letter_label(p) + "'";
    t.ortho[a] = ap;
    t.ortho[ap] = a;
  }
  for (std::size_t i = 0; i < n; ++i) {
    t.leq[i * n + i] = 1;
    t.leq[0 * n + i] = 1;
    t.leq[i * n + top] = 1;
  }
  return make_oml(t);
}

GreechieDiagram parse_greechie(const std::string& text) {
  GreechieDiagram g;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> block;
    for (std::string w; words >> w;) block.push_back(w);
    if (!block.empty()) g.blocks.push_back(std::move(block));
  }
  return g;
}

FiniteOml from_greechie(const GreechieDiagram& g) {
  if (g.blocks.empty()) throw Error(ErrorCode::InvalidDiagram, "no blocks");

  std::set<std::string> atom_names;
  for (const auto& block : g.blocks) {
    if (block.size() < 2) throw Error(ErrorCode::InvalidDiagram, "every block needs at least two atoms");
    if (block.size() > 16) throw Error(ErrorCode::TooLarge, "blocks are limited to 16 atoms");
    const std::set<std::string> unique(block.begin(), block.end());
    if (unique.size() != block.size()) throw Error(ErrorCode::InvalidDiagram, "repeated atom inside a block");
    atom_names.insert(block.begin(), block.end());
  }
  const std::vector<std::string> atoms(atom_names.begin(), atom_names.end());
  auto atom_id = [&](const std::string& name) {
    return static_cast<std::size_t>(std::lower_bound(atoms.begin(), atoms.end(), name) - atoms.begin());
  };

  // Blocks as sorted global atom ids.
  std::vector<std::vector<std::size_t>> blocks;
  for (const auto& block : g.blocks) {
    std::vector<std::size_t> ids;
    for (const auto& name : block) ids.push_back(atom_id(name));
    std::sort(ids.begin(), ids.end());
    blocks.push_back(std::move(ids));
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      std::vector<std::size_t> shared;
      std::set_intersection(blocks[i].begin(), blocks[i].end(), blocks[j].begin(), blocks[j].end(),
                            std::back_inserter(shared));
      if (shared.size() > 1) {
        throw Error(ErrorCode::InvalidDiagram, "blocks " + std::to_string(i) + " and " + std::to_string(j) +
                                                   " share more than one atom");
      }
    }
  }

  // One node per (block, subset); nodes with the same atom set or the same
  // complementary atom set denote the same element.
  std::vector<std::size_t> offset(blocks.size() + 1, 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) offset[b + 1] = offset[b] + (std::size_t{1} << blocks[b].size());
  const std::size_t nodes = offset.back();
  auto subset = [&](std::size_t b, std::uint32_t mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if ((mask >> i) & 1U) s.push_back(blocks[b][i]);
    }
    return s;
  };

  UnionFind uf(nodes);
  std::map<std::vector<std::size_t>, std::size_t> by_atoms;
  std::map<std::vector<std::size_t>, std::size_t> by_complement;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::uint32_t full = (1U << blocks[b].size()) - 1;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      const std::size_t node = offset[b] + mask;
      auto [it1, fresh1] = by_atoms.emplace(subset(b, mask), node);
      if (!fresh1) uf.unite(it1->second, node);
      auto [it2, fresh2] = by_complement.emplace(subset(b, full & ~mask), node);
      if (!fresh2) uf.unite(it2->second, node);
    }
  }

  // Classes, with the data needed for canonical ordering and labels.
  struct ClassInfo {
    std::size_t height = SIZE_MAX;
    std::string label;
    bool is_bot = false;
    bool is_top = false;
  };
  std::map<std::size_t, ClassInfo> classes;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::uint32_t full = (1U << blocks[b].size()) - 1;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      const std::size_t root = uf.find(offset[b] + mask);
      auto& info = classes[root];
      const auto s = subset(b, mask);
      const auto c = subset(b, full & ~mask);
      info.height = std::min(info.height, s.size());
      std::string label;
      int priority = 3;
      if (s.empty()) {
        label = "0", priority = 0, info.is_bot = true;
      } else if (c.empty()) {
        label = "1", priority = 0, info.is_top = true;
      } else if (s.size() == 1) {
        label = atoms[s[0]], priority = 1;
      } else if (c.size() == 1) {
        label = atoms[c[0]] + "'", priority = 2;
      } else {
        std::vector<std::string> parts;
        for (auto a : s) parts.push_back(atoms[a]);
        label = join_label(parts);
      }
      const std::string keyed = std::to_string(priority) + label;
      if (info.label.empty() || keyed < info.label) info.label = keyed;
    }
  }
  for (auto& [root, info] : classes) {
    if (info.is_bot && info.is_top) {
      throw Error(ErrorCode::PastingNotOrthomodular, "NotAPoset: bot and top are identified");
    }
    info.label.erase(0, 1);
  }

  std::vector<std::size_t> order;
  for (const auto& [root, info] : classes) order.push_back(root);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = classes[a];
    const auto& y = classes[b];
    auto rank = [](const ClassInfo& c) { return c.is_bot ? 0 : (c.is_top ? 2 : 1); };
    if (rank(x) != rank(y)) return rank(x) < rank(y);
    if (x.height != y.height) return x.height < y.height;
    return x.label < y.label;
  });
  std::map<std::size_t, Element> element_of;
  for (std::size_t i = 0; i < order.size(); ++i) element_of[order[i]] = static_cast<Element>(i);

  const std::size_t n = order.size();
  OmlTables t;
  t.n = n;
  t.labels.resize(n);
  for (std::size_t i = 0; i < n; ++i) t.labels[i] = classes[order[i]].label;

  std::vector<std::optional<Element>> ortho(n);
  std::vector<std::pair<Element, Element>> pairs;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::uint32_t full = (1U << blocks[b].size()) - 1;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      const Element x = element_of[uf.find(offset[b] + mask)];
      const Element xp = element_of[uf.find(offset[b] + (full & ~mask))];
      if (ortho[x] && *ortho[x] != xp) {
        throw Error(ErrorCode::PastingNotOrthomodular,
                    "NotAnOrthocomplementation: element " + t.labels[x] + " gets two complements");
      }
      ortho[x] = xp;
      for (std::size_t i = 0; i < blocks[b].size(); ++i) {
        if (!((mask >> i) & 1U)) {
          pairs.emplace_back(x, element_of[uf.find(offset[b] + (mask | (1U << i)))]);
        }
      }
    }
  }
  t.ortho.resize(n);
  for (std::size_t i = 0; i < n; ++i) t.ortho[i] = *ortho[i];
  t.leq = order_closure(n, pairs);

  auto result = verify_oml(t);
  if (auto* v = std::get_if<OmlViolation>(&result)) {
    throw Error(ErrorCode::PastingNotOrthomodular,
                std::string(to_string(v->kind)) + " at (" + t.labels[v->x] + ", " + t.labels[v->y] + "): " +
                    v->detail);
  }
  return std::get<FiniteOml>(std::move(result));
}

OmlTables hexagon_tables() {
  // 0:0 1:a 2:b 3:b' 4:a' 5:1 ; a < b', b < a'
  OmlTables t;
  t.n = 6;
  t.leq = order_closure(6, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 5}});
  t.ortho = {5, 4, 3, 2, 1, 0};
  t.labels = {"0", "a", "b", "b'", "a'", "1"};
  return t;
}

}  // namespace sasaki
