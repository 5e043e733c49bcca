#pragma once

// Independent brute-force references. Nothing here uses the tabulated
// meet/join, the antichain enumerator, or the backtracking search of the
// library; everything is recomputed from raw order tables or vectors.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "sasaki/ks_search.hpp"
#include "sasaki/oml.hpp"
#include "sasaki/subspace.hpp"

namespace oracle {

using sasaki::Element;
using sasaki::OmlTables;
using Subset = std::vector<Element>;

inline bool leq(const OmlTables& t, Element x, Element y) { return t.leq[x * t.n + y] != 0; }

// Greatest lower bound by scanning all elements; nullopt when none exists.
inline std::optional<Element> meet(const OmlTables& t, Element x, Element y) {
  std::optional<Element> best;
  for (Element z = 0; z < t.n; ++z) {
    if (!leq(t, z, x) || !leq(t, z, y)) continue;
    bool greatest = true;
    for (Element w = 0; w < t.n && greatest; ++w) {
      if (leq(t, w, x) && leq(t, w, y) && !leq(t, w, z)) greatest = false;
    }
    if (greatest) best = z;
  }
  return best;
}

inline std::optional<Element> join(const OmlTables& t, Element x, Element y) {
  std::optional<Element> best;
  for (Element z = 0; z < t.n; ++z) {
    if (!leq(t, x, z) || !leq(t, y, z)) continue;
    bool least = true;
    for (Element w = 0; w < t.n && least; ++w) {
      if (leq(t, x, w) && leq(t, y, w) && !leq(t, z, w)) least = false;
    }
    if (least) best = z;
  }
  return best;
}

inline Element bot(const OmlTables& t) {
  for (Element z = 0; z < t.n; ++z) {
    bool below_all = true;
    for (Element w = 0; w < t.n; ++w) below_all = below_all && leq(t, z, w);
    if (below_all) return z;
  }
  return 0;
}

inline Element top(const OmlTables& t) {
  for (Element z = 0; z < t.n; ++z) {
    bool above_all = true;
    for (Element w = 0; w < t.n; ++w) above_all = above_all && leq(t, w, z);
    if (above_all) return z;
  }
  return 0;
}

// Direct axiom check: partial order, lattice, orthocomplementation, and the
// orthomodular law by a triple loop over x <= y.
inline bool is_oml(const OmlTables& t) {
  const std::size_t n = t.n;
  for (Element x = 0; x < n; ++x) {
    if (!leq(t, x, x)) return false;
    for (Element y = 0; y < n; ++y) {
      if (x != y && leq(t, x, y) && leq(t, y, x)) return false;
      for (Element z = 0; z < n; ++z) {
        if (leq(t, x, y) && leq(t, y, z) && !leq(t, x, z)) return false;
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!meet(t, x, y) || !join(t, x, y)) return false;
    }
  }
  const Element b = bot(t);
  const Element tp = top(t);
  for (Element x = 0; x < n; ++x) {
    const Element xo = t.ortho[x];
    if (t.ortho[xo] != x) return false;
    if (*meet(t, x, xo) != b || *join(t, x, xo) != tp) return false;
    for (Element y = 0; y < n; ++y) {
      if (leq(t, x, y) && !leq(t, t.ortho[y], xo)) return false;
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!leq(t, x, y)) continue;
      if (*join(t, x, *meet(t, y, t.ortho[x])) != y) return false;
    }
  }
  return true;
}

inline Element sasaki(const OmlTables& t, Element x, Element y) { return *meet(t, *join(t, x, t.ortho[y]), y); }

inline bool commutes(const OmlTables& t, Element x, Element y) {
  return x == *join(t, *meet(t, x, y), *meet(t, x, t.ortho[y]));
}

inline Subset members_of(std::uint64_t mask, std::size_t n) {
  Subset s;
  for (Element e = 0; e < n; ++e) {
    if ((mask >> e) & 1U) s.push_back(e);
  }
  return s;
}

inline bool in(const Subset& s, Element e) { return std::binary_search(s.begin(), s.end(), e); }

// Every Sasaki filter, by scanning all 2^n subsets.
inline std::set<Subset> sasaki_filters(const OmlTables& t) {
  std::set<Subset> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << t.n); ++mask) {
    const Subset s = members_of(mask, t.n);
    bool ok = true;
    for (Element x : s) {
      for (Element y = 0; y < t.n && ok; ++y) {
        if (leq(t, x, y) && !in(s, y)) ok = false;
      }
      for (Element y : s) {
        if (ok && !in(s, sasaki(t, x, y))) ok = false;
      }
    }
    if (ok) out.insert(s);
  }
  return out;
}

// Every boolean subalgebra, by scanning all subsets containing bot and top.
inline std::set<Subset> boolean_subalgebras(const OmlTables& t) {
  std::set<Subset> out;
  const Element b = bot(t);
  const Element tp = top(t);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << t.n); ++mask) {
    if (!((mask >> b) & 1U) || !((mask >> tp) & 1U)) continue;
    const Subset s = members_of(mask, t.n);
    bool ok = true;
    for (Element x : s) {
      ok = ok && in(s, t.ortho[x]);
      for (Element y : s) {
        ok = ok && in(s, *meet(t, x, y)) && in(s, *join(t, x, y)) && commutes(t, x, y);
      }
    }
    if (ok) out.insert(s);
  }
  return out;
}

// Every finite measurement: non-bot, pairwise orthogonal, joining to top.
inline std::set<Subset> measurements(const OmlTables& t) {
  std::set<Subset> out;
  const Element b = bot(t);
  const Element tp = top(t);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << t.n); ++mask) {
    if ((mask >> b) & 1U) continue;
    const Subset s = members_of(mask, t.n);
    bool ok = true;
    Element acc = b;
    for (Element x : s) {
      acc = *join(t, acc, x);
      for (Element y : s) {
        if (x != y && !leq(t, x, t.ortho[y])) ok = false;
      }
    }
    if (ok && acc == tp) out.insert(s);
  }
  return out;
}

// Tries every one-ray-per-basis choice: the union must meet each basis
// exactly once and contain no orthogonal pair.
inline bool product_space_selection_exists(const sasaki::RayConfig& cfg, std::uint64_t* tried = nullptr) {
  const std::size_t m = cfg.bases.size();
  if (m == 0) return true;
  std::vector<std::size_t> pick(m, 0);
  std::uint64_t count = 0;
  while (true) {
    ++count;
    std::vector<std::size_t> chosen;
    for (std::size_t b = 0; b < m; ++b) chosen.push_back(cfg.bases[b][pick[b]]);
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    bool ok = true;
    for (std::size_t i = 0; i < chosen.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < chosen.size() && ok; ++j) {
        if (sasaki::inner(cfg.rays[chosen[i]], cfg.rays[chosen[j]]).is_zero()) ok = false;
      }
    }
    for (std::size_t b = 0; b < m && ok; ++b) {
      const auto hits = std::count_if(cfg.bases[b].begin(), cfg.bases[b].end(),
                                      [&](std::size_t r) { return std::binary_search(chosen.begin(), chosen.end(), r); });
      if (hits != 1) ok = false;
    }
    if (ok) {
      if (tried) *tried = count;
      return true;
    }
    std::size_t k = 0;
    while (k < m && ++pick[k] == cfg.bases[k].size()) {
      pick[k] = 0;
      ++k;
    }
    if (k == m) break;
  }
  if (tried) *tried = count;
  return false;
}

}  // namespace oracle
