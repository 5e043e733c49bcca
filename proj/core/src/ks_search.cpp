#include "sasaki/ks_search.hpp"

#include <algorithm>
#include <map>
#include <json.hpp>
#include <unordered_map>

#include "sasaki/error.hpp"

namespace sasaki {

Vector canonical_ray(const Vector& v) {
  auto first = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (first == v.end()) throw Error(ErrorCode::ZeroVector, "zero vector has no ray");
  const Scalar inv = Scalar(1) / *first;
  Vector out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(s * inv);
  mpz_class den = 1;
  for (const auto& s : out) {
    den = lcm(den, s.re().get_den());
    den = lcm(den, s.im().get_den());
  }
  mpz_class content = 0;
  for (auto& s : out) {
    s *= Scalar(mpq_class(den));
    content = gcd(content, s.re().get_num());
    content = gcd(content, s.im().get_num());
  }
  for (auto& s : out) s /= Scalar(mpq_class(content));
  return out;
}

RayConfig build_config(const std::vector<Vector>& vectors, std::size_t dim) {
  RayConfig cfg;
  cfg.dim = dim;
  std::map<std::string, std::size_t> index;
  for (const auto& v : vectors) {
    if (v.size() != dim) {
      throw Error(ErrorCode::DimMismatch, "vector " + vector_to_string(v) + " is not of dimension " + std::to_string(dim));
    }
    Vector c = canonical_ray(v);
    const std::string key = vector_to_string(c);
    if (index.emplace(key, cfg.rays.size()).second) cfg.rays.push_back(std::move(c));
  }
  const std::size_t n = cfg.rays.size();
  cfg.orthogonal.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool o = inner(cfg.rays[i], cfg.rays[j]).is_zero();
      cfg.orthogonal[i][j] = cfg.orthogonal[j][i] = o;
    }
  }
  // Orthogonal sets have at most `dim` members, so the d-cliques are exactly
  // the maximal ones of full size.
  std::vector<std::size_t> clique;
  auto grow = [&](auto&& self, std::size_t next) -> void {
    if (clique.size() == dim) {
      cfg.bases.push_back(clique);
      return;
    }
    for (std::size_t r = next; r < n; ++r) {
      if (!std::all_of(clique.begin(), clique.end(), [&](std::size_t c) { return cfg.orthogonal[r][c]; })) continue;
      clique.push_back(r);
      self(self, r + 1);
      clique.pop_back();
    }
  };
  if (dim > 0) grow(grow, 0);
  return cfg;
}

SearchResult search_coloring(const RayConfig& cfg) {
  const std::size_t n = cfg.rays.size();
  const std::size_t m = cfg.bases.size();
  std::vector<std::vector<std::size_t>> bases_of(n);
  for (std::size_t b = 0; b < m; ++b) {
    for (std::size_t r : cfg.bases[b]) bases_of[r].push_back(b);
  }

  SearchResult res;
  // forbidden[r] counts selected rays orthogonal to r; covered[b] counts
  // selected members of b (at most one, since basis members are orthogonal).
  std::vector<int> forbidden(n, 0);
  std::vector<int> covered(m, 0);
  std::vector<bool> selected(n, false);
  bool first_descent = true;

  auto select = [&](std::size_t r, int delta) {
    selected[r] = delta > 0;
    for (std::size_t o = 0; o < n; ++o) {
      if (cfg.orthogonal[r][o]) forbidden[o] += delta;
    }
    for (std::size_t b : bases_of[r]) covered[b] += delta;
  };

  auto recurse = [&](auto&& self) -> bool {
    std::size_t best = m;
    std::size_t best_count = n + 1;
    for (std::size_t b = 0; b < m; ++b) {
      if (covered[b]) continue;
      std::size_t count = 0;
      for (std::size_t r : cfg.bases[b]) count += forbidden[r] == 0;
      if (count < best_count) {
        best = b;
        best_count = count;
      }
    }
    if (best == m) return true;
    if (first_descent) res.order.push_back(best);
    if (best_count == 0) {
      first_descent = false;
      return false;
    }
    for (std::size_t r : cfg.bases[best]) {
      if (forbidden[r]) continue;
      ++res.nodes;
      select(r, +1);
      if (self(self)) return true;
      select(r, -1);
    }
    first_descent = false;
    return false;
  };

  res.found = recurse(recurse);
  if (res.found) {
    for (std::size_t r = 0; r < n; ++r) {
      if (selected[r]) res.selection.push_back(r);
    }
    for (const auto& b : cfg.bases) {
      const auto hits = std::count_if(b.begin(), b.end(), [&](std::size_t r) { return selected[r]; });
      if (hits != 1) throw Error(ErrorCode::Malformed, "internal: selection does not meet a basis exactly once");
    }
  }
  return res;
}

SelectionFilterReport selection_to_filter_check(const RayConfig& cfg, const std::vector<std::size_t>& selection) {
  SelectionFilterReport rep;
  const std::size_t d = cfg.dim;
  std::vector<Subspace> family;
  std::unordered_map<std::string, std::size_t> index;
  auto add = [&](Subspace s) {
    if (index.emplace(s.key(), family.size()).second) family.push_back(std::move(s));
  };
  for (std::size_t r : selection) {
    if (r >= cfg.rays.size()) throw Error(ErrorCode::Malformed, "selection index out of range");
    add(Subspace::span(d, {cfg.rays[r]}));
  }
  for (const auto& b : cfg.bases) {
    for (std::size_t mask = 1; mask < (std::size_t{1} << b.size()); ++mask) {
      std::vector<Vector> vs;
      for (std::size_t i = 0; i < b.size(); ++i) {
        if ((mask >> i) & 1U) vs.push_back(cfg.rays[b[i]]);
      }
      add(Subspace::span(d, vs));
    }
  }
  rep.family_size = family.size();

  std::vector<const Subspace*> up;
  std::vector<bool> in_up(family.size(), false);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t r : selection) {
      if (Subspace::span(d, {cfg.rays[r]}).leq(family[i])) {
        in_up[i] = true;
        up.push_back(&family[i]);
        break;
      }
    }
  }
  rep.upset_size = up.size();
  for (const auto* x : up) {
    for (const auto* y : up) {
      ++rep.pairs_checked;
      const Subspace p = sub_sasaki(*x, *y);
      const auto it = index.find(p.key());
      if (!p.is_zero() && it == index.end()) {
        ++rep.pairs_undefined;
        continue;
      }
      if (p.is_zero() || !in_up[it->second]) {
        if (rep.ok) rep.witness = std::make_pair(*x, *y);
        rep.ok = false;
      }
    }
  }
  return rep;
}

std::vector<Vector> cabello_rays() {
  static const int raw[18][4] = {
      {0, 0, 0, 1},  {0, 0, 1, 0},  {1, 1, 0, 0},   {1, -1, 0, 0},  {0, 1, 0, 0},  {1, 0, 1, 0},
      {1, 0, -1, 0}, {1, -1, 1, -1}, {1, -1, -1, 1}, {0, 0, 1, 1},   {1, 1, 1, 1},  {0, 1, 0, -1},
      {1, 0, 0, 1},  {1, 0, 0, -1}, {0, 1, -1, 0},  {1, 1, -1, 1},  {1, 1, 1, -1}, {-1, 1, 1, 1},
  };
  std::vector<Vector> out;
  for (const auto& r : raw) out.push_back(Vector{r[0], r[1], r[2], r[3]});
  return out;
}

std::string certificate_json(const RayConfig& cfg, const SearchResult& r) {
  nlohmann::ordered_json j;
  j["dim"] = cfg.dim;
  auto rays = nlohmann::ordered_json::array();
  for (const auto& v : cfg.rays) {
    auto row = nlohmann::ordered_json::array();
    for (const auto& s : v) row.push_back(s.to_string());
    rays.push_back(row);
  }
  j["rays"] = rays;
  j["bases"] = cfg.bases;
  j["branching"] = "fewest admissible rays first, ties to lowest basis index; rays in index order";
  j["order"] = r.order;
  j["nodes"] = r.nodes;
  j["result"] = r.found ? "Selection" : "NoSelection";
  if (r.found) j["selection"] = r.selection;
  j["scope"] = "finite configuration only: NoSelection certifies this finite set of bases";
  return j.dump(2) + "\n";
}

}  // namespace sasaki
