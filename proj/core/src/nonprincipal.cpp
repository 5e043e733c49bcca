#include "sasaki/nonprincipal.hpp"

#include <unordered_set>

#include "sasaki/error.hpp"

namespace sasaki {

NonprincipalReport nonprincipal_construction(std::size_t d) {
  if (d < 3) throw Error(ErrorCode::DimTooSmall, "construction needs dimension at least 3");
  NonprincipalReport r;
  r.dim = d;
  for (std::size_t i = 0; i < d; ++i) {
    Vector v(d);
    v[0] = 1;
    if (i > 0) v[i] = 1;
    r.f.push_back(std::move(v));
  }
  r.inner_products.assign(d, std::vector<Scalar>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      r.inner_products[i][j] = inner(r.f[i], r.f[j]);
      if (r.inner_products[i][j].is_zero()) r.all_nonorthogonal = false;
    }
    r.g.push_back(sub_ortho(Subspace::span(d, {r.f[i]})));
    if (r.g.back().rank() != d - 1) r.coatoms = false;
  }

  const Subspace full = Subspace::full(d);
  std::vector<Subspace> members = r.g;
  members.push_back(full);
  auto in_filter = [&](const Subspace& s) {
    for (const auto& m : members) {
      if (s == m) return true;
    }
    return false;
  };
  for (std::size_t i = 0; i < members.size() && r.sasaki_stable; ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      const Subspace p = sub_sasaki(members[i], members[j]);
      // Distinct G's must land exactly on the second argument.
      const bool ok = (i != j && i < d && j < d) ? p == members[j] : in_filter(p);
      if (!ok) {
        r.sasaki_stable = false;
        r.stability_witness = std::make_pair(i, j);
        break;
      }
    }
  }

  r.meet_all = full;
  for (const auto& g : r.g) r.meet_all = sub_meet(r.meet_all, g);
  r.meet_is_zero = r.meet_all.is_zero();
  return r;
}

namespace {

std::vector<Subspace> probe_pool(std::size_t d) {
  std::vector<Subspace> pool;
  auto add = [&](Vector v) { pool.push_back(Subspace::span(d, {std::move(v)})); };
  for (std::size_t i = 0; i < d; ++i) {
    Vector v(d);
    v[i] = 1;
    add(v);
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      for (long s : {1L, -1L}) {
        Vector v(d);
        v[i] = 1;
        v[j] = s;
        add(v);
      }
    }
  }
  return pool;
}

}  // namespace

ProbeReport probe_atom_forcing(const Subspace& a, const Subspace& x, const ProbeOptions& opts) {
  if (a.ambient_dim() != x.ambient_dim()) throw Error(ErrorCode::DimMismatch, "atom and other differ in dimension");
  const std::size_t d = a.ambient_dim();
  if (d < 3) throw Error(ErrorCode::DimTooSmall, "probe needs dimension at least 3");
  if (a.rank() != 1) throw Error(ErrorCode::PrecondViolated, "atom must be a ray");
  if (a.leq(x)) throw Error(ErrorCode::PrecondViolated, "atom lies below the other element");

  ProbeReport r;
  std::vector<Subspace> members{a, x, Subspace::full(d)};
  std::unordered_set<std::string> seen;
  for (const auto& m : members) seen.insert(m.key());
  r.members = members.size();
  if (opts.depth_cap == 0) return r;

  const std::vector<Subspace> pool = opts.use_pool ? probe_pool(d) : std::vector<Subspace>{};
  std::size_t fresh_from = 0;  // members[fresh_from..] were added last round
  for (std::size_t round = 1; round <= opts.depth_cap; ++round) {
    r.rounds = round;
    std::vector<Subspace> added;
    bool full_up = false;
    auto offer = [&](Subspace s) {
      if (full_up) return;
      std::string key = s.key();
      if (seen.contains(key)) return;
      if (members.size() + added.size() >= opts.member_cap) {
        full_up = true;
        return;
      }
      seen.insert(std::move(key));
      added.push_back(std::move(s));
    };
    const std::size_t n = members.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i < fresh_from && j < fresh_from) continue;
        const Subspace p = sub_sasaki(members[i], members[j]);
        if (p.is_zero()) {
          r.outcome = ProbeOutcome::ReachedBot;
          r.witness = std::make_pair(members[i], members[j]);
          r.members = n + added.size();
          return r;
        }
        offer(p);
        if (i < j) offer(sub_join(members[i], members[j]));
      }
    }
    for (std::size_t i = fresh_from; i < n; ++i) {
      for (const auto& p : pool) offer(sub_join(members[i], p));
    }
    fresh_from = n;
    members.insert(members.end(), added.begin(), added.end());
    r.members = members.size();
    if (full_up) {
      r.capped = true;
      break;
    }
    if (added.empty()) {
      r.saturated = true;
      break;
    }
  }
  return r;
}

bool dim2_choice_check(const std::vector<std::pair<Subspace, Subspace>>& pairs, const std::vector<Subspace>& choice) {
  for (const auto& [p, q] : pairs) {
    if (p.ambient_dim() != 2 || q.ambient_dim() != 2 || p.rank() != 1 || q.rank() != 1) {
      throw Error(ErrorCode::Malformed, "pairs must consist of lines in a 2-dimensional space");
    }
    if (sub_ortho(p) != q) throw Error(ErrorCode::Malformed, p.to_string() + " and " + q.to_string() + " are not orthogonal");
  }
  for (const auto& c : choice) {
    bool found = false;
    for (const auto& [p, q] : pairs) found = found || c == p || c == q;
    if (!found) throw Error(ErrorCode::Malformed, "choice " + c.to_string() + " is not in any pair");
  }
  std::vector<Subspace> members = choice;
  members.push_back(Subspace::full(2));
  // Above a line in the plane sit only the line and the full space, so
  // upward closure holds; only &-stability can fail.
  for (const auto& u : members) {
    for (const auto& v : members) {
      const Subspace p = sub_sasaki(u, v);
      bool in = false;
      for (const auto& m : members) in = in || p == m;
      if (!in) return false;
    }
  }
  return true;
}

std::string to_string(ProbeOutcome o) { return o == ProbeOutcome::ReachedBot ? "ReachedBot" : "Inconclusive"; }

}  // namespace sasaki
