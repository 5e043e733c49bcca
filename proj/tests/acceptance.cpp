// Acceptance gate: one line per criterion. Each line combines the library
// check, an independent oracle recomputation and a wall-clock bound.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sasaki/constructors.hpp"
#include "sasaki/descriptions.hpp"
#include "sasaki/ks_search.hpp"
#include "sasaki/nonprincipal.hpp"
#include "sasaki/reproduce.hpp"

using namespace sasaki;

namespace {

struct Criterion {
  int number;
  std::string id;
  double bound_seconds;
  std::function<bool(std::string&)> oracle_check;
};

std::set<oracle::Subset> maximal_proper(const OmlTables& t, Element bot) {
  const auto fs = oracle::sasaki_filters(t);
  std::set<oracle::Subset> out;
  for (const auto& f : fs) {
    if (oracle::in(f, bot)) continue;
    bool maximal = true;
    for (const auto& g : fs) {
      if (g != f && !oracle::in(g, bot) && std::includes(g.begin(), g.end(), f.begin(), f.end())) maximal = false;
    }
    if (maximal) out.insert(f);
  }
  return out;
}

std::size_t proper_count(const FiniteOml& L) {
  const auto fs = oracle::sasaki_filters(to_tables(L));
  return static_cast<std::size_t>(
      std::count_if(fs.begin(), fs.end(), [&](const oracle::Subset& f) { return !oracle::in(f, L.bot()); }));
}

bool oml_axioms(std::string& note) {
  const bool ok = oracle::is_oml(to_tables(mo(2))) && oracle::is_oml(to_tables(boolean_algebra(3))) &&
                  oracle::is_oml(to_tables(from_greechie(parse_greechie("a b c\nc d e\n")))) &&
                  !oracle::is_oml(hexagon_tables());
  note = "oracle accepts MO(2), 2^3, bowtie and rejects O6";
  return ok;
}

bool refinement(std::string& note) {
  std::size_t pairs = 0;
  for (const auto& L : {mo(3), boolean_algebra(3)}) {
    const auto t = to_tables(L);
    const auto ms = oracle::measurements(t);
    for (const auto& fine : ms) {
      for (const auto& coarse : ms) {
        bool finer = true;
        for (Element e : fine) {
          const auto above = std::count_if(coarse.begin(), coarse.end(), [&](Element c) { return oracle::leq(t, e, c); });
          if (above == 0) finer = false;
          if (above > 1) return false;
        }
        pairs += finer ? 1 : 0;
      }
    }
  }
  note = std::to_string(pairs) + " finer pairs, each outcome below exactly one coarser outcome";
  return pairs > 0;
}

bool e1_e2(std::string& note) {
  const FiniteOml lm2 = mo(2);
  const FiniteOml lb2 = boolean_algebra(2);
  const DescriptionSpace m2(lm2);
  const DescriptionSpace b2(lb2);
  const std::uint64_t t1 = candidate_table_count(m2);
  const std::uint64_t t2 = candidate_table_count(b2);
  note = "tables MO(2) " + std::to_string(t1) + ", 2^2 " + std::to_string(t2);
  return t1 == 9 && t2 == 3 && check_e1_iff_e2(m2).holds() && check_e1_iff_e2(b2).holds();
}

bool roundtrip(std::string& note) {
  bool ok = true;
  note = "proper filters (oracle)";
  for (const auto& L : {mo(2), mo(3), boolean_algebra(3)}) {
    const std::size_t n = proper_count(L);
    const DescriptionSpace space(L);
    ok = ok && enumerate_descriptions(space).size() == n;
    note += " " + std::to_string(n);
  }
  return ok;
}

bool principal_trace_oracle(std::string& note) {
  const FiniteOml L = mo(2);
  const auto fbas = enumerate_fbas(L);
  const auto fs = oracle::sasaki_filters(to_tables(L));
  std::size_t agree = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << L.size()); ++mask) {
    const auto s = oracle::members_of(mask, L.size());
    const auto r = check_principal_trace(L, ElementSet(L.size(), s), fbas);
    if (r.all_traces_principal == (fs.count(s) == 1)) ++agree;
  }
  note = std::to_string(agree) + "/63 subsets of MO(2) agree with the filter oracle";
  return agree == 63;
}

bool sf_structure(std::string& note) {
  const FiniteOml L = mo(2);
  const auto t = to_tables(L);
  const auto fs = oracle::sasaki_filters(t);
  const auto atoms = maximal_proper(t, L.bot());
  bool atomic = true;
  for (const auto& f : fs) {
    if (oracle::in(f, L.bot())) continue;
    atomic = atomic && std::any_of(atoms.begin(), atoms.end(), [&](const oracle::Subset& a) {
               return std::includes(a.begin(), a.end(), f.begin(), f.end());
             });
  }
  note = std::to_string(fs.size()) + " filters, " + std::to_string(atoms.size()) + " maximal proper";
  return fs.size() == 10 && atoms.size() == 4 && atomic;
}

bool up_embedding(std::string& note) {
  const FiniteOml L = mo(3);
  bool ok = true;
  for (Element x = 0; x < L.size(); ++x) {
    for (Element y = 0; y < L.size(); ++y) {
      const ElementSet ux = L.up_set(x), uy = L.up_set(y);
      if (x != y && ux == uy) ok = false;
      if (L.leq(x, y) && !uy.is_subset_of(ux)) ok = false;
      if (L.up_set(L.join(x, y)) != (ux & uy)) ok = false;
    }
  }
  note = "MO(3) checked by direct up-set comparison";
  return ok;
}

bool dim2(std::string& note) {
  bool ok = true;
  for (std::size_t k = 1; k <= 4; ++k) {
    const FiniteOml L = mo(k);
    const auto atoms = maximal_proper(to_tables(L), L.bot());
    ok = ok && atoms.size() == (std::size_t{1} << k);
    for (const auto& a : atoms) {
      for (std::size_t p = 0; p < k; ++p) {
        const Element x = static_cast<Element>(1 + 2 * p);
        ok = ok && (oracle::in(a, x) != oracle::in(a, L.ortho(x)));
      }
    }
  }
  note = "oracle: MO(k) has 2^k maximal proper filters, one atom per pair, k = 1..4";
  return ok;
}

bool nonprincipal(std::string& note) {
  bool ok = true;
  for (std::size_t d = 3; d <= 5; ++d) {
    const auto r = nonprincipal_construction(d);
    Subspace meet = Subspace::full(d);
    for (std::size_t i = 0; i < d; ++i) {
      meet = sub_meet(meet, r.g[i]);
      for (std::size_t j = 0; j < d; ++j) {
        if (i != j) ok = ok && projection_image(r.g[i], r.g[j]) == r.g[j];
      }
    }
    ok = ok && meet.is_zero();
  }
  note = "projection images and common meet recomputed for d = 3..5";
  return ok;
}

bool sasaki_projection(std::string& note) {
  auto v = [](long a, long b, long c) { return Vector{Scalar(a), Scalar(b), Scalar(c)}; };
  const Subspace e0 = Subspace::span(3, {v(1, 0, 0)});
  const Subspace d = Subspace::span(3, {v(1, 1, 0)});
  const Subspace p = Subspace::span(3, {v(0, 1, 0), v(1, 0, 1)});
  // Projection of (1,0,0) onto p is (1,0,1)/2.
  note = "hand-computed projections in Q^3";
  return sub_sasaki(d, e0) == e0 && sub_sasaki(e0, p) == Subspace::span(3, {v(1, 0, 1)}) &&
         sub_sasaki(e0, Subspace::span(3, {v(0, 1, 0)})).is_zero();
}

bool ks(std::string& note) {
  const auto cfg = build_config(cabello_rays(), 4);
  std::uint64_t tried = 0;
  const bool exists = oracle::product_space_selection_exists(cfg, &tried);
  note = "product-space oracle tried " + std::to_string(tried) + " choices";
  return !exists && cfg.bases.size() == 9;
}

bool atom_forcing(std::string& note) {
  // The orthogonal pair must reach 0 at once; the oracle has nothing more to
  // say about non-orthogonal pairs, which the library check reports.
  auto v = [](long a, long b, long c) { return Vector{Scalar(a), Scalar(b), Scalar(c)}; };
  const auto r = probe_atom_forcing(Subspace::span(3, {v(1, 0, 0)}), Subspace::span(3, {v(0, 1, 0)}));
  note = "orthogonal control pair " + to_string(r.outcome);
  return r.outcome == ProbeOutcome::ReachedBot;
}

std::string summary(const CheckResult& r) {
  for (const auto& [k, val] : r.facts) {
    if (k == "error") return "error " + val;
  }
  if (r.id == "atom-forcing") {
    std::string s;
    for (const auto& [k, val] : r.facts) {
      if (k == "reached_bot" || k == "inconclusive" || k == "inconclusive_capped") s += k + "=" + val + " ";
    }
    return s;
  }
  return "";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "oml-axioms", 1, oml_axioms},         {2, "refinement-uniqueness", 1, refinement},
      {3, "e1-iff-e2", 1, e1_e2},               {4, "roundtrip", 5, roundtrip},
      {5, "principal-trace", 5, principal_trace_oracle},
      {6, "sf-structure", 1, sf_structure},     {7, "up-embedding", 1, up_embedding},
      {8, "dim2", 1, dim2},                     {9, "nonprincipal", 1, nonprincipal},
      {10, "sasaki-projection", 10, sasaki_projection},
      {11, "ks-obstruction", 5, ks},            {12, "atom-forcing", 10, atom_forcing},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const CheckResult r = run_check(c.id);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string note;
    bool oracle_ok = false;
    try {
      oracle_ok = c.oracle_check(note);
    } catch (const Error& e) {
      note = std::string("oracle raised ") + e.what();
    }
    const bool in_time = secs <= c.bound_seconds;
    const bool pass = r.pass && oracle_ok && in_time;
    failures += pass ? 0 : 1;
    std::printf("[%s] criterion %2d %-22s library=%s oracle=%s time=%.2fs/%.0fs  %s%s\n", pass ? "PASS" : "FAIL",
                c.number, c.id.c_str(), r.pass ? "ok" : "FAIL", oracle_ok ? "ok" : "FAIL", secs, c.bound_seconds,
                note.c_str(), summary(r).empty() ? "" : ("; " + summary(r)).c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
