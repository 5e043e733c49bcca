#include "sasaki/sasaki_filters.hpp"

#include <algorithm>
#include <thread>
#include <unordered_set>

namespace sasaki {

namespace {

ElementSet upward_closure(const FiniteOml& L, const ElementSet& s) {
  ElementSet out(L.size());
  s.for_each([&](Element x) { out |= L.up_set(x); });
  return out;
}

bool sasaki_stable(const FiniteOml& L, const ElementSet& s) {
  const auto members = s.members();
  for (Element x : members) {
    for (Element y : members) {
      if (!s.contains(L.sasaki_project(x, y))) return false;
    }
  }
  return true;
}

}  // namespace

FilterCheck is_sasaki_filter(const FiniteOml& L, const ElementSet& s) {
  if (s.universe() != L.size()) throw Error(ErrorCode::BaseMismatch, "element set has the wrong universe");
  if (s.empty()) return {FilterDefect::Empty, 0, 0};
  const auto members = s.members();
  for (Element x : members) {
    if (!L.up_set(x).is_subset_of(s)) {
      const Element y = (L.up_set(x) - s).members().front();
      return {FilterDefect::NotUpwardClosed, x, y};
    }
  }
  for (Element x : members) {
    for (Element y : members) {
      if (!s.contains(L.sasaki_project(x, y))) return {FilterDefect::NotSasakiStable, x, y};
    }
  }
  return {};
}

SasakiFilter make_filter(const FiniteOml& L, ElementSet s) {
  const FilterCheck check = is_sasaki_filter(L, s);
  if (!check.ok()) {
    throw Error(ErrorCode::NotAFilter, s.to_string() + " fails at (" + L.label(check.x) + ", " +
                                           L.label(check.y) + ")");
  }
  return SasakiFilter(&L, std::move(s));
}

SasakiFilter principal_filter(const FiniteOml& L, Element x) {
  L.check_element(x);
  return SasakiFilter(&L, L.up_set(x));
}

SasakiFilter generate_filter(const FiniteOml& L, const ElementSet& seed) {
  ElementSet s = upward_closure(L, seed);
  s.insert(L.top());
  // Semi-naive fixpoint: only pairs involving a newly added member can
  // produce something new.
  std::vector<Element> pending = s.members();
  while (!pending.empty()) {
    const Element x = pending.back();
    pending.pop_back();
    const auto current = s.members();
    for (Element y : current) {
      for (Element z : {L.sasaki_project(x, y), L.sasaki_project(y, x)}) {
        if (s.contains(z)) continue;
        const ElementSet fresh = L.up_set(z) - s;
        s |= fresh;
        fresh.for_each([&](Element w) { pending.push_back(w); });
      }
    }
  }
  return SasakiFilter(&L, std::move(s));
}

bool SfLattice::leq(std::size_t i, std::size_t j) const {
  return filters_.at(j).members().is_subset_of(filters_.at(i).members());
}

std::optional<std::size_t> SfLattice::index_of(const ElementSet& members) const {
  for (std::size_t i = 0; i < filters_.size(); ++i) {
    if (filters_[i].members() == members) return i;
  }
  return std::nullopt;
}

std::size_t SfLattice::greatest() const {
  ElementSet top(base_->size());
  top.insert(base_->top());
  return *index_of(top);
}

std::size_t SfLattice::least() const { return *index_of(base_->all()); }

SfLattice enumerate_filters(const FiniteOml& L, std::size_t cap, std::size_t jobs) {
  if (L.size() > cap) {
    throw Error(ErrorCode::TooLarge, "lattice has " + std::to_string(L.size()) +
                                         " elements, enumeration cap is " + std::to_string(cap));
  }
  const std::size_t n = L.size();
  // Each non-empty antichain A determines the distinct up-set ↑A; antichains
  // are grown in increasing index order.
  auto search_from = [&](Element first, std::vector<ElementSet>& out) {
    ElementSet up = L.up_set(first);
    ElementSet blocked = L.up_set(first) | L.down_set(first);
    auto recurse = [&](auto&& self, Element next, const ElementSet& upset, const ElementSet& blk) -> void {
      if (sasaki_stable(L, upset)) out.push_back(upset);
      for (Element e = next; e < n; ++e) {
        if (blk.contains(e)) continue;
        self(self, e + 1, upset | L.up_set(e), blk | L.up_set(e) | L.down_set(e));
      }
    };
    recurse(recurse, first + 1, up, blocked);
  };

  std::vector<ElementSet> found;
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  if (jobs == 1) {
    for (Element first = 0; first < n; ++first) search_from(first, found);
  } else {
    std::vector<std::vector<ElementSet>> parts(jobs);
    {
      std::vector<std::jthread> workers;
      for (std::size_t w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
          for (Element first = static_cast<Element>(w); first < n; first += static_cast<Element>(jobs)) {
            search_from(first, parts[w]);
          }
        });
      }
    }
    for (auto& p : parts) found.insert(found.end(), p.begin(), p.end());
  }
  std::sort(found.begin(), found.end(), canonical_less);

  SfLattice sfl;
  sfl.base_ = &L;
  sfl.filters_.reserve(found.size());
  for (auto& f : found) sfl.filters_.push_back(SasakiFilter(&L, std::move(f)));
  return sfl;
}

SasakiFilter sf_join(const FiniteOml& L, const std::vector<SasakiFilter>& family) {
  ElementSet acc = L.all();
  for (const auto& f : family) {
    if (&f.base() != &L) throw Error(ErrorCode::BaseMismatch, "filter over a different lattice");
    acc &= f.members();
  }
  return make_filter(L, std::move(acc));
}

SasakiFilter sf_meet(const FiniteOml& L, const std::vector<SasakiFilter>& family) {
  ElementSet acc(L.size());
  for (const auto& f : family) {
    if (&f.base() != &L) throw Error(ErrorCode::BaseMismatch, "filter over a different lattice");
    acc |= f.members();
  }
  return generate_filter(L, acc);
}

std::vector<SasakiFilter> sf_atoms(const SfLattice& sfl) {
  std::vector<const SasakiFilter*> proper;
  for (const auto& f : sfl.filters()) {
    if (f.proper()) proper.push_back(&f);
  }
  std::vector<SasakiFilter> out;
  for (const auto* f : proper) {
    const bool maximal = std::none_of(proper.begin(), proper.end(), [&](const SasakiFilter* g) {
      return g != f && f->members().is_subset_of(g->members());
    });
    if (maximal) out.push_back(*f);
  }
  return out;
}

std::optional<Element> principal_trace(const FiniteOml& L, const ElementSet& s, const BooleanSubalgebra& b) {
  const ElementSet trace = s & b.elements();
  if (trace.empty()) return std::nullopt;
  const Element m = L.meet_of(trace);
  if (!trace.contains(m)) return std::nullopt;
  if (trace != (L.up_set(m) & b.elements())) return std::nullopt;
  return m;
}

PrincipalTraceReport check_principal_trace(const FiniteOml& L, const ElementSet& s,
                                           const std::vector<BooleanSubalgebra>& fbas) {
  PrincipalTraceReport r;
  r.is_filter = is_sasaki_filter(L, s).ok();
  r.all_traces_principal = true;
  for (std::size_t i = 0; i < fbas.size(); ++i) {
    if (!principal_trace(L, s, fbas[i])) {
      r.all_traces_principal = false;
      r.witness_fba = i;
      break;
    }
  }
  return r;
}

EmbeddingReport embed_up_properties(const FiniteOml& L) {
  EmbeddingReport r;
  const std::size_t n = L.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      ++r.pairs_checked;
      const ElementSet& ux = L.up_set(x);
      const ElementSet& uy = L.up_set(y);
      if (x != y && ux == uy) r.injective = false;
      if (L.leq(x, y) && !uy.is_subset_of(ux)) r.order_preserving = false;
      if (L.up_set(L.join(x, y)) != (ux & uy)) r.join_preserving = false;
      if (L.up_set(L.meet(x, y)) != generate_filter(L, ux | uy).members()) {
        if (r.meet_preserving) r.meet_counterexample = std::make_pair(x, y);
        r.meet_preserving = false;
      }
    }
  }
  return r;
}

}  // namespace sasaki
