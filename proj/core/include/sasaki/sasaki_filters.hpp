#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sasaki/measurements.hpp"
#include "sasaki/oml.hpp"

namespace sasaki {

class SfLattice;

/// An upward-closed, &-stable, non-empty element set. Proper iff it omits bot.
class SasakiFilter {
 public:
  const FiniteOml& base() const noexcept { return *base_; }
  const ElementSet& members() const noexcept { return members_; }
  bool contains(Element e) const noexcept { return members_.contains(e); }
  std::size_t size() const noexcept { return members_.size(); }
  bool proper() const noexcept { return !members_.contains(base_->bot()); }
  bool operator==(const SasakiFilter& o) const { return base_ == o.base_ && members_ == o.members_; }

 private:
  friend SasakiFilter make_filter(const FiniteOml&, ElementSet);
  friend SasakiFilter generate_filter(const FiniteOml&, const ElementSet&);
  friend SasakiFilter principal_filter(const FiniteOml&, Element);
  friend SfLattice enumerate_filters(const FiniteOml&, std::size_t, std::size_t);
  SasakiFilter(const FiniteOml* base, ElementSet members) : base_(base), members_(std::move(members)) {}
  const FiniteOml* base_;
  ElementSet members_;
};

enum class FilterDefect { None, Empty, NotUpwardClosed, NotSasakiStable };

struct FilterCheck {
  FilterDefect defect = FilterDefect::None;
  /// NotUpwardClosed: x in S, x <= y, y not in S.
  /// NotSasakiStable: x, y in S, x & y not in S.
  Element x = 0;
  Element y = 0;
  bool ok() const noexcept { return defect == FilterDefect::None; }
};

FilterCheck is_sasaki_filter(const FiniteOml& L, const ElementSet& s);

/// Throws Error(NotAFilter) when `s` fails is_sasaki_filter.
SasakiFilter make_filter(const FiniteOml& L, ElementSet s);

SasakiFilter principal_filter(const FiniteOml& L, Element x);

/// Least Sasaki filter containing `seed`; generate_filter({}) = {top}.
SasakiFilter generate_filter(const FiniteOml& L, const ElementSet& seed);

/// All Sasaki filters of a lattice, ordered by reverse inclusion.
class SfLattice {
 public:
  const FiniteOml& base() const noexcept { return *base_; }
  /// Canonical order: by size, then member list.
  const std::vector<SasakiFilter>& filters() const noexcept { return filters_; }
  std::size_t size() const noexcept { return filters_.size(); }
  /// F1 <= F2 in SF(L) iff F2 is a subset of F1.
  bool leq(std::size_t i, std::size_t j) const;
  std::optional<std::size_t> index_of(const ElementSet& members) const;
  std::size_t greatest() const;  // {top}
  std::size_t least() const;     // L itself

 private:
  friend SfLattice enumerate_filters(const FiniteOml&, std::size_t, std::size_t);
  const FiniteOml* base_ = nullptr;
  std::vector<SasakiFilter> filters_;
};

/// Enumerates up-sets by their minimal antichains and keeps the &-stable
/// ones. `jobs` > 1 splits the search by first antichain element.
SfLattice enumerate_filters(const FiniteOml& L, std::size_t cap = enumeration_cap(), std::size_t jobs = 1);

/// Join in SF(L): intersection. Empty family gives L.
SasakiFilter sf_join(const FiniteOml& L, const std::vector<SasakiFilter>& family);
/// Meet in SF(L): filter generated by the union. Empty family gives {top}.
SasakiFilter sf_meet(const FiniteOml& L, const std::vector<SasakiFilter>& family);

/// Atoms of SF(L): maximal proper filters (the partial states).
std::vector<SasakiFilter> sf_atoms(const SfLattice& sfl);

struct PrincipalTraceReport {
  bool is_filter = false;
  bool all_traces_principal = false;
  /// First FBA (index into the supplied list) whose trace is not principal.
  std::optional<std::size_t> witness_fba;
  bool consistent() const noexcept { return is_filter == all_traces_principal; }
};

/// Whether S ∩ B is a principal filter of B, for every B in `fbas`.
PrincipalTraceReport check_principal_trace(const FiniteOml& L, const ElementSet& s,
                                           const std::vector<BooleanSubalgebra>& fbas);

/// Least element of S ∩ B when that trace is a principal filter of B.
std::optional<Element> principal_trace(const FiniteOml& L, const ElementSet& s, const BooleanSubalgebra& b);

struct EmbeddingReport {
  bool injective = true;
  bool order_preserving = true;
  /// (x v y)↑ = x↑ ∩ y↑ for all pairs.
  bool join_preserving = true;
  /// (x ^ y)↑ = sf_meet(x↑, y↑) for all pairs; reported, not asserted.
  bool meet_preserving = true;
  std::optional<std::pair<Element, Element>> meet_counterexample;
  std::size_t pairs_checked = 0;
};

EmbeddingReport embed_up_properties(const FiniteOml& L);

}  // namespace sasaki
