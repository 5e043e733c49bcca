#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "sasaki/oml.hpp"

namespace sasaki {

/// Default limit on |L| for exhaustive enumeration. The SASAKI_LATTICE_CAP
/// environment variable overrides it.
inline constexpr std::size_t kDefaultEnumerationCap = 64;
std::size_t enumeration_cap();

/// A finite set of non-bot, pairwise orthogonal outcomes whose join is top.
/// Holds a non-owning pointer to its lattice.
class FiniteMeasurement {
 public:
  const FiniteOml& base() const noexcept { return *base_; }
  /// Sorted outcome indices.
  const std::vector<Element>& outcomes() const noexcept { return outcomes_; }
  bool contains(Element e) const;
  bool operator==(const FiniteMeasurement& o) const { return base_ == o.base_ && outcomes_ == o.outcomes_; }

 private:
  friend FiniteMeasurement validate_measurement(const FiniteOml&, std::vector<Element>);
  FiniteMeasurement(const FiniteOml* base, std::vector<Element> outcomes)
      : base_(base), outcomes_(std::move(outcomes)) {}
  const FiniteOml* base_;
  std::vector<Element> outcomes_;
};

/// A boolean subalgebra of a finite lattice (therefore finite).
class BooleanSubalgebra {
 public:
  const FiniteOml& base() const noexcept { return *base_; }
  const ElementSet& elements() const noexcept { return elems_; }
  bool contains(Element e) const noexcept { return elems_.contains(e); }
  std::size_t size() const noexcept { return elems_.size(); }
  /// Atoms of the subalgebra (minimal non-bot members).
  std::vector<Element> atoms() const;
  bool is_subalgebra_of(const BooleanSubalgebra& other) const { return elems_.is_subset_of(other.elems_); }
  bool operator==(const BooleanSubalgebra& o) const { return base_ == o.base_ && elems_ == o.elems_; }

 private:
  friend BooleanSubalgebra make_subalgebra(const FiniteOml&, ElementSet);
  friend BooleanSubalgebra measurement_to_fba(const FiniteMeasurement&);
  friend BooleanSubalgebra sem(const FiniteOml&, Element);
  friend BooleanSubalgebra sem2(const FiniteOml&, Element, Element);
  BooleanSubalgebra(const FiniteOml* base, ElementSet elems) : base_(base), elems_(std::move(elems)) {}
  const FiniteOml* base_;
  ElementSet elems_;
};

/// Validates closure (bot, top, meet, join, ortho) and pairwise
/// commutation; throws Error(Malformed) with the offending elements.
BooleanSubalgebra make_subalgebra(const FiniteOml& L, ElementSet elems);

/// Throws EmptyMeasurement, ContainsBot, NotPairwiseOrthogonal or JoinNotTop.
FiniteMeasurement validate_measurement(const FiniteOml& L, std::vector<Element> outcomes);

/// M <= M': every outcome of M lies below some outcome of M'.
bool finer_than(const FiniteMeasurement& m, const FiniteMeasurement& coarser);

/// e -> the unique outcome of `coarser` above e. Throws NotFiner.
std::map<Element, Element> refinement_map(const FiniteMeasurement& m, const FiniteMeasurement& coarser);

BooleanSubalgebra measurement_to_fba(const FiniteMeasurement& m);
FiniteMeasurement fba_to_measurement(const BooleanSubalgebra& b);

/// Smallest member of B above x.
Element pi_b(const BooleanSubalgebra& b, Element x);

/// {bot, x, x', top}
BooleanSubalgebra sem(const FiniteOml& L, Element x);
/// {top, y, x v y', x', x, y ^ x', y', bot} for x <= y, duplicates merged.
BooleanSubalgebra sem2(const FiniteOml& L, Element x, Element y);

/// All finite measurements, canonically ordered (size, then outcome list).
std::vector<FiniteMeasurement> enumerate_measurements(const FiniteOml& L, std::size_t cap = enumeration_cap());
/// All boolean subalgebras, canonically ordered (size, then member list).
std::vector<BooleanSubalgebra> enumerate_fbas(const FiniteOml& L, std::size_t cap = enumeration_cap());

}  // namespace sasaki
