#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sasaki/measurements.hpp"
#include "sasaki/sasaki_filters.hpp"

namespace sasaki {

/// The enumerated boolean subalgebras of one lattice, with the inclusion
/// relation and the projections pi_B tabulated. Descriptions are tables
/// indexed by position in `fbas()`.
class DescriptionSpace {
 public:
  explicit DescriptionSpace(const FiniteOml& L, std::size_t cap = enumeration_cap());

  const FiniteOml& base() const noexcept { return *base_; }
  const std::vector<BooleanSubalgebra>& fbas() const noexcept { return fbas_; }
  std::size_t size() const noexcept { return fbas_.size(); }
  bool included(std::size_t b1, std::size_t b2) const { return included_[b1 * fbas_.size() + b2] != 0; }
  Element project(std::size_t b, Element x) const { return projection_[b * base_->size() + x]; }
  /// Position of the subalgebra with exactly these members, if enumerated.
  std::optional<std::size_t> find(const ElementSet& members) const;
  std::size_t index_of_sem(Element x) const;

 private:
  const FiniteOml* base_;
  std::vector<BooleanSubalgebra> fbas_;
  std::vector<std::uint8_t> included_;
  std::vector<Element> projection_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> lookup_;
};

/// A total assignment B -> d(B) over a DescriptionSpace. The space must
/// outlive the description.
class PartialDescription {
 public:
  PartialDescription(const DescriptionSpace& space, std::vector<Element> values);

  const DescriptionSpace& space() const noexcept { return *space_; }
  const std::vector<Element>& values() const noexcept { return values_; }
  Element operator()(std::size_t fba) const { return values_.at(fba); }
  /// Measurement view: the atoms of B below d(B).
  std::vector<Element> outcomes(std::size_t fba) const;
  bool operator==(const PartialDescription& o) const {
    return space_ == o.space_ && values_ == o.values_;
  }

 private:
  const DescriptionSpace* space_;
  std::vector<Element> values_;
};

enum class DescriptionDefect { None, ValueNotInSubalgebra, ValueIsBot, ConditionFails };

/// Outcome of validate_e1 / validate_e2. For ConditionFails, (b1, b2) is the
/// first violating pair in canonical order with the values involved.
struct ConditionReport {
  DescriptionDefect defect = DescriptionDefect::None;
  std::size_t b1 = 0;
  std::size_t b2 = 0;
  Element d1 = 0;
  Element projected = 0;
  bool ok() const noexcept { return defect == DescriptionDefect::None; }
};

/// B1 ⊆ B2 implies d(B1) = pi_{B1} d(B2).
ConditionReport validate_e1(const PartialDescription& d);
/// d(B1) <= pi_{B1} d(B2) for all pairs.
ConditionReport validate_e2(const PartialDescription& d);

/// d(⟦d(B)⟧) = d(B) for every B.
bool sem_lemma_holds(const PartialDescription& d);

struct EquivalenceReport {
  std::uint64_t tables = 0;
  std::uint64_t e1_pass = 0;
  std::uint64_t e2_pass = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t lemma_failures = 0;
  bool sampled = false;
  std::optional<std::vector<Element>> first_mismatch;
  bool holds() const noexcept { return mismatches == 0 && lemma_failures == 0; }
};

/// Runs E1 and E2 on every table d(B) ∈ B \ {bot}; above `table_cap` tables,
/// `table_cap` uniformly sampled tables from a seeded generator instead.
EquivalenceReport check_e1_iff_e2(const DescriptionSpace& space, std::uint64_t table_cap = 1'000'000,
                                  std::uint64_t seed = 20240601);

/// Number of candidate tables (product of |B| - 1); saturates at UINT64_MAX.
std::uint64_t candidate_table_count(const DescriptionSpace& space);

/// All tables passing E1, in lexicographic table order.
std::vector<PartialDescription> enumerate_descriptions(const DescriptionSpace& space,
                                                       std::uint64_t table_cap = 1'000'000);

/// Image {d(B)}; throws InvalidDescription when d fails E1 or the image is
/// not a proper Sasaki filter.
SasakiFilter description_to_filter(const PartialDescription& d);

/// d_F(B) = min(F ∩ B). Throws ImproperFilter.
PartialDescription filter_to_description(const DescriptionSpace& space, const SasakiFilter& f);

struct RoundTripReport {
  std::size_t filters_checked = 0;
  std::size_t descriptions_checked = 0;
  std::size_t filter_failures = 0;
  std::size_t description_failures = 0;
  bool holds() const noexcept { return filter_failures == 0 && description_failures == 0; }
};

/// Both compositions over every enumerated proper filter and every valid
/// description.
RoundTripReport roundtrip_check(const DescriptionSpace& space, const SfLattice& sfl);

}  // namespace sasaki
