#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sasaki/element_set.hpp"
#include "sasaki/error.hpp"

namespace sasaki {

/// Raw, unvalidated description of a finite bounded involution poset.
/// `leq[i * n + j]` is true iff i <= j.
struct OmlTables {
  std::size_t n = 0;
  std::vector<std::uint8_t> leq;
  std::vector<Element> ortho;
  std::vector<std::string> labels;  // empty, or exactly n entries
};

enum class OmlViolationKind {
  Malformed,
  NotAPoset,
  NotALattice,
  NotAnOrthocomplementation,
  NotOrthomodular,
};

std::string_view to_string(OmlViolationKind kind);

/// First violated axiom found by verify_oml, with a witnessing pair.
struct OmlViolation {
  OmlViolationKind kind = OmlViolationKind::Malformed;
  Element x = 0;
  Element y = 0;
  std::string detail;
};

/// A validated finite orthomodular lattice. Immutable after construction;
/// meet and join are tabulated at validation time.
class FiniteOml {
 public:
  std::size_t size() const noexcept { return n_; }
  Element bot() const noexcept { return bot_; }
  Element top() const noexcept { return top_; }

  bool leq(Element x, Element y) const noexcept { return up_[x].contains(y); }
  bool less(Element x, Element y) const noexcept { return x != y && leq(x, y); }
  Element ortho(Element x) const noexcept { return ortho_[x]; }
  Element meet(Element x, Element y) const noexcept { return meet_[x * n_ + y]; }
  Element join(Element x, Element y) const noexcept { return join_[x * n_ + y]; }

  /// Sasaki projection x & y = (x v y') ^ y.
  Element sasaki_project(Element x, Element y) const noexcept {
    return meet(join(x, ortho(y)), y);
  }
  /// x = (x ^ y) v (x ^ y').
  bool commutes(Element x, Element y) const noexcept {
    return x == join(meet(x, y), meet(x, ortho(y)));
  }
  bool orthogonal(Element x, Element y) const noexcept { return leq(x, ortho(y)); }

  std::vector<Element> atoms() const;
  /// Pairs (x, y) with x covered by y.
  std::vector<std::pair<Element, Element>> covers() const;

  /// {y : x <= y}
  const ElementSet& up_set(Element x) const noexcept { return up_[x]; }
  const ElementSet& down_set(Element x) const noexcept { return down_[x]; }
  ElementSet all() const { return ElementSet::full(n_); }

  Element meet_of(const ElementSet& s) const;
  Element join_of(const ElementSet& s) const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  std::string label(Element x) const;
  std::optional<Element> find_label(std::string_view label) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<Element>& ortho_table() const noexcept { return ortho_; }

  void check_element(Element x) const;

  bool operator==(const FiniteOml& other) const;

 private:
  friend std::variant<FiniteOml, OmlViolation> verify_oml(const OmlTables& tables);
  FiniteOml() = default;

  std::size_t n_ = 0;
  Element bot_ = 0;
  Element top_ = 0;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<Element> ortho_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  std::vector<std::string> labels_;
};

/// Validates the orthomodular-lattice axioms in order: table shape, partial
/// order, bounds and pairwise meets/joins, orthocomplementation,
/// orthomodular law. Returns the lattice or the first violation.
std::variant<FiniteOml, OmlViolation> verify_oml(const OmlTables& tables);

/// verify_oml, throwing Error(Malformed) naming the violation on failure.
FiniteOml make_oml(const OmlTables& tables);

OmlTables to_tables(const FiniteOml& lattice);

/// Reflexive-transitive closure of a relation given as pairs.
std::vector<std::uint8_t> order_closure(std::size_t n,
                                        const std::vector<std::pair<Element, Element>>& pairs);

enum class RelationForm { Covering, Full };

/// Lattice JSON: {"n", "relation": "covering"|"full", "leq": [[i,j],...],
/// "ortho": [...], "labels": [...]}. Output is deterministic.
std::string to_json(const FiniteOml& lattice, RelationForm form = RelationForm::Covering);
FiniteOml lattice_from_json(const std::string& text);

}  // namespace sasaki
