#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sasaki/subspace.hpp"

namespace sasaki {

/// f_0 = e_0, f_i = e_0 + e_i, G_i = span(f_i)^⊥ in dimension d, and the
/// checks that {full} ∪ {G_i} is a proper Sasaki filter no ray lies under.
struct NonprincipalReport {
  std::size_t dim = 0;
  std::vector<Vector> f;
  std::vector<Subspace> g;
  /// inner_products[i][j] = <f_i, f_j>.
  std::vector<std::vector<Scalar>> inner_products;
  bool all_nonorthogonal = true;
  /// Each G_i is a coatom, so only G_i and the full space lie above it.
  bool coatoms = true;
  /// G_i & G_j = G_j for all i != j, and the pairs with the full space.
  bool sasaki_stable = true;
  std::optional<std::pair<std::size_t, std::size_t>> stability_witness;
  Subspace meet_all = Subspace::zero(0);
  bool meet_is_zero = false;
  bool holds() const noexcept { return all_nonorthogonal && coatoms && sasaki_stable && meet_is_zero; }
};

/// Throws DimTooSmall for d < 3.
NonprincipalReport nonprincipal_construction(std::size_t d);

enum class ProbeOutcome { ReachedBot, Inconclusive };

struct ProbeOptions {
  std::size_t depth_cap = 16;
  /// Saturation stops adding members past this many.
  std::size_t member_cap = 32;
  /// Also join members with e_i and e_i ± e_j; sound since joins only go up.
  bool use_pool = true;
};

struct ProbeReport {
  ProbeOutcome outcome = ProbeOutcome::Inconclusive;
  std::size_t rounds = 0;
  std::size_t members = 0;
  /// Closed under the operations before the depth cap, without reaching 0.
  bool saturated = false;
  /// Stopped because the member cap was reached.
  bool capped = false;
  /// For ReachedBot: the two members whose Sasaki projection is zero.
  std::optional<std::pair<Subspace, Subspace>> witness;
};

/// Closes {a, x, full} under pairwise Sasaki projection (both orders) and
/// pairwise joins, round by round. Any filter containing a and x contains
/// every member produced. Throws PrecondViolated when a <= x or a is not a
/// ray, DimTooSmall below dimension 3.
ProbeReport probe_atom_forcing(const Subspace& a, const Subspace& x, const ProbeOptions& opts = {});

/// Whether the chosen lines plus the full space form a Sasaki filter of the
/// plane. Each pair must be two orthogonal lines of a 2-dimensional space
/// and each choice a member of some pair; otherwise Error(Malformed).
bool dim2_choice_check(const std::vector<std::pair<Subspace, Subspace>>& pairs, const std::vector<Subspace>& choice);

std::string to_string(ProbeOutcome o);

}  // namespace sasaki
