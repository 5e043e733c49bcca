#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sasaki/subspace.hpp"

namespace sasaki {

/// Rays of a d-dimensional space with their orthogonality graph and every
/// orthogonal d-clique (basis).
struct RayConfig {
  std::size_t dim = 0;
  /// Canonical representatives, deduplicated, in first-occurrence order.
  std::vector<Vector> rays;
  std::vector<std::vector<bool>> orthogonal;
  /// Sorted ray indices; the list itself is in lexicographic order.
  std::vector<std::vector<std::size_t>> bases;
};

/// Scales v so its first nonzero entry is 1, clears denominators and divides
/// out the integer content. Throws ZeroVector.
Vector canonical_ray(const Vector& v);

/// Throws ZeroVector or DimMismatch.
RayConfig build_config(const std::vector<Vector>& vectors, std::size_t dim);

struct SearchResult {
  bool found = false;
  /// Selected ray indices, sorted, when found.
  std::vector<std::size_t> selection;
  /// Rays tried across the whole search.
  std::uint64_t nodes = 0;
  /// Basis branched on at each depth of the first descent.
  std::vector<std::size_t> order;
};

/// Backtracking for a set S with exactly one member in each basis and no two
/// members orthogonal. Branches on the basis with fewest admissible rays,
/// ties to the lowest index; rays tried in index order.
SearchResult search_coloring(const RayConfig& cfg);

struct SelectionFilterReport {
  bool ok = true;
  std::size_t family_size = 0;
  std::size_t upset_size = 0;
  std::size_t pairs_checked = 0;
  /// Pairs whose Sasaki projection leaves the family (not judged).
  std::size_t pairs_undefined = 0;
  /// Members X, Y of the up-closure with X & Y in the family but outside it.
  std::optional<std::pair<Subspace, Subspace>> witness;
};

/// Up-closes S inside the family of spans of basis subsets and checks that
/// it avoids 0 and is &-stable wherever the projection stays in the family.
SelectionFilterReport selection_to_filter_check(const RayConfig& cfg, const std::vector<std::size_t>& selection);

/// An 18-ray configuration of Q^4 with entries in {0, ±1} whose 9 bases
/// admit no selection (each ray lies in exactly two bases).
std::vector<Vector> cabello_rays();

/// JSON certificate: dimension, rays, bases, search order, node count, result.
std::string certificate_json(const RayConfig& cfg, const SearchResult& r);

}  // namespace sasaki
