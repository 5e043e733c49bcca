#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sasaki/scalar.hpp"

namespace sasaki {

using Vector = std::vector<Scalar>;

/// Hermitian form sum conj(u_i) v_i. Throws DimMismatch.
Scalar inner(const Vector& u, const Vector& v);
bool is_zero_vector(const Vector& v);
std::string vector_to_string(const Vector& v);

/// A subspace of the d-dimensional coordinate space over the Gaussian
/// rationals, stored as its unique reduced row-echelon basis so that
/// equality is matrix equality.
class Subspace {
 public:
  /// Row span of `vectors`; every vector must have length `dim`.
  static Subspace span(std::size_t dim, const std::vector<Vector>& vectors);
  static Subspace zero(std::size_t dim);
  static Subspace full(std::size_t dim);

  std::size_t ambient_dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool is_zero() const noexcept { return rows_.empty(); }
  bool is_full() const noexcept { return rows_.size() == dim_; }
  const std::vector<Vector>& basis() const noexcept { return rows_; }
  bool contains(const Vector& v) const;
  /// Inclusion. Throws DimMismatch.
  bool leq(const Subspace& other) const;

  /// Stable text form of the echelon basis, usable as a map key.
  std::string key() const;
  std::string to_string() const;
  bool operator==(const Subspace& o) const { return dim_ == o.dim_ && rows_ == o.rows_; }

 private:
  Subspace(std::size_t dim, std::vector<Vector> rows) : dim_(dim), rows_(std::move(rows)) {}
  std::size_t dim_ = 0;
  std::vector<Vector> rows_;
};

/// Intersection, by the kernel of the stacked bases. Throws DimMismatch.
Subspace sub_meet(const Subspace& a, const Subspace& b);
/// Row span of the stacked bases. Throws DimMismatch.
Subspace sub_join(const Subspace& a, const Subspace& b);
/// Null space of the conjugated basis.
Subspace sub_ortho(const Subspace& a);
/// (x v y') ^ y. Throws DimMismatch.
Subspace sub_sasaki(const Subspace& x, const Subspace& y);
/// Span of the orthogonal projections onto y of x's basis vectors, computed
/// with an unnormalized Gram-Schmidt basis of y.
Subspace projection_image(const Subspace& x, const Subspace& y);
/// Whether every vector of a is orthogonal to every vector of b.
bool sub_orthogonal(const Subspace& a, const Subspace& b);

/// One vector per line, whitespace-separated scalars; a blank line closes a
/// group. `#` starts a comment. Throws ParseError.
std::vector<std::vector<Vector>> parse_vector_groups(std::string_view text);
/// Reads a file in the same format; throws Io when unreadable.
std::vector<std::vector<Vector>> read_vector_groups(const std::string& path);

}  // namespace sasaki
