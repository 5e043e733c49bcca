#include "sasaki/subspace.hpp"

#include <fstream>
#include <sstream>

#include "sasaki/error.hpp"

namespace sasaki {

namespace {

using Matrix = std::vector<Vector>;

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::DimMismatch, "dimensions differ: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

// In-place reduced row echelon form over `cols` columns; zero rows dropped.
// Returns the pivot column of each remaining row.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Scalar inv = Scalar(1) / m[row][col];
    for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const Scalar factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

// Basis of {x : M x = 0} for an already reduced M.
Matrix null_space(const Matrix& reduced, const std::vector<std::size_t>& pivots, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  Matrix out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < reduced.size(); ++r) v[pivots[r]] = -reduced[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

Scalar inner(const Vector& u, const Vector& v) {
  require_same_dim(u.size(), v.size());
  Scalar acc;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i].conj() * v[i];
  return acc;
}

bool is_zero_vector(const Vector& v) {
  for (const auto& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

std::string vector_to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

Subspace Subspace::span(std::size_t dim, const std::vector<Vector>& vectors) {
  Matrix m;
  m.reserve(vectors.size());
  for (const auto& v : vectors) {
    require_same_dim(v.size(), dim);
    m.push_back(v);
  }
  rref(m, dim);
  return Subspace(dim, std::move(m));
}

Subspace Subspace::zero(std::size_t dim) { return Subspace(dim, {}); }

Subspace Subspace::full(std::size_t dim) {
  Matrix m(dim, Vector(dim));
  for (std::size_t i = 0; i < dim; ++i) m[i][i] = 1;
  return Subspace(dim, std::move(m));
}

bool Subspace::contains(const Vector& v) const {
  require_same_dim(v.size(), dim_);
  // Reduce against the echelon rows; v is inside iff nothing remains.
  Vector rest = v;
  for (const auto& row : rows_) {
    std::size_t p = 0;
    while (row[p].is_zero()) ++p;
    if (rest[p].is_zero()) continue;
    const Scalar factor = rest[p];
    for (std::size_t c = p; c < dim_; ++c) rest[c] -= factor * row[c];
  }
  return is_zero_vector(rest);
}

bool Subspace::leq(const Subspace& other) const {
  require_same_dim(dim_, other.dim_);
  if (rank() > other.rank()) return false;
  for (const auto& row : rows_) {
    if (!other.contains(row)) return false;
  }
  return true;
}

std::string Subspace::key() const {
  std::string out = std::to_string(dim_) + ":";
  for (const auto& row : rows_) {
    for (const auto& s : row) out += s.to_string() + ",";
    out += ";";
  }
  return out;
}

std::string Subspace::to_string() const {
  if (rows_.empty()) return "span{}";
  std::string out = "span{";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += ", ";
    out += vector_to_string(rows_[i]);
  }
  return out + "}";
}

Subspace sub_join(const Subspace& a, const Subspace& b) {
  require_same_dim(a.ambient_dim(), b.ambient_dim());
  Matrix m = a.basis();
  m.insert(m.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), m);
}

Subspace sub_meet(const Subspace& a, const Subspace& b) {
  require_same_dim(a.ambient_dim(), b.ambient_dim());
  const std::size_t d = a.ambient_dim();
  const std::size_t ra = a.rank();
  const std::size_t k = ra + b.rank();
  if (ra == 0 || b.rank() == 0) return Subspace::zero(d);
  // Coefficient pairs (alpha, beta) with alpha·A + beta·B = 0 are the kernel
  // of the transposed stack; alpha·A then spans the intersection.
  Matrix t(d, Vector(k));
  for (std::size_t i = 0; i < ra; ++i) {
    for (std::size_t c = 0; c < d; ++c) t[c][i] = a.basis()[i][c];
  }
  for (std::size_t i = 0; i < b.rank(); ++i) {
    for (std::size_t c = 0; c < d; ++c) t[c][ra + i] = b.basis()[i][c];
  }
  const auto pivots = rref(t, k);
  Matrix out;
  for (const auto& coeffs : null_space(t, pivots, k)) {
    Vector v(d);
    for (std::size_t i = 0; i < ra; ++i) {
      if (coeffs[i].is_zero()) continue;
      for (std::size_t c = 0; c < d; ++c) v[c] += coeffs[i] * a.basis()[i][c];
    }
    out.push_back(std::move(v));
  }
  return Subspace::span(d, out);
}

Subspace sub_ortho(const Subspace& a) {
  const std::size_t d = a.ambient_dim();
  Matrix m;
  for (const auto& row : a.basis()) {
    Vector c(d);
    for (std::size_t i = 0; i < d; ++i) c[i] = row[i].conj();
    m.push_back(std::move(c));
  }
  const auto pivots = rref(m, d);
  return Subspace::span(d, null_space(m, pivots, d));
}

Subspace sub_sasaki(const Subspace& x, const Subspace& y) {
  require_same_dim(x.ambient_dim(), y.ambient_dim());
  return sub_meet(sub_join(x, sub_ortho(y)), y);
}

Subspace projection_image(const Subspace& x, const Subspace& y) {
  require_same_dim(x.ambient_dim(), y.ambient_dim());
  Matrix ortho;
  std::vector<Scalar> norms;
  for (const auto& v : y.basis()) {
    Vector w = v;
    for (std::size_t j = 0; j < ortho.size(); ++j) {
      const Scalar c = inner(ortho[j], v) / norms[j];
      for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * ortho[j][i];
    }
    norms.push_back(inner(w, w));
    ortho.push_back(std::move(w));
  }
  Matrix images;
  for (const auto& v : x.basis()) {
    Vector p(x.ambient_dim());
    for (std::size_t j = 0; j < ortho.size(); ++j) {
      const Scalar c = inner(ortho[j], v) / norms[j];
      for (std::size_t i = 0; i < p.size(); ++i) p[i] += c * ortho[j][i];
    }
    images.push_back(std::move(p));
  }
  return Subspace::span(x.ambient_dim(), images);
}

bool sub_orthogonal(const Subspace& a, const Subspace& b) {
  require_same_dim(a.ambient_dim(), b.ambient_dim());
  for (const auto& u : a.basis()) {
    for (const auto& v : b.basis()) {
      if (!inner(u, v).is_zero()) return false;
    }
  }
  return true;
}

std::vector<std::vector<Vector>> parse_vector_groups(std::string_view text) {
  std::vector<std::vector<Vector>> groups;
  std::vector<Vector> current;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    // A blank line closes the group; a comment-only line does not.
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      if (!current.empty()) groups.push_back(std::move(current));
      current.clear();
      continue;
    }
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    Vector v;
    std::string tok;
    while (tokens >> tok) {
      try {
        v.push_back(Scalar::parse(tok));
      } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (!v.empty()) current.push_back(std::move(v));
  }
  if (!current.empty()) groups.push_back(std::move(current));
  return groups;
}

std::vector<std::vector<Vector>> read_vector_groups(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::Io, "cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_vector_groups(ss.str());
}

}  // namespace sasaki
