#include "qpers/linalg.hpp"

#include <string>
#include <utility>

#include "qpers/errors.hpp"

namespace qpers {

namespace {

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_ambient(const Subspace& u, const Subspace& v, const char* op) {
  if (u.ambient_dim() != v.ambient_dim())
    throw DimensionMismatch(std::string(op) + ": ambient dimensions " + std::to_string(u.ambient_dim()) +
                            " and " + std::to_string(v.ambient_dim()) + " differ");
}

std::vector<Eigen::Index> non_pivot_columns(const Subspace& s) {
  std::vector<Eigen::Index> free;
  std::size_t next = 0;
  for (Eigen::Index j = 0; j < s.ambient_dim(); ++j) {
    if (next < s.pivots().size() && s.pivots()[next] == j) {
      ++next;
      continue;
    }
    free.push_back(j);
  }
  return free;
}

Matrix reduced(const PrimeField& f, Matrix m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = f.reduce(m.data()[i]);
  return m;
}

}  // namespace

Matrix zeros(Eigen::Index rows, Eigen::Index cols) { return Matrix::Zero(rows, cols); }

Matrix identity(Eigen::Index n) { return Matrix::Identity(n, n); }

Matrix from_rows(const PrimeField& f, const std::vector<std::vector<Scalar>>& rows, Eigen::Index cols) {
  const Eigen::Index n = rows.empty() ? std::max<Eigen::Index>(cols, 0)
                                      : static_cast<Eigen::Index>(rows.front().size());
  Matrix m(static_cast<Eigen::Index>(rows.size()), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != n)
      throw ShapeError("ragged matrix: row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                       " entries, expected " + std::to_string(n));
    for (Eigen::Index j = 0; j < n; ++j) m(static_cast<Eigen::Index>(i), j) = f.reduce(rows[i][j]);
  }
  return m;
}

Matrix from_rows(const PrimeField& f, std::initializer_list<std::initializer_list<Scalar>> rows) {
  std::vector<std::vector<Scalar>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(f, v);
}

bool same(const Matrix& a, const Matrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a.size() == 0 || a == b);
}

bool is_reduced(const PrimeField& f, const Matrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i)
    if (m.data()[i] < 0 || m.data()[i] >= f.characteristic()) return false;
  return true;
}

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("multiply: " + shape(a) + " * " + shape(b));
  const Scalar pm1 = f.characteristic() - 1;
  // Eigen's integer product is exact while the accumulated sum fits in 63 bits.
  if (a.cols() == 0 || pm1 == 0 || pm1 * pm1 <= (std::int64_t{1} << 62) / std::max<Eigen::Index>(a.cols(), 1))
    return reduced(f, a * b);
  Matrix out = Matrix::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      const Scalar aik = a(i, k);
      if (aik == 0) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
    }
  return out;
}

Matrix add(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("add: " + shape(a) + " + " + shape(b));
  return reduced(f, a + b);
}

Matrix subtract(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("subtract: " + shape(a) + " - " + shape(b));
  return reduced(f, a - b);
}

Matrix negate(const PrimeField& f, const Matrix& a) { return reduced(f, -a); }

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack: " + shape(a) + " | " + shape(b));
  Matrix out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack: " + shape(a) + " / " + shape(b));
  Matrix out(a.rows() + b.rows(), a.cols());
  if (a.rows() > 0) out.topRows(a.rows()) = a;
  if (b.rows() > 0) out.bottomRows(b.rows()) = b;
  return out;
}

RrefResult rref(const PrimeField& f, Matrix m) {
  RrefResult out;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Scalar scale = f.inv(m(row, col));
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), scale);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Scalar factor = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.form = std::move(m);
  return out;
}

Eigen::Index rank(const PrimeField& f, const Matrix& m) {
  return static_cast<Eigen::Index>(rref(f, m).pivots.size());
}

bool is_invertible(const PrimeField& f, const Matrix& m) { return m.rows() == m.cols() && rank(f, m) == m.rows(); }

std::optional<Matrix> solve(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("solve: " + shape(a) + " X = " + shape(b));
  const auto [form, pivots] = rref(f, hstack(a, b));
  Matrix x = Matrix::Zero(a.cols(), b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= a.cols()) return std::nullopt;  // pivot in the augmented block
    x.row(pivots[r]) = form.row(static_cast<Eigen::Index>(r)).tail(b.cols());
  }
  return x;
}

// -- Subspace ---------------------------------------------------------------

Subspace Subspace::span(const PrimeField& f, const Matrix& generators) {
  auto [form, pivots] = rref(f, generators);
  const auto r = static_cast<Eigen::Index>(pivots.size());
  return Subspace(generators.cols(), form.topRows(r), std::move(pivots));
}

Subspace Subspace::zero(Eigen::Index ambient_dim) { return Subspace(ambient_dim, Matrix(0, ambient_dim), {}); }

Subspace Subspace::full(Eigen::Index ambient_dim) {
  std::vector<Eigen::Index> pivots(static_cast<std::size_t>(ambient_dim));
  for (Eigen::Index i = 0; i < ambient_dim; ++i) pivots[static_cast<std::size_t>(i)] = i;
  return Subspace(ambient_dim, identity(ambient_dim), std::move(pivots));
}

Vector Subspace::coordinates(const Vector& member) const {
  Vector c(dim());
  for (Eigen::Index i = 0; i < dim(); ++i) c(i) = member(pivots_[static_cast<std::size_t>(i)]);
  return c;
}

bool Subspace::contains(const PrimeField& f, const Vector& v) const {
  if (v.size() != ambient_dim_) throw DimensionMismatch("contains: vector length differs from ambient dimension");
  // v is in the span iff v equals the combination read off its pivot entries
  Vector residual = v;
  for (Eigen::Index i = 0; i < dim(); ++i) {
    const Scalar c = residual(pivots_[static_cast<std::size_t>(i)]);
    if (c == 0) continue;
    for (Eigen::Index j = 0; j < ambient_dim_; ++j) residual(j) = f.sub(residual(j), f.mul(c, basis_(i, j)));
  }
  return residual.isZero();
}

bool Subspace::contains(const PrimeField& f, const Subspace& other) const {
  require_same_ambient(*this, other, "contains");
  for (Eigen::Index i = 0; i < other.dim(); ++i)
    if (!contains(f, Vector(other.basis().row(i).transpose()))) return false;
  return true;
}

Matrix QuotientSpace::lift() const {
  const auto free = non_pivot_columns(killed);
  Matrix s = Matrix::Zero(ambient_dim, static_cast<Eigen::Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) s(free[k], static_cast<Eigen::Index>(k)) = 1;
  return s;
}

// -- subspace calculus --------------------------------------------------------

Subspace kernel(const PrimeField& f, const Matrix& m) {
  const auto [form, pivots] = rref(f, m);
  const Eigen::Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix gens(n - static_cast<Eigen::Index>(pivots.size()), n);
  gens.setZero();
  Eigen::Index g = 0;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    gens(g, free) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      gens(g, pivots[r]) = f.neg(form(static_cast<Eigen::Index>(r), free));
    ++g;
  }
  return Subspace::span(f, gens);
}

Subspace image(const PrimeField& f, const Matrix& m) { return Subspace::span(f, m.transpose()); }

Subspace subspace_sum(const PrimeField& f, const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v, "subspace_sum");
  return Subspace::span(f, vstack(u.basis(), v.basis()));
}

Subspace subspace_intersect(const PrimeField& f, const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v, "subspace_intersect");
  // (a, b) with a*U = b*V  <=>  [U^T | -V^T] (a;b) = 0
  const Matrix system = hstack(u.basis().transpose(), negate(f, v.basis()).transpose());
  const Subspace solutions = kernel(f, system);
  const Matrix coeffs = solutions.basis().leftCols(u.dim());
  return Subspace::span(f, multiply(f, coeffs, u.basis()));
}

Subspace subspace_image(const PrimeField& f, const Matrix& m, const Subspace& u) {
  if (u.ambient_dim() != m.cols())
    throw DimensionMismatch("subspace_image: map " + shape(m) + " applied to subspace of F^" +
                            std::to_string(u.ambient_dim()));
  return image(f, multiply(f, m, u.basis().transpose()));
}

Subspace subspace_preimage(const PrimeField& f, const Matrix& m, const Subspace& s) {
  if (s.ambient_dim() != m.rows())
    throw DimensionMismatch("subspace_preimage: map " + shape(m) + " against subspace of F^" +
                            std::to_string(s.ambient_dim()));
  return kernel(f, multiply(f, quotient(f, s.ambient_dim(), s).map, m));
}

QuotientSpace quotient(const PrimeField& f, Eigen::Index ambient_dim, const Subspace& s) {
  if (s.ambient_dim() != ambient_dim)
    throw DimensionMismatch("quotient: subspace of F^" + std::to_string(s.ambient_dim()) + " inside F^" +
                            std::to_string(ambient_dim));
  QuotientSpace q;
  q.ambient_dim = ambient_dim;
  q.killed = s;
  // x -> (x - sum_i x[piv_i] b_i) restricted to the non-pivot coordinates
  const auto free = non_pivot_columns(s);
  q.map = Matrix::Zero(static_cast<Eigen::Index>(free.size()), ambient_dim);
  for (std::size_t r = 0; r < free.size(); ++r) {
    const auto row = static_cast<Eigen::Index>(r);
    q.map(row, free[r]) = 1;
    for (std::size_t i = 0; i < s.pivots().size(); ++i)
      q.map(row, s.pivots()[i]) = f.neg(s.basis()(static_cast<Eigen::Index>(i), free[r]));
  }
  return q;
}

}  // namespace qpers
