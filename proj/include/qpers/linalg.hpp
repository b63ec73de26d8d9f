#pragma once

// Exact dense linear algebra over GF(p).
//
// Column-vector convention throughout: a linear map F^m -> F^n is an n x m
// Matrix. Subspaces are row spaces kept in reduced row echelon form, so two
// Subspace values are equal exactly when their stored bases are identical.

#include <Eigen/Core>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "qpers/field.hpp"

namespace qpers {

using Scalar = PrimeField::value_type;
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// -- construction helpers ---------------------------------------------------

Matrix zeros(Eigen::Index rows, Eigen::Index cols);
Matrix identity(Eigen::Index n);

/// Builds a matrix from nested rows, reducing every entry into [0, p).
/// All rows must have length `cols`; `cols` is only consulted when there
/// are no rows.
Matrix from_rows(const PrimeField& f, const std::vector<std::vector<Scalar>>& rows,
                 Eigen::Index cols = -1);
Matrix from_rows(const PrimeField& f, std::initializer_list<std::initializer_list<Scalar>> rows);

/// Shape-aware equality (Eigen's operator== asserts on shape mismatch).
bool same(const Matrix& a, const Matrix& b);

/// True when every entry lies in [0, p).
bool is_reduced(const PrimeField& f, const Matrix& m);

// -- arithmetic -------------------------------------------------------------

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix add(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix subtract(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix negate(const PrimeField& f, const Matrix& a);

/// Horizontal / vertical concatenation.
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

// -- elimination ------------------------------------------------------------

struct RrefResult {
  Matrix form;                      ///< same shape as the input, zero rows last
  std::vector<Eigen::Index> pivots;  ///< pivot column of each nonzero row
};

RrefResult rref(const PrimeField& f, Matrix m);
Eigen::Index rank(const PrimeField& f, const Matrix& m);
bool is_invertible(const PrimeField& f, const Matrix& m);

/// Some X with a * X = b, or nullopt when the system is inconsistent.
std::optional<Matrix> solve(const PrimeField& f, const Matrix& a, const Matrix& b);

// -- subspaces --------------------------------------------------------------

class Subspace {
 public:
  /// Span of the rows of `generators` inside F^ambient_dim.
  static Subspace span(const PrimeField& f, const Matrix& generators);
  static Subspace zero(Eigen::Index ambient_dim);
  static Subspace full(Eigen::Index ambient_dim);

  Eigen::Index ambient_dim() const noexcept { return ambient_dim_; }
  Eigen::Index dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_dim_; }

  /// dim() x ambient_dim() matrix in RREF with full row rank.
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<Eigen::Index>& pivots() const noexcept { return pivots_; }

  bool contains(const PrimeField& f, const Vector& v) const;
  bool contains(const PrimeField& f, const Subspace& other) const;

  /// Coordinates of a member vector with respect to basis(); for an RREF
  /// basis these are the entries at the pivot columns.
  Vector coordinates(const Vector& member) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && same(a.basis_, b.basis_);
  }

 private:
  Subspace(Eigen::Index ambient_dim, Matrix basis, std::vector<Eigen::Index> pivots)
      : ambient_dim_(ambient_dim), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Eigen::Index ambient_dim_ = 0;
  Matrix basis_;
  std::vector<Eigen::Index> pivots_;
};

/// F^n / killed, presented by the projection onto the non-pivot coordinates
/// of killed's RREF basis.
struct QuotientSpace {
  Eigen::Index ambient_dim = 0;
  Subspace killed = Subspace::zero(0);
  Matrix map;  ///< (ambient_dim - dim killed) x ambient_dim, surjective

  Eigen::Index dim() const noexcept { return map.rows(); }
  /// Section of `map`: inclusion of the non-pivot coordinates, so map * lift = I.
  Matrix lift() const;
};

Subspace kernel(const PrimeField& f, const Matrix& m);
Subspace image(const PrimeField& f, const Matrix& m);

Subspace subspace_sum(const PrimeField& f, const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const PrimeField& f, const Subspace& u, const Subspace& v);
/// {m x : x in u}
Subspace subspace_image(const PrimeField& f, const Matrix& m, const Subspace& u);
/// {x : m x in s}
Subspace subspace_preimage(const PrimeField& f, const Matrix& m, const Subspace& s);
QuotientSpace quotient(const PrimeField& f, Eigen::Index ambient_dim, const Subspace& s);

}  // namespace qpers
