#pragma once

// Dense exact linear algebra over GF(q).
//
// Orientation: vectors are written as rows, matrices act on column vectors,
// (A c)_i = sum_j A(i, j) c_j. Subspaces keep their basis as the rows of a
// reduced row echelon matrix, so equal subspaces compare equal entry-wise.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "monocodes/gf.hpp"
#include "monocodes/poly.hpp"

namespace monocodes {

class VectorFq {
 public:
  VectorFq(FieldSpec field, std::size_t n);
  VectorFq(FieldSpec field, std::vector<Code> codes);
  VectorFq(FieldSpec field, const std::vector<FieldElement>& elements);
  static VectorFq from_ints(const FieldSpec& field, const std::vector<long long>& values);

  const FieldSpec& field() const { return field_; }
  std::size_t size() const { return codes_.size(); }
  const std::vector<Code>& codes() const { return codes_; }
  Code code(std::size_t i) const { return codes_[i]; }
  FieldElement operator[](std::size_t i) const { return FieldElement(field_, codes_[i]); }
  void set(std::size_t i, const FieldElement& value);
  void set_code(std::size_t i, Code value) { codes_[i] = value; }

  bool is_zero() const;
  /// Number of nonzero coordinates.
  std::size_t weight() const;

  friend VectorFq operator+(const VectorFq& a, const VectorFq& b);
  friend VectorFq operator-(const VectorFq& a, const VectorFq& b);
  friend VectorFq operator*(const FieldElement& c, const VectorFq& v);
  friend bool operator==(const VectorFq& a, const VectorFq& b) {
    return a.codes_ == b.codes_ && a.field_ == b.field_;
  }

  /// "(c0,c1,...)".
  std::string to_string() const;

 private:
  FieldSpec field_;
  std::vector<Code> codes_;
};

class MatrixFq {
 public:
  /// Zero matrix.
  MatrixFq(FieldSpec field, std::size_t rows, std::size_t cols);
  MatrixFq(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Code> row_major);
  static MatrixFq identity(const FieldSpec& field, std::size_t n);
  static MatrixFq from_ints(const FieldSpec& field, std::initializer_list<std::initializer_list<long long>> rows);
  static MatrixFq from_ints(const FieldSpec& field, const std::vector<std::vector<long long>>& rows);
  /// Stacks vectors of equal length as rows.
  static MatrixFq from_rows(const FieldSpec& field, std::size_t cols, const std::vector<VectorFq>& rows);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<Code>& codes() const { return codes_; }

  Code code(std::size_t i, std::size_t j) const { return codes_[i * cols_ + j]; }
  FieldElement operator()(std::size_t i, std::size_t j) const { return FieldElement(field_, code(i, j)); }
  void set(std::size_t i, std::size_t j, const FieldElement& value);
  void set_code(std::size_t i, std::size_t j, Code value) { codes_[i * cols_ + j] = value; }

  VectorFq row(std::size_t i) const;
  VectorFq col(std::size_t j) const;
  MatrixFq transpose() const;
  bool is_zero() const;

  friend MatrixFq operator+(const MatrixFq& a, const MatrixFq& b);
  friend MatrixFq operator-(const MatrixFq& a, const MatrixFq& b);
  friend MatrixFq operator*(const MatrixFq& a, const MatrixFq& b);
  friend VectorFq operator*(const MatrixFq& a, const VectorFq& v);
  friend MatrixFq operator*(const FieldElement& c, const MatrixFq& a);
  friend bool operator==(const MatrixFq& a, const MatrixFq& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.codes_ == b.codes_ && a.field_ == b.field_;
  }

  /// One row per line, "[a b c]".
  std::string to_string() const;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Code> codes_;
};

struct RrefResult {
  MatrixFq reduced;  // same shape as the input; zero rows at the bottom
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination, pivoting on the first nonzero column.
RrefResult rref(const MatrixFq& a);
std::size_t rank(const MatrixFq& a);
std::optional<MatrixFq> inverse(const MatrixFq& a);
bool is_invertible(const MatrixFq& a);

/// Square matrix power by repeated squaring.
MatrixFq matrix_power(const MatrixFq& a, std::uint64_t k);

/// f(A) by Horner's rule.
MatrixFq evaluate(const Polynomial& f, const MatrixFq& a);

/// Monic det(xI - A) via Hessenberg reduction.
Polynomial characteristic_polynomial(const MatrixFq& a);

/// Companion matrix of a monic polynomial, ones on the subdiagonal and
/// -c_i in the last column.
MatrixFq companion_matrix(const Polynomial& monic);

MatrixFq block_diagonal(const std::vector<MatrixFq>& blocks);

/// Row-major flattening of a matrix into a vector of length rows * cols.
VectorFq flatten(const MatrixFq& a);

class Subspace {
 public:
  /// Span of the rows of `generators`.
  static Subspace span(const MatrixFq& generators);
  static Subspace span(const FieldSpec& field, std::size_t ambient_dim, const std::vector<VectorFq>& generators);
  static Subspace zero(const FieldSpec& field, std::size_t ambient_dim);
  static Subspace full(const FieldSpec& field, std::size_t ambient_dim);

  const FieldSpec& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  /// dim x ambient_dim matrix in reduced row echelon form.
  const MatrixFq& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<VectorFq> vectors() const;

  bool is_zero() const { return dim() == 0; }
  bool contains(const VectorFq& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v with respect to the RREF basis; nullopt when v is not
  /// in the subspace.
  std::optional<VectorFq> coordinates(const VectorFq& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

  std::string to_string() const;

 private:
  Subspace(MatrixFq basis, std::vector<std::size_t> pivots);
  MatrixFq basis_;
  std::vector<std::size_t> pivots_;
};

/// Right null space {x : A x = 0}.
Subspace kernel(const MatrixFq& a);
/// Column space of A.
Subspace image(const MatrixFq& a);
/// A applied to a subspace.
Subspace image(const MatrixFq& a, const Subspace& v);

Subspace operator+(const Subspace& u, const Subspace& v);
/// Intersection through the kernel of the stacked system [U^T | -V^T].
Subspace intersect(const Subspace& u, const Subspace& v);

/// A v subset of v for every basis vector.
bool is_invariant(const Subspace& v, const MatrixFq& a);

}  // namespace monocodes
