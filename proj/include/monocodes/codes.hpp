#pragma once

// Monomial codes as invariant subspaces of a monomial matrix.
//
// When the characteristic polynomial of A factors into distinct irreducibles
// f_1 ... f_r, the kernels W_i = ker f_i(A) are the minimal A-invariant
// subspaces, F_q^n is their direct sum, and every A-invariant subspace is a
// sum of some of them. A code is identified by the set of factor indices it
// selects, in canonical factor order.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "monocodes/linalg.hpp"
#include "monocodes/monomial.hpp"
#include "monocodes/poly.hpp"

namespace monocodes {

struct MinimalComponent {
  std::size_t index;
  Polynomial factor;  // monic irreducible f_i
  Subspace space;  // W_i = ker f_i(A)
};

struct Decomposition {
  MonomialMatrix matrix;
  CharPoly char_poly;
  Factorization factorization;  // of char_poly.monic
  std::vector<MinimalComponent> components;
};

/// Splits F_q^n into minimal invariant subspaces. Throws PreconditionError
/// when the characteristic polynomial has a repeated irreducible factor.
Decomposition decompose(const MonomialMatrix& m);

class LinearCode {
 public:
  /// Assembles and validates a code: the space must be A-invariant, of
  /// dimension deg g, and g(A) must have rank n - k.
  LinearCode(MonomialMatrix matrix, Subspace space, std::vector<std::size_t> selection, FieldElement g_unit,
             Polynomial g_monic);

  const MonomialMatrix& matrix() const { return matrix_; }
  const Subspace& space() const { return space_; }
  const std::vector<std::size_t>& selection() const { return selection_; }
  std::size_t n() const { return space_.ambient_dim(); }
  std::size_t k() const { return space_.dim(); }
  /// (-1)^k.
  const FieldElement& g_unit() const { return g_unit_; }
  /// Product of the selected factors.
  const Polynomial& g_monic() const { return g_monic_; }
  /// g(x) = (-1)^k f_{i_1} ... f_{i_s}.
  Polynomial g() const { return g_unit_ * g_monic_; }
  const MatrixFq& g_of_a() const { return g_of_a_; }

  /// Minimum distance, computed on first use.
  std::size_t distance() const;
  std::optional<std::size_t> cached_distance() const { return distance_; }

 private:
  MonomialMatrix matrix_;
  Subspace space_;
  std::vector<std::size_t> selection_;
  FieldElement g_unit_;
  Polynomial g_monic_;
  MatrixFq g_of_a_;
  mutable std::optional<std::size_t> distance_;
};

LinearCode make_code(const Decomposition& d, std::span<const std::size_t> selection);

/// One code per subset of components, subsets in binary counting order on
/// the factor indices (bit i selects W_i). Without include_trivial the zero
/// code and the full space are dropped. Refuses more than 20 components.
std::vector<LinearCode> enumerate_codes(const Decomposition& d, bool include_trivial = true);

/// g(A) c = 0, cross-checked against containment in the RREF basis.
bool membership(const LinearCode& code, const VectorFq& c);

/// True iff A b lies in the subspace for every basis vector b.
bool shift_closure_check(const Subspace& c, const MonomialMatrix& m);

/// message x generator matrix; systematic in the pivot coordinates.
VectorFq encode(const LinearCode& code, const VectorFq& message);

/// Largest message space accepted by min_distance, in bits.
inline constexpr double kMaxDistanceSearchBits = 24.0;

/// Minimum Hamming weight over all nonzero codewords. The zero code has no
/// nonzero codewords and reports 0.
std::size_t min_distance(const LinearCode& code);

/// Matrix of A restricted to an invariant subspace, in that subspace's RREF
/// basis: the k x k matrix R with A B = B R, B holding the basis as columns.
MatrixFq restricted_matrix(const MatrixFq& a, const Subspace& w);

/// det(R - xI) for the restricted matrix R, as (-1)^k times a monic part.
CharPoly restricted_char_poly(const MatrixFq& a, const Subspace& w);

}  // namespace monocodes
