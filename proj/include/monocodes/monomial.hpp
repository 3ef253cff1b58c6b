#pragma once

// Monomial matrices A = diag-placement of a coefficient vector along a
// permutation: column j holds a_j in row sigma(j). The simple case, sigma the
// standard n-cycle j -> j+1 mod n, is the weighted cyclic shift
//   (A c)_0 = a_{n-1} c_{n-1},   (A c)_i = a_{i-1} c_{i-1}.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "monocodes/gf.hpp"
#include "monocodes/linalg.hpp"
#include "monocodes/poly.hpp"

namespace monocodes {

/// Bijection of {0, ..., n-1} in one-line notation: map[j] = sigma(j).
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> map);
  static Permutation identity(std::size_t n);
  /// j -> j + 1 mod n.
  static Permutation standard_cycle(std::size_t n);
  /// Accepts disjoint cycles "(0 1 2)(3 4)" (fixed points may be omitted) or
  /// one-line "[1,2,0,4,3]". With one_based, indices start at 1.
  static Permutation parse(std::string_view text, std::size_t n, bool one_based = false);

  std::size_t size() const { return map_.size(); }
  std::size_t operator()(std::size_t j) const { return map_[j]; }
  const std::vector<std::size_t>& map() const { return map_; }

  /// Disjoint cycles, each starting at its smallest element, ordered by that
  /// element. Fixed points are 1-cycles.
  std::vector<std::vector<std::size_t>> cycles() const;
  std::vector<std::size_t> cycle_lengths() const;
  bool is_standard_cycle() const;

  /// P with P(i, j) = 1 iff i = sigma(j).
  MatrixFq matrix(const FieldSpec& field) const;

  /// Cycle notation, fixed points included, e.g. "(0 1 2)(3)".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> map_;
};

class MonomialMatrix {
 public:
  /// Simple monomial matrix of a nonzero coefficient vector.
  static MonomialMatrix simple(const VectorFq& a);
  static MonomialMatrix general(const VectorFq& a, const Permutation& sigma);

  const FieldSpec& field() const { return a_.field(); }
  std::size_t n() const { return a_.size(); }
  const VectorFq& coefficients() const { return a_; }
  const Permutation& sigma() const { return sigma_; }
  const MatrixFq& matrix() const { return matrix_; }
  bool is_simple() const { return simple_; }
  /// Product of all coefficients.
  FieldElement product() const;

 private:
  MonomialMatrix(VectorFq a, Permutation sigma, MatrixFq matrix, bool simple);
  VectorFq a_;
  Permutation sigma_;
  MatrixFq matrix_;
  bool simple_;
};

struct PowerAndInverse {
  MatrixFq power;  // A^n = (prod a_i) I
  MatrixFq inverse;  // (prod a_i)^{-1} A^{n-1}
};

/// Closed forms for simple matrices, both checked against direct arithmetic.
PowerAndInverse power_and_inverse(const MonomialMatrix& m);

enum class SimilarityDirection {
  kSInverseAS,  // S^{-1} A S = A_a
  kSASInverse,  // S A S^{-1} = A_a
};

struct CompanionSimilarity {
  MatrixFq companion;  // A_a: ones on the subdiagonal, prod a_i in the corner
  MatrixFq s;  // S(0, n-1) = prod a_i, S(i, i-1) = a_0 ... a_{i-1}
  SimilarityDirection direction;
};

CompanionSimilarity companion_similarity(const MonomialMatrix& m);

/// det(A - xI) kept as unit (-1)^n times a monic part.
struct CharPoly {
  FieldElement unit;
  Polynomial monic;

  Polynomial expanded() const { return unit * monic; }
};

/// Product over the cycles of x^{n_i} - alpha_i, with unit (-1)^n.
CharPoly char_poly(const MonomialMatrix& m);

struct EigenPair {
  FieldElement lambda;
  VectorFq vector;
};

/// Every lambda in the field with lambda^n = prod a_i (simple matrices only),
/// paired with v(lambda) = (lambda^{n-1}, a_0 lambda^{n-2}, ..., a_0...a_{n-2}).
std::vector<EigenPair> eigen_pairs(const MonomialMatrix& m);

/// Minimal polynomial of P_sigma: x^L - 1 with L the lcm of the cycle lengths.
Polynomial perm_min_poly(const Permutation& sigma, const FieldSpec& field);

struct CycleBlock {
  std::vector<std::size_t> coords;  // the cycle, in order
  MonomialMatrix block;  // simple, in local coordinates
  FieldElement alpha;  // product of the block's coefficients

  /// x^{n_i} - alpha_i.
  Polynomial annihilator() const;
};

std::vector<CycleBlock> cycle_blocks(const MonomialMatrix& m);

}  // namespace monocodes
