#pragma once

// Centralizers, hyperinvariant / characteristic subspaces, cyclic subspaces
// and the cycle-wise decomposition of codes invariant under a general
// monomial matrix.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monocodes/linalg.hpp"
#include "monocodes/monomial.hpp"

namespace monocodes {

struct CentralizerBasis {
  MatrixFq reference;
  std::vector<MatrixFq> basis;

  std::size_t dim() const { return basis.size(); }
};

/// Basis of {X : AX = XA}: the kernel of X -> AX - XA on row-major
/// coordinates, in RREF order.
CentralizerBasis centralizer(const MatrixFq& a);

/// Basis of {X : A X = X B} for A of size m and B of size n (m x n solutions).
std::vector<MatrixFq> sylvester_kernel(const MatrixFq& a, const MatrixFq& b);

/// span{x, Ax, A^2 x, ...}, stopping at the first dependent iterate.
Subspace cyclic_subspace(const MatrixFq& a, const VectorFq& x);

enum class CharacteristicStatus { kCertified, kRefuted, kUndetermined };

std::string to_string(CharacteristicStatus status);

struct WitnessSearchOptions {
  /// Random centralizer samples tried when exhaustive search is too big.
  std::size_t budget = 4096;
  std::uint64_t seed = 20240229;
  /// Exhaustive search runs when q^dim C(A) is at most this.
  std::uint64_t exhaustive_limit = std::uint64_t{1} << 16;
};

struct CharacteristicReport {
  Subspace subspace;
  bool invariant;
  bool hyperinvariant;
  CharacteristicStatus status;
  /// Invertible X commuting with A with X V not inside V.
  std::optional<MatrixFq> witness;
  /// "none", "exhaustive" or "sampled".
  std::string search;
  std::size_t candidates_examined = 0;
};

/// Hyperinvariance (invariance under a centralizer basis) certifies; an
/// invertible commuting matrix that moves V refutes; otherwise undetermined.
CharacteristicReport check_characteristic(const Subspace& v, const MatrixFq& a, const WitnessSearchOptions& options = {});

struct GeneralizedComponent {
  std::size_t cycle_index;
  std::vector<std::size_t> coords;  // coordinates of the cycle
  Polynomial annihilator;  // x^{n_i} - alpha_i
  Subspace space;  // C_i
};

/// C = C_1 + ... + C_r along the cycles of sigma. C_i = C meet K_i where
/// K_i = ker(x^{n_i} - alpha_i)(A) when those kernels split F_q^n directly,
/// and the coordinate block of cycle i otherwise. Only nonzero C_i are
/// returned. Throws PreconditionError when C is not invariant or does not
/// split along the cycles.
std::vector<GeneralizedComponent> decompose_generalized(const Subspace& c, const MonomialMatrix& m);

struct SylvesterBlock {
  std::size_t row_block;
  std::size_t col_block;
  std::size_t kernel_dim;
};

struct CoprimeBlockReport {
  std::vector<Polynomial> char_polys;  // monic det(xI - A_i)
  std::vector<CentralizerBasis> diagonal;
  std::vector<SylvesterBlock> off_diagonal;  // every kernel_dim is 0
  /// Centralizer of diag(A_1, ..., A_r) assembled from the diagonal blocks.
  CentralizerBasis product;
  bool certified;  // every off-diagonal kernel is {0}
};

/// Requires pairwise coprime characteristic polynomials; throws
/// PreconditionError naming the shared factor otherwise.
CoprimeBlockReport coprime_block_centralizer(const std::vector<MatrixFq>& blocks);

}  // namespace monocodes
