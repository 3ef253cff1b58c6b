#pragma once

#include "monocodes/linalg.hpp"
#include "monocodes/monomial.hpp"

namespace fixtures {

using namespace monocodes;

/// The 4x4 weighted shift over F_5 with column coefficients (3, 4, 3, 1).
inline MatrixFq example_shift_matrix() {
  return MatrixFq::from_ints(FieldSpec(5), {{0, 0, 0, 1}, {3, 0, 0, 0}, {0, 4, 0, 0}, {0, 0, 3, 0}});
}

inline MonomialMatrix example_shift() { return MonomialMatrix::simple(VectorFq::from_ints(FieldSpec(5), {3, 4, 3, 1})); }

/// Two 3-cycles (0 1 2)(3 4 5) with coefficients (2, 3, 1) each, over F_5.
inline MatrixFq example_two_cycle_matrix() {
  return MatrixFq::from_ints(FieldSpec(5), {{0, 0, 1, 0, 0, 0},
                                            {2, 0, 0, 0, 0, 0},
                                            {0, 3, 0, 0, 0, 0},
                                            {0, 0, 0, 0, 0, 1},
                                            {0, 0, 0, 2, 0, 0},
                                            {0, 0, 0, 0, 3, 0}});
}

inline MonomialMatrix example_two_cycle() {
  const FieldSpec f(5);
  return MonomialMatrix::general(VectorFq::from_ints(f, {2, 3, 1, 2, 3, 1}), Permutation::parse("(0 1 2)(3 4 5)", 6));
}

/// A commuting matrix for the two-cycle example with rank-one off-diagonal blocks.
inline MatrixFq example_two_cycle_commutant() {
  return MatrixFq::from_ints(FieldSpec(5), {{0, 0, 0, 1, 3, 1},
                                            {0, 0, 0, 2, 1, 2},
                                            {0, 0, 0, 1, 3, 1},
                                            {1, 3, 1, 0, 0, 0},
                                            {2, 1, 2, 0, 0, 0},
                                            {1, 3, 1, 0, 0, 0}});
}

/// Swaps the two cycles of the two-cycle example.
inline MatrixFq block_swap() { return Permutation::parse("(0 3)(1 4)(2 5)", 6).matrix(FieldSpec(5)); }

}  // namespace fixtures
