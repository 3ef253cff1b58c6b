#pragma once

// Dense univariate polynomials over GF(q) and their factorization.

#include <climits>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "monocodes/gf.hpp"

namespace monocodes {

class Polynomial {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kMinusInfinity = INT_MIN;

  /// The zero polynomial.
  explicit Polynomial(FieldSpec field);
  /// Coefficient codes, index = degree. Trailing zeros are dropped.
  Polynomial(FieldSpec field, std::vector<Code> coeffs);
  Polynomial(FieldSpec field, const std::vector<FieldElement>& coeffs);

  /// Integer coefficients, lowest degree first, reduced into the prime field.
  static Polynomial from_ints(const FieldSpec& field, std::initializer_list<long long> coeffs);
  static Polynomial from_ints(const FieldSpec& field, const std::vector<long long>& coeffs);
  static Polynomial constant(const FieldElement& c);
  /// c * x^k.
  static Polynomial monomial(const FieldElement& c, std::size_t k);
  static Polynomial x(const FieldSpec& field);

  const FieldSpec& field() const { return field_; }
  const std::vector<Code>& codes() const { return coeffs_; }
  int degree() const { return coeffs_.empty() ? kMinusInfinity : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  /// Coefficient of x^i (zero beyond the degree).
  FieldElement coeff(std::size_t i) const;
  FieldElement leading() const;

  Polynomial monic() const;
  Polynomial derivative() const;
  /// Horner evaluation.
  FieldElement operator()(const FieldElement& c) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const FieldElement& c, const Polynomial& a);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_ && a.field_ == b.field_;
  }

  /// "c0 + c1*x + c2*x^2 + ...", zero terms omitted; "0" for zero.
  std::string to_string() const;

 private:
  FieldSpec field_;
  std::vector<Code> coeffs_;
};

/// Canonical factor order: by degree, then coefficients compared from the
/// constant term upwards.
bool canonical_less(const Polynomial& a, const Polynomial& b);

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

DivMod divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator/(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// Monic lcm; lcm with zero is zero.
Polynomial lcm(const Polynomial& a, const Polynomial& b);
/// base^e mod modulus.
Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus);
Polynomial pow(const Polynomial& base, std::uint64_t e);

/// gcd(f, f') == 1.
bool is_squarefree(const Polynomial& f);

struct FactorPower {
  Polynomial factor;
  unsigned multiplicity;
};

struct Factorization {
  FieldElement unit;
  std::vector<FactorPower> factors;

  /// unit * prod factor^multiplicity.
  Polynomial expand() const;
  bool is_squarefree() const;
  std::string to_string() const;
};

/// Squarefree decomposition of a monic polynomial: pairs (s_i, i) with
/// f = prod s_i^i and each s_i squarefree, handling p-th power descent.
std::vector<FactorPower> squarefree_decomposition(const Polynomial& f);

/// Complete factorization into monic irreducibles (Berlekamp), factors in
/// canonical order.
Factorization factorize(const Polynomial& f);

}  // namespace monocodes
