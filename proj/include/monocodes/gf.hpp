#pragma once

// Exact arithmetic in GF(p^m).
//
// An element is stored as a compact code: the integer whose base-p digits
// are its coefficients over the polynomial basis 1, x, ..., x^(m-1), lowest
// degree in the least significant digit. Code order is therefore the
// enumeration order of field_elements(), and containers (vectors, matrices,
// polynomials) store raw codes next to a single FieldSpec.

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace monocodes {

using Code = std::uint32_t;

class FieldElement;

/// Description of GF(p^m). Cheap to copy; all copies share one immutable
/// payload.
class FieldSpec {
 public:
  /// Builds GF(p^m). For m > 1 the modulus is the lexicographically smallest
  /// monic irreducible of degree m (coefficients compared low degree first).
  FieldSpec(std::uint32_t p, std::uint32_t m = 1);

  std::uint32_t p() const;
  std::uint32_t m() const;
  std::uint32_t q() const;
  /// Monic modulus, low degree first (m + 1 entries); empty when m == 1.
  const std::vector<std::uint32_t>& modulus() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement element(Code code) const;
  /// Image of an integer under Z -> F_p -> F_q.
  FieldElement from_int(long long value) const;
  Code code_of_int(long long value) const;

  // Raw-code arithmetic used by the dense containers.
  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;
  Code div(Code a, Code b) const;
  Code pow(Code a, std::uint64_t k) const;

  /// Coefficients of an element over 1, x, ..., x^(m-1).
  std::vector<std::uint32_t> digits(Code a) const;
  Code from_digits(const std::vector<std::uint32_t>& digits) const;

  /// Integer 0..p-1 for prime fields, "c0+c1*x+..." otherwise.
  std::string format(Code a) const;
  Code parse(std::string_view text) const;

  std::string describe() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b);

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

/// Immutable element of a FieldSpec. Mixing fields throws PreconditionError.
class FieldElement {
 public:
  FieldElement(FieldSpec field, Code code);

  const FieldSpec& field() const { return field_; }
  Code code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return code_ == 1; }
  std::vector<std::uint32_t> coeffs() const { return field_.digits(code_); }

  FieldElement operator-() const;
  FieldElement inverse() const;
  /// a^k by square-and-multiply; 0^0 = 1.
  FieldElement pow(std::uint64_t k) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.code_ == b.code_ && a.field_ == b.field_;
  }
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
    return a.code_ <=> b.code_;
  }

  std::string to_string() const { return field_.format(code_); }

 private:
  FieldSpec field_;
  Code code_;
};

/// All q elements in code order: 0..p-1 for prime fields, coefficient vectors
/// with the constant coefficient varying fastest otherwise.
std::vector<FieldElement> field_elements(const FieldSpec& field);

bool is_prime(std::uint64_t n);

/// Throws PreconditionError unless both operands live in the same field.
void require_same_field(const FieldSpec& a, const FieldSpec& b, std::string_view what);

}  // namespace monocodes
