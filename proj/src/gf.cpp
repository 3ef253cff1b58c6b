#include "monocodes/gf.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "monocodes/error.hpp"

namespace monocodes {

namespace {

using Digits = std::vector<std::uint32_t>;

constexpr std::uint64_t kMaxFieldSize = 1u << 16;

void trim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Digits mul_mod_p(const Digits& a, const Digits& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Digits out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  trim(out);
  return out;
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b (b nonzero, any leading coefficient).
Digits rem_mod_p(Digits a, const Digits& b, std::uint32_t p) {
  trim(a);
  const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - factor * b[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

Digits divexact_mod_p(Digits a, const Digits& b, std::uint32_t p, Digits& remainder) {
  trim(a);
  if (a.size() < b.size()) {
    remainder = a;
    return {};
  }
  Digits quot(a.size() - b.size() + 1, 0);
  const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    quot[shift] = static_cast<std::uint32_t>(factor);
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - factor * b[i] % p) % p);
    }
    trim(a);
  }
  remainder = a;
  return quot;
}

Digits sub_mod_p(Digits a, const Digits& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

// True when the monic polynomial f has no monic factor of degree 1..deg/2.
bool is_irreducible_mod_p(const Digits& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t t = 0; t < count; ++t) {
      Digits g(d + 1, 0);
      std::uint64_t rest = t;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      g[d] = 1;
      if (rem_mod_p(f, g, p).empty()) return false;
    }
  }
  return true;
}

Digits smallest_irreducible(std::uint32_t p, std::uint32_t m) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < m; ++i) count *= p;
  for (std::uint64_t t = 0; t < count; ++t) {
    // c0 is the most significant digit of t, so t walks the low-first
    // lexicographic order.
    Digits f(m + 1, 0);
    std::uint64_t rest = t;
    for (std::uint32_t i = m; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    f[m] = 1;
    if (f[0] == 0) continue;
    if (is_irreducible_mod_p(f, p)) return f;
  }
  throw InvariantViolation("no irreducible polynomial found");
}

}  // namespace

struct FieldSpec::Data {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::uint32_t q = 0;
  Digits modulus;
};

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw PreconditionError("field characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw PreconditionError("field extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldSize) {
      throw PreconditionError("field size " + std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^16");
    }
  }
  auto data = std::make_shared<Data>();
  data->p = p;
  data->m = m;
  data->q = static_cast<std::uint32_t>(q);
  if (m > 1) {
    data->modulus = smallest_irreducible(p, m);
    if (!is_irreducible_mod_p(data->modulus, p)) throw InvariantViolation("modulus is reducible");
  }
  data_ = std::move(data);
}

std::uint32_t FieldSpec::p() const { return data_->p; }
std::uint32_t FieldSpec::m() const { return data_->m; }
std::uint32_t FieldSpec::q() const { return data_->q; }
const std::vector<std::uint32_t>& FieldSpec::modulus() const { return data_->modulus; }

FieldElement FieldSpec::zero() const { return FieldElement(*this, 0); }
FieldElement FieldSpec::one() const { return FieldElement(*this, 1); }

FieldElement FieldSpec::element(Code code) const {
  if (code >= q()) throw PreconditionError("element code " + std::to_string(code) + " out of range for " + describe());
  return FieldElement(*this, code);
}

Code FieldSpec::code_of_int(long long value) const {
  const long long p = data_->p;
  return static_cast<Code>(((value % p) + p) % p);
}

FieldElement FieldSpec::from_int(long long value) const { return FieldElement(*this, code_of_int(value)); }

std::vector<std::uint32_t> FieldSpec::digits(Code a) const {
  Digits out(data_->m, 0);
  for (std::uint32_t i = 0; i < data_->m; ++i) {
    out[i] = a % data_->p;
    a /= data_->p;
  }
  return out;
}

Code FieldSpec::from_digits(const std::vector<std::uint32_t>& digits) const {
  Code code = 0;
  for (std::size_t i = digits.size(); i-- > 0;) code = code * data_->p + digits[i] % data_->p;
  return code;
}

Code FieldSpec::add(Code a, Code b) const {
  const std::uint32_t p = data_->p;
  if (data_->m == 1) return (a + b) % p;
  Code out = 0, scale = 1;
  while (a != 0 || b != 0) {
    out += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

Code FieldSpec::neg(Code a) const {
  const std::uint32_t p = data_->p;
  if (data_->m == 1) return (p - a) % p;
  Code out = 0, scale = 1;
  while (a != 0) {
    out += ((p - a % p) % p) * scale;
    a /= p;
    scale *= p;
  }
  return out;
}

Code FieldSpec::sub(Code a, Code b) const { return add(a, neg(b)); }

Code FieldSpec::mul(Code a, Code b) const {
  if (data_->m == 1) return static_cast<Code>(std::uint64_t{a} * b % data_->p);
  Digits prod = mul_mod_p(digits(a), digits(b), data_->p);
  if (prod.size() > data_->m) prod = rem_mod_p(std::move(prod), data_->modulus, data_->p);
  return from_digits(prod);
}

Code FieldSpec::inv(Code a) const {
  if (a == 0) throw PreconditionError("division by zero in " + describe());
  const std::uint32_t p = data_->p;
  if (data_->m == 1) return inv_mod_p(a, p);
  // Extended Euclid on (modulus, a) over F_p, tracking the cofactor of a.
  Digits r0 = data_->modulus, r1 = digits(a);
  trim(r1);
  Digits s0, s1{1};
  while (r1.size() > 1) {
    Digits rem;
    Digits quot = divexact_mod_p(r0, r1, p, rem);
    Digits next = sub_mod_p(s0, mul_mod_p(quot, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(next);
  }
  // r1 is a nonzero constant since the modulus is irreducible.
  const std::uint64_t c = inv_mod_p(r1[0], p);
  for (auto& d : s1) d = static_cast<std::uint32_t>(d * c % p);
  s1.resize(data_->m, 0);
  return from_digits(s1);
}

Code FieldSpec::div(Code a, Code b) const { return mul(a, inv(b)); }

Code FieldSpec::pow(Code a, std::uint64_t k) const {
  Code result = 1, base = a;
  for (; k > 0; k >>= 1) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

std::string FieldSpec::format(Code a) const {
  if (data_->m == 1) return std::to_string(a);
  if (a == 0) return "0";
  const Digits d = digits(a);
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(d[i]);
      continue;
    }
    if (d[i] != 1) out += std::to_string(d[i]) + "*";
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Code FieldSpec::parse(std::string_view text) const {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw PreconditionError("empty field element");
  const auto bad = [&](const std::string& why) {
    return PreconditionError("cannot parse field element '" + std::string(text) + "': " + why);
  };
  const auto read_int = [&](std::size_t& pos) -> long long {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), v);
    if (ec != std::errc{}) throw bad("expected integer at position " + std::to_string(pos));
    pos = static_cast<std::size_t>(ptr - s.data());
    return v;
  };

  Digits acc(data_->m, 0);
  std::size_t pos = 0;
  const long long p = data_->p;
  while (pos < s.size()) {
    long long sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    }
    long long coeff = 1;
    bool has_coeff = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff = read_int(pos);
      has_coeff = true;
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    std::size_t degree = 0;
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      degree = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        degree = static_cast<std::size_t>(read_int(pos));
      }
    } else if (!has_coeff) {
      throw bad("unexpected character at position " + std::to_string(pos));
    }
    if (degree >= data_->m) throw bad("degree " + std::to_string(degree) + " not below m");
    acc[degree] = static_cast<std::uint32_t>((((acc[degree] + sign * coeff) % p) + p) % p);
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
      throw bad("unexpected character at position " + std::to_string(pos));
    }
  }
  return from_digits(acc);
}

std::string FieldSpec::describe() const {
  if (data_->m == 1) return "GF(" + std::to_string(data_->p) + ")";
  return "GF(" + std::to_string(data_->p) + "^" + std::to_string(data_->m) + ")";
}

bool operator==(const FieldSpec& a, const FieldSpec& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->p == b.data_->p && a.data_->m == b.data_->m && a.data_->modulus == b.data_->modulus;
}

void require_same_field(const FieldSpec& a, const FieldSpec& b, std::string_view what) {
  if (!(a == b)) {
    throw PreconditionError(std::string(what) + ": mismatched fields " + a.describe() + " and " + b.describe());
  }
}

FieldElement::FieldElement(FieldSpec field, Code code) : field_(std::move(field)), code_(code) {}

FieldElement FieldElement::operator-() const { return FieldElement(field_, field_.neg(code_)); }
FieldElement FieldElement::inverse() const { return FieldElement(field_, field_.inv(code_)); }
FieldElement FieldElement::pow(std::uint64_t k) const { return FieldElement(field_, field_.pow(code_, k)); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_, "add");
  return FieldElement(a.field_, a.field_.add(a.code_, b.code_));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_, "sub");
  return FieldElement(a.field_, a.field_.sub(a.code_, b.code_));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_, "mul");
  return FieldElement(a.field_, a.field_.mul(a.code_, b.code_));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_, "div");
  return FieldElement(a.field_, a.field_.div(a.code_, b.code_));
}

std::vector<FieldElement> field_elements(const FieldSpec& field) {
  std::vector<FieldElement> out;
  out.reserve(field.q());
  for (Code c = 0; c < field.q(); ++c) out.emplace_back(field, c);
  return out;
}

}  // namespace monocodes
