#include "monocodes/poly.hpp"

#include <algorithm>
#include <sstream>

#include "monocodes/error.hpp"
#include "monocodes/linalg.hpp"

namespace monocodes {

namespace {

void trim(std::vector<Code>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

std::vector<Code> to_codes(const FieldSpec& field, const std::vector<FieldElement>& coeffs) {
  std::vector<Code> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    require_same_field(field, c.field(), "polynomial coefficient");
    out.push_back(c.code());
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(FieldSpec field) : field_(std::move(field)) {}

Polynomial::Polynomial(FieldSpec field, std::vector<Code> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (Code c : coeffs_) {
    if (c >= field_.q()) throw PreconditionError("polynomial coefficient code out of range");
  }
  trim(coeffs_);
}

Polynomial::Polynomial(FieldSpec field, const std::vector<FieldElement>& coeffs)
    : Polynomial(field, to_codes(field, coeffs)) {}

Polynomial Polynomial::from_ints(const FieldSpec& field, std::initializer_list<long long> coeffs) {
  return from_ints(field, std::vector<long long>(coeffs));
}

Polynomial Polynomial::from_ints(const FieldSpec& field, const std::vector<long long>& coeffs) {
  std::vector<Code> codes;
  codes.reserve(coeffs.size());
  for (long long c : coeffs) codes.push_back(field.code_of_int(c));
  return Polynomial(field, std::move(codes));
}

Polynomial Polynomial::constant(const FieldElement& c) { return Polynomial(c.field(), std::vector<Code>{c.code()}); }

Polynomial Polynomial::monomial(const FieldElement& c, std::size_t k) {
  std::vector<Code> codes(k + 1, 0);
  codes[k] = c.code();
  return Polynomial(c.field(), std::move(codes));
}

Polynomial Polynomial::x(const FieldSpec& field) { return monomial(field.one(), 1); }

FieldElement Polynomial::coeff(std::size_t i) const {
  return FieldElement(field_, i < coeffs_.size() ? coeffs_[i] : 0);
}

FieldElement Polynomial::leading() const {
  if (coeffs_.empty()) throw PreconditionError("zero polynomial has no leading coefficient");
  return FieldElement(field_, coeffs_.back());
}

Polynomial Polynomial::monic() const {
  if (coeffs_.empty()) return *this;
  const Code inv = field_.inv(coeffs_.back());
  std::vector<Code> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = field_.mul(coeffs_[i], inv);
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial(field_);
  std::vector<Code> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = field_.mul(coeffs_[i], field_.code_of_int(static_cast<long long>(i)));
  }
  return Polynomial(field_, std::move(out));
}

FieldElement Polynomial::operator()(const FieldElement& c) const {
  require_same_field(field_, c.field(), "polynomial evaluation");
  Code acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, c.code()), coeffs_[i]);
  return FieldElement(field_, acc);
}

Polynomial Polynomial::operator-() const {
  std::vector<Code> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = field_.neg(coeffs_[i]);
  return Polynomial(field_, std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.field_, b.field_, "polynomial add");
  std::vector<Code> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Code x = i < a.coeffs_.size() ? a.coeffs_[i] : 0;
    const Code y = i < b.coeffs_.size() ? b.coeffs_[i] : 0;
    out[i] = a.field_.add(x, y);
  }
  return Polynomial(a.field_, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.field_, b.field_, "polynomial mul");
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  const FieldSpec& f = a.field_;
  std::vector<Code> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return Polynomial(f, std::move(out));
}

Polynomial operator*(const FieldElement& c, const Polynomial& a) {
  require_same_field(c.field(), a.field_, "polynomial scale");
  std::vector<Code> out(a.coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field_.mul(c.code(), a.coeffs_[i]);
  return Polynomial(a.field_, std::move(out));
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  const bool compound = field_.m() > 1;
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    std::string c = field_.format(coeffs_[i]);
    if (compound && c.find('+') != std::string::npos) c = "(" + c + ")";
    if (i == 0) {
      out += c;
      continue;
    }
    if (coeffs_[i] != 1) out += c + "*";
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

bool canonical_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.codes() < b.codes();
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.field(), b.field(), "polynomial divmod");
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  const FieldSpec& f = a.field();
  std::vector<Code> rem = a.codes();
  const std::vector<Code>& div = b.codes();
  if (rem.size() < div.size()) return {Polynomial(f), a};
  std::vector<Code> quot(rem.size() - div.size() + 1, 0);
  const Code lead_inv = f.inv(div.back());
  while (rem.size() >= div.size()) {
    const Code factor = f.mul(rem.back(), lead_inv);
    const std::size_t shift = rem.size() - div.size();
    quot[shift] = factor;
    for (std::size_t i = 0; i < div.size(); ++i) rem[shift + i] = f.sub(rem[shift + i], f.mul(factor, div[i]));
    trim(rem);
  }
  return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).quotient; }
Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).remainder; }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field());
  return ((a * b) / gcd(a, b)).monic();
}

Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus) {
  Polynomial result = Polynomial::constant(base.field().one()) % modulus;
  Polynomial b = base % modulus;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = (result * b) % modulus;
    b = (b * b) % modulus;
  }
  return result;
}

Polynomial pow(const Polynomial& base, std::uint64_t e) {
  Polynomial result = Polynomial::constant(base.field().one());
  Polynomial b = base;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = result * b;
    if (e > 1) b = b * b;
  }
  return result;
}

bool is_squarefree(const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("is_squarefree: zero polynomial");
  return gcd(f, f.derivative()).is_one();
}

Polynomial Factorization::expand() const {
  Polynomial out = Polynomial::constant(unit);
  for (const auto& fp : factors) out = out * pow(fp.factor, fp.multiplicity);
  return out;
}

bool Factorization::is_squarefree() const {
  return std::all_of(factors.begin(), factors.end(), [](const FactorPower& fp) { return fp.multiplicity == 1; });
}

std::string Factorization::to_string() const {
  std::ostringstream out;
  if (!unit.is_one() || factors.empty()) out << unit.to_string();
  for (const auto& fp : factors) {
    out << "(" << fp.factor.to_string() << ")";
    if (fp.multiplicity > 1) out << "^" << fp.multiplicity;
  }
  return out.str();
}

namespace {

// p-th root of a polynomial whose derivative vanishes.
Polynomial pth_root(const Polynomial& f) {
  const FieldSpec& field = f.field();
  const std::uint32_t p = field.p();
  std::uint64_t root_exp = 1;  // c -> c^(p^(m-1)) inverts Frobenius
  for (std::uint32_t i = 1; i < field.m(); ++i) root_exp *= p;
  std::vector<Code> out;
  for (std::size_t i = 0; i < f.codes().size(); i += p) out.push_back(field.pow(f.codes()[i], root_exp));
  return Polynomial(field, std::move(out));
}

void merge_factor(std::vector<FactorPower>& out, const Polynomial& factor, unsigned multiplicity) {
  for (auto& fp : out) {
    if (fp.factor == factor) {
      fp.multiplicity += multiplicity;
      return;
    }
  }
  out.push_back({factor, multiplicity});
}

// Splits a monic squarefree polynomial into its irreducible factors.
std::vector<Polynomial> berlekamp(const Polynomial& f) {
  const FieldSpec& field = f.field();
  const std::size_t d = static_cast<std::size_t>(f.degree());
  if (d <= 1) return {f};

  // Row i holds x^(q*i) mod f; fixed points of Frobenius are the left
  // kernel of Q - I.
  MatrixFq q_minus_i(field, d, d);
  const Polynomial xq = powmod(Polynomial::x(field), field.q(), f);
  Polynomial row = Polynomial::constant(field.one());
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) q_minus_i.set_code(j, i, row.coeff(j).code());
    q_minus_i.set_code(i, i, field.sub(q_minus_i.code(i, i), 1));
    row = (row * xq) % f;
  }
  const Subspace fixed = kernel(q_minus_i);
  const std::size_t expected = fixed.dim();

  std::vector<Polynomial> factors{f};
  const auto elements = field_elements(field);
  for (std::size_t b = 0; b < fixed.dim() && factors.size() < expected; ++b) {
    const Polynomial g(field, fixed.basis().row(b).codes());
    if (g.degree() < 1) continue;
    std::vector<Polynomial> next;
    for (const auto& h : factors) {
      if (h.degree() == 1) {
        next.push_back(h);
        continue;
      }
      for (const auto& s : elements) {
        Polynomial piece = gcd(h, g - Polynomial::constant(s));
        if (piece.degree() >= 1) next.push_back(std::move(piece));
      }
    }
    factors = std::move(next);
  }
  if (factors.size() != expected) throw InvariantViolation("Berlekamp splitting did not separate all factors");
  return factors;
}

}  // namespace

std::vector<FactorPower> squarefree_decomposition(const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("squarefree_decomposition: zero polynomial");
  std::vector<FactorPower> out;
  if (f.degree() == 0) return out;
  const Polynomial monic = f.monic();
  Polynomial c = gcd(monic, monic.derivative());
  Polynomial w = monic / c;
  unsigned i = 1;
  while (!w.is_one()) {
    Polynomial y = gcd(w, c);
    Polynomial piece = w / y;
    if (!piece.is_one()) out.push_back({piece, i});
    w = std::move(y);
    c = c / w;
    ++i;
  }
  if (!c.is_one()) {
    const unsigned p = f.field().p();
    for (const auto& fp : squarefree_decomposition(pth_root(c))) merge_factor(out, fp.factor, fp.multiplicity * p);
  }
  return out;
}

Factorization factorize(const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("factorize: zero polynomial");
  Factorization out{f.leading(), {}};
  for (const auto& part : squarefree_decomposition(f)) {
    for (auto& irreducible : berlekamp(part.factor)) merge_factor(out.factors, irreducible, part.multiplicity);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const FactorPower& a, const FactorPower& b) { return canonical_less(a.factor, b.factor); });
  return out;
}

}  // namespace monocodes
