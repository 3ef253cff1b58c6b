#include "monocodes/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "monocodes/error.hpp"

namespace monocodes {

// ------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<std::size_t> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size(), false);
  for (std::size_t j = 0; j < map_.size(); ++j) {
    if (map_[j] >= map_.size() || seen[map_[j]]) {
      throw PreconditionError("not a permutation: image of " + std::to_string(j) + " is invalid or repeated");
    }
    seen[map_[j]] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), std::size_t{0});
  return Permutation(std::move(map));
}

Permutation Permutation::standard_cycle(std::size_t n) {
  std::vector<std::size_t> map(n);
  for (std::size_t j = 0; j < n; ++j) map[j] = (j + 1) % n;
  return Permutation(std::move(map));
}

Permutation Permutation::parse(std::string_view text, std::size_t n, bool one_based) {
  const std::size_t offset = one_based ? 1 : 0;
  const auto fail = [&](std::size_t pos, const std::string& why) {
    return PreconditionError("permutation '" + std::string(text) + "' at position " + std::to_string(pos) + ": " + why);
  };
  // Reads an index starting at pos; returns the 0-based value.
  const auto read_index = [&](std::size_t& pos) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) throw fail(pos, "expected an index");
    if (value < offset || value - offset >= n) {
      throw fail(pos, "index " + std::to_string(value) + " out of range for n = " + std::to_string(n));
    }
    pos = static_cast<std::size_t>(ptr - text.data());
    return value - offset;
  };
  const auto skip_separators = [&](std::size_t& pos) {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) ++pos;
  };

  std::size_t pos = 0;
  skip_separators(pos);
  if (pos < text.size() && text[pos] == '[') {
    ++pos;
    std::vector<std::size_t> map;
    skip_separators(pos);
    while (pos < text.size() && text[pos] != ']') {
      map.push_back(read_index(pos));
      skip_separators(pos);
    }
    if (pos >= text.size()) throw fail(pos, "missing ']'");
    if (map.size() != n) throw fail(pos, "one-line notation has " + std::to_string(map.size()) + " entries, expected " + std::to_string(n));
    return Permutation(std::move(map));
  }

  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), std::size_t{0});
  std::vector<bool> used(n, false);
  while (pos < text.size()) {
    if (text[pos] != '(') throw fail(pos, "expected '('");
    ++pos;
    std::vector<std::size_t> cycle;
    skip_separators(pos);
    while (pos < text.size() && text[pos] != ')') {
      const std::size_t start = pos;
      const std::size_t idx = read_index(pos);
      if (used[idx]) throw fail(start, "index " + std::to_string(idx + offset) + " appears twice");
      used[idx] = true;
      cycle.push_back(idx);
      skip_separators(pos);
    }
    if (pos >= text.size()) throw fail(pos, "missing ')'");
    ++pos;
    for (std::size_t k = 0; k < cycle.size(); ++k) map[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_separators(pos);
  }
  return Permutation(std::move(map));
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(map_.size(), false);
  for (std::size_t start = 0; start < map_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t j = start; !seen[j]; j = map_[j]) {
      seen[j] = true;
      cycle.push_back(j);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<std::size_t> Permutation::cycle_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& c : cycles()) out.push_back(c.size());
  return out;
}

bool Permutation::is_standard_cycle() const { return *this == standard_cycle(map_.size()); }

MatrixFq Permutation::matrix(const FieldSpec& field) const {
  MatrixFq out(field, map_.size(), map_.size());
  for (std::size_t j = 0; j < map_.size(); ++j) out.set_code(map_[j], j, 1);
  return out;
}

std::string Permutation::to_string() const {
  std::string out;
  for (const auto& cycle : cycles()) {
    out += "(";
    for (std::size_t k = 0; k < cycle.size(); ++k) out += (k ? " " : "") + std::to_string(cycle[k]);
    out += ")";
  }
  return out;
}

// ---------------------------------------------------------- MonomialMatrix

MonomialMatrix::MonomialMatrix(VectorFq a, Permutation sigma, MatrixFq matrix, bool simple)
    : a_(std::move(a)), sigma_(std::move(sigma)), matrix_(std::move(matrix)), simple_(simple) {}

MonomialMatrix MonomialMatrix::simple(const VectorFq& a) { return general(a, Permutation::standard_cycle(a.size())); }

MonomialMatrix MonomialMatrix::general(const VectorFq& a, const Permutation& sigma) {
  const std::size_t n = a.size();
  if (n == 0) throw PreconditionError("monomial matrix needs n >= 1");
  if (sigma.size() != n) {
    throw PreconditionError("permutation size " + std::to_string(sigma.size()) + " does not match n = " + std::to_string(n));
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (a.code(j) == 0) throw PreconditionError("monomial coefficient a_" + std::to_string(j) + " is zero");
  }
  MatrixFq m(a.field(), n, n);
  for (std::size_t j = 0; j < n; ++j) m.set_code(sigma(j), j, a.code(j));
  return MonomialMatrix(a, sigma, std::move(m), sigma.is_standard_cycle());
}

FieldElement MonomialMatrix::product() const {
  FieldElement out = field().one();
  for (std::size_t j = 0; j < n(); ++j) out = out * a_[j];
  return out;
}

// -------------------------------------------------------------- operations

namespace {

void require_simple(const MonomialMatrix& m, const char* op) {
  if (!m.is_simple()) throw PreconditionError(std::string(op) + " is defined for simple monomial matrices only");
}

}  // namespace

PowerAndInverse power_and_inverse(const MonomialMatrix& m) {
  require_simple(m, "power_and_inverse");
  const FieldSpec& f = m.field();
  const std::size_t n = m.n();
  const FieldElement prod = m.product();
  const MatrixFq power = prod * MatrixFq::identity(f, n);
  const MatrixFq inv = prod.inverse() * matrix_power(m.matrix(), n - 1);
  if (matrix_power(m.matrix(), n) != power) throw InvariantViolation("A^n differs from (prod a_i) I");
  if (m.matrix() * inv != MatrixFq::identity(f, n)) throw InvariantViolation("closed-form inverse is wrong");
  return {power, inv};
}

CompanionSimilarity companion_similarity(const MonomialMatrix& m) {
  require_simple(m, "companion_similarity");
  const FieldSpec& f = m.field();
  const std::size_t n = m.n();
  const FieldElement prod = m.product();
  MatrixFq companion(f, n, n);
  MatrixFq s(f, n, n);
  companion.set(0, n - 1, prod);
  s.set(0, n - 1, prod);
  FieldElement partial = f.one();
  for (std::size_t i = 1; i < n; ++i) {
    companion.set_code(i, i - 1, 1);
    partial = partial * m.coefficients()[i - 1];
    s.set(i, i - 1, partial);
  }
  const auto s_inv = inverse(s);
  if (!s_inv) throw InvariantViolation("similarity matrix S is singular");
  if (*s_inv * m.matrix() * s == companion) return {companion, s, SimilarityDirection::kSInverseAS};
  if (s * m.matrix() * *s_inv == companion) return {companion, s, SimilarityDirection::kSASInverse};
  throw InvariantViolation("S conjugates A to A_a in neither direction");
}

CharPoly char_poly(const MonomialMatrix& m) {
  const FieldSpec& f = m.field();
  Polynomial monic = Polynomial::constant(f.one());
  for (const auto& block : cycle_blocks(m)) monic = monic * block.annihilator();
  const FieldElement unit = (m.n() % 2 == 0) ? f.one() : -f.one();
  return {unit, monic};
}

std::vector<EigenPair> eigen_pairs(const MonomialMatrix& m) {
  require_simple(m, "eigen_pairs");
  const std::size_t n = m.n();
  const FieldElement prod = m.product();
  const VectorFq& a = m.coefficients();
  std::vector<EigenPair> out;
  for (const auto& lambda : field_elements(m.field())) {
    if (lambda.pow(n) != prod) continue;
    VectorFq v(m.field(), n);
    FieldElement partial = m.field().one();
    for (std::size_t i = 0; i < n; ++i) {
      v.set(i, partial * lambda.pow(n - 1 - i));
      if (i + 1 < n) partial = partial * a[i];
    }
    if (v.is_zero() || m.matrix() * v != lambda * v) throw InvariantViolation("closed-form eigenvector check failed");
    out.push_back({lambda, std::move(v)});
  }
  return out;
}

Polynomial perm_min_poly(const Permutation& sigma, const FieldSpec& field) {
  std::size_t l = 1;
  for (std::size_t len : sigma.cycle_lengths()) l = std::lcm(l, len);
  return Polynomial::monomial(field.one(), l) - Polynomial::constant(field.one());
}

Polynomial CycleBlock::annihilator() const {
  return Polynomial::monomial(alpha.field().one(), coords.size()) - Polynomial::constant(alpha);
}

std::vector<CycleBlock> cycle_blocks(const MonomialMatrix& m) {
  const FieldSpec& f = m.field();
  std::vector<CycleBlock> out;
  std::vector<std::size_t> order;
  std::vector<MatrixFq> diagonal;
  for (const auto& cycle : m.sigma().cycles()) {
    VectorFq local(f, cycle.size());
    FieldElement alpha = f.one();
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      local.set_code(k, m.coefficients().code(cycle[k]));
      alpha = alpha * local[k];
    }
    MonomialMatrix block = MonomialMatrix::simple(local);
    diagonal.push_back(block.matrix());
    order.insert(order.end(), cycle.begin(), cycle.end());
    out.push_back({cycle, std::move(block), alpha});
  }
  // Reordering coordinates cycle by cycle must give the block-diagonal form.
  MatrixFq reordered(f, m.n(), m.n());
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) reordered.set_code(i, j, m.matrix().code(order[i], order[j]));
  }
  if (reordered != block_diagonal(diagonal)) throw InvariantViolation("cycle blocks do not reassemble the matrix");
  return out;
}

}  // namespace monocodes
