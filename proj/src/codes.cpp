#include "monocodes/codes.hpp"

#include <algorithm>
#include <cmath>

#include "monocodes/error.hpp"

namespace monocodes {

namespace {

FieldElement sign_power(const FieldSpec& f, std::size_t k) { return k % 2 == 0 ? f.one() : -f.one(); }

}  // namespace

Decomposition decompose(const MonomialMatrix& m) {
  const FieldSpec& f = m.field();
  const std::size_t n = m.n();
  if (m.is_simple() && n % f.p() == 0) {
    throw PreconditionError("gcd(n, q) != 1 for n = " + std::to_string(n) + ", q = " + std::to_string(f.q()) +
                            ": x^n - a has repeated irreducible factors");
  }
  CharPoly cp = char_poly(m);
  Factorization fact = factorize(cp.monic);
  for (const auto& fp : fact.factors) {
    if (fp.multiplicity > 1) {
      throw PreconditionError("characteristic polynomial has the repeated irreducible factor " + fp.factor.to_string() +
                              " (multiplicity " + std::to_string(fp.multiplicity) + "); cycle blocks collide");
    }
  }

  std::vector<MinimalComponent> components;
  Subspace total = Subspace::zero(f, n);
  std::size_t dim_sum = 0;
  for (std::size_t i = 0; i < fact.factors.size(); ++i) {
    const Polynomial& fi = fact.factors[i].factor;
    Subspace w = kernel(evaluate(fi, m.matrix()));
    if (w.dim() != static_cast<std::size_t>(fi.degree())) throw InvariantViolation("dim W_i differs from deg f_i");
    if (!is_invariant(w, m.matrix())) throw InvariantViolation("W_i is not A-invariant");
    dim_sum += w.dim();
    total = total + w;
    components.push_back({i, fi, std::move(w)});
  }
  if (dim_sum != n || total.dim() != n) throw InvariantViolation("components do not form a direct sum of F_q^n");
  return {m, std::move(cp), std::move(fact), std::move(components)};
}

LinearCode::LinearCode(MonomialMatrix matrix, Subspace space, std::vector<std::size_t> selection, FieldElement g_unit,
                       Polynomial g_monic)
    : matrix_(std::move(matrix)),
      space_(std::move(space)),
      selection_(std::move(selection)),
      g_unit_(std::move(g_unit)),
      g_monic_(std::move(g_monic)),
      g_of_a_(MatrixFq::identity(matrix_.field(), matrix_.n())) {
  const FieldSpec& f = matrix_.field();
  const std::size_t n = matrix_.n();
  require_same_field(f, space_.field(), "code space");
  if (space_.ambient_dim() != n) throw PreconditionError("code length differs from matrix size");
  if (!g_monic_.is_monic() || static_cast<std::size_t>(g_monic_.degree()) != space_.dim()) {
    throw PreconditionError("defining polynomial degree " + std::to_string(g_monic_.degree()) +
                            " does not match code dimension " + std::to_string(space_.dim()));
  }
  if (g_unit_ != sign_power(f, space_.dim())) throw PreconditionError("defining polynomial unit is not (-1)^k");
  if (!is_invariant(space_, matrix_.matrix())) throw PreconditionError("code is not invariant under A");
  g_of_a_ = evaluate(g(), matrix_.matrix());
  if (rank(g_of_a_) != n - space_.dim()) throw InvariantViolation("rank g(A) differs from n - k");
  if (!(kernel(g_of_a_) == space_)) throw InvariantViolation("ker g(A) differs from the code");
}

std::size_t LinearCode::distance() const {
  if (!distance_) distance_ = min_distance(*this);
  return *distance_;
}

LinearCode make_code(const Decomposition& d, std::span<const std::size_t> selection) {
  const FieldSpec& f = d.matrix.field();
  std::vector<std::size_t> sel(selection.begin(), selection.end());
  std::sort(sel.begin(), sel.end());
  if (std::adjacent_find(sel.begin(), sel.end()) != sel.end()) throw PreconditionError("selection repeats a component");
  Subspace space = Subspace::zero(f, d.matrix.n());
  Polynomial g_monic = Polynomial::constant(f.one());
  for (std::size_t i : sel) {
    if (i >= d.components.size()) {
      throw PreconditionError("component index " + std::to_string(i) + " out of range (" +
                              std::to_string(d.components.size()) + " components)");
    }
    space = space + d.components[i].space;
    g_monic = g_monic * d.components[i].factor;
  }
  const std::size_t k = space.dim();
  return LinearCode(d.matrix, std::move(space), std::move(sel), sign_power(f, k), std::move(g_monic));
}

std::vector<LinearCode> enumerate_codes(const Decomposition& d, bool include_trivial) {
  const std::size_t r = d.components.size();
  if (r > 20) throw ResourceGuardError("enumeration refused: " + std::to_string(r) + " components exceed the limit of 20");
  const std::uint64_t full = (std::uint64_t{1} << r) - 1;
  std::vector<LinearCode> out;
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    if (!include_trivial && (mask == 0 || mask == full)) continue;
    std::vector<std::size_t> sel;
    for (std::size_t i = 0; i < r; ++i) {
      if (mask >> i & 1) sel.push_back(i);
    }
    out.push_back(make_code(d, sel));
  }
  return out;
}

bool membership(const LinearCode& code, const VectorFq& c) {
  if (c.size() != code.n()) {
    throw PreconditionError("vector length " + std::to_string(c.size()) + " differs from code length " +
                            std::to_string(code.n()));
  }
  const bool by_polynomial = (code.g_of_a() * c).is_zero();
  if (by_polynomial != code.space().contains(c)) throw InvariantViolation("g(A)c = 0 disagrees with basis containment");
  return by_polynomial;
}

bool shift_closure_check(const Subspace& c, const MonomialMatrix& m) { return is_invariant(c, m.matrix()); }

VectorFq encode(const LinearCode& code, const VectorFq& message) {
  if (message.size() != code.k()) {
    throw PreconditionError("message length " + std::to_string(message.size()) + " differs from k = " +
                            std::to_string(code.k()));
  }
  require_same_field(code.space().field(), message.field(), "encode");
  VectorFq out(message.field(), code.n());
  for (std::size_t i = 0; i < code.k(); ++i) {
    if (message.code(i) != 0) out = out + message[i] * code.space().basis().row(i);
  }
  return out;
}

std::size_t min_distance(const LinearCode& code) {
  const FieldSpec& f = code.space().field();
  const std::size_t k = code.k();
  const std::size_t n = code.n();
  if (static_cast<double>(k) * std::log2(static_cast<double>(f.q())) > kMaxDistanceSearchBits) {
    throw ResourceGuardError("code too large for exhaustive distance: q^k = " + std::to_string(f.q()) + "^" +
                             std::to_string(k) + " exceeds 2^24 messages");
  }
  if (k == 0) return 0;

  // multiples[i][c] = (element c) * row_i
  const MatrixFq& g = code.space().basis();
  std::vector<std::vector<std::vector<Code>>> multiples(k, std::vector<std::vector<Code>>(f.q(), std::vector<Code>(n)));
  for (std::size_t i = 0; i < k; ++i) {
    for (Code c = 0; c < f.q(); ++c) {
      for (std::size_t j = 0; j < n; ++j) multiples[i][c][j] = f.mul(c, g.code(i, j));
    }
  }

  // Odometer over messages; the codeword is updated one digit at a time.
  std::vector<Code> digits(k, 0);
  std::vector<Code> word(n, 0);
  std::size_t best = n;
  while (true) {
    std::size_t i = 0;
    while (i < k && digits[i] == f.q() - 1) {
      for (std::size_t j = 0; j < n; ++j) word[j] = f.sub(word[j], multiples[i][digits[i]][j]);
      digits[i] = 0;
      ++i;
    }
    if (i == k) break;
    for (std::size_t j = 0; j < n; ++j) {
      word[j] = f.add(f.sub(word[j], multiples[i][digits[i]][j]), multiples[i][digits[i] + 1][j]);
    }
    ++digits[i];
    const auto weight = static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Code c) { return c != 0; }));
    best = std::min(best, weight);
  }
  return best;
}

MatrixFq restricted_matrix(const MatrixFq& a, const Subspace& w) {
  if (!a.is_square() || a.rows() != w.ambient_dim()) throw PreconditionError("restricted_matrix: dimension mismatch");
  MatrixFq out(a.field(), w.dim(), w.dim());
  for (std::size_t j = 0; j < w.dim(); ++j) {
    const auto coords = w.coordinates(a * w.basis().row(j));
    if (!coords) throw PreconditionError("restricted_matrix: subspace is not invariant");
    for (std::size_t l = 0; l < w.dim(); ++l) out.set_code(l, j, coords->code(l));
  }
  return out;
}

CharPoly restricted_char_poly(const MatrixFq& a, const Subspace& w) {
  const MatrixFq r = restricted_matrix(a, w);
  return {sign_power(a.field(), w.dim()), characteristic_polynomial(r)};
}

}  // namespace monocodes
