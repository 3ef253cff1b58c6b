#include "monocodes/structure.hpp"

#include <random>

#include "monocodes/error.hpp"

namespace monocodes {

std::vector<MatrixFq> sylvester_kernel(const MatrixFq& a, const MatrixFq& b) {
  if (!a.is_square() || !b.is_square()) throw PreconditionError("sylvester_kernel needs square matrices");
  require_same_field(a.field(), b.field(), "sylvester_kernel");
  const FieldSpec& f = a.field();
  const std::size_t m = a.rows();
  const std::size_t n = b.rows();
  // Column r*n + c is the image of the unit matrix E_rc under X -> AX - XB.
  MatrixFq op(f, m * n, m * n);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t col = r * n + c;
      for (std::size_t i = 0; i < m; ++i) {
        const std::size_t row = i * n + c;
        op.set_code(row, col, f.add(op.code(row, col), a.code(i, r)));
      }
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t row = r * n + j;
        op.set_code(row, col, f.sub(op.code(row, col), b.code(c, j)));
      }
    }
  }
  std::vector<MatrixFq> out;
  for (const auto& v : kernel(op).vectors()) out.emplace_back(f, m, n, v.codes());
  return out;
}

CentralizerBasis centralizer(const MatrixFq& a) {
  CentralizerBasis out{a, sylvester_kernel(a, a)};
  for (const auto& x : out.basis) {
    if (a * x != x * a) throw InvariantViolation("centralizer element does not commute");
  }
  return out;
}

Subspace cyclic_subspace(const MatrixFq& a, const VectorFq& x) {
  if (!a.is_square() || a.cols() != x.size()) throw PreconditionError("cyclic_subspace: dimension mismatch");
  Subspace span = Subspace::zero(a.field(), x.size());
  VectorFq iterate = x;
  while (!span.contains(iterate)) {
    span = span + Subspace::span(a.field(), x.size(), {iterate});
    iterate = a * iterate;
  }
  return span;
}

std::string to_string(CharacteristicStatus status) {
  switch (status) {
    case CharacteristicStatus::kCertified:
      return "certified";
    case CharacteristicStatus::kRefuted:
      return "refuted";
    case CharacteristicStatus::kUndetermined:
      return "undetermined";
  }
  return "undetermined";
}

namespace {

bool moves_out(const Subspace& v, const MatrixFq& x) {
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (!v.contains(x * v.basis().row(i))) return true;
  }
  return false;
}

MatrixFq combine(const std::vector<MatrixFq>& basis, const std::vector<Code>& coeffs) {
  const FieldSpec& f = basis.front().field();
  MatrixFq out(f, basis.front().rows(), basis.front().cols());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i] != 0) out = out + FieldElement(f, coeffs[i]) * basis[i];
  }
  return out;
}

}  // namespace

CharacteristicReport check_characteristic(const Subspace& v, const MatrixFq& a, const WitnessSearchOptions& options) {
  if (!a.is_square() || a.rows() != v.ambient_dim()) throw PreconditionError("check_characteristic: dimension mismatch");
  CharacteristicReport report{v, is_invariant(v, a), true, CharacteristicStatus::kCertified, std::nullopt, "none", 0};
  const CentralizerBasis cent = centralizer(a);
  for (const auto& x : cent.basis) {
    if (moves_out(v, x)) {
      report.hyperinvariant = false;
      break;
    }
  }
  if (report.hyperinvariant) return report;

  report.status = CharacteristicStatus::kUndetermined;
  const FieldSpec& f = a.field();
  const std::size_t d = cent.dim();
  const auto accept = [&](const MatrixFq& x) {
    ++report.candidates_examined;
    if (moves_out(v, x) && is_invertible(x)) {
      report.witness = x;
      report.status = CharacteristicStatus::kRefuted;
      return true;
    }
    return false;
  };

  std::uint64_t space = 1;
  bool exhaustive = true;
  for (std::size_t i = 0; i < d && exhaustive; ++i) {
    space *= f.q();
    if (space > options.exhaustive_limit) exhaustive = false;
  }

  if (exhaustive) {
    report.search = "exhaustive";
    std::vector<Code> coeffs(d, 0);
    for (std::uint64_t t = 1; t < space; ++t) {
      std::uint64_t rest = t;
      for (std::size_t i = 0; i < d; ++i) {
        coeffs[i] = static_cast<Code>(rest % f.q());
        rest /= f.q();
      }
      if (accept(combine(cent.basis, coeffs))) break;
    }
    return report;
  }

  report.search = "sampled";
  for (const auto& x : cent.basis) {
    if (accept(x)) return report;
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<Code> pick(0, f.q() - 1);
  std::vector<Code> coeffs(d, 0);
  for (std::size_t s = 0; s < options.budget; ++s) {
    for (auto& c : coeffs) c = pick(rng);
    if (accept(combine(cent.basis, coeffs))) break;
  }
  return report;
}

std::vector<GeneralizedComponent> decompose_generalized(const Subspace& c, const MonomialMatrix& m) {
  const FieldSpec& f = m.field();
  const std::size_t n = m.n();
  if (c.ambient_dim() != n) throw PreconditionError("decompose_generalized: ambient dimension mismatch");
  if (!is_invariant(c, m.matrix())) throw PreconditionError("decompose_generalized: subspace is not invariant under A");

  const auto blocks = cycle_blocks(m);
  std::vector<Subspace> parts;
  std::size_t dim_sum = 0;
  Subspace total = Subspace::zero(f, n);
  for (const auto& block : blocks) {
    parts.push_back(kernel(evaluate(block.annihilator(), m.matrix())));
    dim_sum += parts.back().dim();
    total = total + parts.back();
  }
  if (dim_sum != n || total.dim() != n) {
    // Blocks share factors, so the annihilator kernels overlap; fall back to
    // the coordinate blocks, which always split F_q^n.
    parts.clear();
    for (const auto& block : blocks) {
      std::vector<VectorFq> units;
      for (std::size_t j : block.coords) {
        VectorFq e(f, n);
        e.set_code(j, 1);
        units.push_back(std::move(e));
      }
      parts.push_back(Subspace::span(f, n, units));
    }
  }

  std::vector<GeneralizedComponent> out;
  std::size_t found = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    Subspace ci = intersect(c, parts[i]);
    if (!is_invariant(ci, m.matrix())) throw InvariantViolation("generalized component is not invariant");
    found += ci.dim();
    if (!ci.is_zero()) out.push_back({i, blocks[i].coords, blocks[i].annihilator(), std::move(ci)});
  }
  if (found != c.dim()) {
    throw PreconditionError("subspace does not split along the cycles of sigma: components reach dimension " +
                            std::to_string(found) + " of " + std::to_string(c.dim()));
  }
  return out;
}

CoprimeBlockReport coprime_block_centralizer(const std::vector<MatrixFq>& blocks) {
  if (blocks.empty()) throw PreconditionError("coprime_block_centralizer needs at least one block");
  CoprimeBlockReport report{{}, {}, {}, CentralizerBasis{block_diagonal(blocks), {}}, true};
  for (const auto& b : blocks) report.char_polys.push_back(characteristic_polynomial(b));
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      const Polynomial shared = gcd(report.char_polys[i], report.char_polys[j]);
      if (!shared.is_one()) {
        throw PreconditionError("blocks " + std::to_string(i) + " and " + std::to_string(j) +
                                " have characteristic polynomials sharing the factor " + shared.to_string());
      }
    }
  }

  const FieldSpec& f = blocks.front().field();
  const std::size_t n = report.product.reference.rows();
  std::vector<std::size_t> offsets;
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    offsets.push_back(offset);
    offset += b.rows();
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    report.diagonal.push_back(centralizer(blocks[i]));
    for (const auto& x : report.diagonal.back().basis) {
      MatrixFq embedded(f, n, n);
      for (std::size_t r = 0; r < x.rows(); ++r) {
        for (std::size_t c = 0; c < x.cols(); ++c) embedded.set_code(offsets[i] + r, offsets[i] + c, x.code(r, c));
      }
      report.product.basis.push_back(std::move(embedded));
    }
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (i == j) continue;
      const std::size_t dim = sylvester_kernel(blocks[i], blocks[j]).size();
      report.off_diagonal.push_back({i, j, dim});
      if (dim != 0) report.certified = false;
    }
  }
  return report;
}

}  // namespace monocodes
