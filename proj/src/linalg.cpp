#include "monocodes/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "monocodes/error.hpp"

namespace monocodes {

namespace {

std::vector<Code> element_codes(const FieldSpec& field, const std::vector<FieldElement>& elements) {
  std::vector<Code> out;
  out.reserve(elements.size());
  for (const auto& e : elements) {
    require_same_field(field, e.field(), "vector entry");
    out.push_back(e.code());
  }
  return out;
}

void require_dims(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError("dimension mismatch: " + what);
}

}  // namespace

// ---------------------------------------------------------------- VectorFq

VectorFq::VectorFq(FieldSpec field, std::size_t n) : field_(std::move(field)), codes_(n, 0) {}

VectorFq::VectorFq(FieldSpec field, std::vector<Code> codes) : field_(std::move(field)), codes_(std::move(codes)) {
  for (Code c : codes_) {
    if (c >= field_.q()) throw PreconditionError("vector entry code out of range");
  }
}

VectorFq::VectorFq(FieldSpec field, const std::vector<FieldElement>& elements)
    : field_(field), codes_(element_codes(field, elements)) {}

VectorFq VectorFq::from_ints(const FieldSpec& field, const std::vector<long long>& values) {
  std::vector<Code> codes;
  codes.reserve(values.size());
  for (long long v : values) codes.push_back(field.code_of_int(v));
  return VectorFq(field, std::move(codes));
}

void VectorFq::set(std::size_t i, const FieldElement& value) {
  require_same_field(field_, value.field(), "vector set");
  codes_.at(i) = value.code();
}

bool VectorFq::is_zero() const {
  return std::all_of(codes_.begin(), codes_.end(), [](Code c) { return c == 0; });
}

std::size_t VectorFq::weight() const {
  return static_cast<std::size_t>(std::count_if(codes_.begin(), codes_.end(), [](Code c) { return c != 0; }));
}

VectorFq operator+(const VectorFq& a, const VectorFq& b) {
  require_same_field(a.field_, b.field_, "vector add");
  require_dims(a.size() == b.size(), "vector add");
  VectorFq out(a.field_, a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.codes_[i] = a.field_.add(a.codes_[i], b.codes_[i]);
  return out;
}

VectorFq operator-(const VectorFq& a, const VectorFq& b) {
  require_same_field(a.field_, b.field_, "vector sub");
  require_dims(a.size() == b.size(), "vector sub");
  VectorFq out(a.field_, a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.codes_[i] = a.field_.sub(a.codes_[i], b.codes_[i]);
  return out;
}

VectorFq operator*(const FieldElement& c, const VectorFq& v) {
  require_same_field(c.field(), v.field_, "vector scale");
  VectorFq out(v.field_, v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.codes_[i] = v.field_.mul(c.code(), v.codes_[i]);
  return out;
}

std::string VectorFq::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    if (i) out += ",";
    out += field_.format(codes_[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------- MatrixFq

MatrixFq::MatrixFq(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), codes_(rows * cols, 0) {}

MatrixFq::MatrixFq(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Code> row_major)
    : field_(std::move(field)), rows_(rows), cols_(cols), codes_(std::move(row_major)) {
  require_dims(codes_.size() == rows_ * cols_, "matrix entry count");
  for (Code c : codes_) {
    if (c >= field_.q()) throw PreconditionError("matrix entry code out of range");
  }
}

MatrixFq MatrixFq::identity(const FieldSpec& field, std::size_t n) {
  MatrixFq out(field, n, n);
  for (std::size_t i = 0; i < n; ++i) out.set_code(i, i, 1);
  return out;
}

MatrixFq MatrixFq::from_ints(const FieldSpec& field, std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<std::vector<long long>> r;
  for (const auto& row : rows) r.emplace_back(row);
  return from_ints(field, r);
}

MatrixFq MatrixFq::from_ints(const FieldSpec& field, const std::vector<std::vector<long long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  MatrixFq out(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_dims(rows[i].size() == cols, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) out.set_code(i, j, field.code_of_int(rows[i][j]));
  }
  return out;
}

MatrixFq MatrixFq::from_rows(const FieldSpec& field, std::size_t cols, const std::vector<VectorFq>& rows) {
  MatrixFq out(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_same_field(field, rows[i].field(), "matrix row");
    require_dims(rows[i].size() == cols, "matrix row length");
    std::copy(rows[i].codes().begin(), rows[i].codes().end(), out.codes_.begin() + static_cast<std::ptrdiff_t>(i * cols));
  }
  return out;
}

void MatrixFq::set(std::size_t i, std::size_t j, const FieldElement& value) {
  require_same_field(field_, value.field(), "matrix set");
  set_code(i, j, value.code());
}

VectorFq MatrixFq::row(std::size_t i) const {
  return VectorFq(field_, std::vector<Code>(codes_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                            codes_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
}

VectorFq MatrixFq::col(std::size_t j) const {
  VectorFq out(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.set_code(i, code(i, j));
  return out;
}

MatrixFq MatrixFq::transpose() const {
  MatrixFq out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.set_code(j, i, code(i, j));
  }
  return out;
}

bool MatrixFq::is_zero() const {
  return std::all_of(codes_.begin(), codes_.end(), [](Code c) { return c == 0; });
}

MatrixFq operator+(const MatrixFq& a, const MatrixFq& b) {
  require_same_field(a.field_, b.field_, "matrix add");
  require_dims(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix add");
  MatrixFq out(a.field_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.codes_.size(); ++i) out.codes_[i] = a.field_.add(a.codes_[i], b.codes_[i]);
  return out;
}

MatrixFq operator-(const MatrixFq& a, const MatrixFq& b) {
  require_same_field(a.field_, b.field_, "matrix sub");
  require_dims(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sub");
  MatrixFq out(a.field_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.codes_.size(); ++i) out.codes_[i] = a.field_.sub(a.codes_[i], b.codes_[i]);
  return out;
}

MatrixFq operator*(const MatrixFq& a, const MatrixFq& b) {
  require_same_field(a.field_, b.field_, "matrix mul");
  require_dims(a.cols_ == b.rows_,
               "matrix mul " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " by " +
                   std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  const FieldSpec& f = a.field_;
  MatrixFq out(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Code aik = a.code(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Code bkj = b.code(k, j);
        if (bkj != 0) out.set_code(i, j, f.add(out.code(i, j), f.mul(aik, bkj)));
      }
    }
  }
  return out;
}

VectorFq operator*(const MatrixFq& a, const VectorFq& v) {
  require_same_field(a.field_, v.field(), "matrix-vector mul");
  require_dims(a.cols_ == v.size(), "matrix-vector mul");
  const FieldSpec& f = a.field_;
  VectorFq out(f, a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    Code acc = 0;
    for (std::size_t j = 0; j < a.cols_; ++j) acc = f.add(acc, f.mul(a.code(i, j), v.code(j)));
    out.set_code(i, acc);
  }
  return out;
}

MatrixFq operator*(const FieldElement& c, const MatrixFq& a) {
  require_same_field(c.field(), a.field_, "matrix scale");
  MatrixFq out(a.field_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.codes_.size(); ++i) out.codes_[i] = a.field_.mul(c.code(), a.codes_[i]);
  return out;
}

std::string MatrixFq::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out << "[";
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? " " : "") << field_.format(code(i, j));
    out << "]\n";
  }
  return out.str();
}

// ------------------------------------------------------------- elimination

RrefResult rref(const MatrixFq& a) {
  const FieldSpec& f = a.field();
  MatrixFq m = a;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m.code(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const Code t = m.code(r, j);
        m.set_code(r, j, m.code(pivot, j));
        m.set_code(pivot, j, t);
      }
    }
    const Code inv = f.inv(m.code(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m.set_code(r, j, f.mul(m.code(r, j), inv));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Code factor = m.code(i, c);
      if (factor == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j) m.set_code(i, j, f.sub(m.code(i, j), f.mul(factor, m.code(r, j))));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), r, std::move(pivots)};
}

std::size_t rank(const MatrixFq& a) { return rref(a).rank; }

std::optional<MatrixFq> inverse(const MatrixFq& a) {
  require_dims(a.is_square(), "inverse of non-square matrix");
  const std::size_t n = a.rows();
  MatrixFq aug(a.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set_code(i, j, a.code(i, j));
    aug.set_code(i, n + i, 1);
  }
  const RrefResult red = rref(aug);
  if (red.rank < n || red.pivots[n - 1] != n - 1) return std::nullopt;
  MatrixFq out(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.set_code(i, j, red.reduced.code(i, n + j));
  }
  return out;
}

bool is_invertible(const MatrixFq& a) { return a.is_square() && rank(a) == a.rows(); }

MatrixFq matrix_power(const MatrixFq& a, std::uint64_t k) {
  require_dims(a.is_square(), "power of non-square matrix");
  MatrixFq result = MatrixFq::identity(a.field(), a.rows());
  MatrixFq base = a;
  for (; k > 0; k >>= 1) {
    if (k & 1) result = result * base;
    if (k > 1) base = base * base;
  }
  return result;
}

MatrixFq evaluate(const Polynomial& f, const MatrixFq& a) {
  require_same_field(f.field(), a.field(), "matrix polynomial evaluation");
  if (!a.is_square()) throw PreconditionError("matrix polynomial evaluation needs a square matrix");
  const std::size_t n = a.rows();
  MatrixFq acc(a.field(), n, n);
  for (std::size_t i = f.codes().size(); i-- > 0;) {
    acc = acc * a;
    const Code c = f.codes()[i];
    for (std::size_t d = 0; d < n; ++d) acc.set_code(d, d, a.field().add(acc.code(d, d), c));
  }
  return acc;
}

Polynomial characteristic_polynomial(const MatrixFq& a) {
  if (!a.is_square()) throw PreconditionError("characteristic polynomial needs a square matrix");
  const FieldSpec& f = a.field();
  const std::size_t n = a.rows();
  MatrixFq h = a;

  // Reduce to upper Hessenberg form by similarity transforms.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h.code(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) {
        const Code t = h.code(i, j);
        h.set_code(i, j, h.code(m, j));
        h.set_code(m, j, t);
      }
      for (std::size_t r = 0; r < n; ++r) {
        const Code t = h.code(r, i);
        h.set_code(r, i, h.code(r, m));
        h.set_code(r, m, t);
      }
    }
    const Code t_inv = f.inv(h.code(m, m - 1));
    for (std::size_t r = m + 1; r < n; ++r) {
      const Code u = f.mul(h.code(r, m - 1), t_inv);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h.set_code(r, j, f.sub(h.code(r, j), f.mul(u, h.code(m, j))));
      for (std::size_t row = 0; row < n; ++row) h.set_code(row, m, f.add(h.code(row, m), f.mul(u, h.code(row, r))));
    }
  }

  // Recurrence on the leading principal minors of xI - H.
  const Polynomial x = Polynomial::x(f);
  std::vector<Polynomial> p{Polynomial::constant(f.one())};
  for (std::size_t k = 1; k <= n; ++k) {
    Polynomial pk = (x - Polynomial::constant(h(k - 1, k - 1))) * p[k - 1];
    FieldElement t = f.one();
    for (std::size_t i = 1; i < k; ++i) {
      t = t * h(k - i, k - i - 1);
      pk = pk - (t * h(k - i - 1, k - 1)) * p[k - i - 1];
    }
    p.push_back(std::move(pk));
  }
  return p[n];
}

MatrixFq companion_matrix(const Polynomial& monic) {
  if (!monic.is_monic() || monic.degree() < 1) throw PreconditionError("companion matrix needs a monic polynomial of degree >= 1");
  const FieldSpec& f = monic.field();
  const auto n = static_cast<std::size_t>(monic.degree());
  MatrixFq out(f, n, n);
  for (std::size_t i = 1; i < n; ++i) out.set_code(i, i - 1, 1);
  for (std::size_t i = 0; i < n; ++i) out.set_code(i, n - 1, f.neg(monic.codes()[i]));
  return out;
}

MatrixFq block_diagonal(const std::vector<MatrixFq>& blocks) {
  if (blocks.empty()) throw PreconditionError("block_diagonal needs at least one block");
  std::size_t n = 0;
  for (const auto& b : blocks) {
    require_dims(b.is_square(), "block_diagonal needs square blocks");
    require_same_field(blocks.front().field(), b.field(), "block_diagonal");
    n += b.rows();
  }
  MatrixFq out(blocks.front().field(), n, n);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) out.set_code(offset + i, offset + j, b.code(i, j));
    }
    offset += b.rows();
  }
  return out;
}

VectorFq flatten(const MatrixFq& a) { return VectorFq(a.field(), a.codes()); }

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(MatrixFq basis, std::vector<std::size_t> pivots)
    : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::span(const MatrixFq& generators) {
  RrefResult red = rref(generators);
  const std::size_t n = generators.cols();
  std::vector<Code> codes(red.reduced.codes().begin(),
                          red.reduced.codes().begin() + static_cast<std::ptrdiff_t>(red.rank * n));
  return Subspace(MatrixFq(generators.field(), red.rank, n, std::move(codes)), std::move(red.pivots));
}

Subspace Subspace::span(const FieldSpec& field, std::size_t ambient_dim, const std::vector<VectorFq>& generators) {
  return span(MatrixFq::from_rows(field, ambient_dim, generators));
}

Subspace Subspace::zero(const FieldSpec& field, std::size_t ambient_dim) {
  return Subspace(MatrixFq(field, 0, ambient_dim), {});
}

Subspace Subspace::full(const FieldSpec& field, std::size_t ambient_dim) {
  std::vector<std::size_t> pivots(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
  return Subspace(MatrixFq::identity(field, ambient_dim), std::move(pivots));
}

std::vector<VectorFq> Subspace::vectors() const {
  std::vector<VectorFq> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

std::optional<VectorFq> Subspace::coordinates(const VectorFq& v) const {
  require_same_field(field(), v.field(), "subspace membership");
  require_dims(v.size() == ambient_dim(), "subspace membership");
  const FieldSpec& f = field();
  VectorFq residual = v;
  VectorFq coords(f, dim());
  for (std::size_t r = 0; r < dim(); ++r) {
    const Code c = residual.code(pivots_[r]);
    coords.set_code(r, c);
    if (c == 0) continue;
    for (std::size_t j = 0; j < ambient_dim(); ++j) {
      residual.set_code(j, f.sub(residual.code(j), f.mul(c, basis_.code(r, j))));
    }
  }
  if (!residual.is_zero()) return std::nullopt;
  return coords;
}

bool Subspace::contains(const VectorFq& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  require_dims(other.ambient_dim() == ambient_dim(), "subspace containment");
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_.row(i))) return false;
  }
  return true;
}

std::string Subspace::to_string() const {
  std::string out = "span{";
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) out += ", ";
    out += basis_.row(i).to_string();
  }
  return out + "}";
}

Subspace kernel(const MatrixFq& a) {
  const RrefResult red = rref(a);
  const FieldSpec& f = a.field();
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : red.pivots) is_pivot[c] = true;
  std::vector<VectorFq> gens;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    VectorFq v(f, n);
    v.set_code(free, 1);
    for (std::size_t r = 0; r < red.rank; ++r) v.set_code(red.pivots[r], f.neg(red.reduced.code(r, free)));
    gens.push_back(std::move(v));
  }
  Subspace out = Subspace::span(f, n, gens);
  if (out.dim() + red.rank != n) throw InvariantViolation("rank-nullity violated in kernel()");
  return out;
}

Subspace image(const MatrixFq& a) { return Subspace::span(a.transpose()); }

Subspace image(const MatrixFq& a, const Subspace& v) {
  require_dims(a.cols() == v.ambient_dim(), "image of subspace");
  std::vector<VectorFq> gens;
  for (const auto& b : v.vectors()) gens.push_back(a * b);
  return Subspace::span(a.field(), a.rows(), gens);
}

Subspace operator+(const Subspace& u, const Subspace& v) {
  require_same_field(u.field(), v.field(), "subspace sum");
  require_dims(u.ambient_dim() == v.ambient_dim(), "subspace sum");
  std::vector<VectorFq> gens = u.vectors();
  for (auto& b : v.vectors()) gens.push_back(std::move(b));
  return Subspace::span(u.field(), u.ambient_dim(), gens);
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  require_same_field(u.field(), v.field(), "subspace intersection");
  require_dims(u.ambient_dim() == v.ambient_dim(), "subspace intersection");
  const FieldSpec& f = u.field();
  const std::size_t n = u.ambient_dim();
  MatrixFq stacked(f, n, u.dim() + v.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) {
    for (std::size_t j = 0; j < n; ++j) stacked.set_code(j, i, u.basis().code(i, j));
  }
  for (std::size_t i = 0; i < v.dim(); ++i) {
    for (std::size_t j = 0; j < n; ++j) stacked.set_code(j, u.dim() + i, f.neg(v.basis().code(i, j)));
  }
  std::vector<VectorFq> gens;
  for (const auto& sol : kernel(stacked).vectors()) {
    VectorFq w(f, n);
    for (std::size_t i = 0; i < u.dim(); ++i) {
      if (sol.code(i) != 0) w = w + sol[i] * u.basis().row(i);
    }
    gens.push_back(std::move(w));
  }
  Subspace out = Subspace::span(f, n, gens);
  if (out.dim() + (u + v).dim() != u.dim() + v.dim()) throw InvariantViolation("Grassmann identity violated in intersect()");
  return out;
}

bool is_invariant(const Subspace& v, const MatrixFq& a) {
  require_dims(a.is_square() && a.rows() == v.ambient_dim(), "invariance check");
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (!v.contains(a * v.basis().row(i))) return false;
  }
  return true;
}

}  // namespace monocodes
