// Acceptance runner: one PASS/FAIL line per criterion.
//
//   acceptance               run every criterion
//   acceptance --criterion N run criterion N only

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "monocodes/codes.hpp"
#include "monocodes/structure.hpp"
#include "oracles.hpp"

using namespace monocodes;

namespace {

/// Collects failed sub-checks with a short description each.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (messages_.size() < 5) messages_.push_back(what);
    }
  }
  void note(const std::string& text) { notes_.push_back(text); }
  bool passed() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream os;
    os << checks_ - failures_ << "/" << checks_ << " checks";
    for (const auto& n : notes_) os << "; " << n;
    for (const auto& m : messages_) os << "\n      failed: " << m;
    if (failures_ > messages_.size()) os << "\n      ... " << failures_ - messages_.size() << " more";
    return os.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> messages_;
  std::vector<std::string> notes_;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void(Tally&)> body;
};

const FieldSpec f5(5);

Subspace span_rows(const FieldSpec& f, const std::vector<std::vector<long long>>& rows) {
  std::vector<VectorFq> vs;
  for (const auto& r : rows) vs.push_back(VectorFq::from_ints(f, r));
  return Subspace::span(f, vs.front().size(), vs);
}

VectorFq random_member(const Subspace& s, std::mt19937_64& rng) {
  const FieldSpec& f = s.field();
  VectorFq out(f, s.ambient_dim());
  std::uniform_int_distribution<Code> pick(0, f.q() - 1);
  for (const auto& b : s.vectors()) out = out + FieldElement(f, pick(rng)) * b;
  return out;
}

VectorFq random_nonzero_member(const Subspace& s, std::mt19937_64& rng) {
  while (true) {
    VectorFq v = random_member(s, rng);
    if (!v.is_zero()) return v;
  }
}

/// The simple-matrix sweep shared by criteria 3, 4 and 6: n <= 10,
/// q in {2,3,5,7}, gcd(n, q) = 1, 20 random coefficient vectors each.
std::vector<MonomialMatrix> simple_sweep() {
  std::vector<MonomialMatrix> out;
  std::mt19937_64 rng(1001);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const FieldSpec f(p);
    for (std::size_t n = 1; n <= 10; ++n) {
      if (n % p == 0) continue;
      for (int trial = 0; trial < 20; ++trial) out.push_back(MonomialMatrix::simple(oracle::random_vector(f, n, rng, true)));
    }
  }
  return out;
}

std::string describe(const MonomialMatrix& m) {
  return "q=" + std::to_string(m.field().q()) + " a=" + m.coefficients().to_string() + " sigma=" + m.sigma().to_string();
}

// ------------------------------------------------------------------- 1

void worked_shift_example(Tally& t) {
  const MatrixFq a = fixtures::example_shift_matrix();
  const MonomialMatrix m = fixtures::example_shift();
  const CharPoly cp = char_poly(m);
  t.check(cp.expanded() == Polynomial::from_ints(f5, {4, 0, 0, 0, 1}), "char poly is t^4 + 4");
  t.check(characteristic_polynomial(a) == cp.monic, "char poly agrees with the Hessenberg computation");

  const Factorization fact = factorize(cp.monic);
  bool linear = fact.factors.size() == 4;
  for (std::size_t i = 0; linear && i < 4; ++i) {
    linear = fact.factors[i].factor == Polynomial::from_ints(f5, {static_cast<long long>(i + 1), 1}) &&
             fact.factors[i].multiplicity == 1;
  }
  t.check(linear, "factorization (t+1)(t+2)(t+3)(t+4)");

  const MatrixFq id = MatrixFq::identity(f5, 4);
  t.check(kernel(a + id) == span_rows(f5, {{1, 2, 2, 4}}), "ker(A+I) = <(1,2,2,4)>");
  t.check(kernel(a + f5.from_int(2) * id) == span_rows(f5, {{1, 1, 3, 3}}), "ker(A+2I) = <(1,1,3,3)>");
  const MatrixFq quad = evaluate(Polynomial::from_ints(f5, {2, 3, 1}), a);
  t.check(quad == MatrixFq::from_ints(f5, {{2, 0, 3, 3}, {4, 2, 0, 3}, {2, 2, 2, 0}, {0, 2, 4, 2}}),
          "A^2+3A+2I matches the displayed matrix");
  const Subspace c = kernel(quad);
  const Subspace printed = span_rows(f5, {{1, 3, 2, 1}, {0, 4, 1, 1}});
  t.check(c == printed, "ker(A^2+3A+2I) = <(1,3,2,1),(0,4,1,1)>: computed " + c.to_string() +
                            "; the printed rows give " + (quad * printed.basis().row(0)).to_string() + " and " +
                            (quad * printed.basis().row(1)).to_string() + " under A^2+3A+2I");
  t.check(c.dim() == 2, "dim C = 2");
}

// ------------------------------------------------------------------- 2

void worked_two_cycle_example(Tally& t) {
  const MatrixFq a = fixtures::example_two_cycle_matrix();
  const VectorFq gen = VectorFq::from_ints(f5, {1, 2, 1, 0, 0, 0});
  const Subspace v = Subspace::span(f5, 6, {gen});
  t.check(fixtures::example_two_cycle().matrix() == a, "monomial construction reproduces the displayed matrix");
  t.check(is_invariant(v, a), "V is A-invariant");

  const CentralizerBasis cent = centralizer(a);
  std::vector<VectorFq> flat;
  for (const auto& x : cent.basis) flat.push_back(flatten(x));
  const Subspace cspace = Subspace::span(f5, 36, flat);
  const MatrixFq c = fixtures::example_two_cycle_commutant();
  t.check(a * c == c * a && cspace.contains(flatten(c)), "displayed C lies in the centralizer");

  const MatrixFq swap = fixtures::block_swap();
  t.check(a * swap == swap * a, "block swap commutes with A");
  t.check(is_invertible(swap), "block swap is invertible");
  t.check(swap * gen == VectorFq::from_ints(f5, {0, 0, 0, 1, 2, 1}), "swap maps (1,2,1,0,0,0) to (0,0,0,1,2,1)");
  t.check(!v.contains(swap * gen), "(0,0,0,1,2,1) is not in V");

  const CharacteristicReport report = check_characteristic(v, a);
  t.check(report.status == CharacteristicStatus::kRefuted, "status is refuted, got " + to_string(report.status));
  t.check(report.witness && is_invertible(*report.witness) && *report.witness * a == a * *report.witness &&
              !v.contains(*report.witness * gen),
          "reported witness is invertible, commutes and moves V");
}

// ------------------------------------------------------------------- 3

void minimal_decomposition_suite(Tally& t) {
  std::mt19937_64 rng(3003);
  for (const auto& m : simple_sweep()) {
    const FieldSpec& f = m.field();
    const std::size_t n = m.n();
    const Decomposition d = decompose(m);
    Subspace total = Subspace::zero(f, n);
    std::size_t dims = 0;
    for (const auto& comp : d.components) {
      total = total + comp.space;
      dims += comp.space.dim();
      const auto deg = static_cast<std::size_t>(comp.factor.degree());
      t.check(comp.space.dim() == deg, "dim W_i = deg f_i for " + describe(m));
      t.check(is_invariant(comp.space, m.matrix()), "W_i invariant for " + describe(m));
      for (int s = 0; s < 3; ++s) {
        const VectorFq x = random_nonzero_member(comp.space, rng);
        t.check(cyclic_subspace(m.matrix(), x) == comp.space, "cyclic saturation returns W_i for " + describe(m));
      }
      const CharPoly rc = restricted_char_poly(m.matrix(), comp.space);
      const FieldElement sign = deg % 2 == 0 ? f.one() : -f.one();
      t.check(rc.expanded() == sign * comp.factor, "restricted char poly = (-1)^k f_i for " + describe(m));
    }
    t.check(dims == n && total.dim() == n, "direct sum of W_i is F_q^n for " + describe(m));
  }
}

// ------------------------------------------------------------------- 4

void code_suite(Tally& t) {
  std::mt19937_64 rng(4004);
  std::size_t codes = 0;
  for (const auto& m : simple_sweep()) {
    const std::size_t n = m.n();
    for (const auto& code : enumerate_codes(decompose(m))) {
      ++codes;
      t.check(rank(evaluate(code.g(), m.matrix())) == n - code.k(), "rank g(A) = n - k for " + describe(m));
      for (int s = 0; s < 50; ++s) {
        // Half uniform vectors, half codewords, so both answers occur.
        const VectorFq c = s % 2 == 0 ? oracle::random_vector(m.field(), n, rng) : random_member(code.space(), rng);
        const bool by_poly = (evaluate(code.g(), m.matrix()) * c).is_zero();
        t.check(by_poly == code.space().contains(c), "g(A)c = 0 agrees with containment for " + describe(m));
      }
    }
  }
  t.note(std::to_string(codes) + " codes");
}

// ------------------------------------------------------------------- 5

void exhaustive_oracle(Tally& t) {
  std::size_t matrices = 0;
  for (std::uint32_t p : {2u, 3u}) {
    const FieldSpec f(p);
    for (std::size_t n = 1; n <= 4; ++n) {
      if (n % p == 0) continue;
      const auto subspaces = oracle::all_subspaces(f, n);
      // every nonzero coefficient vector
      const std::uint64_t count = oracle::ipow(p - 1, n);
      for (std::uint64_t t_index = 0; t_index < count; ++t_index) {
        std::vector<Code> a(n);
        std::uint64_t rest = t_index;
        for (auto& c : a) {
          c = static_cast<Code>(1 + rest % (p - 1));
          rest /= p - 1;
        }
        const MonomialMatrix m = MonomialMatrix::simple(VectorFq(f, a));
        ++matrices;
        std::set<std::vector<oracle::VecKey>> sums;
        for (const auto& code : enumerate_codes(decompose(m))) {
          std::vector<oracle::VecKey> rows;
          for (const auto& v : code.space().vectors()) rows.push_back(v.codes());
          sums.insert(rows);
        }
        std::size_t invariant = 0;
        for (const auto& gens : subspaces) {
          const auto elements = oracle::all_vectors(f, n, gens);
          bool closed = true;
          for (const auto& g : gens) closed = closed && elements.count(oracle::apply(m.matrix(), g)) == 1;
          if (!closed) continue;
          ++invariant;
          t.check(sums.count(gens) == 1, "brute-force invariant subspace is a component sum for " + describe(m));
        }
        t.check(invariant == sums.size(), "invariant count " + std::to_string(invariant) + " = 2^r = " +
                                              std::to_string(sums.size()) + " for " + describe(m));
      }
    }
  }
  t.note(std::to_string(matrices) + " matrices");
}

// ------------------------------------------------------------------- 6

void hyperinvariance_suite(Tally& t) {
  std::size_t codes = 0;
  for (const auto& m : simple_sweep()) {
    if (m.n() > 8) continue;
    const CentralizerBasis cent = centralizer(m.matrix());
    t.check(cent.dim() == m.n(), "dim C(A) = n for " + describe(m));
    for (const auto& code : enumerate_codes(decompose(m))) {
      ++codes;
      bool hyper = true;
      for (const auto& x : cent.basis) hyper = hyper && is_invariant(code.space(), x);
      t.check(hyper, "code " + code.space().to_string() + " is hyperinvariant for " + describe(m));
    }
  }
  t.note(std::to_string(codes) + " codes");
}

// ------------------------------------------------------------------- 7

void permutation_minimal_polynomial(Tally& t) {
  std::size_t perms = 0, mismatches = 0;
  std::string first;
  for (std::uint32_t p : {2u, 3u}) {
    const FieldSpec f(p);
    for (std::size_t n = 1; n <= 7; ++n) {
      std::vector<std::size_t> map(n);
      std::iota(map.begin(), map.end(), std::size_t{0});
      do {
        const Permutation s(map);
        ++perms;
        const Polynomial claimed = perm_min_poly(s, f);
        const Polynomial minimal = oracle::minimal_annihilator(s.matrix(f));
        const bool ok = claimed == minimal;
        if (!ok && mismatches++ == 0) {
          first = "F_" + std::to_string(p) + " sigma=" + s.to_string() + ": x^L-1 = " + claimed.to_string() +
                  ", minimal annihilator = " + minimal.to_string();
        }
        t.check(ok, "perm_min_poly equals the minimal annihilator, F_" + std::to_string(p) + " sigma=" + s.to_string());
      } while (std::next_permutation(map.begin(), map.end()));
    }
  }
  t.note(std::to_string(perms) + " permutations, " + std::to_string(mismatches) + " mismatches");
  if (!first.empty()) t.note("first: " + first);
}

// ------------------------------------------------------------------- 8

/// Random cycle lengths summing to at most 9, each coprime to p.
std::vector<std::size_t> random_cycle_lengths(std::uint32_t p, std::mt19937_64& rng) {
  while (true) {
    const std::size_t cycles = 2 + rng() % 2;
    std::vector<std::size_t> lengths;
    std::size_t total = 0;
    for (std::size_t i = 0; i < cycles; ++i) {
      lengths.push_back(1 + rng() % 4);
      total += lengths.back();
    }
    const bool coprime = std::all_of(lengths.begin(), lengths.end(), [&](std::size_t l) { return l % p != 0; });
    if (total <= 9 && coprime) return lengths;
  }
}

void generalized_decomposition(Tally& t) {
  std::mt19937_64 rng(8008);
  const std::vector<std::uint32_t> primes{3, 5, 7};
  for (int trial = 0; trial < 20; ++trial) {
    const FieldSpec f(primes[rng() % primes.size()]);
    const auto lengths = random_cycle_lengths(f.p(), rng);
    const std::size_t n = std::accumulate(lengths.begin(), lengths.end(), std::size_t{0});
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::size_t> map(n);
    std::size_t pos = 0;
    for (std::size_t len : lengths) {
      for (std::size_t k = 0; k < len; ++k) map[order[pos + k]] = order[pos + (k + 1) % len];
      pos += len;
    }
    const MonomialMatrix m = MonomialMatrix::general(oracle::random_vector(f, n, rng, true), Permutation(map));

    // C = sum over cycles of a random component sum of that cycle's block,
    // embedded at the cycle's coordinates.
    Subspace c = Subspace::zero(f, n);
    for (const auto& block : cycle_blocks(m)) {
      for (const auto& comp : decompose(block.block).components) {
        if (rng() % 2 == 0) continue;
        std::vector<VectorFq> embedded;
        for (const auto& v : comp.space.vectors()) {
          VectorFq e(f, n);
          for (std::size_t k = 0; k < block.coords.size(); ++k) e.set_code(block.coords[k], v.code(k));
          embedded.push_back(std::move(e));
        }
        c = c + Subspace::span(f, n, embedded);
      }
    }
    const std::string label = describe(m) + " C=" + c.to_string();
    t.check(is_invariant(c, m.matrix()), "constructed C is invariant for " + label);

    const auto parts = decompose_generalized(c, m);
    std::size_t dims = 0;
    Subspace total = Subspace::zero(f, n);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      dims += parts[i].space.dim();
      total = total + parts[i].space;
      t.check(is_invariant(parts[i].space, m.matrix()), "C_i invariant for " + label);
      for (std::size_t j = i + 1; j < parts.size(); ++j) {
        t.check(intersect(parts[i].space, parts[j].space).is_zero(), "C_i meet C_j = 0 for " + label);
      }
    }
    t.check(dims == c.dim() && total == c, "components sum to C for " + label);
  }
}

// ------------------------------------------------------------------- 9

void coprime_blocks(Tally& t) {
  std::mt19937_64 rng(9009);
  int pairs = 0;
  while (pairs < 10) {
    const Polynomial fa = oracle::random_polynomial(f5, 1 + rng() % 4, rng).monic();
    const Polynomial fb = oracle::random_polynomial(f5, 1 + rng() % 4, rng).monic();
    if (!gcd(fa, fb).is_one()) continue;
    ++pairs;
    const MatrixFq a = companion_matrix(fa);
    const MatrixFq b = companion_matrix(fb);
    const std::string label = "blocks " + fa.to_string() + ", " + fb.to_string();
    const CoprimeBlockReport report = coprime_block_centralizer({a, b});
    t.check(report.certified, "report certifies " + label);
    t.check(sylvester_kernel(a, b).empty() && sylvester_kernel(b, a).empty(), "off-diagonal Sylvester kernels are 0 for " + label);
    const std::size_t whole = centralizer(block_diagonal({a, b})).dim();
    const std::size_t parts = centralizer(a).dim() + centralizer(b).dim();
    t.check(whole == parts && report.product.dim() == parts,
            "dim C(diag) " + std::to_string(whole) + " = " + std::to_string(parts) + " for " + label);
  }
}

// ------------------------------------------------------------------ 10

void factorization_round_trip(Tally& t) {
  std::mt19937_64 rng(1010);
  const std::vector<FieldSpec> fields{FieldSpec(2), FieldSpec(3), FieldSpec(2, 2), FieldSpec(5), FieldSpec(7)};
  for (int trial = 0; trial < 500; ++trial) {
    const FieldSpec& f = fields[trial % fields.size()];
    const Polynomial g = oracle::random_polynomial(f, rng() % 13, rng);
    const Factorization fact = factorize(g);
    const std::string label = "q=" + std::to_string(f.q()) + " " + g.to_string();
    t.check(fact.expand() == g, "expansion reproduces " + label);
    for (const auto& fp : fact.factors) {
      t.check(fp.factor.is_monic() && oracle::is_irreducible(fp.factor), "factor " + fp.factor.to_string() + " of " + label + " is irreducible");
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "worked example over F_5, n = 4", 1.0, worked_shift_example},
      {2, "non-characteristic invariant subspace, n = 6", 1.0, worked_two_cycle_example},
      {3, "minimal invariant decomposition sweep", 30.0, minimal_decomposition_suite},
      {4, "code membership and rank sweep", 30.0, code_suite},
      {5, "exhaustive invariant-subspace oracle", 60.0, exhaustive_oracle},
      {6, "monomial codes are hyperinvariant", 60.0, hyperinvariance_suite},
      {7, "permutation minimal polynomial", 5.0, permutation_minimal_polynomial},
      {8, "generalized decomposition along cycles", 10.0, generalized_decomposition},
      {9, "coprime block centralizers", 5.0, coprime_blocks},
      {10, "factorization round trip", 10.0, factorization_round_trip},
  };

  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }

  int failed = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    Tally tally;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(tally);
    } catch (const std::exception& e) {
      tally.check(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = tally.passed() && in_time;
    failed += pass ? 0 : 1;
    std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title << "  (" << std::fixed
              << std::setprecision(3) << seconds << " s, limit " << std::setprecision(0) << c.limit_seconds << " s"
              << (in_time ? "" : ", over time") << ")  " << tally.summary() << "\n";
  }
  return failed == 0 ? 0 : 1;
}
