#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "monocodes/codes.hpp"
#include "monocodes/error.hpp"
#include "oracles.hpp"

using namespace monocodes;

namespace {

const FieldSpec f5(5);

std::vector<oracle::VecKey> keys(const Subspace& s) {
  std::vector<oracle::VecKey> out;
  for (const auto& v : s.vectors()) out.push_back(v.codes());
  return out;
}

}  // namespace

TEST_CASE("decomposition of the example shift") {
  const Decomposition d = decompose(fixtures::example_shift());
  REQUIRE(d.components.size() == 4);
  // Factors in canonical order: x+1, x+2, x+3, x+4.
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(d.components[i].factor == Polynomial::from_ints(f5, {static_cast<long long>(i + 1), 1}));
    CHECK(d.components[i].space.dim() == 1);
  }
  CHECK(d.components[0].space == Subspace::span(f5, 4, {VectorFq::from_ints(f5, {1, 2, 2, 4})}));
  CHECK(d.components[1].space == Subspace::span(f5, 4, {VectorFq::from_ints(f5, {1, 1, 3, 3})}));
}

TEST_CASE("decompose preconditions") {
  const FieldSpec f3(3);
  CHECK_THROWS_AS(decompose(MonomialMatrix::simple(VectorFq::from_ints(f3, {1, 1, 1}))), PreconditionError);
  CHECK_THROWS_AS(decompose(fixtures::example_two_cycle()), PreconditionError);
  const Decomposition d = decompose(MonomialMatrix::simple(VectorFq::from_ints(FieldSpec(2), {1, 1, 1})));
  CHECK(d.components.size() == 2);
  CHECK(d.components[0].factor.degree() == 1);
  CHECK(d.components[1].factor.degree() == 2);
}

TEST_CASE("making codes") {
  const Decomposition d = decompose(fixtures::example_shift());
  const std::vector<std::size_t> sel{1, 0};
  const LinearCode c = make_code(d, sel);
  CHECK(c.selection() == std::vector<std::size_t>{0, 1});
  CHECK(c.k() == 2);
  CHECK(c.g() == Polynomial::from_ints(f5, {2, 3, 1}));
  CHECK(c.space() == Subspace::span(f5, 4, {VectorFq::from_ints(f5, {1, 0, 4, 2}), VectorFq::from_ints(f5, {0, 1, 4, 1})}));
  CHECK_FALSE(c.space().contains(VectorFq::from_ints(f5, {1, 3, 2, 1})));
  CHECK(c.distance() == 3);
  CHECK(c.cached_distance() == 3);

  const std::vector<std::size_t> one{2};
  CHECK(make_code(d, one).g() == -Polynomial::from_ints(f5, {3, 1}));
  const std::vector<std::size_t> dup{1, 1};
  CHECK_THROWS_AS(make_code(d, dup), PreconditionError);
  const std::vector<std::size_t> out_of_range{4};
  CHECK_THROWS_AS(make_code(d, out_of_range), PreconditionError);
}

TEST_CASE("enumeration") {
  const Decomposition d = decompose(fixtures::example_shift());
  const auto all = enumerate_codes(d);
  CHECK(all.size() == 16);
  CHECK(enumerate_codes(d, false).size() == 14);
  CHECK(all.front().k() == 0);
  CHECK(all[1].selection() == std::vector<std::size_t>{0});
  CHECK(all[3].selection() == std::vector<std::size_t>{0, 1});
  CHECK(all.back().k() == 4);
  const FieldSpec f2(2);
  CHECK(enumerate_codes(decompose(MonomialMatrix::simple(VectorFq::from_ints(f2, {1, 1, 1})))).size() == 4);
}

TEST_CASE("membership, shift closure and encoding") {
  const Decomposition d = decompose(fixtures::example_shift());
  const std::vector<std::size_t> sel{0, 1};
  const LinearCode c = make_code(d, sel);
  CHECK(membership(c, VectorFq::from_ints(f5, {1, 0, 4, 2})));
  CHECK(membership(c, VectorFq::from_ints(f5, {2, 3, 0, 2})));
  CHECK_FALSE(membership(c, VectorFq::from_ints(f5, {1, 0, 0, 0})));
  CHECK_THROWS_AS(membership(c, VectorFq::from_ints(f5, {1, 0})), PreconditionError);

  CHECK(shift_closure_check(c.space(), fixtures::example_shift()));
  CHECK_FALSE(shift_closure_check(Subspace::span(f5, 4, {VectorFq::from_ints(f5, {1, 0, 0, 0})}), fixtures::example_shift()));

  CHECK(encode(c, VectorFq::from_ints(f5, {1, 0})) == VectorFq::from_ints(f5, {1, 0, 4, 2}));
  CHECK(encode(c, VectorFq::from_ints(f5, {2, 3})) == VectorFq::from_ints(f5, {2, 3, 0, 2}));
  CHECK_THROWS_AS(encode(c, VectorFq::from_ints(f5, {1})), PreconditionError);
}

TEST_CASE("minimum distance") {
  const FieldSpec f3(3);
  const Decomposition d = decompose(MonomialMatrix::simple(VectorFq::from_ints(f3, {1, 1, 1, 1})));
  // Factors sort as x+1, x+2, x^2+1; ker(A - I) is the repetition code.
  REQUIRE(d.components[1].factor == Polynomial::from_ints(f3, {2, 1}));
  const std::vector<std::size_t> rep{1};
  const LinearCode r = make_code(d, rep);
  CHECK(r.space() == Subspace::span(f3, 4, {VectorFq::from_ints(f3, {1, 1, 1, 1})}));
  CHECK(r.distance() == 4);
  std::vector<std::size_t> all;
  for (std::size_t i = 0; i < d.components.size(); ++i) all.push_back(i);
  CHECK(make_code(d, all).distance() == 1);
  CHECK(make_code(d, std::vector<std::size_t>{}).distance() == 0);

  const FieldSpec big(7);
  std::vector<long long> ones(30, 1);
  const Decomposition large = decompose(MonomialMatrix::simple(VectorFq::from_ints(big, ones)));
  std::vector<std::size_t> every;
  for (std::size_t i = 0; i < large.components.size(); ++i) every.push_back(i);
  CHECK_THROWS_AS(min_distance(make_code(large, every)), ResourceGuardError);
}

TEST_CASE("components are minimal and carry their factor") {
  std::mt19937_64 rng(17);
  for (const auto& f : {FieldSpec(2), FieldSpec(3), FieldSpec(5)}) {
    for (int trial = 0; trial < 10; ++trial) {
      std::size_t n = 1 + rng() % 9;
      while (n % f.p() == 0) n = 1 + rng() % 9;
      const MonomialMatrix m = MonomialMatrix::simple(oracle::random_vector(f, n, rng, true));
      const Decomposition d = decompose(m);
      for (const auto& comp : d.components) {
        const CharPoly rc = restricted_char_poly(m.matrix(), comp.space);
        CHECK(rc.monic == comp.factor);
        CHECK(rc.unit == (comp.space.dim() % 2 == 0 ? f.one() : -f.one()));
        for (const auto& v : comp.space.vectors()) CHECK(is_invariant(Subspace::span(f, n, {v}), m.matrix()) == (comp.space.dim() == 1));
      }
    }
  }
}

TEST_CASE("invariant subspaces are exactly the component sums") {
  std::mt19937_64 rng(29);
  for (const auto& f : {FieldSpec(2), FieldSpec(3)}) {
    for (std::size_t n = 1; n <= 4; ++n) {
      if (n % f.p() == 0) continue;
      const MonomialMatrix m = MonomialMatrix::simple(oracle::random_vector(f, n, rng, true));
      const Decomposition d = decompose(m);
      std::set<std::vector<oracle::VecKey>> sums;
      for (const auto& c : enumerate_codes(d)) {
        sums.insert(keys(c.space()));
        CHECK(c.distance() == oracle::brute_min_distance(f, n, keys(c.space())));
      }
      std::size_t invariant = 0;
      for (const auto& gens : oracle::all_subspaces(f, n)) {
        const auto elements = oracle::all_vectors(f, n, gens);
        bool closed = true;
        for (const auto& g : gens) closed = closed && elements.count(oracle::apply(m.matrix(), g)) == 1;
        if (!closed) continue;
        ++invariant;
        CHECK(sums.count(gens) == 1);
      }
      CHECK(invariant == sums.size());
    }
  }
}
