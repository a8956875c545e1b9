#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gideal/document.hpp"
#include "gideal/gform.hpp"
#include "gideal/hilbert.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace gideal;

namespace {

using Seq = std::vector<std::int64_t>;
const std::vector<std::string> xyz{"x", "y", "z"};

MonomialIdeal in3(std::string_view g) { return parse_ideal(g, xyz); }
MonomialIdeal cubes() { return in3("x^3, y^3, z^3, x*y, y*z, x*z"); }
MonomialIdeal realize(const GForm& g) { return gform_to_monomial(g, default_assignment(g, 3), 3); }

// length(I^k / I^{k+1}) with every colength counted by the box oracle.
Seq filtration_by_counting(const MonomialIdeal& i, std::int64_t terms) {
  Seq out;
  auto p = MonomialIdeal::unit(i.nvars());
  std::int64_t prev = 0;
  for (std::int64_t k = 0; k < terms; ++k) {
    p = p * i;
    const auto len = *oracle::colength(p);
    out.push_back(len - prev);
    prev = len;
  }
  return out;
}

}  // namespace

TEST_CASE("Hilbert series arithmetic") {
  HilbertSeries hs(3, {7, 4, 0, 0});
  CHECK(hs.h() == Seq{7, 4});
  CHECK(hs.degree() == 1);
  CHECK(hs.multiplicity() == 11);
  CHECK(hs.colength() == 7);
  CHECK(hs.expand(3) == Seq{7, 25, 54});
  CHECK((hs - hs).h().empty());
  CHECK((hs + HilbertSeries(3, {1})).h() == Seq{8, 4});
  CHECK_THROWS_AS(hs + HilbertSeries(2, {1}), AmbientMismatch);
}

TEST_CASE("filtration lengths") {
  CHECK(hf_filtration(parse_ideal("x, y", {"x", "y"}), 3) == Seq{1, 2, 3});
  CHECK(hf_filtration(cubes(), 3) == Seq{7, 25, 54});
  CHECK(hf_filtration(cubes(), 3) == filtration_by_counting(cubes(), 3));
  CHECK(hf_filtration(MonomialIdeal::maximal_power(3, 2), 2) == Seq{4, 16});
  CHECK_THROWS_AS(hf_filtration(in3("x^2, y^2"), 2), PreconditionError);
  CHECK_THROWS_AS(hf_filtration(cubes(), 0), PreconditionError);
}

TEST_CASE("h-polynomials") {
  CHECK(h_polynomial(cubes()).h() == Seq{7, 4});
  CHECK(h_polynomial(MonomialIdeal::maximal_power(3, 2)).h() == Seq{4, 4});
  for (std::size_t n = 1; n <= 4; ++n) CHECK(h_polynomial(MonomialIdeal::maximal_power(n, 1)).h() == Seq{1});
  CHECK_THROWS_AS(h_polynomial(in3("x^2, y^2")), PreconditionError);
  CHECK_THROWS_AS(h_polynomial(cubes(), 3), Error);
}

TEST_CASE("multiplicity of powers of M is d^n") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::int64_t d = 1; d <= 4; ++d) {
      std::int64_t dn = 1;
      for (std::size_t k = 0; k < n; ++k) dn *= d;
      CHECK(multiplicity_e(MonomialIdeal::maximal_power(n, d)).e == dn);
    }
}

TEST_CASE("series assembled from the factorization") {
  auto hs = hs_via_factorization(cubes());
  CHECK(hs.h() == Seq{7, 4});
  CHECK(hs == h_polynomial(cubes()));
  for (std::int64_t d = 1; d <= 3; ++d) {
    auto md = MonomialIdeal::maximal_power(3, d);
    CHECK(hs_via_factorization(md) == h_polynomial(md));
  }
  auto single = realize(GForm(2, {{"P3", Staircase({0, 2, 3})}}));
  CHECK(hs_via_factorization(single) == h_polynomial(single));
}

TEST_CASE("multiplicity with the factor formula") {
  auto e = multiplicity_e(cubes());
  CHECK(e.e == 11);
  CHECK(e.from_factors == 3 * 2 + 8 - 3 * 1);
  for (std::int64_t t = 2; t <= 5; ++t) {
    auto j = realize(GForm(1, {{"P3", jdt_seq(1, t)}}));
    CHECK(j == in3("x, y") + MonomialIdeal(3, {Monomial::variable(3, 2, t)}));
    CHECK(multiplicity_e(j).e == t);
  }
  CHECK_FALSE(multiplicity_e(in3("x^2, y*z") + MonomialIdeal::maximal_power(3, 3)).from_factors.has_value());
}

TEST_CASE("h-degree bound") {
  CHECK(h_degree_check(cubes()));
  for (std::int64_t d = 1; d <= 3; ++d) CHECK(h_degree_check(MonomialIdeal::maximal_power(3, d)));
  gen::Rng rng(61);
  for (int trial = 0; trial < 10; ++trial) CHECK(h_degree_check(gen::random_gstar(rng, 3, 3)));
  CHECK_THROWS_AS(h_degree_check(in3("x^2, y*z") + MonomialIdeal::maximal_power(3, 3)), PreconditionError);
}

TEST_CASE("assembled series equals the direct one on random class C ideals") {
  gen::Rng rng(62);
  for (int trial = 0; trial < 20; ++trial) {
    auto i = gen::random_class_c(rng, 3, 4);
    CHECK_MESSAGE(hs_via_factorization(i, 8) == h_polynomial(i, 8), to_string(i));
    CHECK(multiplicity_e(i, 8).from_factors.has_value());
  }
}

TEST_CASE("fitted series reproduces the filtration lengths") {
  gen::Rng rng(63);
  for (int trial = 0; trial < 10; ++trial) {
    auto i = gen::random_gstar(rng, 3, 3);
    const auto hs = h_polynomial(i);
    CHECK(hs.expand(5) == filtration_by_counting(i, 5));
    CHECK(hs.colength() == oracle::colength(i));
  }
}
