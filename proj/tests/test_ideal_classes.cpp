#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gideal/document.hpp"
#include "gideal/gform.hpp"
#include "gideal/ideal_classes.hpp"
#include "gideal/newton.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace gideal;

namespace {

const std::vector<std::string> xyz{"x", "y", "z"};

MonomialIdeal in3(std::string_view g) { return parse_ideal(g, xyz); }
MonomialIdeal m(std::int64_t d) { return MonomialIdeal::maximal_power(3, d); }
MonomialIdeal cubes() { return in3("x^3, y^3, z^3, x*y, y*z, x*z"); }
MonomialIdeal left_cubic() { return in3("x^3, x^2*y, x*y^2, y^3, x^2*z") + m(4); }
MonomialIdeal right_cubic() { return in3("x^3, x^2*y, x*y^2, y^3, y^2*z") + m(4); }
MonomialIdeal not_in_c() { return in3("x^2, y*z") + m(3); }

MonomialIdeal realize(const GForm& g, std::size_t n = 3) { return gform_to_monomial(g, default_assignment(g, n), n); }

MonomialIdeal product_of(const CFactorization& f, std::size_t n) {
  auto p = MonomialIdeal::unit(n);
  for (const auto& l : f.factors) p = p * l.ideal;
  return p;
}

std::vector<MonomialIdeal> class_c_sample(std::uint64_t seed, int count, std::int64_t max_order) {
  gen::Rng rng(seed);
  std::vector<MonomialIdeal> out;
  while (static_cast<int>(out.size()) < count) out.push_back(gen::random_class_c(rng, 3, max_order));
  return out;
}

}  // namespace

TEST_CASE("contracted ideals") {
  CHECK(bool(is_contracted(in3("x^2, y^2"))));
  auto full = in3("x^3, y^3, x^2*z") + m(4);
  auto v = is_contracted(full);
  CHECK_FALSE(v);
  CHECK_FALSE(v.reason.empty());
  for (std::int64_t d = 1; d <= 4; ++d) CHECK(bool(is_contracted(m(d))));
  auto i = in3("x^2, x*y^2, y^2*z^2");
  CHECK(bool(is_contracted(i)));
  CHECK_FALSE(is_contracted(i * i));
  CHECK_THROWS_AS(is_contracted(MonomialIdeal::unit(3)), PreconditionError);
  CHECK_THROWS_AS(is_contracted(MonomialIdeal::zero(3)), PreconditionError);
}

TEST_CASE("contractedness agrees with a check over every degree") {
  gen::Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    auto i = gen::random_ideal(rng, 3, 5, 5);
    bool every_degree = true;
    for (std::int64_t j = i.order(); j <= i.max_degree() + 6; ++j) {
      auto sat = oracle::saturate(component_ideal(i, j));
      every_degree = every_degree && sat.count_in_degree(j) == i.count_in_degree(j);
    }
    CHECK_MESSAGE(bool(is_contracted(i)) == every_degree, to_string(i));
  }
}

TEST_CASE("Q-families") {
  auto f = q_family(cubes());
  REQUIRE(f.family);
  CHECK(f.family->size() == 1);
  CHECK(f.family->at(0) == in3("x*y, y*z, x*z"));
  CHECK(f.family->at(1).is_unit());
  CHECK(f.family->d0() == 2);
  auto mf = q_family(m(3));
  REQUIRE(mf.family);
  CHECK(mf.family->size() == 0);
  auto bad = q_family(not_in_c());
  REQUIRE(bad.family);
  CHECK(bad.family->at(0) == in3("x^2, y*z"));
  CHECK(bad.family->d0() == 3);
  CHECK_THROWS_AS(q_family(in3("x^2, y^2")), PreconditionError);
}

TEST_CASE("ideal of a family") {
  const auto fam = *q_family(cubes()).family;
  CHECK(ideal_of_family(fam, 0) == cubes());
  CHECK(ideal_of_family(fam, 1) == m(1) * cubes());
  const QFamily empty(3, {});
  for (std::int64_t k = 0; k <= 3; ++k) CHECK(ideal_of_family(empty, k) == m(k));
  CHECK_THROWS_AS(ideal_of_family(fam, -1), PreconditionError);
  CHECK_THROWS_AS(QFamily(3, {in3("x, y"), in3("x^2, y")}), PreconditionError);
  CHECK_THROWS_AS(QFamily(3, {in3("x^2, x*y")}), PreconditionError);
}

TEST_CASE("class C membership") {
  CHECK(bool(is_in_C(cubes())));
  auto v = is_in_C(not_in_c());
  CHECK_FALSE(v);
  CHECK(v.reason.rfind("roundtrip failed at j=0", 0) == 0);
  for (std::int64_t d = 1; d <= 4; ++d) CHECK(bool(is_in_C(m(d))));
  CHECK(is_in_C(in3("x^2, y^2")).reason == "infinite colength");
  CHECK(is_in_C(MonomialIdeal::zero(3)).reason == "zero ideal");
}

TEST_CASE("class D membership") {
  CHECK(bool(is_in_D(left_cubic())));
  CHECK(bool(is_in_D(right_cubic())));
  CHECK_FALSE(is_in_D(left_cubic() * right_cubic()));
  for (std::int64_t d = 1; d <= 4; ++d) CHECK(bool(is_in_D(m(d))));
  auto open_staircase = realize(GForm(2, {{"P3", Staircase({0, 3, 4})}}));
  CHECK(open_staircase == in3("x^2, x*y, y^2, x*z^3, y*z^3, z^4"));
  CHECK(bool(is_in_C(open_staircase)));
  CHECK(is_in_D(open_staircase).reason == "not integrally closed");
}

TEST_CASE("number of generators against M^d") {
  CHECK(mu_class_check(not_in_c()));
  CHECK(mu_class_check(cubes()));
  CHECK_FALSE(mu_class_check(parse_ideal("x^2, y^2", {"x", "y"})));
  CHECK_THROWS_AS(mu_class_check(in3("x^2, y^2")), PreconditionError);
}

TEST_CASE("equivalence") {
  CHECK(equiv(m(1) * cubes(), cubes()));
  auto f = factor_C(cubes());
  CHECK(equiv(cubes(), product_of(f, 3)));
  CHECK(equiv(m(2), m(3)));
  CHECK_FALSE(equiv(cubes(), m(2)));
  CHECK_THROWS_AS(equiv(not_in_c(), m(2)), PreconditionError);
}

TEST_CASE("factorization of class C ideals") {
  auto f = factor_C(cubes());
  REQUIRE(f.factors.size() == 3);
  std::vector<MonomialIdeal> got;
  for (const auto& l : f.factors) got.push_back(l.ideal);
  CHECK(std::find(got.begin(), got.end(), in3("x^2, y, z")) != got.end());
  CHECK(std::find(got.begin(), got.end(), in3("x, y^2, z")) != got.end());
  CHECK(std::find(got.begin(), got.end(), in3("x, y, z^2")) != got.end());
  CHECK(f.s == 1);
  CHECK(f.r == 0);

  // Empty product: the balance reads M^d * M^0 = R * M^d.
  for (std::int64_t d = 1; d <= 3; ++d) {
    auto g = factor_C(m(d));
    CHECK(g.factors.empty());
    CHECK(g.s == 0);
    CHECK(g.r == d);
  }

  auto j23 = in3("x^2, x*y, y^2, x*z^2, y*z^2, z^3");
  auto h = factor_C(j23);
  REQUIRE(h.factors.size() == 1);
  CHECK(h.factors[0].ideal == j23);
  CHECK(h.factors[0].prime == CoordinatePrime{2});
  CHECK_THROWS_AS(factor_C(not_in_c()), PreconditionError);
}

TEST_CASE("closure within the classes") {
  CHECK(closure_in_class(left_cubic()) == left_cubic());
  CHECK(closure_in_class(cubes()) == cubes());
  CHECK(closure_in_class(m(3)) == m(3));
  CHECK_THROWS_AS(closure_in_class(not_in_c()), PreconditionError);
}

TEST_CASE("Goto class membership") {
  auto g = is_in_G(cubes());
  REQUIRE(g.form);
  CHECK(g.form->order() == 2);
  CHECK(g.form->components().size() == 3);
  for (const auto& [label, a] : g.form->components()) CHECK(a == Staircase({0, 2}));
  auto no = is_in_G(left_cubic());
  CHECK_FALSE(no.form);
  CHECK(no.reason.find("not a power") != std::string::npos);
  auto mg = is_in_G(m(3));
  REQUIRE(mg.form);
  CHECK(mg.form->order() == 3);
  CHECK(mg.form->components().empty());
  CHECK_THROWS_AS(is_in_G(not_in_c()), PreconditionError);
}

TEST_CASE("realizing GForms") {
  auto g = *is_in_G(cubes()).form;
  CHECK(realize(g) == cubes());
  GForm j23(2, {{"P3", Staircase({0, 2, 3})}});
  CHECK(realize(j23) == newton_closure(in3("x^2, y^2, z^3")));
  for (std::int64_t d = 0; d <= 3; ++d) CHECK(realize(GForm(d, {})) == m(d));
  GForm many(5, {{"A", Staircase({0, 2})}, {"B", Staircase({0, 2})}, {"C", Staircase({0, 2})}, {"D", Staircase({0, 2})}});
  CHECK_THROWS_AS(default_assignment(many, 3), PreconditionError);
  GForm two(3, {{"A", Staircase({0, 2})}, {"B", Staircase({0, 3})}});
  CHECK_THROWS_AS(gform_to_monomial(two, {{"A", CoordinatePrime{0}}, {"B", CoordinatePrime{0}}}, 3),
                  PreconditionError);
  CHECK_THROWS_AS(realize(GForm(1, {{"P1", Staircase({0, 2})}, {"P2", Staircase({0, 2})}})), PreconditionError);
}

TEST_CASE("GForm products") {
  auto g = *is_in_G(cubes()).form;
  auto sq = gform_product(g, g);
  CHECK(sq.order() == 4);
  for (const auto& [label, a] : sq.components()) CHECK(a == Staircase({0, 2, 4}));
  CHECK(realize(sq) == cubes() * cubes());
  auto shifted = gform_product(g, GForm(2, {}));
  CHECK(shifted.order() == 4);
  CHECK(shifted.components() == g.components());
  auto j = gform_product(GForm(1, {{"P", jdt_seq(1, 2)}}), GForm(1, {{"P", jdt_seq(1, 3)}}));
  CHECK(j.components().size() == 1);
  CHECK(j.components().at("P") == Staircase({0, 2, 5}));
}

TEST_CASE("GForm closure") {
  auto g = *is_in_G(cubes()).form;
  CHECK(gform_closure(g) == g);
  CHECK(gform_is_closed(g));
  auto c = gform_closure(GForm(2, {{"P", Staircase({0, 3, 4})}}));
  CHECK(c.components().at("P") == Staircase({0, 2, 4}));
  CHECK(c.order() == 2);
}

TEST_CASE("GForm simple factorization") {
  auto g = *is_in_G(cubes()).form;
  auto f = gform_simple_factorization(g);
  CHECK(f.per_prime.size() == 3);
  for (const auto& [label, sf] : f.per_prime) {
    CHECK(sf.m_power == 0);
    CHECK(sf.factors == std::vector<SimpleFactor>{{1, 2, 1}});
  }
  CHECK(f.m_exponent == -1);
  // M^1 * I = J_1 J_2 J_3
  auto prod = MonomialIdeal::unit(3);
  for (const auto& [label, sf] : f.per_prime)
    for (const auto& s : sf.factors) prod = prod * realize(GForm(s.d, {{label, jdt_seq(s.d, s.t)}}));
  CHECK(m(1) * cubes() == prod);

  auto single = gform_simple_factorization(GForm(3, {{"P", Staircase({0, 1, 2, 4})}}));
  CHECK(single.per_prime.at("P").m_power == 2);
  CHECK(single.per_prime.at("P").factors == std::vector<SimpleFactor>{{1, 2, 1}});
  CHECK(single.m_exponent == 2);

  auto empty = gform_simple_factorization(GForm(4, {}));
  CHECK(empty.m_exponent == 4);
  CHECK(empty.per_prime.empty());
  CHECK_THROWS_AS(gform_simple_factorization(GForm(2, {{"P", Staircase({0, 3, 4})}})), PreconditionError);
}

TEST_CASE("roundtrip through the Q-family") {
  for (const auto& i : class_c_sample(41, 40, 4)) {
    REQUIRE_MESSAGE(bool(is_in_C(i)), to_string(i));
    const auto fam = *q_family(i).family;
    CHECK(ideal_of_family(fam, i.order() - fam.d0()) == i);
    CHECK(mu_class_check(i));
    CHECK(bool(is_contracted(i)));
  }
}

TEST_CASE("class C is closed under products") {
  const auto sample = class_c_sample(42, 24, 3);
  for (std::size_t k = 0; k + 1 < sample.size(); k += 2)
    CHECK_MESSAGE(bool(is_in_C(sample[k] * sample[k + 1])), to_string(sample[k]) << " * " << to_string(sample[k + 1]));
}

TEST_CASE("number of generators drops for larger ideals agreeing in high degree") {
  gen::Rng rng(43);
  for (const auto& i : class_c_sample(44, 25, 4)) {
    auto j = i + gen::random_ideal(rng, 3, i.max_degree(), 3);
    CHECK(i.mu() >= j.mu());
  }
}

TEST_CASE("closure commutes with multiplication by M") {
  for (const auto& i : class_c_sample(45, 20, 3))
    CHECK(newton_closure(m(1) * i) == m(1) * newton_closure(i));
}

TEST_CASE("class D is detected factor by factor") {
  int closed = 0;
  auto sample = class_c_sample(46, 20, 3);
  for (const auto& i : class_c_sample(47, 10, 3)) sample.push_back(newton_closure(i));
  for (const auto& i : sample) {
    const auto f = factor_C(i);
    bool all = true;
    for (const auto& l : f.factors) all = all && bool(is_in_D(l.ideal));
    CHECK(bool(is_in_D(i)) == all);
    closed += all;
  }
  CHECK(closed >= 10);
}

TEST_CASE("products of D ideals with coprime characteristic ideals stay in D") {
  gen::Rng rng(48);
  int found = 0;
  while (found < 20) {
    auto a = newton_closure(gen::random_class_c(rng, 3, 3));
    auto b = newton_closure(gen::random_class_c(rng, 3, 3));
    auto qa = q_family(a).family->at(0);
    auto qb = q_family(b).family->at(0);
    if (!(qa + qb).has_finite_colength()) continue;
    ++found;
    CHECK(bool(is_in_D(a)));
    CHECK(bool(is_in_D(b)));
    CHECK(bool(is_in_D(a * b)));
  }
}

TEST_CASE("closure is taken factor by factor") {
  for (const auto& i : class_c_sample(49, 20, 3)) {
    const auto f = factor_C(i);
    auto closed_product = MonomialIdeal::unit(3);
    for (const auto& l : f.factors) {
      const auto cl = newton_closure(l.ideal);
      closed_product = closed_product * cl;
      CHECK(minimal_primes(q_family(cl).family->at(0)).size() == 1);
    }
    CHECK(equiv(newton_closure(i), closed_product));
    if (auto g = is_in_G(i); g.form) CHECK(realize(gform_closure(*g.form)) == newton_closure(i));
  }
}

TEST_CASE("length identities") {
  auto sample = class_c_sample(50, 25, 4);
  sample.push_back(cubes());
  for (const auto& i : sample) {
    const auto d = i.order();
    const auto fam = *q_family(i).family;
    std::int64_t e_sum = 0;
    for (const auto& q : fam.members()) e_sum += reg_dim1_saturated(q).multiplicity;
    CHECK(oracle::colength(i) == oracle::binomial(d + 2, 3) + e_sum);
    std::int64_t rhs = 0;
    for (const auto& l : factor_C(i).factors) rhs += *oracle::colength(l.ideal) - oracle::binomial(l.order + 2, 3);
    CHECK(*oracle::colength(i) - oracle::binomial(d + 2, 3) == rhs);
  }
}

TEST_CASE("realizable G* ideals and their powers are integrally closed") {
  gen::Rng rng(51);
  for (int trial = 0; trial < 8; ++trial) {
    auto i = gen::random_gstar(rng, 3, 3);
    CHECK(bool(is_in_D(i)));
    auto g = is_in_G(i);
    REQUIRE(g.form);
    CHECK(gform_is_closed(*g.form));
    CHECK(realize(*g.form) == i);
    auto p = i;
    for (int k = 2; k <= 3; ++k) {
      p = p * i;
      CHECK(is_integrally_closed(p));
    }
  }
  for (int trial = 0; trial < 30; ++trial) {
    std::map<std::string, Staircase> ca, cb;
    for (const char* label : {"P1", "P2", "P3"}) {
      if (gen::uniform(rng, 0, 1)) ca.emplace(label, closure_seq(gen::random_staircase(rng, 4, 3)));
      if (gen::uniform(rng, 0, 1)) cb.emplace(label, closure_seq(gen::random_staircase(rng, 4, 3)));
    }
    CHECK(gform_is_closed(gform_product(GForm(6, ca), GForm(6, cb))));
  }
}
