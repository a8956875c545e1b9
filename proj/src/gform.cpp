#include "gideal/gform.hpp"

#include <set>

#include "gideal/error.hpp"
#include "gideal/ideal_classes.hpp"

namespace gideal {

GForm::GForm(std::int64_t order, std::map<std::string, Staircase> components) : order_(order) {
  if (order < 0) throw PreconditionError("GForm order must be non-negative");
  for (auto& [label, a] : components) {
    if (!prime_exponents(a).empty()) components_.emplace(label, std::move(a));
  }
}

PrimeAssignment default_assignment(const GForm& g, std::size_t n) {
  if (g.components().size() > n) throw PreconditionError("more primes than variables");
  PrimeAssignment out;
  std::set<std::size_t> taken;
  for (const auto& [label, a] : g.components()) {
    if (label.size() < 2 || label[0] != 'P') continue;
    std::size_t k = 0;
    bool digits = true;
    for (std::size_t i = 1; i < label.size(); ++i) {
      if (label[i] < '0' || label[i] > '9') digits = false;
      else k = k * 10 + static_cast<std::size_t>(label[i] - '0');
    }
    if (digits && k >= 1 && k <= n && !taken.count(k - 1)) {
      out.emplace(label, CoordinatePrime{k - 1});
      taken.insert(k - 1);
    }
  }
  std::size_t next = n;
  for (const auto& [label, a] : g.components()) {
    if (out.count(label)) continue;
    do {
      --next;
    } while (taken.count(next));
    out.emplace(label, CoordinatePrime{next});
    taken.insert(next);
  }
  return out;
}

MonomialIdeal staircase_ideal(CoordinatePrime p, const Staircase& a, std::size_t n) {
  const auto d = a.length();
  MonomialIdeal out = MonomialIdeal::zero(n);
  for (std::int64_t s = 0; s <= d; ++s) {
    const auto ell = MonomialIdeal(n, {Monomial::variable(n, p.omitted, a[static_cast<std::size_t>(s)])});
    out = out + p.power(n, d - s) * ell;
  }
  return out;
}

MonomialIdeal gform_to_monomial(const GForm& g, const PrimeAssignment& assignment, std::size_t n) {
  if (g.components().size() > n) throw PreconditionError("more primes than variables");
  std::set<std::size_t> used;
  std::vector<std::pair<CoordinatePrime, std::vector<std::int64_t>>> parts;
  std::size_t span = 0;
  for (const auto& [label, a] : g.components()) {
    auto it = assignment.find(label);
    if (it == assignment.end()) throw PreconditionError("no coordinate prime assigned to " + label);
    if (it->second.omitted >= n) throw PreconditionError("assigned prime out of range for " + label);
    if (!used.insert(it->second.omitted).second) throw PreconditionError("prime assignment is not injective");
    auto alpha = prime_exponents(a);
    span = std::max(span, alpha.size());
    parts.emplace_back(it->second, std::move(alpha));
  }
  std::vector<MonomialIdeal> members;
  for (std::size_t j = 0; j < span; ++j) {
    MonomialIdeal q = MonomialIdeal::unit(n);
    for (const auto& [p, alpha] : parts) q = intersect(q, p.power(n, j < alpha.size() ? alpha[j] : 0));
    members.push_back(std::move(q));
  }
  QFamily fam(n, std::move(members));
  if (g.order() < fam.d0())
    throw PreconditionError("GForm order " + std::to_string(g.order()) + " is below reg(Q_0) = " +
                            std::to_string(fam.d0()));
  return ideal_of_family(fam, g.order() - fam.d0());
}

GForm gform_product(const GForm& a, const GForm& b) {
  auto comps = a.components();
  for (const auto& [label, s] : b.components()) {
    auto it = comps.find(label);
    if (it == comps.end())
      comps.emplace(label, s);
    else
      it->second = minplus_product(it->second, s);
  }
  return GForm(checked::add(a.order(), b.order()), std::move(comps));
}

GForm gform_closure(const GForm& g) {
  std::map<std::string, Staircase> comps;
  for (const auto& [label, s] : g.components()) comps.emplace(label, closure_seq(s));
  return GForm(g.order(), std::move(comps));
}

bool gform_is_closed(const GForm& g) { return gform_closure(g) == g; }

GFormSimpleFactorization gform_simple_factorization(const GForm& g) {
  GFormSimpleFactorization out;
  out.m_exponent = g.order();
  for (const auto& [label, s] : g.components()) {
    if (!is_closed(s)) throw PreconditionError("staircase at " + label + " is not integrally closed");
    auto f = factor_simple(s);
    out.m_exponent = checked::add(out.m_exponent, f.m_power - s.length());
    out.per_prime.emplace(label, std::move(f));
  }
  return out;
}

GForm simple_factor_product(const GFormSimpleFactorization& f) {
  GForm out;
  for (const auto& [label, sf] : f.per_prime) {
    for (const auto& factor : sf.factors) {
      for (std::int64_t k = 0; k < factor.multiplicity; ++k) {
        out = gform_product(out, GForm(factor.d, {{label, jdt_seq(factor.d, factor.t)}}));
      }
    }
  }
  return out;
}

bool gforms_equivalent(const GForm& a, const GForm& b) {
  if (a.components().size() != b.components().size()) return false;
  for (const auto& [label, s] : a.components()) {
    auto it = b.components().find(label);
    if (it == b.components().end()) return false;
    if (prime_exponents(s) != prime_exponents(it->second)) return false;
  }
  return true;
}

}  // namespace gideal
