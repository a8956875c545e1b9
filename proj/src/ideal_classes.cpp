#include "gideal/ideal_classes.hpp"

#include <algorithm>
#include <sstream>

#include "gideal/error.hpp"
#include "gideal/newton.hpp"

namespace gideal {

QFamily::QFamily(std::size_t n, std::vector<MonomialIdeal> members) : n_(n), members_(std::move(members)) {
  for (std::size_t j = 0; j < members_.size(); ++j) {
    const auto& q = members_[j];
    if (q.nvars() != n_) throw AmbientMismatch("Q-family member in a different ring");
    if (q.is_zero() || q.is_unit()) throw PreconditionError("Q-family members must be proper and nonzero");
    if (krull_dimension(q) != 1) throw PreconditionError("Q-family member is not one-dimensional");
    if (!is_saturated(q)) throw PreconditionError("Q-family member is not saturated");
    if (j > 0 && !q.contains(members_[j - 1])) throw PreconditionError("Q-family is not increasing");
  }
  if (!members_.empty()) d0_ = reg_dim1_saturated(members_.front()).regularity;
}

MonomialIdeal QFamily::at(std::size_t j) const {
  return j < members_.size() ? members_[j] : MonomialIdeal::unit(n_);
}

Verdict is_contracted(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit())
    throw PreconditionError("contractedness needs a proper nonzero ideal");
  const auto lo = ideal.order();
  const auto hi = ideal.max_degree();
  for (auto j = lo; j < hi; ++j) {
    auto sat = saturate(component_ideal(ideal, j));
    if (sat.count_in_degree(j) != ideal.count_in_degree(j)) {
      return Verdict::no("saturation of I_<" + std::to_string(j) + "> gains elements in degree " +
                         std::to_string(j));
    }
  }
  // From the top generator degree D on, I_<j> = I_<D> ∩ M^j, so all
  // remaining degrees are settled at once by sat(I_<D>) ∩ M^D ⊆ I.
  auto tail = intersect(saturate(component_ideal(ideal, hi)),
                        MonomialIdeal::maximal_power(ideal.nvars(), hi));
  for (const auto& g : tail.generators()) {
    if (!ideal.contains(g)) {
      return Verdict::no("saturation of I_<" + std::to_string(g.degree()) +
                         "> gains elements in degree " + std::to_string(g.degree()));
    }
  }
  return Verdict::yes();
}

QFamilyOutcome q_family(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || !ideal.has_finite_colength())
    throw PreconditionError("Q-family needs an ideal of finite colength");
  QFamilyOutcome out;
  const std::size_t n = ideal.nvars();
  if (ideal.is_unit()) {
    out.family.emplace(n, std::vector<MonomialIdeal>{});
    return out;
  }
  const auto d = ideal.order();
  std::vector<MonomialIdeal> members;
  for (std::size_t j = 0;; ++j) {
    auto q = saturate(component_ideal(ideal, d + static_cast<std::int64_t>(j)));
    if (q.is_unit()) break;
    const auto dim = krull_dimension(q);
    if (dim != 1) {
      out.failed_at = j;
      out.reason = "Q_" + std::to_string(j) + " has dim R/Q = " + std::to_string(dim);
      return out;
    }
    members.push_back(std::move(q));
  }
  out.family.emplace(n, std::move(members));
  return out;
}

MonomialIdeal ideal_of_family(const QFamily& family, std::int64_t k) {
  if (k < 0) throw PreconditionError("ideal_of_family needs k >= 0");
  const std::size_t n = family.nvars();
  const auto base = checked::add(family.d0(), k);
  const auto s = static_cast<std::int64_t>(family.size());
  MonomialIdeal out = MonomialIdeal::maximal_power(n, checked::add(base, s));
  for (std::int64_t j = 0; j < s; ++j) {
    out = out + component_ideal(family.members()[static_cast<std::size_t>(j)], base + j);
  }
  return out;
}

Verdict is_in_C(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return Verdict::no("zero ideal");
  if (!ideal.has_finite_colength()) return Verdict::no("infinite colength");
  if (ideal.is_unit()) return Verdict::yes();
  auto fam = q_family(ideal);
  if (!fam.family) return Verdict::no(fam.reason);
  const auto d = ideal.order();
  const auto d0 = fam.family->d0();
  if (d < d0) {
    return Verdict::no("roundtrip failed at j=0: order " + std::to_string(d) + " is below reg(Q_0) = " +
                       std::to_string(d0));
  }
  auto back = ideal_of_family(*fam.family, d - d0);
  if (back == ideal) return Verdict::yes();
  const auto top = std::max(back.max_degree(), ideal.max_degree());
  for (auto t = d; t <= top; ++t) {
    if (component_ideal(back, t) != component_ideal(ideal, t))
      return Verdict::no("roundtrip failed at j=" + std::to_string(t - d));
  }
  throw InvariantViolation("roundtrip ideals differ but agree in every degree");
}

Verdict is_in_D(const MonomialIdeal& ideal) {
  auto c = is_in_C(ideal);
  if (!c) return c;
  if (!is_integrally_closed(ideal)) return Verdict::no("not integrally closed");
  return Verdict::yes();
}

bool mu_class_check(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || !ideal.has_finite_colength())
    throw PreconditionError("mu check needs an ideal of finite colength");
  const auto n = static_cast<std::int64_t>(ideal.nvars());
  const auto expected = checked::binomial(ideal.order() + n - 1, n - 1);
  return static_cast<std::int64_t>(ideal.mu()) == expected;
}

bool equiv(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (auto v = is_in_C(a); !v) throw PreconditionError("first ideal not in C: " + v.reason);
  if (auto v = is_in_C(b); !v) throw PreconditionError("second ideal not in C: " + v.reason);
  const MonomialIdeal& hi = a.order() >= b.order() ? a : b;
  const MonomialIdeal& lo = a.order() >= b.order() ? b : a;
  return hi == lo * MonomialIdeal::maximal_power(a.nvars(), hi.order() - lo.order());
}

namespace {

CoordinatePrime as_coordinate_prime(const std::vector<std::size_t>& vars, std::size_t n) {
  if (vars.size() + 1 != n) throw InvariantViolation("minimal prime of Q_0 is not a coordinate line");
  std::size_t omitted = 0;
  while (omitted < vars.size() && vars[omitted] == omitted) ++omitted;
  return CoordinatePrime{omitted};
}

// Calls f on every composition (j_1, ..., j_m) of j.
template <typename F>
void for_each_composition(std::size_t m, std::size_t j, F&& f) {
  std::vector<std::size_t> parts(m, 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
    if (i + 1 == m) {
      parts[i] = left;
      f(parts);
      return;
    }
    for (std::size_t p = 0; p <= left; ++p) {
      parts[i] = p;
      self(self, i + 1, left - p);
    }
  };
  if (m > 0) rec(rec, 0, j);
}

}  // namespace

CFactorization factor_C(const MonomialIdeal& ideal) {
  if (auto v = is_in_C(ideal); !v) throw PreconditionError("ideal not in C: " + v.reason);
  const std::size_t n = ideal.nvars();
  const auto d = ideal.order();
  const QFamily fam = *q_family(ideal).family;
  CFactorization out;
  std::int64_t order_sum = 0;
  if (fam.size() > 0) {
    for (const auto& vars : minimal_primes(fam.at(0))) {
      const auto p = as_coordinate_prime(vars, n);
      std::vector<MonomialIdeal> local;
      for (const auto& q : fam.members()) {
        auto l = colon_var_saturate(q, p.omitted);
        if (l.is_unit()) break;
        local.push_back(std::move(l));
      }
      QFamily lf(n, std::move(local));
      auto l = ideal_of_family(lf, 0);
      if (auto back = q_family(l); !back.family || !(*back.family == lf))
        throw InvariantViolation("factor does not reproduce its Q-family");
      if (minimal_primes(lf.at(0)).size() != 1)
        throw InvariantViolation("factor characteristic ideal is not primary");
      order_sum = checked::add(order_sum, lf.d0());
      out.factors.push_back(CFactor{p, lf, std::move(l), lf.d0()});
    }
  }
  out.s = std::max<std::int64_t>(0, order_sum - d);
  out.r = std::max<std::int64_t>(0, d - order_sum);

  MonomialIdeal prod = MonomialIdeal::unit(n);
  for (const auto& f : out.factors) prod = prod * f.ideal;
  if (ideal * MonomialIdeal::maximal_power(n, out.s) != prod * MonomialIdeal::maximal_power(n, out.r))
    throw InvariantViolation("factorization balance identity fails");

  // Q_j(I) is the saturation of sum over j_1+...+j_m = j of prod_k Q_{j_k}(L_k).
  const std::size_t m = out.factors.size();
  for (std::size_t j = 0; m > 0 && j <= fam.size(); ++j) {
    MonomialIdeal sum = MonomialIdeal::zero(n);
    for_each_composition(m, j, [&](const std::vector<std::size_t>& parts) {
      MonomialIdeal term = MonomialIdeal::unit(n);
      for (std::size_t k = 0; k < m; ++k) term = term * out.factors[k].family.at(parts[k]);
      sum = sum + term;
    });
    if (saturate(sum) != fam.at(j)) throw InvariantViolation("Q-family saturation identity fails at j=" + std::to_string(j));
  }
  return out;
}

MonomialIdeal closure_in_class(const MonomialIdeal& ideal) {
  if (auto v = is_in_C(ideal); !v) throw PreconditionError("ideal not in C: " + v.reason);
  auto closed = newton_closure(ideal);
  if (auto v = is_in_D(closed); !v) throw InvariantViolation("closure of a C ideal is not in D: " + v.reason);
  const auto m = MonomialIdeal::maximal_power(ideal.nvars(), 1);
  if (newton_closure(m * ideal) != m * closed) throw InvariantViolation("closure does not commute with M");
  return closed;
}

GOutcome is_in_G(const MonomialIdeal& ideal) {
  if (auto v = is_in_C(ideal); !v) throw PreconditionError("ideal not in C: " + v.reason);
  const std::size_t n = ideal.nvars();
  const QFamily fam = *q_family(ideal).family;
  GOutcome out;
  std::map<std::string, Staircase> components;
  if (fam.size() > 0) {
    std::vector<CoordinatePrime> primes;
    for (const auto& vars : minimal_primes(fam.at(0))) {
      if (vars.size() + 1 != n) {
        out.reason = "minimal prime of Q_0 is not a line";
        return out;
      }
      primes.push_back(as_coordinate_prime(vars, n));
    }
    std::vector<std::vector<std::int64_t>> alpha(primes.size());
    for (std::size_t j = 0; j < fam.size(); ++j) {
      const auto& q = fam.members()[j];
      MonomialIdeal meet = MonomialIdeal::unit(n);
      for (std::size_t i = 0; i < primes.size(); ++i) {
        auto a = localize_power(q, primes[i]);
        if (!a) {
          out.reason = "Q_" + std::to_string(j) + " localized at P" + std::to_string(primes[i].omitted + 1) +
                       " is not a power of the prime";
          return out;
        }
        if (*a > 0) alpha[i].push_back(*a);
        meet = intersect(meet, primes[i].power(n, *a));
      }
      if (meet != q) {
        out.reason = "Q_" + std::to_string(j) + " is not the intersection of its localized prime powers";
        return out;
      }
    }
    for (std::size_t i = 0; i < primes.size(); ++i) {
      components.emplace("P" + std::to_string(primes[i].omitted + 1), staircase_from_exponents(alpha[i]));
    }
  }
  out.form.emplace(ideal.order(), std::move(components));
  return out;
}

}  // namespace gideal
