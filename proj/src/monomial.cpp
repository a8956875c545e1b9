#include "gideal/monomial.hpp"

#include <algorithm>
#include <limits>

#include "gideal/error.hpp"

namespace gideal {

Monomial::Monomial(std::vector<std::int64_t> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) {
    if (e < 0) throw PreconditionError("negative exponent in monomial");
  }
}

Monomial Monomial::variable(std::size_t n, std::size_t i, std::int64_t power) {
  if (i >= n) throw PreconditionError("variable index out of range");
  std::vector<std::int64_t> e(n, 0);
  e[i] = power;
  return Monomial(std::move(e));
}

std::int64_t Monomial::degree() const {
  std::int64_t d = 0;
  for (auto e : exps_) d = checked::add(d, e);
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::int64_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  if (nvars() != other.nvars()) throw AmbientMismatch("monomials in different rings");
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (nvars() != other.nvars()) throw AmbientMismatch("monomials in different rings");
  std::vector<std::int64_t> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked::add(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& other) const {
  if (nvars() != other.nvars()) throw AmbientMismatch("monomials in different rings");
  std::vector<std::int64_t> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::without(std::size_t i) const {
  Monomial r = *this;
  r.exps_.at(i) = 0;
  return r;
}

bool CanonicalOrder::operator()(const Monomial& a, const Monomial& b) const {
  auto da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exponents() > b.exponents();
}

std::vector<Monomial> monomials_of_degree(std::size_t n, std::int64_t degree) {
  std::vector<Monomial> out;
  std::vector<std::int64_t> unbounded(n, std::numeric_limits<std::int64_t>::max());
  for_each_monomial_of_degree(unbounded, degree, [&](const Monomial& m) { out.push_back(m); });
  return out;
}

}  // namespace gideal
