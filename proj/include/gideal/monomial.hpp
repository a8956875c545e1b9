#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace gideal {

/// A monomial x_1^{e_1} ... x_n^{e_n}, stored as its exponent vector.
class Monomial {
 public:
  Monomial() = default;
  /// The monomial 1 in n variables.
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<std::int64_t> exps);
  Monomial(std::initializer_list<std::int64_t> exps) : Monomial(std::vector<std::int64_t>(exps)) {}

  static Monomial variable(std::size_t n, std::size_t i, std::int64_t power = 1);

  std::size_t nvars() const { return exps_.size(); }
  std::int64_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::int64_t>& exponents() const { return exps_; }
  std::int64_t degree() const;
  bool is_one() const;

  /// True when this monomial divides `other`.
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  /// Copy with the exponent of variable i replaced by zero.
  Monomial without(std::size_t i) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::int64_t> exps_;
};

/// Canonical generator order: by degree, then lexicographically with larger
/// leading exponents first (x^2 before x*y before y^2).
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All monomials of total degree `degree` in n variables, in canonical order.
std::vector<Monomial> monomials_of_degree(std::size_t n, std::int64_t degree);

/// Calls f(m) for every degree-`degree` monomial with m[i] <= bound[i].
template <typename F>
void for_each_monomial_of_degree(const std::vector<std::int64_t>& bound, std::int64_t degree, F&& f) {
  const std::size_t n = bound.size();
  if (n == 0 || degree < 0) return;
  std::vector<std::int64_t> e(n, 0);
  // Depth-first over the first n-1 coordinates; the last one is forced.
  auto rec = [&](auto&& self, std::size_t i, std::int64_t remaining) -> void {
    if (i + 1 == n) {
      if (remaining <= bound[i]) {
        e[i] = remaining;
        f(Monomial(e));
        e[i] = 0;
      }
      return;
    }
    std::int64_t top = remaining < bound[i] ? remaining : bound[i];
    for (std::int64_t k = top; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, remaining - k);
    }
    e[i] = 0;
  };
  rec(rec, 0, degree);
}

}  // namespace gideal
