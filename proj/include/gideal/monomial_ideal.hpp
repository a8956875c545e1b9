#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gideal/monomial.hpp"

namespace gideal {

/// A monomial ideal of K[x_1,...,x_n], held as its unique minimal generating
/// set in canonical order. Equality of ideals is equality of this set.
/// The zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t n) : n_(n) {}
  /// Minimalizes `gens`; throws AmbientMismatch if any generator is not in n variables.
  MonomialIdeal(std::size_t n, std::vector<Monomial> gens);

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n); }
  static MonomialIdeal unit(std::size_t n);
  /// M^d where M = (x_1,...,x_n).
  static MonomialIdeal maximal_power(std::size_t n, std::int64_t d);

  std::size_t nvars() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t mu() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_proper() const { return !is_unit(); }

  /// o(I): least generator degree. Throws on the zero ideal.
  std::int64_t order() const;
  /// Largest generator degree. Throws on the zero ideal.
  std::int64_t max_degree() const;

  bool contains(const Monomial& m) const;
  /// Ideal containment: every generator of `other` lies in this ideal.
  bool contains(const MonomialIdeal& other) const;

  /// True when some pure power of every variable lies in the ideal.
  bool has_finite_colength() const;

  /// Number of degree-t monomials in the ideal, i.e. dim_K I_t.
  std::int64_t count_in_degree(std::int64_t t) const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
};

/// P_i = (x_j : j != i), the ideal of the i-th coordinate axis. `omitted` is 0-based.
struct CoordinatePrime {
  std::size_t omitted = 0;

  MonomialIdeal power(std::size_t n, std::int64_t alpha) const;
  bool operator==(const CoordinatePrime&) const = default;
  auto operator<=>(const CoordinatePrime&) const = default;
};

/// Divisibility-minimal subset of `gens`, canonically ordered.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

enum class IdealOp { sum, product, intersect };
MonomialIdeal ideal_arith(const MonomialIdeal& a, const MonomialIdeal& b, IdealOp op);

inline MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) {
  return ideal_arith(a, b, IdealOp::sum);
}
inline MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b) {
  return ideal_arith(a, b, IdealOp::product);
}
inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  return ideal_arith(a, b, IdealOp::intersect);
}
/// I^k for k >= 0 (I^0 is the unit ideal).
MonomialIdeal power(const MonomialIdeal& ideal, std::int64_t k);

/// I : x_i^inf, obtained by zeroing the x_i exponent of every generator.
MonomialIdeal colon_var_saturate(const MonomialIdeal& ideal, std::size_t i);

/// I^sat = I : M^inf, the intersection over i of I : x_i^inf.
MonomialIdeal saturate(const MonomialIdeal& ideal);
bool is_saturated(const MonomialIdeal& ideal);

/// I_<j>: the ideal generated by the degree-j monomials of I.
MonomialIdeal component_ideal(const MonomialIdeal& ideal, std::int64_t j);

struct BasicStats {
  std::int64_t order = 0;
  std::size_t mu = 0;
  /// length(R/I); empty when the colength is infinite.
  std::optional<std::int64_t> colength;
};
BasicStats basic_stats(const MonomialIdeal& ideal);

/// length(R/I) by staircase counting; empty when infinite.
std::optional<std::int64_t> colength(const MonomialIdeal& ideal);

/// Hilbert function of R/I: number of degree-t monomials outside I.
std::int64_t hf_quotient(const MonomialIdeal& ideal, std::int64_t t);

/// Variable-index sets S (0-based, sorted) such that (x_i : i in S) is a
/// minimal prime of I. Sorted by size, then lexicographically.
std::vector<std::vector<std::size_t>> minimal_primes(const MonomialIdeal& ideal);

/// Krull dimension of R/I for a proper nonzero ideal.
std::int64_t krull_dimension(const MonomialIdeal& ideal);

/// If Q localized at P is a power of the maximal ideal of the local ring,
/// the exponent; otherwise nothing. Exponent 0 means P is not associated.
std::optional<std::int64_t> localize_power(const MonomialIdeal& q, CoordinatePrime p);

struct DimOneInvariants {
  std::int64_t regularity = 0;
  /// e(R/Q), the eventual value of the Hilbert function.
  std::int64_t multiplicity = 0;
};
/// Regularity and multiplicity of a saturated ideal with dim R/Q = 1.
/// Throws PreconditionError otherwise.
DimOneInvariants reg_dim1_saturated(const MonomialIdeal& q);

/// Human-readable monomial using the given names, or x1..xn when empty.
std::string to_string(const Monomial& m, const std::vector<std::string>& names = {});
std::string to_string(const MonomialIdeal& ideal, const std::vector<std::string>& names = {});

}  // namespace gideal
