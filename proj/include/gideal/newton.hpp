#pragma once

#include <cstdint>
#include <vector>

#include "gideal/monomial_ideal.hpp"

namespace gideal {

/// Valid inequality normal . v >= offset for the Newton polyhedron, with a
/// non-negative normal.
struct Halfspace {
  std::vector<std::int64_t> normal;
  std::int64_t offset = 0;
};

/// Membership oracle for conv(exponents of I) + R^n_{>=0}.
///
/// Each query is decided by an exact rational LP. A feasible answer is
/// checked against the recovered convex combination; an infeasible one
/// yields a Farkas separating halfspace that is verified against every
/// generator and then cached, so later queries it rejects skip the LP.
class NewtonPolyhedron {
 public:
  explicit NewtonPolyhedron(const MonomialIdeal& ideal);

  bool contains(const Monomial& v);

  const std::vector<Halfspace>& known_halfspaces() const { return cuts_; }
  std::size_t lp_solves() const { return lp_solves_; }

 private:
  bool solve(const Monomial& v);

  std::size_t n_;
  std::vector<Monomial> vertices_;
  std::vector<Halfspace> cuts_;
  std::size_t lp_solves_ = 0;
};

/// Integral closure of a monomial ideal: the ideal of lattice points of its
/// Newton polyhedron. Throws PreconditionError on the zero ideal.
MonomialIdeal newton_closure(const MonomialIdeal& ideal);

/// newton_closure(I) == I, stopping at the first lattice point outside I.
bool is_integrally_closed(const MonomialIdeal& ideal);

}  // namespace gideal
