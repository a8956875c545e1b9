#include "gideal/newton.hpp"

#include <gmpxx.h>

#include <algorithm>

#include "gideal/error.hpp"

namespace gideal {

NewtonPolyhedron::NewtonPolyhedron(const MonomialIdeal& ideal)
    : n_(ideal.nvars()), vertices_(ideal.generators()) {
  if (ideal.is_zero()) throw PreconditionError("Newton polyhedron of the zero ideal");
}

bool NewtonPolyhedron::contains(const Monomial& v) {
  if (v.nvars() != n_) throw AmbientMismatch("point in a different ring");
  for (const auto& cut : cuts_) {
    std::int64_t lhs = 0;
    for (std::size_t i = 0; i < n_; ++i) lhs = checked::add(lhs, checked::mul(cut.normal[i], v[i]));
    if (lhs < cut.offset) return false;
  }
  for (const auto& g : vertices_) {
    if (g.divides(v)) return true;
  }
  return solve(v);
}

// Phase-one simplex for
//   sum_g lambda_g g + s = v,  sum_g lambda_g + a = 1,  lambda, s, a >= 0,
// minimizing the artificial a, with Bland's rule against cycling.
bool NewtonPolyhedron::solve(const Monomial& v) {
  ++lp_solves_;
  const std::size_t m = vertices_.size();
  const std::size_t rows = n_ + 1;
  const std::size_t cols = m + n_ + 1;
  const std::size_t art = m + n_;

  std::vector<std::vector<mpq_class>> t(rows, std::vector<mpq_class>(cols));
  std::vector<mpq_class> rhs(rows);
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t g = 0; g < m; ++g) t[i][g] = vertices_[g][i];
    t[i][m + i] = 1;
    rhs[i] = v[i];
    basis[i] = m + i;
  }
  for (std::size_t g = 0; g < m; ++g) t[n_][g] = 1;
  t[n_][art] = 1;
  rhs[n_] = 1;
  basis[n_] = art;

  std::vector<mpq_class> reduced(cols);
  for (std::size_t j = 0; j < cols; ++j) reduced[j] = (j == art ? 1 : 0) - t[n_][j];

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(reduced[j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = rows;
    mpq_class best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (sgn(t[r][enter]) <= 0) continue;
      mpq_class ratio = rhs[r] / t[r][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == rows) throw InvariantViolation("phase-one LP is unbounded");
    const mpq_class pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    rhs[leave] /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || sgn(t[r][enter]) == 0) continue;
      const mpq_class f = t[r][enter];
      for (std::size_t j = 0; j < cols; ++j) {
        if (sgn(t[leave][j]) != 0) t[r][j] -= f * t[leave][j];
      }
      rhs[r] -= f * rhs[leave];
    }
    const mpq_class f = reduced[enter];
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(t[leave][j]) != 0) reduced[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  mpq_class objective = 0;
  for (std::size_t r = 0; r < rows; ++r)
    if (basis[r] == art) objective += rhs[r];

  if (sgn(objective) == 0) {
    // Feasible: recheck the convex combination exactly.
    std::vector<mpq_class> lambda(m);
    for (std::size_t r = 0; r < rows; ++r)
      if (basis[r] < m) lambda[basis[r]] = rhs[r];
    mpq_class total = 0;
    std::vector<mpq_class> point(n_);
    for (std::size_t g = 0; g < m; ++g) {
      if (sgn(lambda[g]) < 0) throw InvariantViolation("negative convex weight");
      total += lambda[g];
      for (std::size_t i = 0; i < n_; ++i) point[i] += lambda[g] * vertices_[g][i];
    }
    if (total != 1) throw InvariantViolation("convex weights do not sum to one");
    for (std::size_t i = 0; i < n_; ++i)
      if (point[i] > v[i]) throw InvariantViolation("convex combination exceeds the query point");
    return true;
  }

  // Infeasible: duals from the reduced costs of the slack and artificial
  // columns give w >= 0 and b with w.g >= b for all g and w.v < b.
  std::vector<mpq_class> w(n_);
  for (std::size_t i = 0; i < n_; ++i) w[i] = reduced[m + i];
  mpz_class scale = 1;
  for (const auto& x : w) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> wi(n_);
  mpz_class content = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (sgn(w[i]) < 0) throw InvariantViolation("negative separating normal");
    mpq_class s = w[i] * scale;
    wi[i] = s.get_num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), wi[i].get_mpz_t());
  }
  if (sgn(content) == 0) throw InvariantViolation("zero separating normal");
  for (auto& x : wi) x /= content;
  auto dot = [&](const Monomial& p) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < n_; ++i) s += wi[i] * p[i];
    return s;
  };
  mpz_class offset = dot(vertices_.front());
  for (const auto& g : vertices_) offset = std::min(offset, dot(g));
  if (!(dot(v) < offset)) throw InvariantViolation("Farkas certificate does not separate");

  bool fits = offset.fits_slong_p();
  for (const auto& x : wi) fits = fits && x.fits_slong_p();
  if (fits) {
    Halfspace h;
    for (const auto& x : wi) h.normal.push_back(x.get_si());
    h.offset = offset.get_si();
    cuts_.push_back(std::move(h));
  }
  return false;
}

namespace {

// Walks candidate lattice points in ascending degree. A minimal generator of
// the closure is the componentwise ceiling of some point p of
// conv(generators), so it lies in the box [0, max_g g_i] and has degree at
// most deg(p) + n - 1 <= max_degree(I) + n - 1.
template <typename OnNew>
void scan_closure(const MonomialIdeal& ideal, OnNew&& on_new) {
  const std::size_t n = ideal.nvars();
  std::vector<std::int64_t> box(n, 0);
  for (const auto& g : ideal.generators())
    for (std::size_t i = 0; i < n; ++i) box[i] = std::max(box[i], g[i]);
  NewtonPolyhedron poly(ideal);
  std::vector<Monomial> found;
  const auto lo = ideal.order();
  const auto hi = checked::add(ideal.max_degree(), static_cast<std::int64_t>(n) - 1);
  bool stop = false;
  for (auto t = lo; t <= hi && !stop; ++t) {
    for_each_monomial_of_degree(box, t, [&](const Monomial& v) {
      if (stop || ideal.contains(v)) return;
      for (const auto& f : found)
        if (f.divides(v)) return;
      if (poly.contains(v)) {
        found.push_back(v);
        if (!on_new(v)) stop = true;
      }
    });
  }
}

}  // namespace

MonomialIdeal newton_closure(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw PreconditionError("integral closure of the zero ideal");
  if (ideal.is_unit()) return ideal;
  std::vector<Monomial> gens = ideal.generators();
  scan_closure(ideal, [&](const Monomial& v) {
    gens.push_back(v);
    return true;
  });
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

bool is_integrally_closed(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw PreconditionError("integral closure of the zero ideal");
  if (ideal.is_unit()) return true;
  bool closed = true;
  scan_closure(ideal, [&](const Monomial&) {
    closed = false;
    return false;
  });
  return closed;
}

}  // namespace gideal
