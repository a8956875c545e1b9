#include "gideal/monomial_ideal.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "gideal/error.hpp"

namespace gideal {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  if (gens.empty()) return gens;
  const std::size_t n = gens.front().nvars();
  for (const auto& g : gens) {
    if (g.nvars() != n) throw AmbientMismatch("generators in different rings");
  }
  std::sort(gens.begin(), gens.end(), CanonicalOrder{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  for (auto& g : gens) {
    const auto dg = g.degree();
    bool redundant = false;
    // Only a generator of strictly smaller degree can properly divide g.
    for (const auto& h : kept) {
      if (h.degree() >= dg) break;
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(std::move(g));
  }
  return kept;
}

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<Monomial> gens) : n_(n) {
  for (const auto& g : gens) {
    if (g.nvars() != n) throw AmbientMismatch("generator has the wrong number of variables");
  }
  gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(std::size_t n) { return MonomialIdeal(n, {Monomial(n)}); }

MonomialIdeal MonomialIdeal::maximal_power(std::size_t n, std::int64_t d) {
  if (d < 0) throw PreconditionError("negative power of the maximal ideal");
  MonomialIdeal r(n);
  r.gens_ = monomials_of_degree(n, d);
  return r;
}

std::int64_t MonomialIdeal::order() const {
  if (gens_.empty()) throw PreconditionError("order of the zero ideal");
  return gens_.front().degree();
}

std::int64_t MonomialIdeal::max_degree() const {
  if (gens_.empty()) throw PreconditionError("degree of the zero ideal");
  return gens_.back().degree();
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.nvars() != n_) throw AmbientMismatch("monomial in a different ring");
  const auto dm = m.degree();
  for (const auto& g : gens_) {
    if (g.degree() > dm) break;
    if (g.divides(m)) return true;
  }
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  if (other.n_ != n_) throw AmbientMismatch("ideals in different rings");
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

bool MonomialIdeal::has_finite_colength() const {
  std::vector<bool> seen(n_, false);
  for (const auto& g : gens_) {
    std::size_t support = 0, last = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (g[i] > 0) {
        ++support;
        last = i;
      }
    }
    if (support == 0) return true;  // unit ideal
    if (support == 1) seen[last] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::int64_t MonomialIdeal::count_in_degree(std::int64_t t) const {
  if (t < 0) return 0;
  std::int64_t count = 0;
  std::vector<std::int64_t> unbounded(n_, t);
  for_each_monomial_of_degree(unbounded, t, [&](const Monomial& m) {
    if (contains(m)) ++count;
  });
  return count;
}

MonomialIdeal CoordinatePrime::power(std::size_t n, std::int64_t alpha) const {
  if (omitted >= n) throw PreconditionError("coordinate prime index out of range");
  if (alpha < 0) throw PreconditionError("negative prime power");
  std::vector<std::int64_t> bound(n, alpha);
  bound[omitted] = 0;
  std::vector<Monomial> gens;
  for_each_monomial_of_degree(bound, alpha, [&](const Monomial& m) { gens.push_back(m); });
  return MonomialIdeal(n, std::move(gens));
}

namespace {

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars()) throw AmbientMismatch("ideals in different rings");
}

}  // namespace

MonomialIdeal ideal_arith(const MonomialIdeal& a, const MonomialIdeal& b, IdealOp op) {
  require_same_ring(a, b);
  std::vector<Monomial> gens;
  switch (op) {
    case IdealOp::sum:
      gens = a.generators();
      gens.insert(gens.end(), b.generators().begin(), b.generators().end());
      break;
    case IdealOp::product:
      gens.reserve(a.mu() * b.mu());
      for (const auto& g : a.generators())
        for (const auto& h : b.generators()) gens.push_back(g * h);
      break;
    case IdealOp::intersect:
      gens.reserve(a.mu() * b.mu());
      for (const auto& g : a.generators())
        for (const auto& h : b.generators()) gens.push_back(g.lcm(h));
      break;
  }
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, std::int64_t k) {
  if (k < 0) throw PreconditionError("negative ideal power");
  MonomialIdeal r = MonomialIdeal::unit(ideal.nvars());
  for (std::int64_t i = 0; i < k; ++i) r = r * ideal;
  return r;
}

MonomialIdeal colon_var_saturate(const MonomialIdeal& ideal, std::size_t i) {
  if (i >= ideal.nvars()) throw PreconditionError("variable index out of range");
  std::vector<Monomial> gens;
  gens.reserve(ideal.mu());
  for (const auto& g : ideal.generators()) gens.push_back(g.without(i));
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

MonomialIdeal saturate(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return ideal;
  MonomialIdeal r = colon_var_saturate(ideal, 0);
  for (std::size_t i = 1; i < ideal.nvars(); ++i) r = intersect(r, colon_var_saturate(ideal, i));
  return r;
}

bool is_saturated(const MonomialIdeal& ideal) { return saturate(ideal) == ideal; }

MonomialIdeal component_ideal(const MonomialIdeal& ideal, std::int64_t j) {
  const std::size_t n = ideal.nvars();
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    const auto dg = g.degree();
    if (dg > j) break;
    for (const auto& m : monomials_of_degree(n, j - dg)) gens.push_back(g * m);
  }
  return MonomialIdeal(n, std::move(gens));
}

std::optional<std::int64_t> colength(const MonomialIdeal& ideal) {
  if (!ideal.has_finite_colength()) return std::nullopt;
  const std::size_t n = ideal.nvars();
  if (ideal.is_unit()) return 0;
  const auto& gens = ideal.generators();
  // Walk the standard monomials of the projection onto x_1..x_{n-1}; above
  // each one the standard monomials form a column of height
  // min{ g_n : g divides prefix * x_n^g_n }.
  std::vector<std::int64_t> prefix(n, 0);
  std::int64_t total = 0;
  auto column = [&]() {
    std::int64_t h = -1;
    for (const auto& g : gens) {
      bool fits = true;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (g[i] > prefix[i]) {
          fits = false;
          break;
        }
      }
      if (fits && (h < 0 || g[n - 1] < h)) h = g[n - 1];
    }
    return h;  // finite colength guarantees a pure power of x_n
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i + 1 == n) {
      total = checked::add(total, column());
      return;
    }
    for (prefix[i] = 0;; ++prefix[i]) {
      if (ideal.contains(Monomial(prefix))) break;
      self(self, i + 1);
    }
    prefix[i] = 0;
  };
  rec(rec, 0);
  return total;
}

BasicStats basic_stats(const MonomialIdeal& ideal) {
  BasicStats s;
  s.order = ideal.is_zero() ? 0 : ideal.order();
  s.mu = ideal.mu();
  s.colength = colength(ideal);
  return s;
}

std::int64_t hf_quotient(const MonomialIdeal& ideal, std::int64_t t) {
  if (t < 0) return 0;
  const auto n = static_cast<std::int64_t>(ideal.nvars());
  return checked::sub(checked::binomial(t + n - 1, n - 1), ideal.count_in_degree(t));
}

std::vector<std::vector<std::size_t>> minimal_primes(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit())
    throw PreconditionError("minimal primes need a proper nonzero ideal");
  const std::size_t n = ideal.nvars();
  if (n > 63) throw PreconditionError("too many variables for minimal prime search");
  std::vector<std::uint64_t> supports;
  for (const auto& g : ideal.generators()) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g[i] > 0) s |= (std::uint64_t{1} << i);
    supports.push_back(s);
  }
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());

  std::vector<std::uint64_t> covers;
  // Branch on the variables of the first uncovered generator; prune any
  // branch that already contains a cover found so far.
  auto rec = [&](auto&& self, std::uint64_t chosen) -> void {
    for (auto c : covers)
      if ((c & chosen) == c) return;
    for (auto s : supports) {
      if ((s & chosen) == 0) {
        for (std::size_t i = 0; i < n; ++i)
          if (s & (std::uint64_t{1} << i)) self(self, chosen | (std::uint64_t{1} << i));
        return;
      }
    }
    covers.push_back(chosen);
  };
  rec(rec, 0);

  std::vector<std::uint64_t> minimal;
  for (auto c : covers) {
    bool dominated = false;
    for (auto d : covers)
      if (d != c && (d & c) == d) dominated = true;
    if (!dominated) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end());
  minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());

  std::vector<std::vector<std::size_t>> out;
  for (auto c : minimal) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (c & (std::uint64_t{1} << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::int64_t krull_dimension(const MonomialIdeal& ideal) {
  auto primes = minimal_primes(ideal);
  return static_cast<std::int64_t>(ideal.nvars() - primes.front().size());
}

std::optional<std::int64_t> localize_power(const MonomialIdeal& q, CoordinatePrime p) {
  const std::size_t n = q.nvars();
  if (p.omitted >= n) throw PreconditionError("coordinate prime index out of range");
  MonomialIdeal local = colon_var_saturate(q, p.omitted);
  if (local.is_zero()) return std::nullopt;
  if (local.is_unit()) return 0;
  const auto alpha = local.order();
  if (local == p.power(n, alpha)) return alpha;
  return std::nullopt;
}

DimOneInvariants reg_dim1_saturated(const MonomialIdeal& q) {
  if (q.is_zero() || q.is_unit())
    throw PreconditionError("regularity needs a proper nonzero ideal");
  if (krull_dimension(q) != 1) throw PreconditionError("ideal does not define a one-dimensional ring");
  if (!is_saturated(q)) throw PreconditionError("ideal is not saturated");
  // R/Q is Cohen-Macaulay of dimension one, so the first difference of its
  // Hilbert function is an Artinian O-sequence: once it vanishes it stays 0.
  std::int64_t prev = hf_quotient(q, 0);
  constexpr std::int64_t kLimit = 100000;
  for (std::int64_t t = 1; t < kLimit; ++t) {
    std::int64_t cur = hf_quotient(q, t);
    if (cur < prev) throw InvariantViolation("Hilbert function decreased on a saturated 1-dim ideal");
    if (cur == prev) return {t, cur};
    prev = cur;
  }
  throw InvariantViolation("Hilbert function did not stabilize");
}

std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    if (i < names.size())
      os << names[i];
    else
      os << 'x' << (i + 1);
    if (m[i] > 1) os << '^' << m[i];
  }
  return os.str();
}

std::string to_string(const MonomialIdeal& ideal, const std::vector<std::string>& names) {
  if (ideal.is_zero()) return "(0)";
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (const auto& g : ideal.generators()) {
    if (!first) os << ", ";
    first = false;
    os << to_string(g, names);
  }
  os << ')';
  return os.str();
}

}  // namespace gideal
