#include "gideal/staircase.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gideal/error.hpp"

namespace gideal {

Staircase::Staircase(std::vector<std::int64_t> a) : a_(std::move(a)) {
  if (a_.empty() || a_.front() != 0) throw PreconditionError("staircase must start at 0");
  for (std::size_t i = 1; i < a_.size(); ++i) {
    if (a_[i] <= a_[i - 1]) throw PreconditionError("staircase must be strictly increasing");
  }
}

Staircase minplus_product(const Staircase& a, const Staircase& b) {
  const auto& x = a.values();
  const auto& y = b.values();
  std::vector<std::int64_t> c(x.size() + y.size() - 1, 0);
  for (std::size_t j = 0; j < c.size(); ++j) {
    bool first = true;
    const std::size_t lo = j >= y.size() ? j - (y.size() - 1) : 0;
    const std::size_t hi = std::min(j, x.size() - 1);
    for (std::size_t r = lo; r <= hi; ++r) {
      const auto v = checked::add(x[r], y[j - r]);
      if (first || v < c[j]) c[j] = v;
      first = false;
    }
  }
  return Staircase(std::move(c));
}

Staircase minplus_power(const Staircase& a, std::int64_t k) {
  if (k < 1) throw PreconditionError("min-plus power needs k >= 1");
  Staircase r = a;
  for (std::int64_t i = 1; i < k; ++i) r = minplus_product(r, a);
  return r;
}

Staircase closure_seq(const Staircase& a) {
  const auto d = a.length();
  std::vector<std::int64_t> out(a.values());
  Staircase p = a;  // a^(k)
  for (std::int64_t k = 2; k <= d; ++k) {
    p = minplus_product(p, a);
    for (std::int64_t j = 1; j < d; ++j) {
      out[j] = std::min(out[j], checked::ceil_div(p[static_cast<std::size_t>(k * j)], k));
    }
  }
  return Staircase(std::move(out));
}

namespace {

struct Point {
  std::int64_t x, y;
};

// Lower convex hull of (i, a_i); collinear interior points are dropped.
std::vector<Point> lower_hull(const Staircase& a) {
  std::vector<Point> h;
  for (std::int64_t i = 0; i <= a.length(); ++i) {
    Point p{i, a[static_cast<std::size_t>(i)]};
    while (h.size() >= 2) {
      const Point& o = h[h.size() - 2];
      const Point& q = h.back();
      auto cross = checked::sub(checked::mul(q.x - o.x, p.y - o.y), checked::mul(q.y - o.y, p.x - o.x));
      if (cross > 0) break;
      h.pop_back();
    }
    h.push_back(p);
  }
  return h;
}

}  // namespace

Staircase hull_closure_oracle(const Staircase& a) {
  const auto hull = lower_hull(a);
  std::vector<std::int64_t> out(a.values().size(), 0);
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    const auto [r, ar] = hull[e];
    const auto [s, as] = hull[e + 1];
    for (auto j = r; j <= s; ++j) {
      auto num = checked::add(checked::mul(ar, s - j), checked::mul(as, j - r));
      out[static_cast<std::size_t>(j)] = checked::ceil_div(num, s - r);
    }
  }
  return Staircase(std::move(out));
}

bool is_closed(const Staircase& a) { return closure_seq(a) == a; }

Staircase jdt_seq(std::int64_t d, std::int64_t t) {
  if (d < 1 || d > t) throw PreconditionError("J(d,t) needs 1 <= d <= t");
  std::vector<std::int64_t> a(static_cast<std::size_t>(d) + 1);
  for (std::int64_t i = 0; i <= d; ++i) a[static_cast<std::size_t>(i)] = checked::ceil_div(checked::mul(i, t), d);
  return Staircase(std::move(a));
}

Staircase maximal_power_seq(std::int64_t c) {
  if (c < 0) throw PreconditionError("negative power of the maximal ideal");
  std::vector<std::int64_t> a(static_cast<std::size_t>(c) + 1);
  std::iota(a.begin(), a.end(), 0);
  return Staircase(std::move(a));
}

std::optional<SimplePair> recognize_simple(const Staircase& a) {
  const auto d = a.length();
  const auto t = a.back();
  if (d < 1 || d >= t || std::gcd(d, t) != 1) return std::nullopt;
  if (a != jdt_seq(d, t)) return std::nullopt;
  return SimplePair{d, t};
}

SimpleFactorization factor_simple(const Staircase& a) {
  if (!is_closed(a)) throw PreconditionError("staircase is not integrally closed");
  SimpleFactorization f;
  const auto hull = lower_hull(a);
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    const auto dx = hull[e + 1].x - hull[e].x;
    const auto dy = hull[e + 1].y - hull[e].y;
    const auto g = std::gcd(dx, dy);
    const auto p = dx / g, q = dy / g;
    if (p == q) {
      f.m_power += g;
    } else {
      // Hull slopes strictly increase, so each primitive pair appears once.
      f.factors.push_back({p, q, g});
    }
  }
  return f;
}

Staircase reconstruct(const SimpleFactorization& f) {
  Staircase r = maximal_power_seq(f.m_power);
  for (const auto& s : f.factors) {
    if (s.multiplicity < 0) throw PreconditionError("negative factor multiplicity");
    for (std::int64_t k = 0; k < s.multiplicity; ++k) r = minplus_product(r, jdt_seq(s.d, s.t));
  }
  return r;
}

std::vector<std::int64_t> prime_exponents(const Staircase& a) {
  const auto d = a.length();
  std::vector<std::int64_t> alpha;
  std::size_t i = 0;
  for (std::int64_t j = 0;; ++j) {
    while (i + 1 < a.values().size() && a[i + 1] - static_cast<std::int64_t>(i + 1) <= j) ++i;
    const auto v = d - static_cast<std::int64_t>(i);
    if (v == 0) break;
    alpha.push_back(v);
  }
  return alpha;
}

Staircase staircase_from_exponents(const std::vector<std::int64_t>& alpha) {
  if (alpha.empty()) return Staircase();
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] <= 0) throw PreconditionError("prime exponents must be positive before trailing zeros");
    if (j > 0 && alpha[j] > alpha[j - 1]) throw PreconditionError("prime exponents must weakly decrease");
  }
  const auto d = alpha.front();
  std::vector<std::int64_t> a(static_cast<std::size_t>(d) + 1);
  std::size_t j = 0;
  for (std::int64_t s = 0; s <= d; ++s) {
    while (j < alpha.size() && alpha[j] > d - s) ++j;
    a[static_cast<std::size_t>(s)] = s + static_cast<std::int64_t>(j);
  }
  return Staircase(std::move(a));
}

}  // namespace gideal
