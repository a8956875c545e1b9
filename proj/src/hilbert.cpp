#include "gideal/hilbert.hpp"

#include "gideal/error.hpp"
#include "gideal/newton.hpp"

namespace gideal {

namespace {

void trim(std::vector<std::int64_t>& h) {
  while (!h.empty() && h.back() == 0) h.pop_back();
}

// Coefficients of (1 - z)^n.
std::vector<std::int64_t> one_minus_z_power(std::size_t n) {
  std::vector<std::int64_t> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    auto b = checked::binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(i));
    c[i] = (i % 2 == 0) ? b : -b;
  }
  return c;
}

}  // namespace

HilbertSeries::HilbertSeries(std::size_t n, std::vector<std::int64_t> h) : n_(n), h_(std::move(h)) { trim(h_); }

std::int64_t HilbertSeries::multiplicity() const {
  std::int64_t e = 0;
  for (auto x : h_) e = checked::add(e, x);
  return e;
}

std::vector<std::int64_t> HilbertSeries::expand(std::int64_t terms) const {
  // Multiply by 1/(1-z) n times, i.e. take n prefix sums.
  std::vector<std::int64_t> c(static_cast<std::size_t>(std::max<std::int64_t>(terms, 0)), 0);
  for (std::size_t i = 0; i < c.size() && i < h_.size(); ++i) c[i] = h_[i];
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = checked::add(c[i], c[i - 1]);
  return c;
}

HilbertSeries HilbertSeries::operator+(const HilbertSeries& o) const {
  if (o.n_ != n_) throw AmbientMismatch("Hilbert series over different rings");
  std::vector<std::int64_t> h(std::max(h_.size(), o.h_.size()), 0);
  for (std::size_t i = 0; i < h_.size(); ++i) h[i] = h_[i];
  for (std::size_t i = 0; i < o.h_.size(); ++i) h[i] = checked::add(h[i], o.h_[i]);
  return HilbertSeries(n_, std::move(h));
}

HilbertSeries HilbertSeries::operator-(const HilbertSeries& o) const {
  std::vector<std::int64_t> neg(o.h_.size());
  for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = checked::sub(0, o.h_[i]);
  return *this + HilbertSeries(o.n_, std::move(neg));
}

namespace {

// Incremental generator of HF_I(k): keeps I^k and length(R/I^k).
class FiltrationWalker {
 public:
  explicit FiltrationWalker(const MonomialIdeal& ideal)
      : ideal_(ideal), power_(MonomialIdeal::unit(ideal.nvars())) {
    if (ideal.is_zero() || !ideal.has_finite_colength())
      throw PreconditionError("Hilbert series needs an ideal of finite colength");
  }

  std::int64_t next() {
    power_ = power_ * ideal_;
    const auto len = *colength(power_);
    const auto hf = checked::sub(len, prev_len_);
    prev_len_ = len;
    return hf;
  }

 private:
  const MonomialIdeal& ideal_;
  MonomialIdeal power_;
  std::int64_t prev_len_ = 0;
};

}  // namespace

std::vector<std::int64_t> hf_filtration(const MonomialIdeal& ideal, std::int64_t terms) {
  if (terms < 1) throw PreconditionError("hf_filtration needs at least one term");
  FiltrationWalker walk(ideal);
  std::vector<std::int64_t> out;
  for (std::int64_t k = 0; k < terms; ++k) out.push_back(walk.next());
  return out;
}

HilbertSeries h_polynomial(const MonomialIdeal& ideal, std::int64_t budget) {
  if (ideal.is_unit()) return HilbertSeries(ideal.nvars(), {});
  FiltrationWalker walk(ideal);
  const std::size_t n = ideal.nvars();
  const auto window = static_cast<std::int64_t>(n) + 2;
  const auto kernel = one_minus_z_power(n);
  std::vector<std::int64_t> hf, numer;
  for (std::int64_t k = 0; k < budget; ++k) {
    hf.push_back(walk.next());
    // Coefficient k of HS(z) * (1 - z)^n depends on HF(0..k) only.
    std::int64_t c = 0;
    for (std::size_t i = 0; i <= n && i <= static_cast<std::size_t>(k); ++i)
      c = checked::add(c, checked::mul(kernel[i], hf[static_cast<std::size_t>(k) - i]));
    numer.push_back(c);
    std::int64_t last = static_cast<std::int64_t>(numer.size()) - 1;
    while (last >= 0 && numer[static_cast<std::size_t>(last)] == 0) --last;
    if (k - last >= window) {
      numer.resize(static_cast<std::size_t>(last + 1));
      return HilbertSeries(n, std::move(numer));
    }
  }
  throw Error("h-polynomial did not stabilize within " + std::to_string(budget) + " terms");
}

namespace {

std::int64_t int_pow(std::int64_t base, std::size_t exp) {
  std::int64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = checked::mul(r, base);
  return r;
}

// Enumerated like any other ideal; e(M^d) = d^n is the self-test.
HilbertSeries maximal_power_series(std::size_t n, std::int64_t d, std::int64_t budget) {
  auto hs = h_polynomial(MonomialIdeal::maximal_power(n, d), budget);
  if (hs.multiplicity() != int_pow(d, n))
    throw InvariantViolation("e(M^" + std::to_string(d) + ") differs from d^n");
  return hs;
}

}  // namespace

HilbertSeries hs_via_factorization(const MonomialIdeal& ideal, const CFactorization& factors, std::int64_t budget) {
  const std::size_t n = ideal.nvars();
  HilbertSeries hs = maximal_power_series(n, ideal.order(), budget);
  for (const auto& f : factors.factors) {
    hs = hs + h_polynomial(f.ideal, budget);
    hs = hs - maximal_power_series(n, f.order, budget);
  }
  return hs;
}

HilbertSeries hs_via_factorization(const MonomialIdeal& ideal, std::int64_t budget) {
  return hs_via_factorization(ideal, factor_C(ideal), budget);
}

Multiplicity multiplicity_e(const MonomialIdeal& ideal, std::int64_t budget) {
  Multiplicity out;
  out.e = h_polynomial(ideal, budget).multiplicity();
  if (!ideal.is_unit() && is_in_C(ideal)) {
    const std::size_t n = ideal.nvars();
    std::int64_t rhs = int_pow(ideal.order(), n);
    for (const auto& f : factor_C(ideal).factors) {
      rhs = checked::add(rhs, h_polynomial(f.ideal, budget).multiplicity());
      rhs = checked::sub(rhs, int_pow(f.order, n));
    }
    out.from_factors = rhs;
    if (rhs != out.e) throw InvariantViolation("multiplicity formula disagrees with the h-polynomial");
  }
  return out;
}

bool h_degree_check(const MonomialIdeal& ideal, std::int64_t budget) {
  if (auto v = is_in_C(ideal); !v) throw PreconditionError("ideal not in C: " + v.reason);
  if (auto g = is_in_G(ideal); !g.form) throw PreconditionError("ideal not in G: " + g.reason);
  if (!is_integrally_closed(ideal)) throw PreconditionError("ideal is not integrally closed");
  return h_polynomial(ideal, budget).degree() <= static_cast<std::int64_t>(ideal.nvars()) - 1;
}

}  // namespace gideal
