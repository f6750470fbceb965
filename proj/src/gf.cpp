#include "derange/gf.hpp"

#include <algorithm>
#include <string>

#include "derange/errors.hpp"

namespace derange {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients c_0.., no trailing zeros

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  // m monic
  while (a.size() >= m.size()) {
    std::uint64_t lead = a.back();
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      std::uint64_t v = a[shift + i] + p * p - (lead * m[i]) % p;
      a[shift + i] = static_cast<std::uint32_t>(v % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<std::uint32_t>((c[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  trim(c);
  return poly_mod(std::move(c), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  auto inv_mod_p = [p](std::uint64_t x) {
    // Fermat inverse; p prime
    std::uint64_t r = 1, e = p - 2, base = x % p;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  while (!b.empty()) {
    // normalize b to monic, then a mod b
    std::uint64_t li = inv_mod_p(b.back());
    Poly bm = b;
    for (auto& c : bm) c = static_cast<std::uint32_t>(c * li % p);
    a = poly_mod(std::move(a), bm, p);
    std::swap(a, b);
  }
  return a;
}

bool poly_irreducible(const Poly& m, std::uint64_t p, unsigned f) {
  // x^(p^f) == x mod m, and gcd(x^(p^(f/t)) - x, m) == 1 for prime t | f
  Poly x{0, 1};
  auto xq_minus_x = [&](unsigned d) {
    std::uint64_t e = 1;
    for (unsigned i = 0; i < d; ++i) e *= p;
    Poly t = poly_powmod(x, e, m, p);
    // t - x
    Poly diff = t;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
    trim(diff);
    return diff;
  };
  Poly top = xq_minus_x(f);
  if (!top.empty()) return false;
  for (unsigned t = 2; t <= f; ++t) {
    if (f % t != 0) continue;
    bool t_prime = true;
    for (unsigned d = 2; d * d <= t; ++d)
      if (t % d == 0) t_prime = false;
    if (!t_prime) continue;
    Poly diff = xq_minus_x(f / t);
    Poly g = poly_gcd(m, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                          19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % d == 0) return n == d;
  }
  // deterministic Miller-Rabin for 64-bit inputs
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((__uint128_t)a * b % m);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
      if (e & 1) r = mulmod(r, a, m);
      a = mulmod(a, a, m);
      e >>= 1;
    }
    return r;
  };
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                          19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool prime_power_decompose(std::uint64_t n, std::uint64_t* p, unsigned* f) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      std::uint64_t m = n;
      unsigned e = 0;
      while (m % d == 0) {
        m /= d;
        ++e;
      }
      if (m != 1) return false;
      if (p) *p = d;
      if (f) *f = e;
      return true;
    }
  }
  if (p) *p = n;  // n prime
  if (f) *f = 1;
  return true;
}

Gf::Gf(std::uint64_t p, unsigned f) : p_(p), f_(f) {
  q_ = 1;
  for (unsigned i = 0; i < f_; ++i) q_ *= p_;

  // least monic irreducible of degree f, scanning constant-upward codes
  mod_.assign(f_ + 1, 0);
  mod_[f_] = 1;
  if (f_ == 1) {
    return;  // modulus x
  }
  for (std::uint64_t code = 0; code < q_; ++code) {
    Poly m(f_ + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < f_; ++i) {
      m[i] = static_cast<std::uint32_t>(c % p_);
      c /= p_;
    }
    m[f_] = 1;
    if (poly_irreducible(m, p_, f_)) {
      for (unsigned i = 0; i <= f_; ++i) mod_[i] = m[i];
      return;
    }
  }
  throw std::logic_error("no irreducible polynomial found");
}

std::shared_ptr<const Gf> Gf::make(std::uint64_t p, unsigned f) {
  if (!is_prime_u64(p))
    throw invalid_input("field characteristic " + std::to_string(p) +
                        " is not prime");
  if (f < 1) throw invalid_input("field extension degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < f; ++i) {
    if (q > kSizeCap / p)
      throw cap_exceeded("field size p^f exceeds cap 2^20");
    q *= p;
  }
  return std::shared_ptr<const Gf>(new Gf(p, f));
}

std::vector<std::uint32_t> Gf::digits(El a) const {
  std::vector<std::uint32_t> c(f_);
  for (unsigned i = 0; i < f_; ++i) {
    c[i] = static_cast<std::uint32_t>(a % p_);
    a = static_cast<El>(a / p_);
  }
  return c;
}

Gf::El Gf::from_digits(const std::vector<std::uint32_t>& c) const {
  std::uint64_t v = 0;
  for (unsigned i = f_; i-- > 0;) v = v * p_ + (i < c.size() ? c[i] % p_ : 0);
  return static_cast<El>(v);
}

Gf::El Gf::add(El a, El b) const {
  if (f_ == 1) return static_cast<El>((std::uint64_t(a) + b) % p_);
  std::uint64_t out = 0, mult = 1;
  for (unsigned i = 0; i < f_; ++i) {
    out += mult * ((a % p_ + b % p_) % p_);
    a = static_cast<El>(a / p_);
    b = static_cast<El>(b / p_);
    mult *= p_;
  }
  return static_cast<El>(out);
}

Gf::El Gf::neg(El a) const {
  if (f_ == 1) return static_cast<El>((p_ - a % p_) % p_);
  std::uint64_t out = 0, mult = 1;
  for (unsigned i = 0; i < f_; ++i) {
    out += mult * ((p_ - a % p_) % p_);
    a = static_cast<El>(a / p_);
    mult *= p_;
  }
  return static_cast<El>(out);
}

Gf::El Gf::sub(El a, El b) const { return add(a, neg(b)); }

Gf::El Gf::mul(El a, El b) const {
  if (f_ == 1) return static_cast<El>(std::uint64_t(a) * b % p_);
  Poly pa = digits(a), pb = digits(b);
  trim(pa);
  trim(pb);
  Poly r = poly_mulmod(pa, pb, mod_, p_);
  r.resize(f_, 0);
  return from_digits(r);
}

Gf::El Gf::pow(El a, std::uint64_t e) const {
  El r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Gf::El Gf::inv(El a) const {
  if (a == 0) throw invalid_input("inverse of zero field element");
  return pow(a, q_ - 2);
}

std::uint64_t Gf::mult_order(El a) const {
  if (a == 0) throw invalid_input("multiplicative order of zero");
  // least divisor d of q-1 with a^d = 1
  std::uint64_t n = q_ - 1;
  std::uint64_t best = n;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    if (d < best && pow(a, d) == one()) best = d;
    if (n / d < best && pow(a, n / d) == one()) best = n / d;
  }
  return best;
}

Gf::El Gf::generator() const {
  if (q_ > (1u << 16))
    throw cap_exceeded("generator search limited to fields of size <= 2^16");
  std::call_once(gen_once_, [this] {
    for (El a = 1; a < q_; ++a) {
      if (mult_order(a) == q_ - 1) {
        gen_ = a;
        return;
      }
    }
    throw std::logic_error("unit group has no generator");
  });
  return gen_;
}

} // namespace derange
