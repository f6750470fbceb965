#include "derange/number_theory.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "derange/errors.hpp"
#include "derange/gf.hpp"

namespace derange::nt {

namespace {

const BigInt kPrimalityBound("3317044064679887385961981");
const BigInt kFactorBound = BigInt(1) << 128;

BigInt mulmod(const BigInt& a, const BigInt& b, const BigInt& m) {
  return a * b % m;
}

BigInt powmod(BigInt a, BigInt e, const BigInt& m) {
  BigInt r = 1;
  a %= m;
  while (e > 0) {
    if ((e & 1) != 0) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t twopart(std::uint64_t n) {
  std::uint64_t t = 1;
  while (n % 2 == 0) {
    t *= 2;
    n /= 2;
  }
  return t;
}

bool is_power_of_two(const BigInt& n) {
  if (n < 1) return false;
  return (n & (n - 1)) == 0;
}

BigInt brent_rho(const BigInt& n, std::uint64_t c) {
  // Brent's cycle variant of Pollard rho with fixed parameters
  BigInt x = 2, y = 2, d = 1, q = 1, ys = y;
  std::uint64_t r = 1;
  const std::uint64_t batch = 128;
  auto f = [&](const BigInt& v) { return (v * v + c) % n; };
  while (d == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    std::uint64_t k = 0;
    while (k < r && d == 1) {
      ys = y;
      std::uint64_t lim = std::min(batch, r - k);
      for (std::uint64_t i = 0; i < lim; ++i) {
        y = f(y);
        BigInt diff = x > y ? x - y : y - x;
        q = mulmod(q, diff, n);
      }
      d = gcd(q, n);
      k += lim;
    }
    r *= 2;
  }
  if (d == n) {
    // backtrack one step at a time
    d = 1;
    while (d == 1) {
      ys = f(ys);
      BigInt diff = x > ys ? x - ys : ys - x;
      d = gcd(diff, n);
    }
  }
  return d;
}

void factor_rec(BigInt n, Factorization& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  for (std::uint64_t c = 1;; ++c) {
    BigInt d = brent_rho(n, c);
    if (d != n && d != 1) {
      factor_rec(d, out);
      factor_rec(n / d, out);
      return;
    }
    if (c > 64)
      throw std::logic_error("rho failed to split composite " + n.str());
  }
}

} // namespace

bool is_prime(const BigInt& n) {
  if (n >= kPrimalityBound)
    throw invalid_input(
        "primality test is deterministic only below 3.317e24; input too large");
  if (n < 2) return false;
  static const std::uint64_t small[] = {2,  3,  5,  7,  11, 13,
                                        17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : small) {
    if (n % p == 0) return n == p;
  }
  BigInt d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : small) {
    BigInt x = powmod(a, d, n);
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

Factorization factorize(const BigInt& n) {
  if (n < 1) throw invalid_input("factorize expects a positive integer");
  if (n >= kFactorBound)
    throw invalid_input("factorize is bounded at 2^128");
  Factorization out;
  BigInt m = n;
  for (std::uint64_t d = 2; d < 1'000'000 && BigInt(d) * d <= m; ++d) {
    while (m % d == 0) {
      ++out[BigInt(d)];
      m /= d;
    }
  }
  if (m > 1) {
    if (m < BigInt(1'000'000) * 1'000'000) {
      ++out[m];  // below the trial-division square, necessarily prime
    } else {
      factor_rec(m, out);
    }
  }
  return out;
}

bool is_prime_power(const BigInt& n, BigInt* base, unsigned* exp) {
  if (n < 2) return false;
  Factorization f = factorize(n);
  if (f.size() != 1) return false;
  if (base) *base = f.begin()->first;
  if (exp) *exp = f.begin()->second;
  return true;
}

bool is_mersenne_prime(const BigInt& n) {
  return n >= 3 && is_power_of_two(n + 1) && is_prime(n);
}

bool is_fermat_prime(const BigInt& n) {
  return n >= 3 && is_power_of_two(n - 1) && is_prime(n);
}

bool is_semiregular_sl2_parameter(const BigInt& s) {
  if (s < 5 || !is_prime(s)) return false;
  BigInt m = s - 1;
  unsigned a = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++a;
  }
  while (m % 3 == 0) m /= 3;
  if (m != 1 || a < 2) return false;
  return is_prime((s + 1) / 2);
}

BigInt pow_big(const BigInt& base, std::uint64_t e) {
  BigInt r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r *= base;
  return r;
}

BigInt gcd_qpow(std::uint64_t q, std::uint64_t n, std::uint64_t m, int sign_n,
                int sign_m) {
  if (q < 2 || n < 1 || m < 1 || (sign_n != 1 && sign_n != -1) ||
      (sign_m != 1 && sign_m != -1))
    throw invalid_input("gcd_qpow: need q >= 2, n,m >= 1, signs +-1");
  std::uint64_t g = std::gcd(n, m);
  BigInt qg = pow_big(q, g);
  BigInt two_gcd = (q - 1) % 2 == 0 ? 2 : 1;
  if (sign_n == -1 && sign_m == -1) return qg - 1;
  if (sign_n == 1 && sign_m == 1)
    return twopart(n) == twopart(m) ? qg + 1 : two_gcd;
  // mixed signs: reduce to gcd(q^a - 1, q^b + 1)
  std::uint64_t a = sign_n == -1 ? n : m;  // exponent under the minus sign
  std::uint64_t b = sign_n == -1 ? m : n;
  return 2 * twopart(b) <= twopart(a) ? qg + 1 : two_gcd;
}

PpdResult ppd(std::uint64_t q, std::uint64_t e) {
  std::uint64_t p;
  unsigned f;
  if (!prime_power_decompose(q, &p, &f))
    throw invalid_input("ppd: q = " + std::to_string(q) +
                        " is not a prime power");
  if (e < 2) throw invalid_input("ppd: exponent must be at least 2");
  PpdResult out;
  out.q = q;
  out.e = e;
  BigInt target = pow_big(q, e) - 1;
  for (const auto& [r, mult] : factorize(target)) {
    (void)mult;
    bool primitive = true;
    BigInt acc = 1;
    for (std::uint64_t i = 1; i < e && primitive; ++i) {
      acc = acc * q % r;
      if (acc == 1) primitive = false;
    }
    if (primitive) out.all_ppds.push_back(r);
  }
  std::sort(out.all_ppds.begin(), out.all_ppds.end());
  if (!out.all_ppds.empty()) out.largest_ppd = out.all_ppds.back();
  return out;
}

std::vector<PrimePowerSolution> solve_prime_power_eq(std::uint64_t bound_base,
                                                     std::uint64_t bound_exp) {
  if (bound_base < 2 || bound_exp < 1)
    throw invalid_input("solve_prime_power_eq: bounds must be positive");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t v = 2; v <= bound_base; ++v)
    if (is_prime_u64(v)) primes.push_back(v);

  std::map<BigInt, std::pair<std::uint64_t, std::uint64_t>> powers;  // s^n
  for (std::uint64_t s : primes) {
    BigInt v = 1;
    for (std::uint64_t n = 1; n <= bound_exp; ++n) {
      v *= s;
      powers.emplace(v, std::make_pair(s, n));
    }
  }

  std::vector<PrimePowerSolution> out;
  for (std::uint64_t r : primes) {
    BigInt v = 1;
    for (std::uint64_t m = 1; m <= bound_exp; ++m) {
      v *= r;
      auto it = powers.find(v + 1);
      if (it == powers.end()) continue;
      PrimePowerSolution sol;
      sol.r = r;
      sol.m = m;
      sol.s = it->second.first;
      sol.n = it->second.second;
      if (sol.r == 2 && sol.s == 3 && sol.m == 3 && sol.n == 2)
        sol.cases.push_back(1);
      if (sol.r == 2 && sol.n == 1 && (m & (m - 1)) == 0)
        sol.cases.push_back(2);  // s = 2^m + 1 Fermat prime
      if (sol.s == 2 && sol.m == 1 && is_prime_u64(sol.n))
        sol.cases.push_back(3);  // r = 2^n - 1 Mersenne prime
      out.push_back(std::move(sol));
    }
  }
  return out;
}

DivisorCaseResult divisor_case(std::uint64_t q, std::uint64_t a, int eps,
                               std::uint64_t b, int delta) {
  if (!prime_power_decompose(q, nullptr, nullptr))
    throw invalid_input("divisor_case: q must be a prime power");
  if (a < 2 || b <= a) throw invalid_input("divisor_case: need b > a >= 2");
  if ((eps != 1 && eps != -1) || (delta != 1 && delta != -1))
    throw invalid_input("divisor_case: signs must be +-1");
  if (a == 2 && eps == -1)
    throw invalid_input("divisor_case: (a, eps) = (2, -1) is excluded");

  DivisorCaseResult out;
  BigInt fa = pow_big(q, a) + eps;
  BigInt fb = pow_big(q, b) + delta;
  out.n_value = fa * fb;
  BigInt tor = BigInt(q) * q - 1;

  std::vector<BigInt> outside;
  for (const auto& [r, mult] : factorize(out.n_value)) {
    (void)mult;
    if (tor % r != 0) outside.push_back(r);
  }
  std::sort(outside.begin(), outside.end());

  if (outside.size() >= 2) {
    out.all_cases.push_back(1);
    out.witnesses = {outside[0], outside[1]};
  }
  if (a == 2 && eps == 1 && b == 4 && delta == -1) {
    BigInt lhs = BigInt(q) * q + 1;
    BigInt d = q % 2 == 0 ? 1 : 2;  // (2, q-1)
    if (lhs % d == 0 && is_prime_power(lhs / d)) out.all_cases.push_back(2);
  }
  // clause 3 as forced by the proof: q = 2, (a,eps) = (2,1), (b,delta) = (3,1)
  if (q == 2 && a == 2 && eps == 1 && b == 3 && delta == 1)
    out.all_cases.push_back(3);
  if (q == 2 && a == 3 && eps == 1) {
    // N = 9 (2^b + delta): at most two distinct primes in N, i.e. at most
    // one prime different from 3 in the second factor
    Factorization f = factorize(fb);
    unsigned other = 0;
    for (const auto& [r, mult] : f) {
      (void)mult;
      if (r != 3) ++other;
    }
    if (other <= 1) out.all_cases.push_back(4);
  }
  if (q == 2 && a == 3 && b == 6 && delta == -1) out.all_cases.push_back(5);

  if (out.all_cases.empty())
    throw std::logic_error("divisor_case: no clause matched (q=" +
                           std::to_string(q) + ", a=" + std::to_string(a) +
                           ", b=" + std::to_string(b) + ")");
  out.primary_case = out.all_cases.front();
  return out;
}

BigInt table2_value(Table2Row row, int eps, std::uint64_t q) {
  if (eps != 1 && eps != -1) throw invalid_input("table2: eps must be +-1");
  if (!prime_power_decompose(q, nullptr, nullptr))
    throw invalid_input("table2: q must be a prime power");
  BigInt bq = q;
  BigInt qme = eps == 1 ? BigInt(bq - 1) : BigInt(bq + 1);  // q - eps
  auto g = [&](std::uint64_t k) { return gcd(BigInt(k), qme); };
  BigInt num, den;
  switch (row) {
    case Table2Row::Q6_D7:
      num = pow_big(q, 6) - 1;
      den = g(7);
      break;
    case Table2Row::Q6_DQ_D6:
      num = pow_big(q, 6) - 1;
      den = qme * g(6);
      break;
    case Table2Row::Q5_D6:
      num = pow_big(q, 5) - eps;
      den = g(6);
      break;
    case Table2Row::Q4_D5:
      num = pow_big(q, 4) - 1;
      den = g(5);
      break;
    case Table2Row::Q4_DQ_D4:
      num = pow_big(q, 4) - 1;
      den = qme * g(4);
      break;
    case Table2Row::Q3_D4:
      num = pow_big(q, 3) - eps;
      den = g(4);
      break;
    case Table2Row::Q3_Q1_D5:
      num = (pow_big(q, 3) - 1) * (bq + 1);
      den = g(5);
      break;
  }
  if (num % den != 0)
    throw std::logic_error("table2: inexact division");
  return num / den;
}

bool table2_check(Table2Row row, int eps, std::uint64_t q) {
  BigInt v = table2_value(row, eps, q);
  return v > 1 && is_prime_power(v);
}

std::vector<std::tuple<Table2Row, int, std::uint64_t>> table2_sweep(
    std::uint64_t q_max) {
  std::vector<std::tuple<Table2Row, int, std::uint64_t>> out;
  for (int rowi = 0; rowi <= 6; ++rowi) {
    for (int eps : {1, -1}) {
      for (std::uint64_t q = 2; q <= q_max; ++q) {
        if (!prime_power_decompose(q, nullptr, nullptr)) continue;
        if (table2_check(static_cast<Table2Row>(rowi), eps, q))
          out.emplace_back(static_cast<Table2Row>(rowi), eps, q);
      }
    }
  }
  return out;
}

NagellResult nagell_check(std::uint64_t q) {
  std::uint64_t p;
  unsigned f;
  if (!prime_power_decompose(q, &p, &f))
    throw invalid_input("nagell_check: q must be a prime power");
  NagellResult out;
  out.d = q % 3 == 1 ? 3 : 1;  // (3, q-1)
  unsigned ff = f;
  while (ff % 3 == 0) ff /= 3;
  out.f_is_3power = ff == 1;
  BigInt n = BigInt(q) * q + q + 1;
  BigInt m = n / out.d;
  BigInt base;
  unsigned exp;
  if (is_prime_power(m, &base, &exp)) {
    out.r = base;
    out.e = exp;
    if (q % 3 != 1 && exp != 1)
      throw std::logic_error("nagell: exponent above 1 with q != 1 mod 3");
    if (q % 3 == 1 && exp > 2)
      throw std::logic_error("nagell: exponent above 2 with q = 1 mod 3");
  }
  return out;
}

} // namespace derange::nt
