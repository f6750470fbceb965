#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace derange::nt {

using BigInt = boost::multiprecision::cpp_int;

/// Miller-Rabin with a fixed 12-prime witness set; deterministic for
/// n < 3.317e24. Inputs at or beyond that bound are rejected rather than
/// answered probabilistically.
bool is_prime(const BigInt& n);

using Factorization = std::map<BigInt, unsigned>;

/// Trial division to 10^6, then Brent's rho with deterministically
/// restarting parameters. Practical input bound 2^128.
Factorization factorize(const BigInt& n);

bool is_prime_power(const BigInt& n, BigInt* base = nullptr,
                    unsigned* exp = nullptr);

bool is_mersenne_prime(const BigInt& n);  // n prime, n+1 a power of two
bool is_fermat_prime(const BigInt& n);    // n prime, n-1 a power of two

/// Membership in the prime family {5, 13, 37, 73, ...}: s prime with
/// s = 2^a 3^b + 1 for a >= 2, b >= 0, and (s+1)/2 prime. These are the
/// parameters s for which SL2(s) can act semiregularly away from 3.
bool is_semiregular_sl2_parameter(const BigInt& s);

BigInt pow_big(const BigInt& base, std::uint64_t e);

/// Closed-form gcd(q^n + sign_n, q^m + sign_m) via the two-adic case split.
/// q >= 2; signs are +1 or -1.
BigInt gcd_qpow(std::uint64_t q, std::uint64_t n, std::uint64_t m, int sign_n,
                int sign_m);

struct PpdResult {
  std::uint64_t q = 0;
  std::uint64_t e = 0;
  std::optional<BigInt> largest_ppd;  // empty exactly in the Zsigmondy gaps
  std::vector<BigInt> all_ppds;       // ascending
};

/// Primitive prime divisors of q^e - 1: primes dividing q^e - 1 but no
/// q^i - 1 with 1 <= i < e.
PpdResult ppd(std::uint64_t q, std::uint64_t e);

struct PrimePowerSolution {
  std::uint64_t r = 0, s = 0, m = 0, n = 0;  // r^m + 1 = s^n
  std::vector<int> cases;                    // matching case numbers 1..3
};

/// All solutions of r^m + 1 = s^n with primes r,s < bound_base and
/// 1 <= m,n <= bound_exp, each classified.
std::vector<PrimePowerSolution> solve_prime_power_eq(std::uint64_t bound_base,
                                                     std::uint64_t bound_exp);

struct DivisorCaseResult {
  BigInt n_value;
  int primary_case = 0;          // first matching clause, 1..5
  std::vector<int> all_cases;    // every matching clause
  std::vector<BigInt> witnesses; // two primes coprime to q^2-1, when clause 1
};

/// Classifies N = (q^a + eps)(q^b + delta) with b > a >= 2 and
/// (a,eps) != (2,-1). Throws invalid_input on precondition violations and
/// logic_error if no clause matches.
DivisorCaseResult divisor_case(std::uint64_t q, std::uint64_t a, int eps,
                               std::uint64_t b, int delta);

/// The seven quotient shapes whose prime-power values are catalogued.
enum class Table2Row {
  Q6_D7 = 0,       // (q^6-1)/(7, q-eps)
  Q6_DQ_D6 = 1,    // (q^6-1)/((q-eps)(6, q-eps))
  Q5_D6 = 2,       // (q^5-eps)/(6, q-eps)
  Q4_D5 = 3,       // (q^4-1)/(5, q-eps)
  Q4_DQ_D4 = 4,    // (q^4-1)/((q-eps)(4, q-eps))
  Q3_D4 = 5,       // (q^3-eps)/(4, q-eps)
  Q3_Q1_D5 = 6,    // (q^3-1)(q+1)/(5, q-eps)
};

BigInt table2_value(Table2Row row, int eps, std::uint64_t q);
bool table2_check(Table2Row row, int eps, std::uint64_t q);
/// All (row, eps, q) with a prime-power value, for prime powers q <= q_max.
std::vector<std::tuple<Table2Row, int, std::uint64_t>> table2_sweep(
    std::uint64_t q_max);

struct NagellResult {
  std::uint64_t d = 1;               // (3, q-1)
  std::optional<BigInt> r;           // prime with q^2+q+1 = d * r^e
  std::optional<unsigned> e;
  bool f_is_3power = false;          // extension degree of q a power of 3
};

NagellResult nagell_check(std::uint64_t q);

} // namespace derange::nt
