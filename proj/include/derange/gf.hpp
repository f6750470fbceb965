#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

namespace derange {

/// GF(p^f) with the deterministic modulus: the lexicographically least monic
/// irreducible of degree f over Z_p (coefficient tuples compared from the
/// constant term upward via their base-p encoding).
///
/// Elements are encoded as integers in [0, p^f): the element
/// sum c_i x^i has code sum c_i p^i.
class Gf {
public:
  using El = std::uint32_t;
  static constexpr std::uint64_t kSizeCap = 1u << 20;

  static std::shared_ptr<const Gf> make(std::uint64_t p, unsigned f);

  std::uint64_t p() const { return p_; }
  unsigned f() const { return f_; }
  std::uint64_t size() const { return q_; }
  /// Modulus coefficients c_0..c_f (monic, c_f = 1).
  const std::vector<std::uint32_t>& modulus() const { return mod_; }

  El zero() const { return 0; }
  El one() const { return 1; }
  El from_int(std::uint64_t n) const { return static_cast<El>(n % p_); }

  El add(El a, El b) const;
  El sub(El a, El b) const;
  El neg(El a) const;
  El mul(El a, El b) const;
  El inv(El a) const;
  El pow(El a, std::uint64_t e) const;
  El frobenius(El a) const { return pow(a, p_); }

  std::uint64_t mult_order(El a) const;  // order in the unit group
  /// Least generator of the unit group (requires q <= 2^16).
  El generator() const;

  std::vector<std::uint32_t> digits(El a) const;   // coefficients c_0..c_{f-1}
  El from_digits(const std::vector<std::uint32_t>& c) const;

private:
  Gf(std::uint64_t p, unsigned f);

  std::uint64_t p_ = 2;
  unsigned f_ = 1;
  std::uint64_t q_ = 2;
  std::vector<std::uint32_t> mod_;
  mutable std::once_flag gen_once_;
  mutable El gen_ = 0;
};

using GfPtr = std::shared_ptr<const Gf>;

bool is_prime_u64(std::uint64_t n);
/// Writes p and f when n = p^f for a prime p; false otherwise.
bool prime_power_decompose(std::uint64_t n, std::uint64_t* p, unsigned* f);

} // namespace derange
