#pragma once

#include <cstdint>
#include <vector>

#include "derange/gf.hpp"

namespace derange {

/// Square matrix over a shared finite field. Vectors are rows and act on the
/// right: v -> v*M, matching the left-to-right permutation convention.
class Mat {
public:
  Mat() = default;
  Mat(GfPtr field, unsigned k);  // zero matrix
  static Mat identity(GfPtr field, unsigned k);
  static Mat from_rows(GfPtr field,
                       const std::vector<std::vector<std::uint64_t>>& rows);

  unsigned dim() const { return k_; }
  const Gf& field() const { return *field_; }
  GfPtr field_ptr() const { return field_; }

  Gf::El at(unsigned r, unsigned c) const { return e_[r * k_ + c]; }
  void set(unsigned r, unsigned c, Gf::El v) { e_[r * k_ + c] = v; }

  bool is_identity() const;
  Gf::El det() const;

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.k_ == b.k_ && a.e_ == b.e_;
  }

private:
  GfPtr field_;
  unsigned k_ = 0;
  std::vector<Gf::El> e_;
};

Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_inv(const Mat& a);  // throws invalid_input on singular input
Mat mat_pow(const Mat& a, std::uint64_t e);

using Vec = std::vector<Gf::El>;
Vec vec_mat(const Vec& v, const Mat& m);

/// Row-space basis (reduced row echelon form rows, zero rows dropped).
std::vector<Vec> row_space_basis(const Mat& m);
/// Basis of {v : v*m = 0}.
std::vector<Vec> left_kernel_basis(const Mat& m);
/// Basis and dimension of the fixed space {v : v*m = v}.
std::vector<Vec> mat_fixed_space(const Mat& m);

std::uint64_t mat_order(const Mat& m);

struct MatHash {
  std::size_t operator()(const Mat& m) const;
};

} // namespace derange
