#include "derange/matrix.hpp"

#include <string>

#include "derange/errors.hpp"

namespace derange {

Mat::Mat(GfPtr field, unsigned k)
    : field_(std::move(field)), k_(k), e_(std::size_t(k) * k, 0) {}

Mat Mat::identity(GfPtr field, unsigned k) {
  Mat m(std::move(field), k);
  for (unsigned i = 0; i < k; ++i) m.set(i, i, m.field().one());
  return m;
}

Mat Mat::from_rows(GfPtr field,
                   const std::vector<std::vector<std::uint64_t>>& rows) {
  unsigned k = static_cast<unsigned>(rows.size());
  Mat m(field, k);
  for (unsigned r = 0; r < k; ++r) {
    if (rows[r].size() != k) throw invalid_input("matrix rows must be square");
    for (unsigned c = 0; c < k; ++c) {
      if (field->f() == 1)
        m.set(r, c, field->from_int(rows[r][c]));
      else {
        if (rows[r][c] >= field->size())
          throw invalid_input("matrix entry exceeds field size");
        m.set(r, c, static_cast<Gf::El>(rows[r][c]));
      }
    }
  }
  return m;
}

bool Mat::is_identity() const {
  for (unsigned r = 0; r < k_; ++r)
    for (unsigned c = 0; c < k_; ++c)
      if (at(r, c) != (r == c ? field_->one() : field_->zero())) return false;
  return true;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.dim() != b.dim()) throw invalid_input("matrix dimension mismatch");
  const Gf& F = a.field();
  unsigned k = a.dim();
  Mat out(a.field_ptr(), k);
  for (unsigned r = 0; r < k; ++r)
    for (unsigned c = 0; c < k; ++c) {
      Gf::El s = F.zero();
      for (unsigned t = 0; t < k; ++t) s = F.add(s, F.mul(a.at(r, t), b.at(t, c)));
      out.set(r, c, s);
    }
  return out;
}

namespace {

// Gauss-Jordan; returns rank. When inv != nullptr the input must be square
// and nonsingular, and *inv receives the inverse.
unsigned rref(std::vector<Vec>& rows, const Gf& F, std::vector<Vec>* aug = nullptr) {
  unsigned rank = 0;
  unsigned ncols = rows.empty() ? 0 : static_cast<unsigned>(rows[0].size());
  for (unsigned col = 0; col < ncols && rank < rows.size(); ++col) {
    unsigned pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == F.zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    if (aug) std::swap((*aug)[pivot], (*aug)[rank]);
    Gf::El pinv = F.inv(rows[rank][col]);
    for (auto& v : rows[rank]) v = F.mul(v, pinv);
    if (aug)
      for (auto& v : (*aug)[rank]) v = F.mul(v, pinv);
    for (unsigned r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == F.zero()) continue;
      Gf::El c = rows[r][col];
      for (unsigned j = 0; j < ncols; ++j)
        rows[r][j] = F.sub(rows[r][j], F.mul(c, rows[rank][j]));
      if (aug)
        for (unsigned j = 0; j < (*aug)[r].size(); ++j)
          (*aug)[r][j] = F.sub((*aug)[r][j], F.mul(c, (*aug)[rank][j]));
    }
    ++rank;
  }
  return rank;
}

} // namespace

Gf::El Mat::det() const {
  const Gf& F = *field_;
  std::vector<Vec> rows(k_, Vec(k_));
  for (unsigned r = 0; r < k_; ++r)
    for (unsigned c = 0; c < k_; ++c) rows[r][c] = at(r, c);
  Gf::El d = F.one();
  unsigned rank = 0;
  for (unsigned col = 0; col < k_ && rank < k_; ++col) {
    unsigned pivot = rank;
    while (pivot < k_ && rows[pivot][col] == F.zero()) ++pivot;
    if (pivot == k_) return F.zero();
    if (pivot != rank) {
      std::swap(rows[pivot], rows[rank]);
      d = F.neg(d);
    }
    d = F.mul(d, rows[rank][col]);
    Gf::El pinv = F.inv(rows[rank][col]);
    for (auto& v : rows[rank]) v = F.mul(v, pinv);
    for (unsigned r = rank + 1; r < k_; ++r) {
      Gf::El c = rows[r][col];
      if (c == F.zero()) continue;
      for (unsigned j = 0; j < k_; ++j)
        rows[r][j] = F.sub(rows[r][j], F.mul(c, rows[rank][j]));
    }
    ++rank;
  }
  return d;
}

Mat mat_inv(const Mat& a) {
  const Gf& F = a.field();
  unsigned k = a.dim();
  std::vector<Vec> rows(k, Vec(k)), aug(k, Vec(k, F.zero()));
  for (unsigned r = 0; r < k; ++r) {
    aug[r][r] = F.one();
    for (unsigned c = 0; c < k; ++c) rows[r][c] = a.at(r, c);
  }
  unsigned rank = rref(rows, F, &aug);
  if (rank != k) throw invalid_input("matrix is singular");
  Mat out(a.field_ptr(), k);
  for (unsigned r = 0; r < k; ++r)
    for (unsigned c = 0; c < k; ++c) out.set(r, c, aug[r][c]);
  return out;
}

Mat mat_pow(const Mat& a, std::uint64_t e) {
  Mat r = Mat::identity(a.field_ptr(), a.dim());
  Mat base = a;
  while (e) {
    if (e & 1) r = mat_mul(r, base);
    base = mat_mul(base, base);
    e >>= 1;
  }
  return r;
}

Vec vec_mat(const Vec& v, const Mat& m) {
  const Gf& F = m.field();
  unsigned k = m.dim();
  Vec out(k, F.zero());
  for (unsigned c = 0; c < k; ++c) {
    Gf::El s = F.zero();
    for (unsigned r = 0; r < k; ++r) s = F.add(s, F.mul(v[r], m.at(r, c)));
    out[c] = s;
  }
  return out;
}

std::vector<Vec> row_space_basis(const Mat& m) {
  const Gf& F = m.field();
  unsigned k = m.dim();
  std::vector<Vec> rows(k, Vec(k));
  for (unsigned r = 0; r < k; ++r)
    for (unsigned c = 0; c < k; ++c) rows[r][c] = m.at(r, c);
  unsigned rank = rref(rows, F);
  rows.resize(rank);
  return rows;
}

std::vector<Vec> left_kernel_basis(const Mat& m) {
  // v*m = 0 is m^T x = 0 for x = v^T; row-reduce m^T and read off the
  // free-variable solutions
  const Gf& F = m.field();
  unsigned k = m.dim();
  std::vector<Vec> a(k, Vec(k));
  for (unsigned r = 0; r < k; ++r)
    for (unsigned c = 0; c < k; ++c) a[c][r] = m.at(r, c);  // a = m^T
  // kernel of a acting on column vectors x: a*x = 0 where x = v^T
  std::vector<int> pivot_col(k, -1);
  unsigned rank = 0;
  for (unsigned col = 0; col < k && rank < k; ++col) {
    unsigned p = rank;
    while (p < k && a[p][col] == F.zero()) ++p;
    if (p == k) continue;
    std::swap(a[p], a[rank]);
    Gf::El pinv = F.inv(a[rank][col]);
    for (auto& v : a[rank]) v = F.mul(v, pinv);
    for (unsigned r = 0; r < k; ++r) {
      if (r == rank || a[r][col] == F.zero()) continue;
      Gf::El c2 = a[r][col];
      for (unsigned j = 0; j < k; ++j)
        a[r][j] = F.sub(a[r][j], F.mul(c2, a[rank][j]));
    }
    pivot_col[rank] = static_cast<int>(col);
    ++rank;
  }
  std::vector<bool> is_pivot(k, false);
  for (unsigned r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
  std::vector<Vec> basis;
  for (unsigned free = 0; free < k; ++free) {
    if (is_pivot[free]) continue;
    Vec x(k, F.zero());
    x[free] = F.one();
    for (unsigned r = 0; r < rank; ++r)
      x[pivot_col[r]] = F.neg(a[r][free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<Vec> mat_fixed_space(const Mat& m) {
  const Gf& F = m.field();
  unsigned k = m.dim();
  Mat diff = m;
  for (unsigned i = 0; i < k; ++i) diff.set(i, i, F.sub(m.at(i, i), F.one()));
  return left_kernel_basis(diff);
}

std::uint64_t mat_order(const Mat& m) {
  Mat x = m;
  std::uint64_t o = 1;
  while (!x.is_identity()) {
    x = mat_mul(x, m);
    ++o;
    if (o > 100'000'000ull)
      throw cap_exceeded("matrix order exceeds iteration bound");
  }
  return o;
}

std::size_t MatHash::operator()(const Mat& m) const {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned r = 0; r < m.dim(); ++r)
    for (unsigned c = 0; c < m.dim(); ++c) {
      h ^= m.at(r, c);
      h *= 1099511628211ull;
    }
  return static_cast<std::size_t>(h);
}

} // namespace derange
