#include "derange/affine.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "derange/errors.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace derange {

namespace {

bool vec_is_zero(const Vec& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

// span membership against a row-echelon basis built incrementally
struct SpanBuilder {
  const Gf& F;
  unsigned k;
  std::vector<Vec> rows;  // echelonized
  std::vector<int> pivot; // pivot column per row

  explicit SpanBuilder(const Gf& f, unsigned dim) : F(f), k(dim) {}

  // returns true when v was independent (and is absorbed)
  bool add(Vec v) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (v[pivot[i]] == F.zero()) continue;
      Gf::El c = v[pivot[i]];
      for (unsigned j = 0; j < k; ++j)
        v[j] = F.sub(v[j], F.mul(c, rows[i][j]));
    }
    for (unsigned j = 0; j < k; ++j) {
      if (v[j] != F.zero()) {
        Gf::El pinv = F.inv(v[j]);
        for (unsigned t = 0; t < k; ++t) v[t] = F.mul(v[t], pinv);
        rows.push_back(std::move(v));
        pivot.push_back(static_cast<int>(j));
        return true;
      }
    }
    return false;
  }

  bool contains(Vec v) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (v[pivot[i]] == F.zero()) continue;
      Gf::El c = v[pivot[i]];
      for (unsigned j = 0; j < k; ++j)
        v[j] = F.sub(v[j], F.mul(c, rows[i][j]));
    }
    return vec_is_zero(v);
  }

  unsigned dim() const { return static_cast<unsigned>(rows.size()); }
};

} // namespace

AffinePair::AffinePair(std::uint64_t p, unsigned k, std::vector<Mat> h_generators,
                       std::uint64_t h_cap)
    : p_(p), k_(k), h_gens_(std::move(h_generators)) {
  field_ = Gf::make(p, 1);
  vsize_ = 1;
  for (unsigned i = 0; i < k_; ++i) {
    if (vsize_ > (std::uint64_t(1) << 40) / p_)
      throw cap_exceeded("affine space p^k is too large");
    vsize_ *= p_;
  }
  for (const Mat& m : h_gens_) {
    if (m.dim() != k_) throw invalid_input("generator dimension mismatch");
    if (m.field().p() != p_ || m.field().f() != 1)
      throw invalid_input("generators must be over the prime field");
    if (m.det() == field_->zero())
      throw invalid_input("generator matrix is singular mod p");
  }
  // closure
  std::unordered_set<Mat, MatHash> seen;
  std::vector<Mat> frontier;
  Mat id = Mat::identity(field_, k_);
  seen.insert(id);
  h_elements_.push_back(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const Mat& x : frontier)
      for (const Mat& g : h_gens_) {
        Mat y = mat_mul(x, g);
        if (seen.insert(y).second) {
          if (h_elements_.size() >= h_cap)
            throw cap_exceeded("matrix group closure exceeds cap " +
                               std::to_string(h_cap));
          h_elements_.push_back(y);
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  std::sort(h_elements_.begin(), h_elements_.end(),
            [](const Mat& a, const Mat& b) {
              for (unsigned r = 0; r < a.dim(); ++r)
                for (unsigned c = 0; c < a.dim(); ++c) {
                  if (a.at(r, c) != b.at(r, c)) return a.at(r, c) < b.at(r, c);
                }
              return false;
            });
}

bool AffinePair::h_contains(const Mat& m) const {
  return std::binary_search(
      h_elements_.begin(), h_elements_.end(), m,
      [](const Mat& a, const Mat& b) {
        for (unsigned r = 0; r < a.dim(); ++r)
          for (unsigned c = 0; c < a.dim(); ++c) {
            if (a.at(r, c) != b.at(r, c)) return a.at(r, c) < b.at(r, c);
          }
        return false;
      });
}

std::uint64_t AffinePair::index_of(const Vec& v) const {
  std::uint64_t idx = 0;
  for (unsigned i = k_; i-- > 0;) idx = idx * p_ + v[i];
  return idx;
}

Vec AffinePair::vector_at(std::uint64_t idx) const {
  Vec v(k_);
  for (unsigned i = 0; i < k_; ++i) {
    v[i] = static_cast<Gf::El>(idx % p_);
    idx /= p_;
  }
  return v;
}

bool AffinePair::module_irreducible() const {
  if (irreducible_.has_value()) return *irreducible_;
  const Gf& F = *field_;
  // spin one representative of every 1-dimensional subspace
  bool irr = true;
  for (std::uint64_t idx = 1; idx < vsize_ && irr; ++idx) {
    Vec seed = vector_at(idx);
    // normalize: first nonzero coordinate 1, so each line is seen once
    unsigned lead = 0;
    while (seed[lead] == 0) ++lead;
    if (seed[lead] != F.one()) continue;
    SpanBuilder span(F, k_);
    span.add(seed);
    std::vector<Vec> queue{seed};
    while (!queue.empty()) {
      Vec v = std::move(queue.back());
      queue.pop_back();
      for (const Mat& g : h_gens_) {
        Vec w = vec_mat(v, g);
        if (span.add(w)) queue.push_back(std::move(w));
      }
    }
    if (span.dim() < k_) irr = false;
  }
  irreducible_ = irr;
  return irr;
}

AffineEl affine_mul(const AffineEl& a, const AffineEl& b) {
  const Gf& F = a.t.field();
  Vec v = vec_mat(a.v, b.t);
  for (unsigned i = 0; i < v.size(); ++i) v[i] = F.add(v[i], b.v[i]);
  return AffineEl{mat_mul(a.t, b.t), std::move(v)};
}

bool affine_is_identity(const AffineEl& a) {
  return a.t.is_identity() && vec_is_zero(a.v);
}

std::uint64_t affine_order(const AffineEl& a) {
  AffineEl x = a;
  std::uint64_t o = 1;
  while (!affine_is_identity(x)) {
    x = affine_mul(x, a);
    ++o;
    if (o > 100'000'000ull)
      throw cap_exceeded("affine element order exceeds iteration bound");
  }
  return o;
}

std::vector<Vec> commutator_image(const Mat& t, const AffinePair& pair) {
  if (!pair.h_contains(t))
    throw invalid_input("commutator_image: matrix is not in H");
  const Gf& F = t.field();
  Mat diff = t;
  for (unsigned i = 0; i < t.dim(); ++i)
    diff.set(i, i, F.sub(t.at(i, i), F.one()));
  return row_space_basis(diff);
}

namespace {

// tally of {t v : v outside im(t - 1)} for one t
void tally_for_t(const AffinePair& pair, const Mat& t,
                 std::map<std::uint64_t, std::uint64_t>& order_counts,
                 std::uint64_t& count) {
  const Gf& F = t.field();
  Mat diff = t;
  for (unsigned i = 0; i < t.dim(); ++i)
    diff.set(i, i, F.sub(t.at(i, i), F.one()));
  SpanBuilder span(F, pair.k());
  for (unsigned r = 0; r < t.dim(); ++r) {
    Vec row(pair.k());
    for (unsigned c = 0; c < pair.k(); ++c) row[c] = diff.at(r, c);
    span.add(row);
  }
  if (span.dim() == pair.k()) return;  // image is everything
  for (std::uint64_t idx = 0; idx < pair.space_size(); ++idx) {
    Vec v = pair.vector_at(idx);
    if (span.contains(v)) continue;
    ++count;
    ++order_counts[affine_order(AffineEl{t, v})];
  }
}

} // namespace

AffineDerangements affine_derangements(const AffinePair& pair, ScanMode mode) {
  AffineDerangements out;
  const auto& els = pair.h_elements();
  bool parallel = mode == ScanMode::Parallel ||
                  (mode == ScanMode::Auto && pair.group_order() > 4096);
#if defined(_OPENMP)
  if (parallel) {
    #pragma omp parallel
    {
      std::map<std::uint64_t, std::uint64_t> local;
      std::uint64_t local_count = 0;
      #pragma omp for schedule(dynamic) nowait
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(els.size()); ++i)
        tally_for_t(pair, els[i], local, local_count);
      #pragma omp critical(derange_affine_merge)
      {
        out.count += local_count;
        for (const auto& [o, c] : local) out.order_counts[o] += c;
      }
    }
  } else
#else
  (void)parallel;
#endif
  {
    for (const Mat& t : els) tally_for_t(pair, t, out.order_counts, out.count);
  }
  for (const auto& [o, c] : out.order_counts) {
    (void)c;
    out.order_set.push_back(o);
  }
  return out;
}

std::vector<AffineEl> affine_derangement_elements(const AffinePair& pair) {
  if (pair.group_order() > 5'000'000)
    throw cap_exceeded("affine derangement listing is capped");
  std::vector<AffineEl> out;
  for (const Mat& t : pair.h_elements()) {
    const Gf& F = t.field();
    Mat diff = t;
    for (unsigned i = 0; i < t.dim(); ++i)
      diff.set(i, i, F.sub(t.at(i, i), F.one()));
    SpanBuilder span(F, pair.k());
    for (unsigned r = 0; r < t.dim(); ++r) {
      Vec row(pair.k());
      for (unsigned c = 0; c < pair.k(); ++c) row[c] = diff.at(r, c);
      span.add(row);
    }
    if (span.dim() == pair.k()) continue;
    for (std::uint64_t idx = 0; idx < pair.space_size(); ++idx) {
      Vec v = pair.vector_at(idx);
      if (!span.contains(v)) out.push_back(AffineEl{t, v});
    }
  }
  return out;
}

SemiregularResult is_rprime_semiregular(const AffinePair& pair,
                                        std::uint64_t r) {
  SemiregularResult out;
  out.semiregular = true;
  for (const Mat& t : pair.h_elements()) {
    if (t.is_identity()) continue;
    if (mat_order(t) % r == 0) continue;  // not an r'-element
    if (!mat_fixed_space(t).empty()) {
      out.semiregular = false;
      out.counterexample = t;
      return out;
    }
  }
  return out;
}

AffineStar star_property_affine(const AffinePair& pair) {
  if (!pair.module_irreducible())
    throw invalid_input(
        "star criterion requires an irreducible module (primitive affine group)");
  AffineStar out;
  if (is_rprime_semiregular(pair, pair.p()).semiregular) {
    out.holds = true;
    out.r = pair.p();
  }
  return out;
}

bool two_point_stabilizer_check(const AffinePair& pair, std::uint64_t r) {
  for (std::uint64_t idx = 1; idx < pair.space_size(); ++idx) {
    Vec v = pair.vector_at(idx);
    for (const Mat& t : pair.h_elements()) {
      if (t.is_identity()) continue;
      if (vec_mat(v, t) != v) continue;
      std::uint64_t o = mat_order(t);
      while (o % r == 0) o /= r;
      if (o != 1) return false;  // stabilizer contains a non r-element
    }
  }
  return true;
}

Lemma52Check lemma52_check(const AffinePair& pair, std::uint64_t r) {
  Lemma52Check out;
  AffineDerangements d = affine_derangements(pair);
  out.star = true;
  for (std::uint64_t o : d.order_set) {
    std::uint64_t m = o;
    while (m % r == 0) m /= r;
    if (m != 1) out.star = false;
  }
  out.stabilizers = two_point_stabilizer_check(pair, r);
  out.semiregular = is_rprime_semiregular(pair, r).semiregular;
  return out;
}

std::vector<Mat> sylow_of_h(const AffinePair& pair, std::uint64_t r) {
  if (pair.h_order() % r != 0) return {};  // trivial Sylow subgroup
  // act on the nonzero vectors; the action of H there is faithful
  std::uint64_t deg = pair.space_size() - 1;
  std::vector<Perm> gens;
  for (const Mat& g : pair.h_generators()) {
    std::vector<Point> img(deg);
    for (std::uint64_t idx = 1; idx < pair.space_size(); ++idx)
      img[idx - 1] =
          static_cast<Point>(pair.index_of(vec_mat(pair.vector_at(idx), g)) - 1);
    gens.push_back(Perm(std::move(img)));
  }
  PermGroup h_perm(deg, gens);
  PermGroup syl = sylow_subgroup(h_perm, r);
  // a matrix is recovered from the images of the basis vectors
  std::vector<Mat> out;
  for (const Perm& s : syl.generators()) {
    Mat m(pair.field(), pair.k());
    for (unsigned i = 0; i < pair.k(); ++i) {
      Vec basis(pair.k(), 0);
      basis[i] = 1;
      Vec image = pair.vector_at(s[static_cast<Point>(pair.index_of(basis) - 1)] + 1);
      for (unsigned c = 0; c < pair.k(); ++c) m.set(i, c, image[c]);
    }
    out.push_back(std::move(m));
  }
  return out;
}

SylowReduction sylow_reduction(const AffinePair& pair) {
  AffineStar star = star_property_affine(pair);
  if (!star.holds)
    throw invalid_input("sylow reduction requires the star property");
  SylowReduction out;
  out.k_generators = sylow_of_h(pair, pair.p());
  AffinePair kv(pair.p(), pair.k(), out.k_generators);
  out.k_order = kv.h_order();
  out.p_order = out.k_order * pair.space_size();
  out.p_action = as_permutation_group(kv);
  AffineDerangements d = affine_derangements(kv);
  out.e_k_p = d.order_set;
  return out;
}

ExponentCriterion exponent_criterion(const AffinePair& pair) {
  ExponentCriterion out;
  AffineDerangements d = affine_derangements(pair);
  out.e_equals_r =
      d.order_set.size() == 1 && d.order_set[0] == pair.p();
  out.two_point_ok = two_point_stabilizer_check(pair, pair.p());
  // exponent of the Sylow p-subgroup P = K |x V of G
  std::vector<Mat> kgens = sylow_of_h(pair, pair.p());
  AffinePair kv(pair.p(), pair.k(), kgens);
  std::uint64_t e = 1;
  for (const Mat& t : kv.h_elements())
    for (std::uint64_t idx = 0; idx < kv.space_size(); ++idx) {
      std::uint64_t o = affine_order(AffineEl{t, kv.vector_at(idx)});
      e = std::lcm(e, o);
    }
  out.sylow_exponent = e;
  out.criterion_holds = out.two_point_ok && out.sylow_exponent == pair.p();
  return out;
}

PermGroup as_permutation_group(const AffinePair& pair,
                               std::uint64_t degree_cap) {
  if (pair.space_size() > degree_cap)
    throw cap_exceeded("affine degree p^k = " +
                       std::to_string(pair.space_size()) + " exceeds cap " +
                       std::to_string(degree_cap));
  std::uint64_t deg = pair.space_size();
  std::vector<Perm> gens;
  for (const Mat& g : pair.h_generators()) {
    std::vector<Point> img(deg);
    for (std::uint64_t idx = 0; idx < deg; ++idx)
      img[idx] = static_cast<Point>(pair.index_of(vec_mat(pair.vector_at(idx), g)));
    gens.push_back(Perm(std::move(img)));
  }
  const Gf& F = *pair.field();
  for (unsigned i = 0; i < pair.k(); ++i) {
    std::vector<Point> img(deg);
    for (std::uint64_t idx = 0; idx < deg; ++idx) {
      Vec v = pair.vector_at(idx);
      v[i] = F.add(v[i], F.one());
      img[idx] = static_cast<Point>(pair.index_of(v));
    }
    gens.push_back(Perm(std::move(img)));
  }
  return PermGroup(deg, gens);
}

} // namespace derange
