#include "derange/perm.hpp"

#include <limits>
#include <numeric>
#include <sstream>

#include "derange/errors.hpp"

namespace derange {

Perm::Perm(std::size_t degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (Point v : img_) {
    if (v >= img_.size() || seen[v])
      throw invalid_input("permutation image table is not a bijection on {0.." +
                          std::to_string(img_.size() ? img_.size() - 1 : 0) + "}");
    seen[v] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree,
                       const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Point from = cyc[i];
      Point to = cyc[(i + 1) % cyc.size()];
      if (from >= degree || to >= degree)
        throw invalid_input("cycle entry exceeds degree");
      img[from] = to;
    }
  }
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (Point i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::size_t Perm::fixed_point_count() const {
  std::size_t n = 0;
  for (Point i = 0; i < img_.size(); ++i)
    if (img_[i] == i) ++n;
  return n;
}

Point Perm::smallest_moved_point() const {
  for (Point i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return i;
  return static_cast<Point>(img_.size());
}

std::uint64_t Perm::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(img_.size(), false);
  for (Point i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    Point j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img_[j];
      ++len;
    }
    std::uint64_t g = std::gcd(result, len);
    std::uint64_t factor = len / g;
    if (result > std::numeric_limits<std::uint64_t>::max() / factor)
      throw cap_exceeded("element order overflows 64 bits");
    result *= factor;
  }
  return result;
}

std::vector<std::vector<Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(img_.size(), false);
  for (Point i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = true;
      continue;
    }
    std::vector<Point> cyc;
    Point j = i;
    while (!seen[j]) {
      seen[j] = true;
      cyc.push_back(j);
      j = img_[j];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw invalid_input("cannot compose permutations of degrees " +
                        std::to_string(a.degree()) + " and " +
                        std::to_string(b.degree()));
  std::vector<Point> img(a.degree());
  for (Point i = 0; i < img.size(); ++i) img[i] = b[a[i]];
  return Perm(Perm::unchecked_t{}, std::move(img));
}

Perm inverse(const Perm& a) {
  std::vector<Point> img(a.degree());
  for (Point i = 0; i < img.size(); ++i) img[a[i]] = i;
  return Perm(Perm::unchecked_t{}, std::move(img));
}

Perm conjugated(const Perm& x, const Perm& g) {
  return compose(compose(g, x), inverse(g));
}

std::string cycle_string(const Perm& p) {
  auto cycs = p.cycles();
  if (cycs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cycs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << c[i];
    }
    os << ')';
  }
  return os.str();
}

std::size_t PermHash::operator()(const Perm& p) const {
  // FNV-1a over the image words
  std::uint64_t h = 1469598103934665603ull;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

} // namespace derange
