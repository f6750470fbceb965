#include "derange/io.hpp"

#include <fstream>

#include "derange/errors.hpp"

namespace derange::io {

NamedGroup group_from_json(const json& j) {
  if (!j.is_object()) throw invalid_input("group file: expected a JSON object");
  if (!j.contains("degree") || !j["degree"].is_number_unsigned())
    throw invalid_input("group file: missing or invalid \"degree\"");
  if (!j.contains("generators") || !j["generators"].is_array())
    throw invalid_input("group file: missing or invalid \"generators\"");
  std::size_t degree = j["degree"].get<std::size_t>();
  if (degree < 1 || degree > 100'000)
    throw invalid_input("group file: degree out of range [1, 100000]");
  std::vector<Perm> gens;
  for (const auto& gj : j["generators"]) {
    if (!gj.is_array() || gj.size() != degree)
      throw invalid_input(
          "group file: each generator must list exactly \"degree\" images");
    std::vector<Point> img;
    img.reserve(degree);
    for (const auto& v : gj) {
      if (!v.is_number_unsigned())
        throw invalid_input("group file: generator images must be nonnegative");
      std::uint64_t x = v.get<std::uint64_t>();
      if (x >= degree)
        throw invalid_input("group file: generator image out of range");
      img.push_back(static_cast<Point>(x));
    }
    gens.push_back(Perm(std::move(img)));  // validates bijectivity
  }
  if (gens.empty())
    throw invalid_input("group file: at least one generator is required");
  NamedGroup out;
  if (j.contains("name")) {
    if (!j["name"].is_string())
      throw invalid_input("group file: \"name\" must be a string");
    out.name = j["name"].get<std::string>();
  }
  out.group = PermGroup(degree, std::move(gens));
  return out;
}

json group_to_json(const PermGroup& g, const std::optional<std::string>& name) {
  json j;
  if (name) j["name"] = *name;
  j["degree"] = g.degree();
  json gens = json::array();
  for (const Perm& p : g.generators()) gens.push_back(p.images());
  j["generators"] = std::move(gens);
  return j;
}

AffinePair affine_from_json(const json& j) {
  if (!j.is_object())
    throw invalid_input("matrix group file: expected a JSON object");
  for (const char* key : {"p", "k"})
    if (!j.contains(key) || !j[key].is_number_unsigned())
      throw invalid_input(std::string("matrix group file: missing \"") + key +
                          "\"");
  std::uint64_t p = j["p"].get<std::uint64_t>();
  unsigned k = j["k"].get<unsigned>();
  if (j.contains("module_dim") && j["module_dim"].get<unsigned>() != k)
    throw invalid_input("matrix group file: module_dim disagrees with k");
  if (!is_prime_u64(p))
    throw invalid_input("matrix group file: p must be prime");
  if (k < 1 || k > 16)
    throw invalid_input("matrix group file: k out of range [1, 16]");
  if (!j.contains("generators") || !j["generators"].is_array())
    throw invalid_input("matrix group file: missing \"generators\"");
  GfPtr F = Gf::make(p, 1);
  std::vector<Mat> gens;
  for (const auto& mj : j["generators"]) {
    if (!mj.is_array() || mj.size() != k)
      throw invalid_input("matrix group file: each generator needs k rows");
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& rj : mj) {
      if (!rj.is_array() || rj.size() != k)
        throw invalid_input("matrix group file: each row needs k entries");
      rows.push_back(rj.get<std::vector<std::uint64_t>>());
    }
    gens.push_back(Mat::from_rows(F, rows));
  }
  if (gens.empty())
    throw invalid_input("matrix group file: at least one generator is required");
  return AffinePair(p, k, std::move(gens));
}

json affine_to_json(const AffinePair& pair,
                    const std::optional<std::string>& name) {
  json j;
  if (name) j["name"] = *name;
  j["p"] = pair.p();
  j["k"] = pair.k();
  json gens = json::array();
  for (const Mat& m : pair.h_generators()) {
    json rows = json::array();
    for (unsigned r = 0; r < m.dim(); ++r) {
      json row = json::array();
      for (unsigned c = 0; c < m.dim(); ++c) row.push_back(m.at(r, c));
      rows.push_back(std::move(row));
    }
    gens.push_back(std::move(rows));
  }
  j["generators"] = std::move(gens);
  return j;
}

json report_to_json(const DerangementReport& rep) {
  json j;
  j["degree"] = rep.degree;
  j["group_order"] = rep.group_order;
  j["transitive"] = rep.transitive;
  j["primitive"] = rep.primitive;
  j["derangement_count"] = rep.derangement_count;
  j["delta"] = json{{"num", rep.delta.num}, {"den", rep.delta.den}};
  j["order_set"] = rep.order_set;
  json star;
  star["holds"] = rep.star.holds;
  if (rep.star.r)
    star["r"] = *rep.star.r;
  else
    star["r"] = nullptr;
  j["star"] = std::move(star);
  j["elusive"] = rep.elusive;
  if (rep.fks_witness)
    j["fks_witness"] = *rep.fks_witness;
  else
    j["fks_witness"] = nullptr;
  return j;
}

NamedGroup load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open group file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw invalid_input("group file " + path + ": " + e.what());
  }
  return group_from_json(j);
}

AffinePair load_affine_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open matrix group file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw invalid_input("matrix group file " + path + ": " + e.what());
  }
  return affine_from_json(j);
}

} // namespace derange::io
