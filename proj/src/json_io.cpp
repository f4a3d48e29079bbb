#include "charnum/json_io.hpp"

#include <fstream>
#include <utility>

namespace charnum {

namespace {

using nlohmann::json;

Rational parse_rational(const json& j, const std::string& where) {
  if (!j.is_string())
    throw ManifestError(where + ": rational values must be strings");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ManifestError(where + ": " + e.what());
  }
}

Partition parse_partition_key(const std::string& key, const std::string& where) {
  try {
    return Partition::parse(key);
  } catch (const std::invalid_argument& e) {
    throw ManifestError(where + ": bad partition key \"" + key + "\": " +
                        e.what());
  }
}

json element_to_json(const RingModel& m, const RingModel::Element& e) {
  json out = json::object();
  for (const auto& [idx, c] : e) out[m.labels.at(idx)] = c.str();
  return out;
}

RingModel::Element element_from_json(const RingModel& m, const json& j,
                                     const std::string& where) {
  if (!j.is_object()) throw ManifestError(where + ": element must be an object");
  RingModel::Element e;
  for (const auto& [label, val] : j.items()) {
    int idx = m.find(label);
    if (idx < 0)
      throw ManifestError(where + ": unknown generator label \"" + label + "\"");
    Rational c = parse_rational(val, where + "[" + label + "]");
    if (!c.is_zero()) e[idx] = c;
  }
  return e;
}

int require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ManifestError(std::string("manifest missing integer field \"") + key +
                        "\"");
  return j[key].get<int>();
}

}  // namespace

json numbers_to_json(const PontryaginNumbers& nums) {
  json out;
  out["dim"] = nums.dim;
  json table = json::object();
  for (const auto& mu : partitions_of(nums.dim / 4)) {
    Rational v = nums.at(mu);
    if (!v.is_zero()) table[mu.str()] = v.str();
  }
  out["numbers"] = table;
  return out;
}

PontryaginNumbers numbers_from_json(const json& j) {
  if (!j.is_object()) throw ManifestError("numbers manifest must be an object");
  int dim = require_int(j, "dim");
  if (dim <= 0 || dim % 4 != 0)
    throw ManifestError("numbers manifest: dim must be a positive multiple of 4");
  PontryaginNumbers nums(dim);
  if (!j.contains("numbers") || !j["numbers"].is_object())
    throw ManifestError("numbers manifest missing \"numbers\" object");
  for (const auto& [key, val] : j["numbers"].items()) {
    Partition mu = parse_partition_key(key, "numbers");
    if (4 * mu.weight() != dim)
      throw ManifestError("numbers manifest: partition \"" + key +
                          "\" has weight " + std::to_string(mu.weight()) +
                          ", expected " + std::to_string(dim / 4));
    nums.set(mu, parse_rational(val, "numbers[" + key + "]"));
  }
  return nums;
}

json model_to_json(const RingModel& m) {
  json out;
  out["dim"] = m.dim;
  json gens = json::array();
  for (int i = 1; i < m.size(); ++i)
    gens.push_back({{"label", m.labels[i]}, {"degree", m.degrees[i]}});
  out["generators"] = gens;
  json prods = json::array();
  for (const auto& [key, val] : m.products) {
    if (val.empty()) continue;
    prods.push_back({{"left", m.labels.at(key.first)},
                     {"right", m.labels.at(key.second)},
                     {"value", element_to_json(m, val)}});
  }
  out["products"] = prods;
  RingModel::Element fund(m.fundamental.begin(), m.fundamental.end());
  out["fundamental"] = element_to_json(m, fund);
  json pont = json::object();
  for (std::size_t k = 1; k < m.pont.size(); ++k)
    pont[std::to_string(k)] = element_to_json(m, m.pont[k]);
  out["pontryagin"] = pont;
  return out;
}

RingModel model_from_json(const json& j) {
  if (!j.is_object()) throw ManifestError("model manifest must be an object");
  RingModel m;
  m.dim = require_int(j, "dim");
  m.labels = {"1"};
  m.degrees = {0};
  if (!j.contains("generators") || !j["generators"].is_array())
    throw ManifestError("model manifest missing \"generators\" array");
  for (const auto& g : j["generators"]) {
    if (!g.is_object() || !g.contains("label") || !g["label"].is_string())
      throw ManifestError("generators: each entry needs a string \"label\"");
    m.labels.push_back(g["label"].get<std::string>());
    m.degrees.push_back(require_int(g, "degree"));
  }
  for (int i = 1; i < m.size(); ++i)
    if (m.find(m.labels[i]) != i)
      throw ManifestError("generators: duplicate label \"" + m.labels[i] + "\"");
  if (j.contains("products")) {
    if (!j["products"].is_array())
      throw ManifestError("model manifest: \"products\" must be an array");
    for (const auto& p : j["products"]) {
      if (!p.is_object() || !p.contains("left") || !p.contains("right") ||
          !p.contains("value"))
        throw ManifestError("products: entries need left, right, value");
      int a = m.find(p["left"].get<std::string>());
      int b = m.find(p["right"].get<std::string>());
      if (a < 1 || b < 1)
        throw ManifestError("products: unknown generator label");
      if (a > b) std::swap(a, b);
      m.products[{a, b}] = element_from_json(m, p["value"], "products");
    }
  }
  if (j.contains("fundamental")) {
    RingModel::Element f = element_from_json(m, j["fundamental"], "fundamental");
    m.fundamental = std::map<int, Rational>(f.begin(), f.end());
  }
  m.pont.assign(m.dim % 4 == 0 ? m.dim / 4 + 1 : 1, RingModel::Element{});
  m.pont[0] = RingModel::unit();
  if (j.contains("pontryagin")) {
    if (!j["pontryagin"].is_object())
      throw ManifestError("model manifest: \"pontryagin\" must be an object");
    for (const auto& [key, val] : j["pontryagin"].items()) {
      int k = 0;
      try {
        k = std::stoi(key);
      } catch (...) {
        throw ManifestError("pontryagin: bad piece index \"" + key + "\"");
      }
      if (k < 1 || k >= static_cast<int>(m.pont.size()))
        throw ManifestError("pontryagin: piece index " + key + " out of range");
      m.pont[k] = element_from_json(m, val, "pontryagin[" + key + "]");
    }
  }
  try {
    m.validate();
  } catch (const std::exception& e) {
    throw ManifestError(std::string("model manifest invalid: ") + e.what());
  }
  return m;
}

json roots_to_json(const RootSystemData& rsd) {
  json out;
  out["n_torus"] = rsd.n_torus;
  json roots = json::array();
  for (const auto& r : rsd.complementary_roots) {
    json row = json::array();
    for (const auto& c : r) row.push_back(c.str());
    roots.push_back(row);
  }
  out["complementary_roots"] = roots;
  return out;
}

RootSystemData roots_from_json(const json& j) {
  if (!j.is_object()) throw ManifestError("root manifest must be an object");
  RootSystemData rsd;
  rsd.n_torus = require_int(j, "n_torus");
  if (rsd.n_torus <= 0) throw ManifestError("root manifest: n_torus must be >= 1");
  if (!j.contains("complementary_roots") || !j["complementary_roots"].is_array())
    throw ManifestError("root manifest missing \"complementary_roots\" array");
  for (const auto& row : j["complementary_roots"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != rsd.n_torus)
      throw ManifestError(
          "root manifest: each root needs n_torus coordinates");
    std::vector<Rational> r;
    for (const auto& c : row) r.push_back(parse_rational(c, "roots"));
    rsd.complementary_roots.push_back(std::move(r));
  }
  return rsd;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ManifestError("cannot open manifest file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ManifestError("bad JSON in " + path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ManifestError("cannot write manifest file: " + path);
  out << j.dump(1) << "\n";
}

PontryaginNumbers load_manifold_numbers(const std::string& path) {
  json j = load_json_file(path);
  if (j.is_object() && j.contains("numbers")) return numbers_from_json(j);
  if (j.is_object() && j.contains("generators")) {
    RingModel m = model_from_json(j);
    if (m.dim % 4 != 0)
      throw ManifestError("model manifest: dimension must be divisible by 4");
    return m.numbers();
  }
  throw ManifestError("manifest " + path +
                      " is neither a numbers manifest nor a ring model");
}

}  // namespace charnum
