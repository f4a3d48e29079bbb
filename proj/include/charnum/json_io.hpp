#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "charnum/bundle_bh.hpp"
#include "charnum/graded_poly.hpp"
#include "charnum/ring_model.hpp"

namespace charnum {

// Raised on malformed manifest files (unreadable, bad JSON, schema
// violations, labels that do not resolve).  The CLI maps it to exit code 2.
class ManifestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"dim": 24, "numbers": {"6": "1958", "4,2": "2868", ...}} — values are
// exact rational strings ("a/b" allowed); omitted partitions mean 0.
nlohmann::json numbers_to_json(const PontryaginNumbers& nums);
PontryaginNumbers numbers_from_json(const nlohmann::json& j);

// Full ring-model manifest: generators with degrees, sparse structure
// constants, fundamental values, and Pontryagin pieces, all by label.
nlohmann::json model_to_json(const RingModel& m);
RingModel model_from_json(const nlohmann::json& j);

// {"n_torus": 4, "complementary_roots": [["1/2", ...], ...]}.
nlohmann::json roots_to_json(const RootSystemData& rsd);
RootSystemData roots_from_json(const nlohmann::json& j);

// File plumbing; both throw ManifestError on I/O or parse failure.
nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

// Loads either kind of manifold manifest ("numbers" key or "generators" key)
// and returns the Pontryagin numbers, integrating the model when full.
PontryaginNumbers load_manifold_numbers(const std::string& path);

}  // namespace charnum
