#pragma once

#include <string>

#include <json.hpp>

#include "ri/checks.hpp"
#include "ri/dynamics.hpp"
#include "ri/fundamental.hpp"
#include "ri/measure.hpp"

namespace ri {

// CSV with header "atom,mass,value"; the space is rebuilt from the rows.
AtomicFunction read_function_csv(const std::string& path);
void write_function_csv(const std::string& path, const AtomicFunction& f);

// CSV with header "atom1,atom2,value" plus a sidecar JSON (path + ".spaces.json")
// holding {"space1": {"atoms": [...], "masses": [...]}, "space2": {...}}.
ProductFunction read_product_csv(const std::string& path);
void write_product_csv(const std::string& path, const ProductFunction& f);

// {"space": {"atoms": [...], "masses": [...]},
//  "group": "integers" | {"cyclic": N},
//  "generator": [permutation of atom indices]}
Action read_system_json(const std::string& path);
Action system_from_json(const nlohmann::json& j);

// kernel token or explicit {"support": [...], "weights": [...]}
Kernel kernel_from_json(const nlohmann::json& j);

nlohmann::json profile_to_json(const StepProfile& p);
nlohmann::json certificate_to_json(const GrowthCertificate& cert);
nlohmann::json zippin_to_json(const ZippinReport& rep);

void write_jsonl(const std::string& path, const std::vector<CheckRecord>& records);

}  // namespace ri
