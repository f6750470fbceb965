#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "derange/affine.hpp"
#include "derange/derangement.hpp"
#include "derange/perm_group.hpp"

namespace derange::io {

using json = nlohmann::ordered_json;

struct NamedGroup {
  std::optional<std::string> name;
  PermGroup group;
};

/// {"name"?: string, "degree": n, "generators": [[images]...]}
NamedGroup group_from_json(const json& j);
json group_to_json(const PermGroup& g,
                   const std::optional<std::string>& name = std::nullopt);

/// {"name"?: string, "p": prime, "k": dim, "generators": [[[row]...]...]}
/// An optional "module_dim" must agree with "k".
AffinePair affine_from_json(const json& j);
json affine_to_json(const AffinePair& pair,
                    const std::optional<std::string>& name = std::nullopt);

json report_to_json(const DerangementReport& rep);

NamedGroup load_group_file(const std::string& path);
AffinePair load_affine_file(const std::string& path);

} // namespace derange::io
