#pragma once

#include <string>
#include <vector>

#include "mmsp/model.hpp"

namespace mmsp {

struct Preset {
    std::string name;
    PotentialParams params;
    PhysicalContext ctx;
};

/// Flat key-value preset file: one `[name]` section per preset, keys
/// v0, a_coef, b_coef, alpha, mu, hbar (mu/hbar default to 1).
std::vector<Preset> load_presets(const std::string& path);

Preset find_preset(const std::string& path, const std::string& name);

}  // namespace mmsp
