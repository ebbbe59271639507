#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tifs/realize.hpp"

namespace tifs {

// Plain text rays: one vector per line, whitespace-separated decimal
// components. Blank lines and lines starting with '#' are skipped.
std::vector<Vector> parse_rays(std::string_view text);
std::string format_rays(const std::vector<Vector>& rays);

std::string realization_to_json(const Realization& r);
Realization realization_from_json(std::string_view text);

}  // namespace tifs
