#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pdil/dilation.hpp"

namespace pdil {

using SvgRow = std::pair<std::string, IntervalSet>;

/// One labeled row per component: "real", then "<word>:<slot>".
std::vector<SvgRow> component_rows(const ComponentFunction& c, const std::string& prefix);

/// Static number-line figure with each row's intervals drawn as bars.
std::string render_svg(const std::vector<SvgRow>& rows, const std::string& title);

} // namespace pdil
