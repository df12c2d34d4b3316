#pragma once

#include <json.hpp>

#include "pdil/dilation.hpp"
#include "pdil/filter_builder.hpp"
#include "pdil/frame_analysis.hpp"
#include "pdil/pipeline.hpp"
#include "pdil/symbolic_dynamics.hpp"
#include "pdil/wavelet_core.hpp"

namespace pdil {

using Json = nlohmann::ordered_json;

/// Interval sets are arrays of [lo, hi] pairs with rationals as strings.
Json to_json(const IntervalSet& s);
IntervalSet interval_set_from_json(const Json& j);

Json to_json(const WaveletSetReport& r);
Json to_json(const ScalingData& d);
Json to_json(const FilterSet& f);
Json to_json(const Cycle& c);
Json to_json(const PartitionGraph& g);
Json to_json(const PiecewisePath& p);
PiecewisePath piecewise_path_from_json(const Json& j);
Json to_json(const DensityReport& r);
Json to_json(const SymbolicSet& s);
Json to_json(const ComponentFunction& c);
ComponentFunction component_function_from_json(const Json& j);
Json to_json(const DilationReport& r);
Json to_json(const ComplementReport& r);
Json to_json(const GramReport& r);
Json to_json(const InvarianceReport& r);
Json to_json(const PathsResult& r);
Json to_json(const DilationResult& r);

} // namespace pdil
