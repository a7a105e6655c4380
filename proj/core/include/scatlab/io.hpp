#pragma once

#include <string>

#include "scatlab/scattering.hpp"

namespace scatlab {

// [{"m":[a,b],"t":k,"c":"num/den"}, ...] sorted by (k, a, b)
std::string series_to_json(const TruncatedSeries& f);
TruncatedSeries series_from_json(const std::string& text, int order);

// {"order":K,"walls":[{"dir":[a,b],"incoming":bool,"fn":[...]}]}, walls sorted by (angle, incoming).
// indent < 0 gives a single line.
std::string diagram_to_json(const ScatteringDiagram& d, int indent = 2);
ScatteringDiagram diagram_from_json(const std::string& text);

} // namespace scatlab
