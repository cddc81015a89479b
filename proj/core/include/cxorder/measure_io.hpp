#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "cxorder/measure.hpp"

namespace cxorder {

/// {"atoms":[{"x":"p/q","w":"p/q"}, ...]}. Numbers may also be JSON integers;
/// JSON floats are rejected.
DiscreteMeasure measure_from_json(std::string_view text);
std::string measure_to_json(const DiscreteMeasure& m);

DiscreteMeasure read_measure(const std::filesystem::path& path);
void write_measure(const std::filesystem::path& path, const DiscreteMeasure& m);

} // namespace cxorder
