#pragma once

#include <string>

#include "tendonkit/model.hpp"

namespace tendonkit {

/// Loads a model document. Angles in the file are degrees, positions meters.
/// Schema violations are reported with a path string such as "joints[3].axis".
KinematicModel load_model(const std::string& path);

/// Same, from an in-memory JSON text (origin_label appears in diagnostics).
KinematicModel parse_model(const std::string& text, const std::string& origin_label = "<string>");

}  // namespace tendonkit
