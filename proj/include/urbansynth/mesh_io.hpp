#pragma once

#include <string>

#include "urbansynth/assets.hpp"

namespace urbansynth {

// Indexed-triangle text format for library prototypes (.usmesh). See
// docs/mesh_format.md for the schema. Floats are written with enough digits
// to round-trip exactly.
void write_prototype_file(const std::string& path, const Prototype& proto);
Prototype read_prototype_file(const std::string& path);

// Parse/serialize without touching the filesystem (used by tests).
std::string prototype_to_text(const Prototype& proto);
Prototype prototype_from_text(const std::string& text);

}  // namespace urbansynth
