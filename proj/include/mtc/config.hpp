#pragma once

#include "mtc/model.hpp"

#include <string>

namespace mtc {

// Declarative model configuration (JSON): model kind, parameters and named
// observable definitions. See configs/ for the schema by example.
ModelPtr model_from_json_text(const std::string& text);
ModelPtr model_from_file(const std::string& path);

// Built-in defaults for the shipped model kinds ("freeshift", "catmap",
// "bernoulli", "singleton", "car"), with a small registered observable set.
ModelPtr model_from_name(const std::string& name);

// File path when it exists, built-in name otherwise.
ModelPtr load_model(const std::string& path_or_name);

}  // namespace mtc
