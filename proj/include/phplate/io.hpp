// Copyright (c) 2026 the phplate authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#ifndef PHPLATE_IO_HPP
#define PHPLATE_IO_HPP

#include <cstdio>
#include <ostream>
#include <string>

#include "phplate/verify.hpp"

#include "json.hpp"

namespace phplate::io {

/// Fixed float formatting for byte-stable outputs: 17 significant digits,
/// '.' decimal separator regardless of locale concerns, no trailing noise.
inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline nlohmann::json to_json(const verify::MarginReport& r) {
  return nlohmann::json{{"id", std::string(verify::to_string(r.id))},
                        {"sigma", r.sigma},
                        {"grid", r.grid},
                        {"min_margin", r.min_margin},
                        {"argmin", r.argmin},
                        {"evaluations", r.evaluations}};
}

inline nlohmann::json reports_json(const std::vector<verify::MarginReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

}  // namespace phplate::io

#endif  // PHPLATE_IO_HPP
