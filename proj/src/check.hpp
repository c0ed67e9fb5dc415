// Copyright 2026 The thercom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include "thercom/error.hpp"

namespace thercom::detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

inline void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw DomainError(std::string(name) + " must be finite (got " + num(v) + ")");
  }
}

inline void require_positive(double v, const char* name) {
  require_finite(v, name);
  if (!(v > 0.0)) {
    throw DomainError(std::string(name) + " must be > 0 (got " + num(v) + ")");
  }
}

// lo < v < hi, strictly.
inline void require_open_interval(double v, double lo, double hi, const char* name) {
  require_finite(v, name);
  if (!(v > lo && v < hi)) {
    throw DomainError(std::string(name) + " = " + num(v) + " must lie in (" + num(lo) +
                      ", " + num(hi) + ")");
  }
}

}  // namespace thercom::detail
