// Copyright 2026 The tablebounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tablebounds/parallel.hpp"

#include <cstdlib>
#include <string>

namespace tablebounds {

int ThreadCount() {
  int n = 0;
  if (const char* env = std::getenv("TABLEBOUNDS_THREADS")) {
    try {
      n = std::stoi(env);
    } catch (const std::exception&) {
      n = 0;
    }
  }
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  return n <= 0 ? 1 : n;
}

}  // namespace tablebounds
