// Copyright 2026 The cvgkp Authors
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

// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "cvgkp/verify.hpp"

int main(int argc, char **argv) {
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
    int failed = 0;
    for (const auto &r : cvgkp::verify::run_all(only)) {
        std::printf("%s criterion %d %s (%.0f ms): %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.runtime_ms,
                    r.detail.c_str());
        std::fflush(stdout);
        failed += r.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
