// Copyright 2026 The fermiqca Authors
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


#ifndef FERMIQCA_CLI_HPP
#define FERMIQCA_CLI_HPP

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <vector>

#include "json.hpp"

namespace fermiqca {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs f(0..n-1) on a pool of worker threads. Results come back in index
/// order; the first exception (by index) is rethrown.
std::vector<std::string> parallel_map(size_t n, const std::function<std::string(size_t)> &f);

/// Suite names accepted by `verify --suite`.
const std::vector<std::string> &verify_suites();

struct VerifyConfig {
  std::string suite;
  uint64_t seed = 42;
  int modes = 4;
  double tol = 1e-10;
};

/// {suite, seed, checks: [{name, value, tol, pass}], pass}. DomainError for
/// an unknown suite.
nlohmann::json run_verify(const VerifyConfig &cfg);

/// Full command line; writes reports to `out` (or --out) and diagnostics
/// to `err`. Returns 0 on pass, 1 on a failed check, 2 on a usage error.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace fermiqca

#endif  // FERMIQCA_CLI_HPP
