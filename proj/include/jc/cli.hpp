// Copyright 2026 The jcontainers Authors
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

#ifndef JC_CLI_HPP_
#define JC_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace jc {

// Runs one `jc` subcommand. `args` excludes the program name. Structured
// results go to `out`, diagnostics to `err`; returns the process exit code.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jc

#endif  // JC_CLI_HPP_
