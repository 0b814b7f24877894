// Copyright 2026 The projgraph Authors
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

// Command-line front end.
//
//   projgraph sample             --config F --n N [--seed S] [--out P]
//   projgraph extend             --in G --m M [--config F] [--out P]
//   projgraph restrict           --in G --n N [--out P]
//   projgraph stats              --in G [--out P]
//   projgraph test-projectivity  --config F --n N --m M [--trials T] [--alpha A] [--mode exact|distributional|both]
//   projgraph test-invariance    --config F --n N [--trials T] [--alpha A] [--k-max K]
//   projgraph test-compatibility --config F --n N --m M [--trials T]
//   projgraph enumerate          --config F --n N [--trials T]
//
// Exit status: 0 on success or Pass, 2 on a failed test, 1 on usage or
// configuration errors.

#include <iosfwd>

namespace projgraph {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitTestFailed = 2;

int run(int argc, const char* const* argv);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace projgraph
