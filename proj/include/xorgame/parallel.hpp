// Copyright 2026 The xorgame Authors
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

#pragma once

#include <cstddef>
#include <functional>

namespace xorgame {

/// Worker count: `requested` if positive, else XORGAME_THREADS if set and
/// positive, else the hardware concurrency.
unsigned worker_count(unsigned requested = 0);

/// Runs body(i) for i in [0, count) on up to `workers` threads. Indices are
/// split into contiguous blocks; body must only write to per-index state.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)> &body);

}  // namespace xorgame
