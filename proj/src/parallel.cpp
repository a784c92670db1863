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

#include "xorgame/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace xorgame {

unsigned worker_count(unsigned requested) {
    if (requested > 0) {
        return requested;
    }
    if (const char *env = std::getenv("XORGAME_THREADS")) {
        try {
            long v = std::stol(env);
            if (v > 0) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception &) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)> &body) {
    workers = std::max(1u, workers);
    if (workers == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; i++) {
            body(i);
        }
        return;
    }
    std::size_t blocks = std::min<std::size_t>(workers, count);
    std::vector<std::exception_ptr> errors(blocks);
    std::vector<std::thread> threads;
    threads.reserve(blocks);
    for (std::size_t b = 0; b < blocks; b++) {
        std::size_t begin = count * b / blocks;
        std::size_t end = count * (b + 1) / blocks;
        threads.emplace_back([&, b, begin, end] {
            try {
                for (std::size_t i = begin; i < end; i++) {
                    body(i);
                }
            } catch (...) {
                errors[b] = std::current_exception();
            }
        });
    }
    for (auto &t : threads) {
        t.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace xorgame
