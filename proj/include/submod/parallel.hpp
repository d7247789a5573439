// Copyright 2026 The Authors.
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

#ifndef SUBMOD_PARALLEL_HPP_
#define SUBMOD_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace submod {

// Hardware concurrency, capped by the SUBMOD_THREADS environment variable.
int WorkerCount();

// Calls body(i) for i in [0, count) on up to WorkerCount() threads. The first
// exception thrown by any worker is rethrown on the caller.
void ParallelFor(size_t count, const std::function<void(size_t)>& body);

}  // namespace submod

#endif  // SUBMOD_PARALLEL_HPP_
