// Copyright 2026 The sqsp Authors
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

#include <complex>
#include <span>
#include <vector>

namespace sqsp {

/// Remaining flag-branch weight before each load: gamma_j is the square root of
/// 1 - sum_{i<j} |c_i|^2 for amplitudes in load order.
///
/// Evaluated as the suffix sum sqrt(sum_{i>=j} |c_i|^2), which is the same
/// quantity for a normalized input but guarantees |c_j| <= gamma_j, and
/// gamma_s is exactly |c_s|, so every split gate stays valid and the last one
/// leaves nothing behind.
std::vector<double> gamma_schedule(std::span<const std::complex<double>> amplitudes);

}  // namespace sqsp
