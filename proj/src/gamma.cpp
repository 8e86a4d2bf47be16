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

#include "sqsp/gamma.hpp"

#include <algorithm>
#include <cmath>

namespace sqsp {

std::vector<double> gamma_schedule(std::span<const std::complex<double>> amplitudes) {
  std::vector<double> gammas(amplitudes.size());
  double suffix = 0.0;
  for (std::size_t j = amplitudes.size(); j-- > 0;) {
    const double mag = std::abs(amplitudes[j]);
    suffix += std::norm(amplitudes[j]);
    // The last split must empty the flag branch exactly.
    gammas[j] = j + 1 == amplitudes.size() ? mag : std::max(std::sqrt(suffix), mag);
  }
  return gammas;
}

}  // namespace sqsp
