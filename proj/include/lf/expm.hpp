// Copyright 2026 The lindblad-fidelity Authors
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

#include "lf/types.hpp"

namespace lf {

/// Matrix exponential by scaling and squaring with a diagonal Pade
/// approximant (degree 3..13 chosen from the 1-norm). Backward error is at
/// unit-roundoff level, well inside 1e-12 for the generators used here.
/// Works for non-normal input such as Liouvillians.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a);

}  // namespace lf
