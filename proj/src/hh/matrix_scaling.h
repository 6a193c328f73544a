// Copyright 2026 The Hidden History Authors
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

#ifndef HH_MATRIX_SCALING_H
#define HH_MATRIX_SCALING_H

#include <cstddef>
#include <span>
#include <vector>

namespace hh {

struct ScalingResult {
    std::vector<double> joint;  // row-major rows x cols
    std::size_t iterations = 0;
    double residual = 0.0;  // max marginal error at exit
};

/// Alternating row/column rescaling (iterative proportional fitting) of a
/// non-negative seed until its row sums match `row_targets` and column sums
/// match `col_targets` within `tolerance`. Zero seed entries stay zero.
/// Throws NumericError if the cap is reached first.
ScalingResult scale_to_marginals(std::span<const double> seed, std::size_t rows, std::size_t cols,
                                 std::span<const double> row_targets, std::span<const double> col_targets,
                                 double tolerance = 1e-9, std::size_t max_iterations = 100000);

}  // namespace hh

#endif
