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

#include "hh/matrix_scaling.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "hh/errors.h"

namespace hh {

namespace {

double marginal_error(const std::vector<double>& m, std::size_t rows, std::size_t cols,
                      std::span<const double> row_targets, std::span<const double> col_targets) {
    double worst = 0.0;
    for (std::size_t r = 0; r < rows; ++r) {
        double sum = 0.0;
        for (std::size_t c = 0; c < cols; ++c) {
            sum += m[r * cols + c];
        }
        worst = std::max(worst, std::abs(sum - row_targets[r]));
    }
    for (std::size_t c = 0; c < cols; ++c) {
        double sum = 0.0;
        for (std::size_t r = 0; r < rows; ++r) {
            sum += m[r * cols + c];
        }
        worst = std::max(worst, std::abs(sum - col_targets[c]));
    }
    return worst;
}

}  // namespace

ScalingResult scale_to_marginals(std::span<const double> seed, std::size_t rows, std::size_t cols,
                                 std::span<const double> row_targets, std::span<const double> col_targets,
                                 double tolerance, std::size_t max_iterations) {
    if (seed.size() != rows * cols || row_targets.size() != rows || col_targets.size() != cols) {
        throw InvalidArgument("matrix scaling shape mismatch");
    }
    ScalingResult result;
    result.joint.assign(seed.begin(), seed.end());
    auto& m = result.joint;
    for (double v : m) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw InvalidArgument("matrix scaling seed must be finite and non-negative");
        }
    }
    std::vector<double> col_sums(cols);
    for (std::size_t it = 0; it < max_iterations; ++it) {
        result.residual = marginal_error(m, rows, cols, row_targets, col_targets);
        result.iterations = it;
        if (result.residual <= tolerance) {
            return result;
        }
        for (std::size_t r = 0; r < rows; ++r) {
            double sum = 0.0;
            for (std::size_t c = 0; c < cols; ++c) {
                sum += m[r * cols + c];
            }
            if (sum > 0.0) {
                const double factor = row_targets[r] / sum;
                for (std::size_t c = 0; c < cols; ++c) {
                    m[r * cols + c] *= factor;
                }
            }
        }
        std::fill(col_sums.begin(), col_sums.end(), 0.0);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                col_sums[c] += m[r * cols + c];
            }
        }
        for (std::size_t c = 0; c < cols; ++c) {
            if (col_sums[c] > 0.0) {
                const double factor = col_targets[c] / col_sums[c];
                for (std::size_t r = 0; r < rows; ++r) {
                    m[r * cols + c] *= factor;
                }
            }
        }
    }
    result.residual = marginal_error(m, rows, cols, row_targets, col_targets);
    if (result.residual <= tolerance) {
        result.iterations = max_iterations;
        return result;
    }
    throw NumericError("matrix scaling did not converge in " + std::to_string(max_iterations) +
                       " iterations (marginal error " + std::to_string(result.residual) + ")");
}

}  // namespace hh
