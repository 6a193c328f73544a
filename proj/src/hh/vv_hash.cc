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

#include "hh/vv_hash.h"

#include "hh/errors.h"

namespace hh {

AffineHash random_affine_hash(unsigned input_width, unsigned output_width, CounterRng& rng) {
    if (input_width > 63 || output_width > 63) {
        throw InvalidArgument("affine hash widths must be below 64");
    }
    AffineHash h;
    h.input_width = input_width;
    h.output_width = output_width;
    h.rows.resize(output_width);
    for (auto& row : h.rows) {
        row = rng() & low_mask(input_width);
    }
    h.offset = rng() & low_mask(output_width);
    return h;
}

VvDraw draw_vv_hash(unsigned n, CounterRng& rng) {
    if (n == 0) {
        throw InvalidArgument("hash input width must be positive");
    }
    VvDraw d;
    d.k = 2 + static_cast<unsigned>(rng.below(n));
    d.h0 = random_affine_hash(n, d.k, rng);
    d.h1 = random_affine_hash(n, d.k, rng);
    return d;
}

}  // namespace hh
