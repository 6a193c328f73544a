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

#ifndef HH_VV_HASH_H
#define HH_VV_HASH_H

#include <cstdint>
#include <vector>

#include "hh/bits.h"
#include "hh/rng.h"

namespace hh {

/// h(x) = A x xor c over GF(2), with A a k x n bit matrix (one row mask per
/// output bit).
struct AffineHash {
    unsigned input_width = 0;
    unsigned output_width = 0;
    std::vector<BasisIndex> rows;
    BasisIndex offset = 0;

    BasisIndex operator()(BasisIndex x) const {
        BasisIndex out = offset;
        for (unsigned r = 0; r < output_width; ++r) {
            out ^= static_cast<BasisIndex>(parity(rows[r] & x)) << r;
        }
        return out;
    }
};

/// Uniform affine map {0,1}^n -> {0,1}^k.
AffineHash random_affine_hash(unsigned input_width, unsigned output_width, CounterRng& rng);

struct VvDraw {
    unsigned k = 0;
    AffineHash h0;
    AffineHash h1;
};

/// k uniform in {2, ..., n+1} and two independent uniform affine hashes to
/// k bits.
VvDraw draw_vv_hash(unsigned n, CounterRng& rng);

}  // namespace hh

#endif
