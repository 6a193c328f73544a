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

#ifndef HH_LEDGER_H
#define HH_LEDGER_H

#include <cstdint>
#include <string>
#include <vector>

namespace hh {

/// Per-slice oracle query counts q_t and their running totals.
class QueryLedger {
   public:
    /// Opens the next slice with q_t = 0.
    void begin_slice() {
        per_slice_.push_back(0);
    }

    /// Adds `count` queries to the current slice, opening one if none is open.
    void charge(std::uint64_t count = 1) {
        if (per_slice_.empty()) {
            begin_slice();
        }
        per_slice_.back() += count;
    }

    std::size_t num_slices() const {
        return per_slice_.size();
    }
    const std::vector<std::uint64_t>& per_slice() const {
        return per_slice_;
    }

    /// Q_t = q_1 + ... + q_t (t counts slices from 1; Q_0 = 0).
    std::uint64_t cumulative(std::size_t t) const;
    std::uint64_t total() const;

    /// {"q": [...], "Q": total}
    std::string to_json() const;

   private:
    std::vector<std::uint64_t> per_slice_;
};

}  // namespace hh

#endif
