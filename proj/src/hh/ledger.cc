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

#include "hh/ledger.h"

#include <json.hpp>

#include "hh/errors.h"

namespace hh {

std::uint64_t QueryLedger::cumulative(std::size_t t) const {
    if (t > per_slice_.size()) {
        throw InvalidArgument("ledger has no slice " + std::to_string(t));
    }
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < t; ++i) {
        total += per_slice_[i];
    }
    return total;
}

std::uint64_t QueryLedger::total() const {
    return cumulative(per_slice_.size());
}

std::string QueryLedger::to_json() const {
    nlohmann::json out;
    out["q"] = per_slice_;
    out["Q"] = total();
    return out.dump();
}

}  // namespace hh
