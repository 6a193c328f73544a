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

#include <cstring>
#include <string>

#include <gtest/gtest.h>

#include "hidden_history/hidden_history.h"

namespace {

TEST(CApi, VersionAndStatusNames) {
    EXPECT_STREQ(hh_version(), "1.0.0");
    EXPECT_STREQ(hh_status_name(HH_OK), "ok");
    EXPECT_STREQ(hh_status_name(HH_ERR_CONFIG), "config error");
}

TEST(CApi, UnknownExperimentIsAConfigError) {
    hh_experiment* e = nullptr;
    EXPECT_EQ(hh_experiment_create("teleport", &e), HH_ERR_CONFIG);
    EXPECT_EQ(e, nullptr);
    EXPECT_NE(std::string(hh_last_error()).find("teleport"), std::string::npos);
    EXPECT_EQ(hh_experiment_create(nullptr, &e), HH_ERR_INVALID_ARGUMENT);
}

TEST(CApi, RunsAnExperiment) {
    hh_experiment* e = nullptr;
    ASSERT_EQ(hh_experiment_create("collision", &e), HH_OK);
    EXPECT_EQ(hh_experiment_set(e, "sizes", "4"), HH_OK);
    EXPECT_EQ(hh_experiment_set(e, "trials", "3"), HH_OK);
    EXPECT_EQ(hh_experiment_set(e, "trials", "three"), HH_ERR_CONFIG);
    EXPECT_EQ(hh_experiment_set(e, "colour", "red"), HH_ERR_CONFIG);
    EXPECT_EQ(hh_experiment_load_config(e, "/nonexistent/config"), HH_ERR_CONFIG);
    EXPECT_EQ(hh_experiment_out(e), nullptr);
    EXPECT_EQ(hh_experiment_strict(e), 0);
    hh_result* r = nullptr;
    ASSERT_EQ(hh_experiment_run(e, &r), HH_OK);
    EXPECT_EQ(hh_result_record_count(r), 6U);
    EXPECT_EQ(std::strncmp(hh_result_csv(r), "experiment,size,seed,", 21), 0);
    EXPECT_NE(std::string(hh_result_summary_json(r)).find("\"experiment\": \"collision\""), std::string::npos);
    EXPECT_EQ(hh_result_passed(r), 1);
    EXPECT_EQ(hh_result_write(r, "/nonexistent/dir/out"), HH_ERR_IO);
    hh_result_destroy(r);
    hh_experiment_destroy(e);
}

TEST(CApi, SamplesAHistory) {
    hh_program* p = nullptr;
    ASSERT_EQ(hh_program_random(3, 6, 1, &p), HH_OK);
    EXPECT_EQ(hh_program_num_qubits(p), 3U);
    EXPECT_EQ(hh_program_num_slices(p), 6U);
    hh_history* h = nullptr;
    EXPECT_EQ(hh_history_sample(p, "bohm", "gate", 1, &h), HH_ERR_CONFIG);
    ASSERT_EQ(hh_history_sample(p, "sinkhorn", "slice", 1, &h), HH_OK);
    EXPECT_EQ(hh_history_length(h), 7U);
    EXPECT_EQ(hh_history_value(h, 0), 0U);
    EXPECT_LT(hh_history_value(h, 6), 8U);
    EXPECT_EQ(std::strncmp(hh_history_csv(h), "t,bitstring,is_checkpoint\n", 26), 0);
    EXPECT_EQ(std::strncmp(hh_history_ledger_json(h), "{\"Q\":", 5), 0);
    hh_history_destroy(h);
    EXPECT_EQ(hh_program_random(0, 6, 1, &p), HH_ERR_INVALID_ARGUMENT);
    hh_program_destroy(p);
}

}  // namespace
