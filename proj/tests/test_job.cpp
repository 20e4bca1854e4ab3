// Copyright (C) 2026 The vimaps Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <sstream>

#include "vimaps/job.hpp"

using namespace vimaps;

TEST(Parse, Insertions) {
    EXPECT_EQ(parse_insertions("a1:4,a2:1"), (Monomial{{chern(1), 4}, {chern(2), 1}}));
    EXPECT_EQ(parse_insertions(" a2 , s3:2 "), (Monomial{{chern(2), 1}, {segre(3), 2}}));
    EXPECT_TRUE(parse_insertions("").empty());
    EXPECT_THROW((void)parse_insertions("b1:2"), error);
    EXPECT_THROW((void)parse_insertions("a1:x"), error);
    EXPECT_THROW((void)parse_insertions("a0:1"), error);
    EXPECT_THROW((void)parse_insertions("a1:2:3"), error);
}

TEST(Parse, Lists) {
    EXPECT_EQ(parse_int_list("2,2"), (std::vector<int>{2, 2}));
    EXPECT_EQ(parse_int_list("3"), (std::vector<int>{3}));
    EXPECT_TRUE(parse_int_list("").empty());
    EXPECT_THROW((void)parse_int_list("2,,3"), error);
    EXPECT_THROW((void)parse_path("fast"), error);
    EXPECT_EQ(parse_path("phi-expansion"), EvalPath::phi);
    EXPECT_THROW((void)parse_mode("surface"), error);
}

TEST(Run, HypersurfaceBothPaths) {
    JobRequest req;
    req.mode = Mode::hypersurface;
    req.g = 1;
    req.d = 2;
    req.r = 2;
    req.n = 4;
    req.multidegree = {1};
    req.insertions = parse_insertions("a1:4,a2:1");
    req.path = EvalPath::both;
    req.workers = 3;
    const JobResult res = run(req);
    ASSERT_TRUE(res.ok) << res.error_message;
    EXPECT_EQ(res.value->get_str(), "24");
    EXPECT_EQ(res.exit_code(), 0);
    const auto j = to_json(res);
    EXPECT_EQ(j["schema_version"], kSchemaVersion);
    EXPECT_EQ(j["value"], "24");
    EXPECT_EQ(j["numerator"], "24");
    EXPECT_EQ(j["denominator"], "1");
    EXPECT_EQ(j["dimensions"]["e"], 8);
    EXPECT_EQ(j["dimensions"]["e_twisted"], 6);
    EXPECT_EQ(j["dimensions"]["insertion_degree"], 6);
    EXPECT_EQ(j["paths"]["agree"], true);
    EXPECT_EQ(j["advisory"]["label"], "Enumerative-if-weakly-convex");
}

TEST(Run, ValueRoundTrips) {
    JobRequest req;
    req.mode = Mode::b_reduce;
    req.g = 1;
    req.d = 1;
    req.r = 2;
    req.n = 3;
    req.pairs = {1};
    req.insertions = parse_insertions("a1:2");
    const auto j = to_json(run(req));
    const mpq_class back(j["value"].get<std::string>());
    EXPECT_EQ(back, 1);
    EXPECT_EQ(mpq_class(j["numerator"].get<std::string>() + "/" + j["denominator"].get<std::string>()), back);
}

TEST(Run, DeterministicAcrossWorkers) {
    JobRequest req;
    req.mode = Mode::grassmannian;
    req.g = 2;
    req.d = 3;
    req.r = 3;
    req.n = 6;
    req.insertions = parse_insertions("a1:6,a3:1");
    std::string first;
    for (int w : {1, 2, 5, 8}) {
        req.workers = w;
        const auto res = run(req);
        ASSERT_TRUE(res.ok) << res.error_message;
        if (first.empty()) first = res.value->get_str();
        EXPECT_EQ(res.value->get_str(), first);
    }
}

TEST(Run, ErrorsAreStructured) {
    JobRequest req;
    req.mode = Mode::hypersurface;
    req.g = 1;
    req.d = 2;
    req.r = 2;
    req.n = 4;
    req.multidegree = {1};
    req.insertions = parse_insertions("a1:1,a2:1");
    const auto res = run(req);
    EXPECT_FALSE(res.ok);
    EXPECT_EQ(res.error_code, errc::dimension_mismatch);
    EXPECT_EQ(res.exit_code(), 2);
    EXPECT_EQ(to_json(res)["error"]["code"], "DimensionMismatch");

    req.g = 3;
    req.d = 1;
    req.multidegree = {2};
    EXPECT_EQ(run(req).exit_code(), 2);

    req = JobRequest{};
    req.workers = 0;
    EXPECT_EQ(run(req).error_code, errc::invalid_argument);
}

TEST(Run, FailedRequiredCheckIsInternal) {
    JobRequest req;
    req.mode = Mode::grassmannian;
    req.g = 1;
    req.d = 1;
    req.r = 2;
    req.n = 3;
    req.insertions = parse_insertions("a1:3");
    req.expect = "4";
    const auto res = run(req);
    EXPECT_FALSE(res.ok);
    EXPECT_EQ(res.exit_code(), 3);
}

TEST(Run, AllModes) {
    for (const auto& p : kPresets) {
        const auto res = run(request_from_json(nlohmann::json::parse(p.request)));
        EXPECT_TRUE(res.ok) << p.name << ": " << res.error_message;
        EXPECT_EQ(res.exit_code(), 0) << p.name;
        for (const auto& c : res.checks) EXPECT_TRUE(c.passed) << p.name << " " << c.name;
    }
    EXPECT_NE(find_preset("lg24"), nullptr);
    EXPECT_EQ(find_preset("nope"), nullptr);
}

TEST(Batch, MixedRecordsDoNotAbort) {
    std::istringstream in(
        "# comment\n"
        "{\"mode\":\"grassmannian\",\"g\":1,\"d\":1,\"r\":2,\"n\":3,\"ins\":\"a1:3\",\"expect\":\"3\"}\n"
        "not json\n"
        "\n"
        "{\"mode\":\"hypersurface\",\"g\":1,\"d\":2,\"r\":2,\"n\":4,\"l\":[1],\"ins\":\"a1:1\"}\n"
        "{\"mode\":\"closed-form\",\"g\":0,\"d\":2,\"r\":3,\"l\":\"2\"}\n");
    std::ostringstream out;
    const auto summary = run_batch(in, out);
    EXPECT_EQ(summary.records, 4u);
    EXPECT_EQ(summary.ok, 2u);
    EXPECT_EQ(summary.failed, 2u);
    EXPECT_EQ(summary.checks_failed, 0u);

    std::istringstream lines(out.str());
    std::vector<nlohmann::json> records;
    for (std::string line; std::getline(lines, line);) records.push_back(nlohmann::json::parse(line));
    ASSERT_EQ(records.size(), 5u);
    EXPECT_EQ(records[0]["value"], "3");
    EXPECT_EQ(records[0]["line"], 2);
    EXPECT_EQ(records[1]["error"]["code"], "InvalidArgument");
    EXPECT_EQ(records[2]["error"]["code"], "DimensionMismatch");
    EXPECT_EQ(records[3]["value"], "32");
    EXPECT_EQ(records[4]["summary"], true);
    EXPECT_EQ(records[4]["all_checks_pass"], true);
}

TEST(Batch, EmptyInputGivesEmptyOutput) {
    std::istringstream in("");
    std::ostringstream out;
    const auto summary = run_batch(in, out);
    EXPECT_EQ(summary.records, 0u);
    EXPECT_TRUE(out.str().empty());
}

TEST(Text, Format) {
    JobRequest req;
    req.mode = Mode::duality_check;
    req.g = 1;
    req.d = 1;
    req.r = 2;
    req.n = 3;
    req.insertions = parse_insertions("a1:3");
    const std::string text = to_text(run(req));
    EXPECT_NE(text.find("value: 3"), std::string::npos);
    EXPECT_NE(text.find("check duality: 3 == 3  ok"), std::string::npos);
}
