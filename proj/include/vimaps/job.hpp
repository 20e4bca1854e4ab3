// Copyright (C) 2026 The vimaps Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file job.hpp
 * @brief Job requests and results behind the command-line front end.
 *
 * Result records are line-delimited JSON objects carrying "schema_version". Exact values are
 * strings ("24", "-3/2"); "approx" is a double derived from the exact value and is never used
 * for comparisons.
 *
 * Batch input is JSON Lines, one request object per line. Blank lines and lines starting with
 * '#' are ignored. Keys mirror the command-line flags:
 *
 *     {"mode": "hypersurface", "g": 1, "d": 2, "r": 2, "n": 4, "l": [1], "ins": "a1:4,a2:1",
 *      "path": "both", "workers": 2, "expect": "24"}
 *
 * "expect" is optional; when present the record reports whether the computed value matches it.
 */

#pragma once

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "qh_oracle.hpp"
#include "twist.hpp"
#include "vi_engine.hpp"

namespace vimaps {

inline constexpr int kSchemaVersion = 1;

enum class Mode { grassmannian, hypersurface, complete_intersection, closed_form, duality_check, b_reduce, tevelev, oracle_check };
enum class EvalPath { closed, phi, both };
enum class ClosedFamily { projective, lg24 };

inline constexpr std::pair<Mode, std::string_view> kModeNames[] = {
    {Mode::grassmannian, "grassmannian"},     {Mode::hypersurface, "hypersurface"},
    {Mode::complete_intersection, "complete-intersection"}, {Mode::closed_form, "closed-form"},
    {Mode::duality_check, "duality-check"},   {Mode::b_reduce, "b-reduce"},
    {Mode::tevelev, "tevelev"},               {Mode::oracle_check, "oracle-check"},
};

inline std::string_view to_string(Mode m) {
    for (const auto& [mode, name] : kModeNames)
        if (mode == m) return name;
    return "unknown";
}

inline Mode parse_mode(std::string_view s) {
    for (const auto& [mode, name] : kModeNames)
        if (name == s) return mode;
    throw error(errc::invalid_argument, "unknown mode '" + std::string(s) + "'");
}

inline EvalPath parse_path(std::string_view s) {
    if (s == "closed") return EvalPath::closed;
    if (s == "phi" || s == "phi-expansion") return EvalPath::phi;
    if (s == "both") return EvalPath::both;
    throw error(errc::invalid_argument, "unknown path '" + std::string(s) + "' (closed, phi, both)");
}

inline ClosedFamily parse_family(std::string_view s) {
    if (s == "projective") return ClosedFamily::projective;
    if (s == "lg24") return ClosedFamily::lg24;
    throw error(errc::invalid_argument, "unknown closed-form family '" + std::string(s) + "' (projective, lg24)");
}

namespace detail {

inline int parse_int(std::string_view s, std::string_view what) {
    int v = 0;
    std::size_t used = 0;
    try {
        v = std::stoi(std::string(s), &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size())
        throw error(errc::invalid_argument, "cannot parse " + std::string(what) + " from '" + std::string(s) + "'");
    return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    while (true) {
        const auto pos = s.find(sep);
        out.push_back(s.substr(0, pos));
        if (pos == std::string_view::npos) break;
        s.remove_prefix(pos + 1);
    }
    return out;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace detail

/// "a<i>:<exp>" for Chern and "s<i>:<exp>" for Segre, comma separated; ":<exp>" defaults to 1.
inline Monomial parse_insertions(std::string_view text) {
    Monomial m;
    text = detail::trim(text);
    if (text.empty()) return m;
    for (auto item : detail::split(text, ',')) {
        item = detail::trim(item);
        if (item.size() < 2 || (item[0] != 'a' && item[0] != 's'))
            throw error(errc::invalid_argument, "bad insertion '" + std::string(item) + "' (expected a<i>:<exp> or s<i>:<exp>)");
        const auto kind = item[0] == 'a' ? InsertionKind::chern : InsertionKind::segre;
        item.remove_prefix(1);
        const auto colon = item.find(':');
        const int index = detail::parse_int(item.substr(0, colon), "insertion index");
        const int exponent = colon == std::string_view::npos ? 1 : detail::parse_int(item.substr(colon + 1), "insertion exponent");
        m.multiply({kind, index}, exponent);
    }
    return m;
}

inline std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    text = detail::trim(text);
    if (text.empty()) return out;
    for (auto item : detail::split(text, ',')) out.push_back(detail::parse_int(detail::trim(item), "list entry"));
    return out;
}

inline int default_workers() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

struct JobRequest {
    Mode mode = Mode::grassmannian;
    int g = 0;
    int d = 0;
    int r = 1;
    std::optional<int> n;  // closed-form and tevelev use n = r + 1
    std::vector<int> multidegree;
    Monomial insertions;
    std::vector<int> pairs;  // b-reduce
    std::optional<int> t;    // tevelev
    int workers = default_workers();
    EvalPath path = EvalPath::closed;
    ClosedFamily family = ClosedFamily::projective;
    std::optional<std::string> expect;

    int ambient() const { return n.value_or(r + 1); }
    GrassmannSpec base() const { return {r, ambient(), g, d}; }
};

struct DimensionAudit {
    long long e = 0;
    std::optional<long long> e_twisted;
    long long insertion_degree = 0;
};

struct CheckReport {
    std::string name;  // e.g. "paths", "duality", "oracle", "tevelev-engine", "expect"
    std::string lhs;
    std::string rhs;
    bool passed = false;
    bool required = true;  // false: reported only (closed vs phi with d < g)
};

struct JobResult {
    Mode mode = Mode::grassmannian;
    bool ok = false;
    std::optional<mpq_class> value;
    bool is_integer = false;
    std::optional<Advisory> advisory;
    std::optional<DimensionAudit> dimensions;
    std::vector<CheckReport> checks;
    nlohmann::json extra = nlohmann::json::object();
    std::optional<errc> error_code;
    std::string error_message;
    double wall_ms = 0;
    std::uint64_t subsets = 0;

    /// 0 success, 2 validation error, 3 internal invariant breach.
    int exit_code() const {
        if (error_code) return is_internal(*error_code) ? 3 : 2;
        for (const auto& c : checks)
            if (c.required && !c.passed) return 3;
        return 0;
    }
};

namespace detail {

inline void set_value(JobResult& res, const VirtualCount& c) {
    res.value = c.value;
    res.is_integer = c.is_integer;
    res.subsets += c.summands;
    if (c.advisory) res.advisory = c.advisory;
}

inline ProblemSpec problem(const JobRequest& req) { return {req.base(), req.multidegree, req.insertions}; }

inline void run_twisted(const JobRequest& req, JobResult& res) {
    const ProblemSpec spec = problem(req);
    res.dimensions = DimensionAudit{spec.base.virtual_dimension(), spec.twisted_dimension(), spec.insertions.weighted_degree()};
    const bool single = req.mode == Mode::hypersurface;
    if (single && spec.multidegree.size() != 1)
        throw error(errc::invalid_argument, "hypersurface mode takes exactly one degree via --l");
    switch (req.path) {
        case EvalPath::closed:
            set_value(res, single ? hypersurface_integral(spec, req.workers) : complete_intersection_integral(spec, req.workers));
            break;
        case EvalPath::phi: set_value(res, hypersurface_integral_via_phi_expansion(spec)); break;
        case EvalPath::both: {
            const PathComparison pc = compare_paths(spec, req.workers);
            set_value(res, pc.closed);
            res.subsets += pc.phi.summands;
            res.checks.push_back({"paths", pc.closed.value.get_str(), pc.phi.value.get_str(), pc.agree, !pc.d_below_g});
            res.extra["paths"] = {{"closed", pc.closed.value.get_str()},
                                  {"phi", pc.phi.value.get_str()},
                                  {"agree", pc.agree},
                                  {"d_below_g", pc.d_below_g}};
            break;
        }
    }
}

inline void run_request(const JobRequest& req, JobResult& res) {
    switch (req.mode) {
        case Mode::grassmannian: {
            const GrassmannSpec spec = req.base();
            res.dimensions = DimensionAudit{spec.virtual_dimension(), std::nullopt, req.insertions.weighted_degree()};
            set_value(res, req.workers > 1 ? vi_integral_parallel(spec, req.insertions, req.workers)
                                           : vi_integral(spec, req.insertions));
            res.advisory = enumerativity_advisor(ProblemSpec{spec, {}, req.insertions});
            break;
        }
        case Mode::hypersurface:
        case Mode::complete_intersection: run_twisted(req, res); break;
        case Mode::closed_form: {
            if (req.family == ClosedFamily::projective) {
                if (req.multidegree.empty()) throw error(errc::invalid_argument, "closed-form needs --l");
                set_value(res, closed_form_projective(req.g, req.d, req.r, req.multidegree));
            } else {
                int m1 = 0, m2 = 0;
                for (const auto& [ins, k] : req.insertions.factors()) {
                    if (ins == chern(1))
                        m1 = k;
                    else if (ins == chern(2))
                        m2 = k;
                    else
                        throw error(errc::invalid_argument, "lg24 closed form takes only a1 and a2 insertions");
                }
                set_value(res, closed_form_lg24(req.g, req.d, m1, m2));
            }
            break;
        }
        case Mode::duality_check: {
            const GrassmannSpec spec = req.base();
            res.dimensions = DimensionAudit{spec.virtual_dimension(), std::nullopt, req.insertions.weighted_degree()};
            const DualityReport rep = duality_check(spec, req.insertions);
            set_value(res, rep.chern_side);
            res.subsets += rep.segre_side.summands;
            res.checks.push_back({"duality", rep.chern_side.value.get_str(), rep.segre_side.value.get_str(), rep.equal, true});
            res.extra["duality"] = {{"chern_side", rep.chern_side.value.get_str()},
                                    {"segre_side", rep.segre_side.value.get_str()},
                                    {"equal", rep.equal}};
            break;
        }
        case Mode::b_reduce: {
            const GrassmannSpec spec = req.base();
            res.dimensions = DimensionAudit{spec.virtual_dimension(), std::nullopt,
                                            req.insertions.weighted_degree() + static_cast<long long>(req.pairs.size())};
            set_value(res, reduce_b_classes(BClassWord{req.pairs, req.insertions}, spec));
            break;
        }
        case Mode::tevelev: {
            const int t = req.t.value_or(tevelev_points(req.g, req.d, req.r, req.multidegree.empty() ? 0 : req.multidegree.front()));
            if (req.multidegree.size() != 1) throw error(errc::invalid_argument, "tevelev mode takes exactly one degree via --l");
            const int l = req.multidegree.front();
            const TevelevComparison tc = tevelev_compare(req.g, req.d, req.r, l, t);
            set_value(res, tc.q);
            res.extra["tevelev"] = {{"t", tc.t},
                                    {"q", tc.q.value.get_str()},
                                    {"implied_tev", tc.implied_tev.get_str()},
                                    {"implied_tev_is_integer", tc.implied_is_integer},
                                    {"integrality_expected", tc.integrality_expected}};
            // the engine route is only defined where the hypersurface formula applies
            const ProblemSpec spec{{req.r, req.r + 1, req.g, req.d}, {l}, Monomial{{chern(req.r - 1), t}}};
            if (spec.in_regime()) {
                const VirtualCount eng = tevelev_q_via_engine(req.g, req.d, req.r, l, t);
                res.subsets += eng.summands;
                const bool required = req.d >= req.g;
                res.checks.push_back({"tevelev-engine", tc.q.value.get_str(), eng.value.get_str(), eng.value == tc.q.value, required});
                res.extra["tevelev"]["engine_q"] = eng.value.get_str();
            }
            break;
        }
        case Mode::oracle_check: {
            if (req.g != 0) throw error(errc::invalid_argument, "oracle-check is genus 0 only");
            const GrassmannSpec spec = req.base();
            res.dimensions = DimensionAudit{spec.virtual_dimension(), std::nullopt, req.insertions.weighted_degree()};
            const VirtualCount eng = vi_integral(spec, req.insertions);
            const mpz_class oracle = fixed_domain_count_g0(spec.r, spec.n, spec.d, req.insertions);
            set_value(res, eng);
            res.checks.push_back({"oracle", eng.value.get_str(), oracle.get_str(), eng.value == mpq_class(oracle), true});
            res.extra["oracle"] = {{"engine", eng.value.get_str()}, {"quantum_pieri", oracle.get_str()}};
            break;
        }
    }
    const bool integral_expected = req.mode != Mode::tevelev;
    if (integral_expected && res.value && !res.is_integer)
        throw error(errc::non_integral, "result " + res.value->get_str() + " is not an integer");
}

}  // namespace detail

/// Runs one request; never throws for computation errors, which are reported in the result.
inline JobResult run(const JobRequest& req) {
    JobResult res;
    res.mode = req.mode;
    const auto start = std::chrono::steady_clock::now();
    try {
        if (req.workers < 1) throw error(errc::invalid_argument, "--workers must be >= 1");
        detail::run_request(req, res);
        if (req.expect && res.value) {
            const std::string got = res.value->get_str();
            res.checks.push_back({"expect", got, *req.expect, got == *req.expect, true});
        }
        res.ok = true;
    } catch (const error& e) {
        res.error_code = e.code();
        res.error_message = e.what();
    }
    res.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    for (const auto& c : res.checks)
        if (c.required && !c.passed) res.ok = false;
    return res;
}

// JSON ---------------------------------------------------------------------------------------

inline JobRequest request_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw error(errc::invalid_argument, "batch record must be a JSON object");
    auto get_int = [&](const char* key) -> std::optional<int> {
        if (!j.contains(key)) return std::nullopt;
        if (!j.at(key).is_number_integer()) throw error(errc::invalid_argument, std::string("'") + key + "' must be an integer");
        return j.at(key).get<int>();
    };
    auto get_list = [&](const char* key) -> std::vector<int> {
        if (!j.contains(key)) return {};
        const auto& v = j.at(key);
        if (v.is_number_integer()) return {v.get<int>()};
        if (v.is_string()) return parse_int_list(v.get<std::string>());
        if (v.is_array()) {
            std::vector<int> out;
            for (const auto& x : v) {
                if (!x.is_number_integer()) throw error(errc::invalid_argument, std::string("'") + key + "' entries must be integers");
                out.push_back(x.get<int>());
            }
            return out;
        }
        throw error(errc::invalid_argument, std::string("'") + key + "' must be an integer list");
    };
    JobRequest req;
    if (!j.contains("mode") || !j.at("mode").is_string()) throw error(errc::invalid_argument, "batch record needs a string 'mode'");
    req.mode = parse_mode(j.at("mode").get<std::string>());
    req.g = get_int("g").value_or(0);
    req.d = get_int("d").value_or(0);
    req.r = get_int("r").value_or(1);
    req.n = get_int("n");
    req.t = get_int("t");
    req.multidegree = get_list("l");
    req.pairs = get_list("pairs");
    if (auto w = get_int("workers")) req.workers = *w;
    if (j.contains("ins")) {
        if (!j.at("ins").is_string()) throw error(errc::invalid_argument, "'ins' must be a string like \"a1:3,a2:1\"");
        req.insertions = parse_insertions(j.at("ins").get<std::string>());
    }
    if (j.contains("path")) req.path = parse_path(j.at("path").get<std::string>());
    if (j.contains("family")) req.family = parse_family(j.at("family").get<std::string>());
    if (j.contains("expect")) {
        const auto& x = j.at("expect");
        req.expect = x.is_string() ? x.get<std::string>() : x.dump();
    }
    return req;
}

inline nlohmann::json to_json(const JobResult& res) {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["mode"] = std::string(to_string(res.mode));
    j["ok"] = res.ok;
    if (res.value) {
        j["value"] = res.value->get_str();
        j["numerator"] = res.value->get_num().get_str();
        j["denominator"] = res.value->get_den().get_str();
        j["approx"] = res.value->get_d();
        j["integer"] = res.is_integer;
    }
    if (res.advisory)
        j["advisory"] = {{"label", std::string(to_string(res.advisory->label))}, {"reason", res.advisory->reason}};
    if (res.dimensions) {
        j["dimensions"] = {{"e", res.dimensions->e}, {"insertion_degree", res.dimensions->insertion_degree}};
        if (res.dimensions->e_twisted) j["dimensions"]["e_twisted"] = *res.dimensions->e_twisted;
    }
    if (!res.checks.empty()) {
        j["checks"] = nlohmann::json::array();
        for (const auto& c : res.checks)
            j["checks"].push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"passed", c.passed}, {"required", c.required}});
    }
    for (const auto& [k, v] : res.extra.items()) j[k] = v;
    if (res.error_code) j["error"] = {{"code", std::string(to_string(*res.error_code))}, {"message", res.error_message}};
    j["exit_code"] = res.exit_code();
    j["stats"] = {{"wall_ms", res.wall_ms}, {"subsets", res.subsets}};
    return j;
}

inline std::string to_text(const JobResult& res) {
    std::ostringstream os;
    os << "mode: " << to_string(res.mode) << "\n";
    if (res.value) os << "value: " << res.value->get_str() << (res.is_integer ? "" : "  (not an integer)") << "\n";
    if (res.dimensions) {
        os << "dimensions: e = " << res.dimensions->e;
        if (res.dimensions->e_twisted) os << ", e_twisted = " << *res.dimensions->e_twisted;
        os << ", insertion degree = " << res.dimensions->insertion_degree << "\n";
    }
    if (res.advisory) os << "advisory: " << to_string(res.advisory->label) << " (" << res.advisory->reason << ")\n";
    for (const auto& c : res.checks) {
        os << "check " << c.name << ": " << c.lhs << (c.passed ? " == " : " != ") << c.rhs
           << (c.passed ? "  ok" : (c.required ? "  FAILED" : "  (reported)")) << "\n";
    }
    for (const auto& [k, v] : res.extra.items())
        if (k != "paths" && k != "duality" && k != "oracle") os << k << ": " << v.dump() << "\n";
    if (res.error_code) os << "error: " << to_string(*res.error_code) << ": " << res.error_message << "\n";
    os << "stats: " << res.subsets << " subsets, " << res.wall_ms << " ms\n";
    return os.str();
}

struct BatchSummary {
    std::size_t records = 0;
    std::size_t ok = 0;
    std::size_t failed = 0;
    std::size_t checks_passed = 0;
    std::size_t checks_failed = 0;
    std::size_t checks_reported = 0;  // non-required disagreements
};

/// Runs every record; errors are reported per line and never abort the batch.
inline BatchSummary run_batch(std::istream& in, std::ostream& out, std::optional<int> workers = std::nullopt) {
    BatchSummary summary;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto body = detail::trim(line);
        if (body.empty() || body.front() == '#') continue;
        ++summary.records;
        JobResult res;
        try {
            JobRequest req = request_from_json(nlohmann::json::parse(body));
            if (workers) req.workers = *workers;
            res = run(req);
        } catch (const nlohmann::json::exception& e) {
            res.error_code = errc::invalid_argument;
            res.error_message = std::string("line ") + std::to_string(line_no) + ": " + e.what();
        } catch (const error& e) {
            res.error_code = e.code();
            res.error_message = std::string("line ") + std::to_string(line_no) + ": " + e.what();
        }
        for (const auto& c : res.checks) {
            if (c.passed)
                ++summary.checks_passed;
            else if (c.required)
                ++summary.checks_failed;
            else
                ++summary.checks_reported;
        }
        if (res.ok)
            ++summary.ok;
        else
            ++summary.failed;
        auto j = to_json(res);
        j["line"] = line_no;
        out << j.dump() << "\n";
    }
    if (summary.records > 0) {
        nlohmann::json s = {{"schema_version", kSchemaVersion},
                            {"summary", true},
                            {"records", summary.records},
                            {"ok", summary.ok},
                            {"failed", summary.failed},
                            {"checks_passed", summary.checks_passed},
                            {"checks_failed", summary.checks_failed},
                            {"checks_reported", summary.checks_reported},
                            {"all_checks_pass", summary.checks_failed == 0}};
        out << s.dump() << "\n";
    }
    return summary;
}

// Presets ------------------------------------------------------------------------------------

struct Preset {
    std::string_view name;
    std::string_view description;
    std::string_view request;  // a batch record
};

inline constexpr Preset kPresets[] = {
    {"p2-genus1", "maps to P^2 = G(2,3), g=1, d=1, a1^3: (r+1)^g = 3",
     R"({"mode":"grassmannian","g":1,"d":1,"r":2,"n":3,"ins":"a1:3","expect":"3"})"},
    {"lg24", "LG(2,4) in G(2,4), g=1, d=2, a1^4 a2: 2^(2d-m2-g+1) 3^g = 24",
     R"({"mode":"hypersurface","g":1,"d":2,"r":2,"n":4,"l":[1],"ins":"a1:4,a2:1","path":"both","expect":"24"})"},
    {"lg24-closed-g0d1-a1", "LG(2,4) closed form, g=0, d=1, m1=6, m2=0: 8",
     R"({"mode":"closed-form","family":"lg24","g":0,"d":1,"ins":"a1:6","expect":"8"})"},
    {"lg24-closed-g0d1-a2", "LG(2,4) closed form, g=0, d=1, m1=0, m2=3: 1",
     R"({"mode":"closed-form","family":"lg24","g":0,"d":1,"ins":"a2:3","expect":"1"})"},
    {"quadric-p3", "quadric X_2 in P^3, g=0, d=2, a1^6: l^(dl-g+1)(r+1-l)^g = 32",
     R"({"mode":"hypersurface","g":0,"d":2,"r":3,"n":4,"l":[2],"ins":"a1:6","path":"both","expect":"32"})"},
    {"quadric-p3-closed", "closed form for the quadric in P^3, g=0, d=2: 32",
     R"({"mode":"closed-form","g":0,"d":2,"r":3,"l":[2],"expect":"32"})"},
    {"ci-22-p4", "complete intersection of two quadrics in P^4, g=0, d=1, a1^3: 64",
     R"({"mode":"complete-intersection","g":0,"d":1,"r":4,"n":5,"l":[2,2],"ins":"a1:3","path":"both","expect":"64"})"},
    {"duality-p2", "Chern side on G(2,3) against Segre side on G(1,3), g=1, d=1, a1^3: 3",
     R"({"mode":"duality-check","g":1,"d":1,"r":2,"n":3,"ins":"a1:3","expect":"3"})"},
    {"b-reduce-p2", "one phi pair on G(2,3), g=1, d=1, trailing a1^2: 3/3 = 1",
     R"({"mode":"b-reduce","g":1,"d":1,"r":2,"n":3,"pairs":[1],"ins":"a1:2","expect":"1"})"},
    {"oracle-g24", "genus-0 G(2,4), d=1, a1^8: engine against quantum Pieri",
     R"({"mode":"oracle-check","g":0,"d":1,"r":2,"n":4,"ins":"a1:8"})"},
    {"tevelev-cubic-p4", "cubic threefold in P^4, g=1, d=3, t=2: q = 3^7 * 2 = 4374, implied count 216",
     R"({"mode":"tevelev","g":1,"d":3,"r":4,"l":[3],"expect":"4374"})"},
};

inline const Preset* find_preset(std::string_view name) {
    for (const auto& p : kPresets)
        if (p.name == name) return &p;
    return nullptr;
}

}  // namespace vimaps
