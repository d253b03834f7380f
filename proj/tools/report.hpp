// Copyright 2026 The cvgkp Authors
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

// JSON reports and bit-stable CSV for the command-line tool.

#pragma once

#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace cvgkp::cli {

using nlohmann::json;

inline constexpr const char *kSchemaVersion = "1.0";

/// Every output is tagged: "derived" (computed here) or "reference" (checked against a published value).
class Report {
   public:
    explicit Report(std::string command) : command_(std::move(command)), t0_(std::chrono::steady_clock::now()) {}

    json &inputs() { return inputs_; }

    void derived(const std::string &name, json value) { outputs_[name] = {{"value", std::move(value)}, {"source", "derived"}}; }

    /// Output compared with a published value; mismatches beyond `tol` become discrepancies.
    void referenced(const std::string &name, double value, const std::string &ref, double published, double tol,
                    const std::string &note = "") {
        add_reference(ref);
        outputs_[name] = {{"value", value}, {"source", "reference"}, {"reference", ref}, {"reference_value", published}};
        if (!(std::abs(value - published) <= tol)) discrepancy(name, published, value, note);
    }

    void discrepancy(const std::string &quantity, json reference_value, json computed_value, const std::string &note) {
        discrepancies_.push_back({{"quantity", quantity},
                                  {"reference_value", std::move(reference_value)},
                                  {"computed_value", std::move(computed_value)},
                                  {"note", note}});
    }

    void add_reference(const std::string &ref) {
        for (const auto &r : references_)
            if (r == ref) return;
        references_.push_back(ref);
    }

    json finish() const {
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
        return {{"schema_version", kSchemaVersion},
                {"command", command_},
                {"inputs", inputs_},
                {"outputs", outputs_},
                {"references", references_},
                {"discrepancies", discrepancies_},
                {"runtime_ms", ms}};
    }

   private:
    std::string command_;
    std::chrono::steady_clock::time_point t0_;
    json inputs_ = json::object();
    json outputs_ = json::object();
    std::vector<std::string> references_;
    json discrepancies_ = json::array();
};

/// %.6g numbers, '.' decimal point, '\n' line endings, fixed column order.
class Csv {
   public:
    explicit Csv(std::vector<std::string> header) : cols_(header.size()) { row_strings(header); }

    Csv &cell(double v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6g", v);
        return raw(buf);
    }
    Csv &cell(long v) { return raw(std::to_string(v)); }
    Csv &cell(int v) { return raw(std::to_string(v)); }
    Csv &cell(bool v) { return raw(v ? "true" : "false"); }
    Csv &cell(const std::string &v) { return raw(v); }
    Csv &cell(const char *v) { return raw(v); }
    Csv &empty() { return raw(""); }
    Csv &cell(const std::optional<double> &v) { return v ? cell(*v) : empty(); }

    const std::string &str() const { return out_; }

   private:
    Csv &raw(const std::string &s) {
        if (in_row_ > 0) out_ += ',';
        out_ += s;
        if (++in_row_ == cols_) {
            out_ += '\n';
            in_row_ = 0;
        }
        return *this;
    }
    void row_strings(const std::vector<std::string> &r) {
        for (const auto &s : r) raw(s);
    }

    std::size_t cols_;
    std::size_t in_row_ = 0;
    std::string out_;
};

}  // namespace cvgkp::cli
