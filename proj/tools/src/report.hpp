// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fpa/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fpa::cli {

enum class OutputFormat { Table, Csv, Json };
OutputFormat output_format_from_name(const std::string& name);

struct ReportRow {
    std::string method;
    std::string result; // shortest round-trip decimal of the computed float
    std::string exact;  // ground-truth display (exact expansion or 25 digits)
    std::optional<double> relative_error;
    std::optional<double> error_ulps;
    std::string note;
};

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> configuration;
    std::vector<ReportRow> rows;
    std::vector<std::string> notes;
    int schema_version = 1;

    void config(const std::string& key, const std::string& value) {
        configuration.emplace_back(key, value);
    }
};

// Ground-truth display: the exact expansion when it terminates within 32
// digits, a correctly rounded 25-digit decimal otherwise.
std::string exact_display(const ExactRational& value);

// Rows sorted by error_ulps ascending (rows without one sort last).
void sort_rows(Report& report);

std::string render(const Report& report, OutputFormat format);

} // namespace fpa::cli
