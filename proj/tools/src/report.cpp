// SPDX-License-Identifier: Apache-2.0
#include "report.hpp"

#include "fpa/roundtrip.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fpa::cli {

OutputFormat output_format_from_name(const std::string& name) {
    if (name == "table") return OutputFormat::Table;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw usage_error("unknown output format: " + name);
}

std::string exact_display(const ExactRational& value) {
    BigInt den = value.denominator();
    // terminating decimals have 2^a * 5^b denominators
    mpz_t rest;
    mpz_init_set(rest, den.raw());
    unsigned long twos = static_cast<unsigned long>(mpz_scan1(rest, 0));
    mpz_fdiv_q_2exp(rest, rest, twos);
    mpz_t five, reduced;
    mpz_init_set_ui(five, 5);
    mpz_init(reduced);
    unsigned long fives = static_cast<unsigned long>(mpz_remove(reduced, rest, five));
    bool terminating = mpz_cmp_ui(reduced, 1) == 0;
    mpz_clears(rest, five, reduced, nullptr);
    if (terminating && std::max(twos, fives) <= 28) {
        std::string s = exact_decimal_string(value);
        if (s.size() <= 34) return s;
    }
    return rounded_decimal_string(value, 25);
}

void sort_rows(Report& report) {
    std::stable_sort(report.rows.begin(), report.rows.end(),
                     [](const ReportRow& a, const ReportRow& b) {
                         double ua = a.error_ulps && std::isfinite(*a.error_ulps) ? *a.error_ulps
                                                                                  : HUGE_VAL;
                         double ub = b.error_ulps && std::isfinite(*b.error_ulps) ? *b.error_ulps
                                                                                  : HUGE_VAL;
                         return ua < ub;
                     });
}

namespace {

std::string number_field(const std::optional<double>& v) {
    if (!v) return "";
    if (std::isnan(*v)) return "nan";
    if (std::isinf(*v)) return *v > 0 ? "inf" : "-inf";
    return shortest_roundtrip_decimal(*v);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string render_table(const Report& report) {
    std::ostringstream os;
    os << "# " << report.command << " (schema v" << report.schema_version << ")\n";
    for (const auto& [k, v] : report.configuration) os << "# " << k << " = " << v << "\n";

    const std::vector<std::string> headers{"method", "result", "exact", "rel_error", "ulps",
                                           "note"};
    std::vector<std::vector<std::string>> cells;
    for (const ReportRow& row : report.rows)
        cells.push_back({row.method, row.result, row.exact, number_field(row.relative_error),
                         number_field(row.error_ulps), row.note});
    std::vector<std::size_t> width(headers.size());
    for (std::size_t c = 0; c < headers.size(); ++c) {
        width[c] = headers[c].size();
        for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
    }
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            os << row[c] << std::string(width[c] - row[c].size(), ' ');
            os << (c + 1 < row.size() ? "  " : "");
        }
        os << "\n";
    };
    emit(headers);
    for (const auto& row : cells) emit(row);
    for (const std::string& note : report.notes) os << "note: " << note << "\n";
    return os.str();
}

std::string render_csv(const Report& report) {
    std::ostringstream os;
    os << "# command=" << report.command << " schema_version=" << report.schema_version << "\n";
    for (const auto& [k, v] : report.configuration) os << "# " << k << "=" << v << "\n";
    os << "method,result,exact,relative_error,error_ulps,note\n";
    for (const ReportRow& row : report.rows) {
        os << csv_escape(row.method) << ',' << csv_escape(row.result) << ','
           << csv_escape(row.exact) << ',' << number_field(row.relative_error) << ','
           << number_field(row.error_ulps) << ',' << csv_escape(row.note) << "\n";
    }
    for (const std::string& note : report.notes) os << "# note: " << note << "\n";
    return os.str();
}

std::string render_json(const Report& report) {
    nlohmann::json j;
    j["schema_version"] = report.schema_version;
    j["command"] = report.command;
    nlohmann::json config = nlohmann::json::object();
    for (const auto& [k, v] : report.configuration) config[k] = v;
    j["configuration"] = config;
    j["rows"] = nlohmann::json::array();
    for (const ReportRow& row : report.rows) {
        nlohmann::json r;
        r["method"] = row.method;
        r["result"] = row.result;
        r["exact"] = row.exact;
        r["relative_error"] = number_field(row.relative_error);
        r["error_ulps"] = number_field(row.error_ulps);
        r["note"] = row.note;
        j["rows"].push_back(r);
    }
    j["notes"] = report.notes;
    return j.dump(2) + "\n";
}

} // namespace

std::string render(const Report& report, OutputFormat format) {
    switch (format) {
    case OutputFormat::Table: return render_table(report);
    case OutputFormat::Csv: return render_csv(report);
    case OutputFormat::Json: return render_json(report);
    }
    return "";
}

} // namespace fpa::cli
