// SPDX-License-Identifier: Apache-2.0

#include "qhelix/cordis.hpp"

#include "qhelix/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace qhelix {

namespace {

std::string trim(std::string_view s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string_view::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(begin, end - begin + 1));
}

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return s;
}

// Splits one CSV line honoring double-quoted fields ("" escapes a quote).
std::vector<std::string> split_row(const std::string& line, char delimiter) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == delimiter) {
            fields.push_back(std::move(current));
            current.clear();
        } else if (c != '\r') {
            current += c;
        }
    }
    fields.push_back(std::move(current));
    return fields;
}

// Accepts "1234.56", "1234,56", "1 234,56", "1.234.567". The last separator
// character is the decimal point unless it repeats, in which case all
// separators are thousands groupings.
double parse_amount(const std::string& raw, std::size_t row_index) {
    std::string s;
    for (char c : raw) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s += c;
        }
    }
    if (s.empty()) {
        return 0.0;
    }
    const auto last_sep = s.find_last_of(".,");
    if (last_sep != std::string::npos) {
        const char sep = s[last_sep];
        const bool repeated = s.find(sep) != last_sep;
        std::string cleaned;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '.' || s[i] == ',') {
                if (i == last_sep && !repeated) {
                    cleaned += '.';
                }
            } else {
                cleaned += s[i];
            }
        }
        s = std::move(cleaned);
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw Error(errc::parse, "row " + std::to_string(row_index) +
                                     ": cannot parse contribution '" + raw + "'");
    }
    return value;
}

} // namespace

HelixActor map_activity_type(std::string_view code) {
    const std::string normalized = upper(trim(code));
    if (normalized == "HES" || normalized == "REC") {
        return HelixActor::Academia;
    }
    if (normalized == "PRC") {
        return HelixActor::Industry;
    }
    if (normalized == "PUB") {
        return HelixActor::Government;
    }
    if (normalized == "OTH") {
        return HelixActor::CivilSociety;
    }
    throw Error(errc::unknown_activity_type, "unknown activity type '" + normalized + "'");
}

std::vector<ParticipantRecord> load_participants(const std::filesystem::path& path,
                                                 const IngestOptions& options) {
    std::ifstream file(path);
    if (!file) {
        throw Error(errc::io, "cannot open '" + path.string() + "'");
    }
    std::string header;
    if (!std::getline(file, header)) {
        throw Error(errc::schema, "empty input file '" + path.string() + "'");
    }
    const auto commas = std::count(header.begin(), header.end(), ',');
    const auto semicolons = std::count(header.begin(), header.end(), ';');
    const char delimiter = semicolons > commas ? ';' : ',';

    const auto columns = split_row(header, delimiter);
    auto column_index = [&](const std::string& name) -> std::ptrdiff_t {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (trim(columns[i]) == name) {
                return static_cast<std::ptrdiff_t>(i);
            }
        }
        return -1;
    };
    const auto project_col = column_index(options.project_column);
    const auto activity_col = column_index(options.activity_column);
    const auto contrib_col = column_index(options.contribution_column);
    const auto org_col = column_index(options.organisation_column); // optional
    for (const auto& [name, idx] :
         {std::pair{options.project_column, project_col},
          std::pair{options.activity_column, activity_col},
          std::pair{options.contribution_column, contrib_col}}) {
        if (idx < 0) {
            throw Error(errc::schema, "missing required column '" + name + "'");
        }
    }

    std::vector<ParticipantRecord> records;
    std::string line;
    std::size_t row_index = 1; // header was row 0
    while (std::getline(file, line)) {
        if (trim(line).empty()) {
            ++row_index;
            continue;
        }
        const auto fields = split_row(line, delimiter);
        auto field = [&](std::ptrdiff_t idx) -> std::string {
            return (idx >= 0 && static_cast<std::size_t>(idx) < fields.size())
                       ? trim(fields[static_cast<std::size_t>(idx)])
                       : "";
        };
        ParticipantRecord record;
        record.project_id = field(project_col);
        record.organisation_id = field(org_col);
        record.activity_type = upper(field(activity_col));
        record.ec_contribution = parse_amount(field(contrib_col), row_index);
        records.push_back(std::move(record));
        ++row_index;
    }
    return records;
}

DominanceWeights compute_dominance(std::span<const ParticipantRecord> records,
                                   const std::string& project_id) {
    std::array<double, kHelixCount> sums{};
    double total = 0.0;
    bool found = false;
    for (const auto& record : records) {
        if (record.project_id != project_id) {
            continue;
        }
        found = true;
        if (record.ec_contribution < 0.0) {
            throw Error(errc::data_integrity,
                        "negative contribution for organisation '" + record.organisation_id +
                            "' in project " + project_id);
        }
        const HelixActor actor = map_activity_type(record.activity_type);
        sums[static_cast<std::size_t>(actor)] += record.ec_contribution;
        total += record.ec_contribution;
    }
    if (!found) {
        throw Error(errc::unknown_project, "no records for project '" + project_id + "'");
    }
    if (total <= 0.0) {
        throw Error(errc::degenerate_funding,
                    "project '" + project_id + "' has zero total funding");
    }
    DominanceWeights weights;
    for (std::size_t i = 0; i < kHelixCount; ++i) {
        weights.p[i] = sums[i] / total;
    }
    return weights;
}

} // namespace qhelix
