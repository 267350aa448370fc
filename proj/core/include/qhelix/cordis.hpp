// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qhelix/helix.hpp"

#include <array>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qhelix {

/// One participant row of a CORDIS-style organization table.
struct ParticipantRecord {
    std::string project_id;
    std::string organisation_id; // may be empty
    std::string activity_type;   // normalized: uppercase, trimmed
    double ec_contribution = 0.0;
};

/// Column names vary across CORDIS export vintages; override as needed.
struct IngestOptions {
    std::string project_column = "projectID";
    std::string activity_column = "activityType";
    std::string contribution_column = "ecContribution";
    std::string organisation_column = "organisationID";
};

/// Per-helix funding shares, simplex-constrained (non-negative, sum 1).
struct DominanceWeights {
    std::array<double, kHelixCount> p{};

    double operator[](HelixActor actor) const { return p[static_cast<std::size_t>(actor)]; }
};

/// HES, REC -> Academia; PRC -> Industry; PUB -> Government;
/// OTH -> CivilSociety. Case-insensitive, whitespace-trimmed.
/// Unknown codes are a hard error, never silently mapped.
HelixActor map_activity_type(std::string_view code);

/// Loads a delimited table (comma or semicolon, auto-detected from the
/// header). ecContribution accepts dot or comma decimal separators and
/// thousands separators; empty cells parse as 0.
std::vector<ParticipantRecord> load_participants(const std::filesystem::path& path,
                                                 const IngestOptions& options = {});

/// Funding shares of `project_id` per helix actor. Helices with no
/// participants get weight 0; weights sum to 1.
DominanceWeights compute_dominance(std::span<const ParticipantRecord> records,
                                   const std::string& project_id);

} // namespace qhelix
