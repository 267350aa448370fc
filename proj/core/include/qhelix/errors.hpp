// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace qhelix {

/// Exception carrying a stable machine-greppable error code alongside the
/// human-readable message. The CLI prints `error: <code>: <message>`.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error("error: " + code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

namespace errc {
inline constexpr const char* invalid_argument = "invalid-argument";
inline constexpr const char* unknown_activity_type = "unknown-activity-type";
inline constexpr const char* schema = "schema-error";
inline constexpr const char* parse = "parse-error";
inline constexpr const char* io = "io-error";
inline constexpr const char* unknown_project = "unknown-project";
inline constexpr const char* degenerate_funding = "degenerate-funding";
inline constexpr const char* data_integrity = "data-integrity";
inline constexpr const char* degenerate_scores = "degenerate-scores";
} // namespace errc

} // namespace qhelix
