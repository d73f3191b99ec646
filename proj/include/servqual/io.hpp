// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 servqual contributors

#pragma once

#include <nlohmann/json_fwd.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace servqual {

/// Throws DataError when the file is missing or not valid JSON.
nlohmann::json read_json_file(const std::filesystem::path& path);

/// Pretty-printed with a trailing newline. Throws DataError on write failure.
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

} // namespace servqual
