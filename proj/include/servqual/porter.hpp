// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 servqual contributors

#pragma once

#include <string>
#include <string_view>

namespace servqual {

/// Porter's 1980 suffix-stripping stemmer, steps 1a through 5b, without the
/// later departures of the reference C release (no BLI->BLE, no LOGI->LOG,
/// no short-word guard). Input must be lowercase ASCII letters.
///
/// The result can be empty: "s" strips to "" under rule 1a.
std::string porter_stem(std::string_view token);

} // namespace servqual
