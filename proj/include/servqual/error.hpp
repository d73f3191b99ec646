// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 servqual contributors

#pragma once

#include <stdexcept>
#include <string>

namespace servqual {

/// Bad input data: malformed records, empty corpora, model/vocabulary mismatch.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid configuration: out-of-range parameters, missing paths.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace servqual
