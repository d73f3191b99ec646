// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 servqual contributors

#pragma once

namespace servqual {

/// Selects the serial reference path or the OpenMP path of a batch kernel.
/// Both paths produce bit-identical results.
enum class Exec { serial, parallel };

} // namespace servqual
