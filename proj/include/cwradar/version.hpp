// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The cwradar Authors

#pragma once

namespace cwradar {

inline constexpr const char* kVersion = "0.1.0";

} // namespace cwradar
