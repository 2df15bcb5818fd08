// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The cwradar Authors

#pragma once

namespace cwradar {

// Execution policy for the data-parallel kernels. Every kernel has a plain
// serial loop and an OpenMP variant; both produce bit-identical output
// because per-element work is independent and noise is drawn up front.
enum class Exec {
    serial,
    parallel,
};

} // namespace cwradar
