// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>

#include "asmop/problem_families.hpp"

namespace asmop {

/// Loads a dataset CSV: one row per sample, feature columns then one label
/// column, optional header, UTF-8 with '.' decimals. The returned feature
/// matrix carries an appended constant-1 intercept column.
Dataset load_dataset_csv(const std::filesystem::path& path);

}  // namespace asmop
