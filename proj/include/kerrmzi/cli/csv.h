// Copyright 2026 The kerrmzi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kerrmzi::cli {

/// Token written for undefined or singular values.
inline constexpr std::string_view kMissing = "NA";

/// 12 significant digits, shortest of fixed/scientific, '.' decimal point
/// regardless of locale. Negative zero prints as 0.
std::string format_number(double v);
std::string format_number(std::optional<double> v);

/// Comma-joined line terminated by '\n'.
std::string csv_line(const std::vector<std::string> &fields);

/// Writes to a sibling temporary file and renames it over \p path, so a
/// failed run never leaves a partial file behind.
void write_file_atomically(const std::filesystem::path &path, std::string_view content);

}  // namespace kerrmzi::cli
