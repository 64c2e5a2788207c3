// paralabel/io.hpp
//
// Copyright 2026 The paralabel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

namespace paralabel {

// Reads the whole file as bytes. Throws std::runtime_error naming the
// path on any failure.
std::string read_file(const std::string& path);

// Writes via a sibling temp file and a rename, so readers never observe
// a partial file. Throws std::runtime_error naming the path.
void write_file_atomic(const std::string& path, const std::string& content);

// Regular files under dir whose names end with suffix, sorted by name.
std::vector<std::string> list_files(const std::string& dir,
                                    const std::string& suffix);

}  // namespace paralabel
