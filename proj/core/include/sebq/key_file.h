/*
 * Copyright 2026 The SEBQ Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SEBQ_KEY_FILE_H_
#define SEBQ_KEY_FILE_H_

#include <string>
#include <string_view>

#include "sebq/latin_square.h"

namespace sebq {

// Text key format:
//   SEBQ-LSQ v1
//   <n>
//   n lines of n space-separated decimal symbols
inline constexpr std::string_view kKeyFileHeader = "SEBQ-LSQ v1";

std::string SerializeKeyFile(const LatinSquare& square);

// Throws StructuralError for malformed text and LatinPropertyError when the
// table is not a Latin square.
LatinSquare ParseKeyFile(std::string_view text);

}  // namespace sebq

#endif  // SEBQ_KEY_FILE_H_
