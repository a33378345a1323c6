// Copyright 2026 The nmtlab Authors.
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

#ifndef NMTLAB_UTIL_HPP_
#define NMTLAB_UTIL_HPP_

#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nmtlab {

// The single exception type thrown across the library. Messages always
// name the failing component ("matmul: ...", "train: ...").
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

namespace strings {

std::vector<std::string> split(std::string_view text, char sep);
// Splits on runs of whitespace; never yields empty fields.
std::vector<std::string> split_ws(std::string_view text);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
std::string trim(std::string_view text);
bool starts_with(std::string_view text, std::string_view prefix);
bool ends_with(std::string_view text, std::string_view suffix);

// Shortest decimal representation that round-trips a double exactly.
std::string fmt_double(double v);
// Fixed-point with the given number of decimals (reports, TSV).
std::string fmt_fixed(double v, int decimals);

template <typename... Args>
std::string cat(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

}  // namespace strings

namespace io {

std::vector<std::string> read_lines(const std::string& path);
void write_lines(const std::string& path, const std::vector<std::string>& lines);
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);
bool file_exists(const std::string& path);

}  // namespace io

namespace rng {

// splitmix64; used to derive independent seeds for named streams.
uint64_t mix(uint64_t x);
uint64_t hash_string(std::string_view s);

// Deterministic per-purpose stream: derive(seed, "corpus/medical") etc.
inline uint64_t derive(uint64_t seed, std::string_view tag) {
  return mix(seed ^ mix(hash_string(tag)));
}

inline std::mt19937_64 stream(uint64_t seed, std::string_view tag) {
  return std::mt19937_64(derive(seed, tag));
}

}  // namespace rng

namespace hashing {

// FNV-1a, used for content-addressed stage caching (not cryptographic).
uint64_t fnv1a(std::string_view bytes);
uint64_t fnv1a_file(const std::string& path);
std::string hex(uint64_t h);

}  // namespace hashing

}  // namespace nmtlab

#endif  // NMTLAB_UTIL_HPP_
