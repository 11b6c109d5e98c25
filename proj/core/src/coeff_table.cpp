// Copyright 2026 The qseries Authors
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

#include "qseries/coeff_table.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

namespace qseries {

CoeffTable make_table(std::string label, const Series& s, std::int64_t count) {
  if (count > s.prec()) {
    throw PrecisionError("table of " + std::to_string(count) + " coefficients requested but '" +
                         label + "' is only known to O(q^" + std::to_string(s.prec()) + ")");
  }
  if (!s.is_zero() && s.valuation() < 0) {
    throw ArgumentError("cannot tabulate '" + label + "': it has a q^" +
                        std::to_string(s.valuation()) + " term");
  }
  CoeffTable table{std::move(label), s.ring(), {}};
  table.values = s.coefficients(0, count);
  return table;
}

namespace {

std::string header_value(std::istream& in, const std::string& key, const std::filesystem::path& path) {
  std::string line;
  if (!std::getline(in, line) || !line.starts_with(key + " ")) {
    throw CacheFormatError(path.string() + ": expected '" + key + "' header line");
  }
  return line.substr(key.size() + 1);
}

}  // namespace

void write_cache(const CoeffTable& table, const std::filesystem::path& path) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::system_error(errno, std::generic_category(), "cannot write " + tmp.string());
    out << "qseries-coeffs " << kCacheFormatVersion << "\n";
    out << "label " << table.label << "\n";
    out << "ring " << table.ring.descriptor() << "\n";
    out << "count " << table.values.size() << "\n";
    for (const auto& v : table.values) out << v.get_str() << "\n";
    out.flush();
    if (!out) throw std::system_error(errno, std::generic_category(), "short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

CoeffTable read_cache(const std::filesystem::path& path, const std::optional<std::string>& expected_label,
                      const std::optional<Ring>& expected_ring) {
  std::ifstream in(path);
  if (!in) throw std::system_error(errno, std::generic_category(), "cannot read " + path.string());
  const std::string version = header_value(in, "qseries-coeffs", path);
  if (version != std::to_string(kCacheFormatVersion)) {
    throw CacheFormatError(path.string() + ": unsupported format version " + version);
  }
  CoeffTable table;
  table.label = header_value(in, "label", path);
  try {
    table.ring = Ring::parse(header_value(in, "ring", path));
  } catch (const ArgumentError& e) {
    throw CacheFormatError(path.string() + ": " + e.what());
  }
  if (expected_label && *expected_label != table.label) {
    throw CacheFormatError(path.string() + ": cache holds '" + table.label + "', not '" +
                           *expected_label + "'");
  }
  if (expected_ring && !(*expected_ring == table.ring)) {
    throw CacheFormatError(path.string() + ": cache ring " + table.ring.descriptor() +
                           " does not match requested " + expected_ring->descriptor());
  }
  const std::string count_text = header_value(in, "count", path);
  std::size_t count = 0;
  try {
    count = std::stoul(count_text);
  } catch (const std::exception&) {
    throw CacheFormatError(path.string() + ": bad count '" + count_text + "'");
  }
  table.values.reserve(count);
  std::string line;
  while (table.values.size() < count && std::getline(in, line)) {
    mpq_class v;
    if (line.empty() || v.set_str(line, 10) != 0) {
      throw CacheFormatError(path.string() + ": bad coefficient line '" + line + "'");
    }
    v.canonicalize();
    table.values.push_back(v);
  }
  if (table.values.size() != count) {
    throw CacheFormatError(path.string() + ": truncated body (" + std::to_string(table.values.size()) +
                           " of " + std::to_string(count) + " coefficients)");
  }
  return table;
}

}  // namespace qseries
