// SPDX-License-Identifier: Apache-2.0

#include "asmop/dataset_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "asmop/trace_io.hpp"

namespace asmop {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

bool parses_as_double(std::string_view token) {
  double value = 0.0;
  const char* first = token.data();
  if (!token.empty() && token.front() == '+') ++first;
  const auto [ptr, ec] =
      std::from_chars(first, token.data() + token.size(), value);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_row(std::string_view row) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = row.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(row.substr(start)));
      break;
    }
    fields.push_back(trim(row.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

}  // namespace

Dataset load_dataset_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open dataset " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  std::vector<std::vector<double>> rows;
  std::size_t pos = 0;
  int line_number = 0;
  std::size_t columns = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    const std::string_view row = trim(std::string_view(text).substr(pos, end - pos));
    pos = end + 1;
    ++line_number;
    if (row.empty()) continue;

    const auto fields = split_row(row);
    if (rows.empty() && columns == 0) {
      // A first row with any non-numeric field is a header.
      const bool header = !std::all_of(fields.begin(), fields.end(),
                                       [](std::string_view f) {
                                         return parses_as_double(f);
                                       });
      columns = fields.size();
      if (header) continue;
    }
    if (fields.size() != columns)
      throw ParseError("line " + std::to_string(line_number) + ": expected " +
                           std::to_string(columns) + " fields, got " +
                           std::to_string(fields.size()),
                       line_number);
    std::vector<double> parsed;
    parsed.reserve(fields.size());
    for (const auto& field : fields)
      parsed.push_back(parse_double_token(field, line_number));
    rows.push_back(std::move(parsed));
  }

  if (rows.empty())
    throw InputError("dataset " + path.string() + " contains no samples");
  if (columns < 2)
    throw InputError("dataset " + path.string() +
                     " needs at least one feature column and a label column");

  const int n_samples = static_cast<int>(rows.size());
  const int n_features = static_cast<int>(columns) - 1;
  Dataset data;
  data.features.resize(n_samples, n_features + 1);  // appended intercept
  data.labels.resize(n_samples);
  for (int j = 0; j < n_samples; ++j) {
    for (int i = 0; i < n_features; ++i)
      data.features(j, i) = rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    data.features(j, n_features) = 1.0;
    data.labels[j] = rows[static_cast<std::size_t>(j)].back();
  }
  return data;
}

}  // namespace asmop
