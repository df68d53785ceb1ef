// SPDX-License-Identifier: Apache-2.0

#include "asmop/trace_io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <system_error>

namespace asmop {

std::string format_double(double v) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), v);
  if (ec != std::errc()) throw Error("failed to format a double");
  return std::string(buffer, ptr);
}

double parse_double_token(std::string_view token, int line) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;  // from_chars rejects '+'
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError("line " + std::to_string(line) + ": bad number '" +
                         std::string(token) + "'",
                     line);
  return value;
}

namespace {

long long parse_int_token(std::string_view token, int line) {
  long long value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError("line " + std::to_string(line) + ": bad integer '" +
                         std::string(token) + "'",
                     line);
  return value;
}

std::vector<std::string_view> split_fields(std::string_view row) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = row.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(row.substr(start));
      break;
    }
    fields.push_back(row.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

std::string header_for(int num_components) {
  std::string header = "k,cost,delta,omega_sub,omega_true,rho_N,rho_D,accepted";
  for (int i = 1; i <= num_components; ++i)
    header += ",N_k_" + std::to_string(i);
  header += ",phi_sub";
  return header;
}

}  // namespace

std::string trace_to_csv(const std::vector<IterateRecord>& trace,
                         int num_components) {
  if (num_components < 1) throw InputError("trace needs at least one component");
  std::string out = header_for(num_components);
  out += '\n';
  for (const auto& rec : trace) {
    if (static_cast<int>(rec.sizes.size()) != num_components)
      throw InputError("record sample sizes do not match the component count");
    out += std::to_string(rec.k);
    out += ',';
    out += std::to_string(rec.cost);
    out += ',';
    out += format_double(rec.delta);
    out += ',';
    out += format_double(rec.omega_sub);
    out += ',';
    if (rec.omega_true) out += format_double(*rec.omega_true);
    out += ',';
    if (rec.rho_sample) out += format_double(*rec.rho_sample);
    out += ',';
    if (rec.rho_additional) out += format_double(*rec.rho_additional);
    out += ',';
    out += rec.accepted ? '1' : '0';
    for (int size : rec.sizes) {
      out += ',';
      out += std::to_string(size);
    }
    out += ',';
    out += format_double(rec.phi_sub);
    out += '\n';
  }
  return out;
}

std::vector<IterateRecord> parse_trace_csv(std::string_view text) {
  std::vector<IterateRecord> trace;
  std::size_t pos = 0;
  int line_number = 0;
  int num_components = -1;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view row = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;
    if (row.empty()) continue;

    const auto fields = split_fields(row);
    if (line_number == 1) {
      num_components = static_cast<int>(fields.size()) - 9;
      if (num_components < 1 || header_for(num_components) != row)
        throw ParseError("line 1: unrecognized trace header", 1);
      continue;
    }
    if (static_cast<int>(fields.size()) != 9 + num_components)
      throw ParseError("line " + std::to_string(line_number) +
                           ": expected " + std::to_string(9 + num_components) +
                           " fields, got " + std::to_string(fields.size()),
                       line_number);

    IterateRecord rec;
    rec.k = static_cast<int>(parse_int_token(fields[0], line_number));
    rec.cost = parse_int_token(fields[1], line_number);
    rec.delta = parse_double_token(fields[2], line_number);
    rec.omega_sub = parse_double_token(fields[3], line_number);
    if (!fields[4].empty())
      rec.omega_true = parse_double_token(fields[4], line_number);
    if (!fields[5].empty())
      rec.rho_sample = parse_double_token(fields[5], line_number);
    if (!fields[6].empty())
      rec.rho_additional = parse_double_token(fields[6], line_number);
    if (fields[7] == "1") {
      rec.accepted = true;
    } else if (fields[7] == "0") {
      rec.accepted = false;
    } else {
      throw ParseError("line " + std::to_string(line_number) +
                           ": accepted must be 0 or 1",
                       line_number);
    }
    rec.sizes.reserve(static_cast<std::size_t>(num_components));
    for (int i = 0; i < num_components; ++i)
      rec.sizes.push_back(static_cast<int>(
          parse_int_token(fields[static_cast<std::size_t>(8 + i)], line_number)));
    rec.phi_sub = parse_double_token(fields.back(), line_number);
    trace.push_back(std::move(rec));
  }
  if (num_components < 0) throw ParseError("empty trace file", 1);
  return trace;
}

void write_trace(const std::vector<IterateRecord>& trace, int num_components,
                 const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << trace_to_csv(trace, num_components);
  if (!out) throw Error("failed writing " + path.string());
}

std::vector<IterateRecord> read_trace(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_trace_csv(buffer.str());
}

}  // namespace asmop
