// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "asmop/solver.hpp"

namespace asmop {

/// Malformed trace or dataset file; line is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line) : Error(what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// CSV schema, one row per iteration:
/// k,cost,delta,omega_sub,omega_true,rho_N,rho_D,accepted,N_k_1..N_k_q,phi_sub
/// Absent optionals are empty fields. Doubles use shortest round-trip form,
/// so writing a parsed trace reproduces the bytes.
std::string trace_to_csv(const std::vector<IterateRecord>& trace,
                         int num_components);

std::vector<IterateRecord> parse_trace_csv(std::string_view text);

void write_trace(const std::vector<IterateRecord>& trace, int num_components,
                 const std::filesystem::path& path);

std::vector<IterateRecord> read_trace(const std::filesystem::path& path);

/// Shortest round-trip decimal form of a double (inf/nan spelled out).
std::string format_double(double v);

/// Strict double parse of a whole token.
double parse_double_token(std::string_view token, int line);

}  // namespace asmop
