#pragma once

#include <string>
#include <string_view>

#include "linecollab/model.hpp"

namespace linecollab::io {

// Instance file:
//   { "v": "p/q", "clients": [ { "id", "s", "r", "d", "tau" } ] }
// Solution file:
//   { "sequence": [ids], "rendezvous": [ { "id", "t", "x" } ], "return_time" }
// Every rational is a string "p/q" or an integer string; "d" may be "inf".
// Malformed input raises ModelError(Malformed); invariant violations raise the
// ModelError kind the Instance constructor reports.

Instance read_instance(std::string_view text);
std::string write_instance(const Instance& instance);

/// Completions are filled from the instance's processing times. Sequence and
/// rendezvous ids are checked against each other and the instance
/// (ModelErrorKind::Structure / UnknownClient).
Solution read_solution(std::string_view text, const Instance& instance);
std::string write_solution(const Solution& solution);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace linecollab::io
