#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "powcom/group.hpp"

namespace powcom {

// Cayley table text format:
//
//   # name: <string>      (optional, first line only)
//   n
//   n lines of n whitespace-separated integers in [0, n)
//
// Tables are validated on read and the identity relabelled to 0, so the
// writer always emits identity-0 normalized tables.

FiniteGroup read_cayley(std::istream& in);
FiniteGroup read_cayley_file(const std::filesystem::path& path);

void write_cayley(std::ostream& out, const FiniteGroup& g);
void write_cayley_file(const std::filesystem::path& path, const FiniteGroup& g);

std::string to_cayley_string(const FiniteGroup& g);

}  // namespace powcom
