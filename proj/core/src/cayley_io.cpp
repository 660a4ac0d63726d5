#include "powcom/cayley_io.hpp"

#include <fstream>
#include <sstream>

#include "powcom/error.hpp"

namespace powcom {

namespace {

constexpr std::string_view kNamePrefix = "# name:";

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

FiniteGroup read_cayley(std::istream& in) {
  std::string name;
  std::string line;
  std::ostringstream body;
  bool first_line = true;
  while (std::getline(in, line)) {
    if (first_line && line.rfind(kNamePrefix, 0) == 0) {
      name = trim(std::string_view(line).substr(kNamePrefix.size()));
    } else {
      body << line << '\n';
    }
    first_line = false;
  }

  std::istringstream numbers(body.str());
  long long n = 0;
  if (!(numbers >> n) || n <= 0) throw Error(ErrorKind::BadTable, "missing or invalid order line");
  std::vector<std::vector<std::int64_t>> raw(static_cast<std::size_t>(n),
                                             std::vector<std::int64_t>(static_cast<std::size_t>(n)));
  for (auto& row : raw) {
    for (auto& entry : row) {
      if (!(numbers >> entry)) {
        throw Error(ErrorKind::BadTable, "expected " + std::to_string(n * n) + " table entries");
      }
    }
  }
  std::string extra;
  if (numbers >> extra) throw Error(ErrorKind::BadTable, "trailing data after table: " + extra);
  return from_cayley_table(raw, std::move(name));
}

FiniteGroup read_cayley_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::FileError, "cannot open " + path.string());
  return read_cayley(in);
}

void write_cayley(std::ostream& out, const FiniteGroup& g) {
  if (!g.name().empty()) out << kNamePrefix << ' ' << g.name() << '\n';
  out << g.order() << '\n';
  for (Element a = 0; a < g.order(); ++a) {
    const auto row = g.row(a);
    for (std::size_t b = 0; b < row.size(); ++b) {
      if (b != 0) out << ' ';
      out << row[b];
    }
    out << '\n';
  }
}

void write_cayley_file(const std::filesystem::path& path, const FiniteGroup& g) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::FileError, "cannot write " + path.string());
  write_cayley(out, g);
  if (!out) throw Error(ErrorKind::FileError, "write failed for " + path.string());
}

std::string to_cayley_string(const FiniteGroup& g) {
  std::ostringstream out;
  write_cayley(out, g);
  return out.str();
}

}  // namespace powcom
