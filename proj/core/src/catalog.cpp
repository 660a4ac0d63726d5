#include "powcom/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "powcom/arith.hpp"
#include "powcom/cayley_io.hpp"
#include "powcom/error.hpp"

namespace powcom {

namespace {

[[noreturn]] void bad_spec(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::BadSpec, "'" + std::string(text) + "': " + why);
}

std::uint64_t parse_count(std::string_view text, std::size_t& pos, std::string_view whole) {
  const std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
  if (start == pos || ec != std::errc() || ptr != text.data() + pos) {
    bad_spec(whole, "expected a positive integer at offset " + std::to_string(start));
  }
  if (value == 0) bad_spec(whole, "parameter must be at least 1");
  return value;
}

// Saturating group order of one base; files report 0 (unknown until loaded).
std::uint64_t base_order(const SpecBase& base) {
  constexpr std::uint64_t kHuge = ~std::uint64_t{0};
  switch (base.kind) {
    case SpecBase::Kind::Cyclic: return base.parameter;
    case SpecBase::Kind::Dihedral: return 2 * base.parameter;
    case SpecBase::Kind::Quaternion: return 8;
    case SpecBase::Kind::Heisenberg: return base.parameter * base.parameter * base.parameter;
    case SpecBase::Kind::Symmetric:
    case SpecBase::Kind::Alternating: {
      std::uint64_t f = 1;
      for (std::uint64_t i = 2; i <= base.parameter; ++i) {
        if (f > kHuge / i) return kHuge;
        f *= i;
      }
      if (base.kind == SpecBase::Kind::Alternating && f > 1) f /= 2;
      return f;
    }
    case SpecBase::Kind::File: return 0;
  }
  return 0;
}

void check_order(std::uint64_t order, const std::string& what, const Limits& limits) {
  if (order > limits.element_cap) {
    throw Error(ErrorKind::OrderCapExceeded, what + " has order " + std::to_string(order) +
                                                 " above cap " + std::to_string(limits.element_cap));
  }
}

FiniteGroup make_base(const SpecBase& base, const Limits& limits) {
  const std::string name = to_string(GroupSpec{{base}});
  if (base.kind != SpecBase::Kind::File) check_order(base_order(base), name, limits);
  const auto n = static_cast<std::size_t>(base.parameter);
  switch (base.kind) {
    case SpecBase::Kind::Cyclic: return cyclic(n);
    case SpecBase::Kind::Dihedral: return dihedral(n);
    case SpecBase::Kind::Symmetric: return symmetric(n, limits);
    case SpecBase::Kind::Alternating: return alternating(n, limits);
    case SpecBase::Kind::Quaternion: return quaternion();
    case SpecBase::Kind::Heisenberg: return heisenberg(n);
    case SpecBase::Kind::File: {
      FiniteGroup g = read_cayley_file(base.path);
      check_order(g.order(), name, limits);
      return g.name().empty() ? g.renamed(name) : g;
    }
  }
  throw Error(ErrorKind::BadSpec, "unknown base");
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) {
  GroupSpec spec;
  std::size_t pos = 0;
  if (text.empty()) bad_spec(text, "empty spec");
  while (true) {
    if (pos >= text.size()) bad_spec(text, "expected a group after 'x'");
    SpecBase base;
    const char c = text[pos];
    if (c == '@') {
      base.kind = SpecBase::Kind::File;
      base.path = std::string(text.substr(pos + 1));
      if (base.path.empty()) bad_spec(text, "empty file path");
      spec.factors.push_back(std::move(base));
      return spec;
    }
    if (text.substr(pos, 4) == "Heis") {
      pos += 4;
      base.kind = SpecBase::Kind::Heisenberg;
      base.parameter = parse_count(text, pos, text);
      if (base.parameter == 2 || !arith::is_prime(base.parameter)) {
        bad_spec(text, "Heis needs an odd prime");
      }
    } else if (text.substr(pos, 2) == "Q8") {
      pos += 2;
      base.kind = SpecBase::Kind::Quaternion;
      base.parameter = 8;
    } else if (c == 'C' || c == 'D' || c == 'S' || c == 'A') {
      ++pos;
      base.kind = c == 'C'   ? SpecBase::Kind::Cyclic
                  : c == 'D' ? SpecBase::Kind::Dihedral
                  : c == 'S' ? SpecBase::Kind::Symmetric
                             : SpecBase::Kind::Alternating;
      base.parameter = parse_count(text, pos, text);
    } else {
      bad_spec(text, "unknown group at offset " + std::to_string(pos));
    }
    spec.factors.push_back(std::move(base));
    if (pos == text.size()) return spec;
    if (text[pos] != 'x') bad_spec(text, "expected 'x' at offset " + std::to_string(pos));
    ++pos;
  }
}

std::string to_string(const GroupSpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    const SpecBase& b = spec.factors[i];
    if (i != 0) out += 'x';
    switch (b.kind) {
      case SpecBase::Kind::Cyclic: out += "C" + std::to_string(b.parameter); break;
      case SpecBase::Kind::Dihedral: out += "D" + std::to_string(b.parameter); break;
      case SpecBase::Kind::Symmetric: out += "S" + std::to_string(b.parameter); break;
      case SpecBase::Kind::Alternating: out += "A" + std::to_string(b.parameter); break;
      case SpecBase::Kind::Quaternion: out += "Q8"; break;
      case SpecBase::Kind::Heisenberg: out += "Heis" + std::to_string(b.parameter); break;
      case SpecBase::Kind::File: out += "@" + b.path; break;
    }
  }
  return out;
}

FiniteGroup make(const GroupSpec& spec, const Limits& limits) {
  if (spec.factors.empty()) throw Error(ErrorKind::BadSpec, "empty spec");
  std::uint64_t known_order = 1;
  for (const SpecBase& b : spec.factors) {
    const std::uint64_t o = base_order(b);
    if (o != 0) known_order = (known_order > limits.element_cap || o > limits.element_cap)
                                  ? limits.element_cap + 1
                                  : known_order * o;
  }
  check_order(known_order, to_string(spec), limits);

  FiniteGroup g = make_base(spec.factors.front(), limits);
  for (std::size_t i = 1; i < spec.factors.size(); ++i) {
    g = direct_product(g, make_base(spec.factors[i], limits), limits);
  }
  if (spec.factors.size() == 1 && spec.factors.front().kind == SpecBase::Kind::File) return g;
  return g.renamed(to_string(spec));
}

FiniteGroup make(std::string_view spec, const Limits& limits) {
  return make(parse_group_spec(spec), limits);
}

FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cyclic group of order 0");
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Element>((i + j) % n);
  }
  return FiniteGroup::from_valid_table(n, std::move(table), "C" + std::to_string(n));
}

FiniteGroup dihedral(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "dihedral group D0");
  const std::size_t order = 2 * n;
  std::vector<Element> table(order * order);
  // (r^i s^a)(r^k s^b) = r^(i + (-1)^a k) s^(a+b)
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t b = 0; b < 2; ++b) {
        for (std::size_t k = 0; k < n; ++k) {
          const std::size_t rot = a == 0 ? (i + k) % n : (i + n - k) % n;
          table[(a * n + i) * order + b * n + k] = static_cast<Element>(((a + b) % 2) * n + rot);
        }
      }
    }
  }
  return FiniteGroup::from_valid_table(order, std::move(table), "D" + std::to_string(n));
}

FiniteGroup symmetric(std::size_t n, const Limits& limits) {
  const std::string name = "S" + std::to_string(n);
  if (n <= 1) return from_permutations({}, 1, name, limits);
  std::vector<std::uint32_t> all(n);
  for (std::uint32_t i = 0; i < n; ++i) all[i] = i;
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1}})};
  if (n > 2) gens.push_back(Permutation::from_cycles(n, {all}));
  return from_permutations(std::move(gens), n, name, limits);
}

FiniteGroup alternating(std::size_t n, const Limits& limits) {
  const std::string name = "A" + std::to_string(n);
  if (n <= 2) return from_permutations({}, 1, name, limits);
  std::vector<Permutation> gens;
  for (std::uint32_t k = 2; k < n; ++k) gens.push_back(Permutation::from_cycles(n, {{0, 1, k}}));
  return from_permutations(std::move(gens), n, name, limits);
}

FiniteGroup quaternion() {
  // a^i b^j with a^4 = 1, b^2 = a^2, b a b^-1 = a^-1; id = 4j + i.
  std::vector<Element> table(64);
  for (unsigned j = 0; j < 2; ++j) {
    for (unsigned i = 0; i < 4; ++i) {
      for (unsigned l = 0; l < 2; ++l) {
        for (unsigned k = 0; k < 4; ++k) {
          unsigned rot = 0;
          unsigned b = 0;
          if (j == 0) {
            rot = (i + k) % 4;
            b = l;
          } else if (l == 0) {
            rot = (i + 4 - k) % 4;
            b = 1;
          } else {
            rot = (i + 4 - k + 2) % 4;
            b = 0;
          }
          table[(4 * j + i) * 8 + 4 * l + k] = 4 * b + rot;
        }
      }
    }
  }
  return FiniteGroup::from_valid_table(8, std::move(table), "Q8");
}

FiniteGroup heisenberg(std::size_t p) {
  if (p < 3 || !arith::is_prime(p)) throw Error(ErrorKind::BadSpec, "Heis needs an odd prime");
  const std::size_t order = p * p * p;
  std::vector<Element> table(order * order);
  auto id = [p](std::size_t a, std::size_t b, std::size_t c) {
    return static_cast<Element>(a + p * b + p * p * c);
  };
  // (a, b, c)(a', b', c') = (a + a', b + b', c + c' + a b')
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t a = x % p, b = (x / p) % p, c = x / (p * p);
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t a2 = y % p, b2 = (y / p) % p, c2 = y / (p * p);
      table[x * order + y] = id((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
    }
  }
  return FiniteGroup::from_valid_table(order, std::move(table), "Heis" + std::to_string(p));
}

std::vector<FiniteGroup> standard_catalog(std::size_t max_order) {
  std::vector<std::string> specs;
  for (std::size_t n = 1; n <= 48; ++n) specs.push_back("C" + std::to_string(n));
  for (std::size_t n = 2; n <= 24; ++n) specs.push_back("D" + std::to_string(n));
  for (const char* s :
       {"S3", "S4", "A4", "A5", "Q8", "Heis3", "Heis5", "C2xC2", "C2xC4", "C2xC2xC2", "C2xC6",
        "C3xC3", "C2xC8", "C4xC4", "C2xC2xC4", "C2xC2xC2xC2", "C3xC6", "C2xC10", "C2xC12",
        "C2xC2xC6", "C6xC6", "C2xC14", "C2xC16", "C4xC8", "C2xC2xC2xC6", "C4xC12", "C5xC5",
        "C3xC3xC3", "C2xS3", "C3xS3", "C4xS3", "C5xS3", "C6xS3", "S3xS3", "C2xC2xS3", "C2xD4",
        "C2xQ8", "C3xD4", "C3xQ8", "C4xQ8", "C2xA4", "C3xA4", "C4xA4", "C2xS4", "C2xD6", "C2xC2xD4",
        "C2xC2xQ8", "C3xD5", "D3xC8"}) {
    specs.emplace_back(s);
  }
  std::vector<FiniteGroup> out;
  for (const auto& text : specs) {
    const GroupSpec spec = parse_group_spec(text);
    std::uint64_t order = 1;
    for (const SpecBase& b : spec.factors) order *= base_order(b);
    if (order <= max_order) out.push_back(make(spec));
  }
  std::sort(out.begin(), out.end(), [](const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.name() < b.name();
  });
  return out;
}

}  // namespace powcom
