#include "powcom/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "powcom/arith.hpp"
#include "powcom/catalog.hpp"
#include "powcom/cayley_io.hpp"
#include "powcom/enumerate.hpp"
#include "powcom/error.hpp"
#include "powcom/law.hpp"
#include "powcom/records.hpp"
#include "powcom/scan.hpp"
#include "powcom/subgroup.hpp"
#include "powcom/theorems.hpp"

namespace powcom::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string power_name(std::uint64_t k) {
  if (k == 2) return "squares";
  if (k == 3) return "cubes";
  return std::to_string(k) + "-th powers";
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string set_text(std::span<const Element> elements) {
  std::string out = "{";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(elements[i]);
  }
  return out + "}";
}

std::vector<ExponentPair> parse_pairs(const std::string& text) {
  std::vector<ExponentPair> pairs;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ';')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    const auto comma = item.find(',');
    std::uint64_t m = 0, n = 0;
    auto parse = [](std::string_view s, std::uint64_t& v) {
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      return ec == std::errc() && ptr == s.data() + s.size() && v > 0;
    };
    if (comma == std::string::npos || !parse(std::string_view(item).substr(0, comma), m) ||
        !parse(std::string_view(item).substr(comma + 1), n)) {
      throw UsageError("bad pair '" + item + "' in --pairs (expected \"m1,n1;m2,n2\")");
    }
    pairs.emplace_back(m, n);
  }
  if (pairs.empty()) throw UsageError("--pairs is empty");
  return pairs;
}

void check_format(const std::string& format) {
  if (format != "text" && format != "records") {
    throw UsageError("--format must be text or records");
  }
}

std::string row_text(const PropertyReport& r) {
  std::ostringstream out;
  out << r.group << " order=" << r.order << " m=" << r.m << " n=" << r.n
      << " P=" << yes_no(r.satisfies_p) << " abelian=" << yes_no(r.is_abelian);
  if (r.witness) {
    out << " witness=" << power_name(r.witness->exponent) << "(a=" << r.witness->a
        << ",b=" << r.witness->b << ")";
  }
  return out.str();
}

// ---------------------------------------------------------------------------

struct CheckOptions {
  std::string group;
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::string format = "text";
  bool allow_non_coprime = false;
  bool timing = false;
};

int run_check(const CheckOptions& o, const Limits& limits, std::ostream& out) {
  check_format(o.format);
  if (o.m == 0 || o.n == 0) throw UsageError("--m and --n must be positive");
  const FiniteGroup g = make(o.group, limits);
  const bool coprime = arith::coprime(o.m, o.n);
  if (!coprime && !o.allow_non_coprime) {
    throw Error(ErrorKind::NotCoprime, "gcd(" + std::to_string(o.m) + ", " + std::to_string(o.n) +
                                           ") = " + std::to_string(arith::gcd(o.m, o.n)));
  }

  if (!coprime) {
    const PropertyReport report = satisfies_p(g, o.m, o.n, true);
    if (o.format == "records") {
      auto j = to_json(report, o.timing);
      j["decomposition"] = "inapplicable";
      out << j.dump() << '\n';
    } else {
      out << "P: " << yes_no(report.satisfies_p);
      if (report.witness) {
        out << " (witness: " << power_name(report.witness->exponent) << " a=" << report.witness->a
            << " b=" << report.witness->b << ")";
      }
      out << "; abelian: " << yes_no(report.is_abelian)
          << "; decomposition: inapplicable (m, n not coprime)\n";
    }
    return kOk;
  }

  const auto verdict = verify_abelian_decomposition(g, o.m, o.n, limits);
  const PropertyReport& report = verdict.evidence.report;
  if (o.format == "records") {
    auto j = to_json(report, o.timing);
    j["decomposition"] = std::string(to_string(verdict.status));
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& f : verdict.evidence.sylow_factors) factors.push_back(f.size());
    j["sylow_factor_orders"] = factors;
    out << j.dump() << '\n';
  } else {
    out << "group: " << report.group << " (order " << report.order << "), m=" << report.m
        << ", n=" << report.n << '\n';
    out << "P: " << yes_no(report.satisfies_p);
    if (report.witness) {
      out << " (witness: " << power_name(report.witness->exponent) << " a=" << report.witness->a
          << " b=" << report.witness->b << ")";
    }
    out << "; abelian: " << yes_no(report.is_abelian) << "; decomposition: "
        << to_string(verdict.status);
    if (verdict.status == VerdictStatus::Holds) {
      out << " (Sylow factors of order";
      if (verdict.evidence.sylow_factors.empty()) out << " none";
      for (const auto& f : verdict.evidence.sylow_factors) out << ' ' << f.size();
      out << ")";
    }
    out << '\n';
    if (verdict.status == VerdictStatus::Violated) {
      out << "VIOLATION: " << verdict.violation->property << ' '
          << set_text(verdict.violation->elements) << '\n';
    }
    if (o.timing) out << "time: " << report.wall_seconds << " s\n";
  }
  return verdict.holds() ? kOk : kInconsistent;
}

struct ScanOptions {
  std::size_t max_order = 0;
  std::string pairs = "2,3";
  bool catalog = false;
  bool enumerate = false;
  std::string format = "text";
  std::string json_path;
  unsigned jobs = 1;
  bool timing = false;
};

int run_scan(const ScanOptions& o, const Limits& limits, std::ostream& out) {
  check_format(o.format);
  if (o.max_order == 0) throw UsageError("--max-order must be positive");
  const auto pairs = parse_pairs(o.pairs);
  for (const auto& [m, n] : pairs) {
    if (!arith::coprime(m, n)) {
      throw Error(ErrorKind::NotCoprime,
                  "pair (" + std::to_string(m) + ", " + std::to_string(n) + ") is not coprime");
    }
  }
  std::vector<FiniteGroup> groups;
  if (o.enumerate) {
    for (std::size_t n = 1; n <= o.max_order; ++n) {
      for (auto& g : enumerate_order(n, limits)) groups.push_back(std::move(g));
    }
  } else {
    groups = standard_catalog(o.max_order);
  }
  const ScanReport report = scan(groups, pairs, o.jobs);

  if (o.format == "records") {
    for (const auto& row : report.rows) out << to_json(row, o.timing).dump() << '\n';
  } else {
    for (const auto& row : report.rows) out << row_text(row) << '\n';
    const auto& s = report.summary;
    out << "rows: " << s.rows << "; P and abelian: " << s.p_and_abelian
        << "; P and nonabelian: " << s.p_and_nonabelian
        << "; not P and abelian: " << s.not_p_and_abelian
        << "; not P and nonabelian: " << s.not_p_and_nonabelian << '\n';
    out << "counterexamples: " << report.counterexamples.size() << '\n';
    for (const auto& row : report.counterexamples) out << "COUNTEREXAMPLE " << row_text(row) << '\n';
  }
  if (!o.json_path.empty()) {
    std::ofstream file(o.json_path);
    if (!file) throw Error(ErrorKind::FileError, "cannot write " + o.json_path);
    file << to_json(report, o.timing).dump(2) << '\n';
  }
  return report.counterexamples.empty() ? kOk : kInconsistent;
}

int run_enumerate(std::size_t order, const std::string& dir, const Limits& limits,
                  std::ostream& out) {
  if (order == 0) throw UsageError("--order must be positive");
  const auto classes = enumerate_order(order, limits);
  std::filesystem::create_directories(dir);
  for (const auto& g : classes) {
    const auto path = std::filesystem::path(dir) / (g.name() + ".txt");
    write_cayley_file(path, g);
    out << path.string() << " abelian=" << yes_no(is_abelian(g)) << '\n';
  }
  out << "order " << order << ": " << classes.size() << " classes\n";
  return kOk;
}

int run_sylow(const std::string& spec, std::uint64_t p, const Limits& limits, std::ostream& out) {
  const FiniteGroup g = make(spec, limits);
  const auto verdict = verify_sylow_criterion(g, p, limits);
  const auto& ev = verdict.evidence;
  out << "group: " << g.name() << " (order " << g.order() << "), p=" << p << ", p^a=" << ev.power_set.k
      << '\n';
  out << "power set: " << set_text(ev.power_set.members.elements())
      << " subgroup=" << yes_no(ev.power_set.closed()) << '\n';
  if (ev.power_set.escape) {
    out << "escape: " << ev.power_set.escape->first << "*" << ev.power_set.escape->second << " = "
        << g.mul(ev.power_set.escape->first, ev.power_set.escape->second) << '\n';
  }
  out << "Sylow subgroups: " << ev.sylow_subgroups.size() << '\n';
  for (const auto& s : ev.sylow_subgroups) out << "  " << set_text(s.elements()) << '\n';
  out << "verdict: " << to_string(verdict.status) << '\n';
  if (verdict.violation) out << "VIOLATION: " << verdict.violation->property << '\n';
  return verdict.holds() ? kOk : kInconsistent;
}

int run_decompose(const std::string& spec, std::uint64_t element, const Limits& limits,
                  std::ostream& out) {
  const FiniteGroup g = make(spec, limits);
  if (element >= g.order()) {
    throw UsageError("--element " + std::to_string(element) + " outside a group of order " +
                     std::to_string(g.order()));
  }
  const auto d = torsion_decompose(g, static_cast<Element>(element));
  out << "element " << d.element << " of " << g.name() << ": order " << d.order << '\n';
  std::string certificate;
  std::string rebuilt;
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    const auto& part = d.parts[i];
    out << "part x^" << part.cofactor << " = " << part.part << " (order " << part.prime << "^"
        << part.exponent << " = " << part.prime_power << "), coefficient " << part.coefficient
        << '\n';
    if (i != 0) {
      certificate += " + ";
      rebuilt += " * ";
    }
    certificate += "(" + std::to_string(part.coefficient) + ")*" + std::to_string(part.cofactor);
    rebuilt += std::to_string(part.part) + "^" + std::to_string(part.coefficient);
  }
  if (d.parts.empty()) {
    out << "identity: no parts\n";
  } else {
    out << "certificate: " << certificate << " = 1\n";
    out << "reconstruction: " << rebuilt << " = " << d.element << '\n';
  }
  const auto problem = check_decomposition(g, d);
  out << "check: " << (problem ? "FAILED: " + *problem : std::string("ok")) << '\n';
  return problem ? kInconsistent : kOk;
}

int run_law(const std::string& spec, const std::string& text, const Limits& limits,
            std::ostream& out) {
  const FiniteGroup g = make(spec, limits);
  const Law law = parse_law(text);
  const LawCheck check = holds(g, law, limits);
  out << "law: " << to_string(law) << '\n';
  out << "group: " << g.name() << " (order " << g.order() << ")\n";
  out << "holds: " << yes_no(check.holds);
  if (check.witness) {
    out << " (witness:";
    for (std::size_t i = 0; i < law.variables.size(); ++i) {
      out << ' ' << law.variables[i] << '=' << (*check.witness)[i];
    }
    out << ')';
  }
  out << '\n';
  return kOk;
}

int run_lattice(const std::string& spec, const Limits& limits, std::ostream& out) {
  const FiniteGroup g = make(spec, limits);
  const auto subgroups = all_subgroups(g, limits);
  out << "group: " << g.name() << " (order " << g.order() << "), " << subgroups.size()
      << " subgroups\n";
  for (const auto& h : subgroups) {
    out << "order " << h.size() << ": " << set_text(h.elements())
        << " normal=" << yes_no(h.is_normal()) << " abelian=" << yes_no(h.is_abelian()) << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite groups whose m-th and n-th powers commute", "powcom"};
  app.require_subcommand(1);

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Power-law report and Sylow decomposition check");
  check_cmd->add_option("--group", check.group, "Group spec, e.g. S3 or C4xC3")->required();
  check_cmd->add_option("--m", check.m, "First exponent")->required();
  check_cmd->add_option("--n", check.n, "Second exponent")->required();
  check_cmd->add_option("--format", check.format, "text or records");
  check_cmd->add_flag("--allow-non-coprime", check.allow_non_coprime,
                      "Accept non-coprime (m, n); the decomposition check is skipped");
  check_cmd->add_flag("--timing", check.timing, "Report wall time");

  ScanOptions scan_opts;
  auto* scan_cmd = app.add_subcommand("scan", "Counterexample search over many groups");
  scan_cmd->add_option("--max-order", scan_opts.max_order, "Largest group order")->required();
  scan_cmd->add_option("--pairs", scan_opts.pairs, "Exponent pairs \"m1,n1;m2,n2\"");
  auto* catalog_flag = scan_cmd->add_flag("--catalog", scan_opts.catalog, "Scan the named catalog");
  auto* enumerate_flag =
      scan_cmd->add_flag("--enumerate", scan_opts.enumerate, "Scan all groups up to isomorphism");
  catalog_flag->excludes(enumerate_flag);
  scan_cmd->add_option("--format", scan_opts.format, "text or records");
  scan_cmd->add_option("--json", scan_opts.json_path, "Also write the full report as JSON");
  scan_cmd->add_option("--jobs", scan_opts.jobs, "Worker threads");
  scan_cmd->add_flag("--timing", scan_opts.timing, "Include wall time in records");

  std::size_t enum_order = 0;
  std::string enum_dir = "enumerated";
  auto* enum_cmd = app.add_subcommand("enumerate", "Write one Cayley file per isomorphism class");
  enum_cmd->add_option("--order", enum_order, "Group order")->required();
  enum_cmd->add_option("--out", enum_dir, "Output directory");

  std::string group_spec;
  std::uint64_t prime = 0;
  auto* sylow_cmd = app.add_subcommand("sylow", "Sylow subgroup criterion for one prime");
  sylow_cmd->add_option("--group", group_spec, "Group spec")->required();
  sylow_cmd->add_option("--p", prime, "Prime dividing the order")->required();

  std::uint64_t element = 0;
  auto* decompose_cmd = app.add_subcommand("decompose", "Split an element into prime-power parts");
  decompose_cmd->add_option("--group", group_spec, "Group spec")->required();
  decompose_cmd->add_option("--element", element, "Element id")->required();

  std::string law_text;
  auto* law_cmd = app.add_subcommand("law", "Check a group identity");
  law_cmd->add_option("--group", group_spec, "Group spec")->required();
  law_cmd->add_option("--law", law_text, "Law, e.g. \"[x^2,y^2]=1\"")->required();

  auto* lattice_cmd = app.add_subcommand("lattice", "List all subgroups");
  lattice_cmd->add_option("--group", group_spec, "Group spec")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    if (!app.get_subcommands().empty()) {
      err << app.get_subcommands().front()->help();
    } else {
      err << app.help();
    }
    return kUsage;
  }

  const Limits limits = Limits::from_env();
  try {
    if (check_cmd->parsed()) return run_check(check, limits, out);
    if (scan_cmd->parsed()) return run_scan(scan_opts, limits, out);
    if (enum_cmd->parsed()) return run_enumerate(enum_order, enum_dir, limits, out);
    if (sylow_cmd->parsed()) return run_sylow(group_spec, prime, limits, out);
    if (decompose_cmd->parsed()) return run_decompose(group_spec, element, limits, out);
    if (law_cmd->parsed()) return run_law(group_spec, law_text, limits, out);
    if (lattice_cmd->parsed()) return run_lattice(group_spec, limits, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace powcom::cli
