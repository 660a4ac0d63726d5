#include "powcom/law.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "powcom/error.hpp"

namespace powcom {

bool operator==(const Word& a, const Word& b) { return a.factors == b.factors; }

namespace {

// LL(1) recursive descent over the raw text; offsets are byte offsets.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Law law() {
    require_nonempty();
    Law result;
    result.lhs = word();
    skip_space();
    expect('=');
    result.rhs = word();
    expect_end();
    return result;
  }

  Word single_word() {
    require_nonempty();
    Word w = word();
    expect_end();
    return w;
  }

 private:
  void require_nonempty() {
    skip_space();
    if (at_end()) throw Error(ErrorKind::EmptyInput, "no law text");
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) {
      throw SyntaxError(pos_, std::string("expected '") + c + "'" + found());
    }
    ++pos_;
  }

  void expect_end() {
    skip_space();
    if (!at_end()) throw SyntaxError(pos_, "unexpected trailing input" + found());
  }

  std::string found() const {
    if (at_end()) return ", found end of input";
    return std::string(", found '") + peek() + "'";
  }

  static bool starts_atom(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '[' || c == '(';
  }

  Word word() {
    skip_space();
    if (peek() == '1') {
      ++pos_;
      return Word{};
    }
    Word w;
    while (true) {
      skip_space();
      if (!starts_atom(peek())) break;
      w.factors.push_back(factor());
    }
    if (w.factors.empty()) throw SyntaxError(pos_, "expected a factor or '1'" + found());
    return w;
  }

  Factor factor() {
    Factor f;
    const char c = peek();
    if (c == '[') {
      ++pos_;
      f.kind = Factor::Kind::Commutator;
      f.operands.push_back(word());
      expect(',');
      f.operands.push_back(word());
      expect(']');
    } else if (c == '(') {
      ++pos_;
      f.kind = Factor::Kind::Group;
      f.operands.push_back(word());
      expect(')');
    } else {
      f.kind = Factor::Kind::Variable;
      const std::size_t start = pos_;
      while (!at_end() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      f.name = std::string(text_.substr(start, pos_ - start));
    }
    skip_space();
    if (peek() == '^') {
      ++pos_;
      f.exponent = integer();
    }
    return f;
  }

  std::int64_t integer() {
    skip_space();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw SyntaxError(pos_, "expected an integer exponent" + found());
    }
    const std::size_t start = pos_;
    std::uint64_t magnitude = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const auto digit = static_cast<std::uint64_t>(peek() - '0');
      if (magnitude > (static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) - digit) / 10) {
        throw SyntaxError(start, "exponent out of range");
      }
      magnitude = magnitude * 10 + digit;
      ++pos_;
    }
    const auto value = static_cast<std::int64_t>(magnitude);
    return negative ? -value : value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect_variables(const Word& w, std::vector<std::string>& out) {
  for (const Factor& f : w.factors) {
    if (f.kind == Factor::Kind::Variable) {
      if (std::find(out.begin(), out.end(), f.name) == out.end()) out.push_back(f.name);
    } else {
      for (const Word& operand : f.operands) collect_variables(operand, out);
    }
  }
}

void append(std::string& out, const Word& w) {
  if (w.is_identity()) {
    out += '1';
    return;
  }
  for (std::size_t i = 0; i < w.factors.size(); ++i) {
    const Factor& f = w.factors[i];
    if (i != 0) out += ' ';
    switch (f.kind) {
      case Factor::Kind::Variable:
        out += f.name;
        break;
      case Factor::Kind::Commutator:
        out += '[';
        append(out, f.operands[0]);
        out += ',';
        append(out, f.operands[1]);
        out += ']';
        break;
      case Factor::Kind::Group:
        out += '(';
        append(out, f.operands[0]);
        out += ')';
        break;
    }
    if (f.exponent != 1) out += '^' + std::to_string(f.exponent);
  }
}

// Variable names resolved to positions once, so the hot loop in `holds`
// indexes a value array instead of searching a map.
struct CompiledFactor {
  Factor::Kind kind;
  std::size_t variable = 0;
  std::vector<std::vector<CompiledFactor>> operands;
  std::int64_t exponent;
};
using CompiledWord = std::vector<CompiledFactor>;

CompiledWord compile(const Word& w, const std::vector<std::string>& variables) {
  CompiledWord out;
  out.reserve(w.factors.size());
  for (const Factor& f : w.factors) {
    CompiledFactor c{f.kind, 0, {}, f.exponent};
    if (f.kind == Factor::Kind::Variable) {
      c.variable = static_cast<std::size_t>(
          std::find(variables.begin(), variables.end(), f.name) - variables.begin());
    } else {
      for (const Word& operand : f.operands) c.operands.push_back(compile(operand, variables));
    }
    out.push_back(std::move(c));
  }
  return out;
}

Element evaluate(const FiniteGroup& g, const CompiledWord& w, const std::vector<Element>& values) {
  Element result = kIdentity;
  for (const CompiledFactor& f : w) {
    Element base = kIdentity;
    switch (f.kind) {
      case Factor::Kind::Variable:
        base = values[f.variable];
        break;
      case Factor::Kind::Commutator: {
        const Element u = evaluate(g, f.operands[0], values);
        const Element v = evaluate(g, f.operands[1], values);
        base = g.mul(g.mul(g.inverse(u), g.inverse(v)), g.mul(u, v));
        break;
      }
      case Factor::Kind::Group:
        base = evaluate(g, f.operands[0], values);
        break;
    }
    result = g.mul(result, power(g, base, f.exponent));
  }
  return result;
}

void check_elements(const FiniteGroup& g, const std::vector<Element>& values) {
  for (Element v : values) {
    if (v >= g.order()) {
      throw Error(ErrorKind::InvalidArgument, "element " + std::to_string(v) +
                                                  " outside a group of order " +
                                                  std::to_string(g.order()));
    }
  }
}

}  // namespace

Law parse_law(std::string_view text) {
  Law law = Parser(text).law();
  collect_variables(law.lhs, law.variables);
  collect_variables(law.rhs, law.variables);
  return law;
}

Word parse_word(std::string_view text) { return Parser(text).single_word(); }

std::string to_string(const Word& w) {
  std::string out;
  append(out, w);
  return out;
}

std::string to_string(const Law& law) { return to_string(law.lhs) + "=" + to_string(law.rhs); }

Element eval_word(const FiniteGroup& g, const Word& w, const Assignment& assignment) {
  std::vector<std::string> variables;
  collect_variables(w, variables);
  std::vector<Element> values;
  values.reserve(variables.size());
  for (const auto& name : variables) {
    const auto it = assignment.find(name);
    if (it == assignment.end()) throw Error(ErrorKind::UnboundVariable, "variable '" + name + "'");
    values.push_back(it->second);
  }
  check_elements(g, values);
  return evaluate(g, compile(w, variables), values);
}

bool law_holds_at(const FiniteGroup& g, const Law& law, const std::vector<Element>& values) {
  if (values.size() != law.variables.size()) {
    throw Error(ErrorKind::UnboundVariable, "expected " + std::to_string(law.variables.size()) +
                                                " values, got " + std::to_string(values.size()));
  }
  check_elements(g, values);
  return evaluate(g, compile(law.lhs, law.variables), values) ==
         evaluate(g, compile(law.rhs, law.variables), values);
}

LawCheck holds(const FiniteGroup& g, const Law& law, const Limits& limits) {
  const std::size_t k = law.variables.size();
  const std::size_t n = g.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > limits.law_budget / n) {
      throw Error(ErrorKind::BudgetExceeded,
                  std::to_string(n) + "^" + std::to_string(k) + " assignments exceed budget " +
                      std::to_string(limits.law_budget));
    }
    total *= n;
  }
  const CompiledWord lhs = compile(law.lhs, law.variables);
  const CompiledWord rhs = compile(law.rhs, law.variables);

  // Odometer over assignments, last variable fastest: lexicographic order.
  std::vector<Element> values(k, kIdentity);
  while (true) {
    if (evaluate(g, lhs, values) != evaluate(g, rhs, values)) return {false, values};
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++values[i] < n) break;
      values[i] = kIdentity;
      if (i == 0) return {};
    }
    if (k == 0) return {};
  }
}

Law power_commutator_law(std::int64_t m) {
  return parse_law("[x^" + std::to_string(m) + ",y^" + std::to_string(m) + "]=1");
}

}  // namespace powcom
