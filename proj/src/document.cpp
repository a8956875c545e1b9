#include "gideal/document.hpp"

#include <cctype>
#include <charconv>
#include <set>

namespace gideal {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what), line_(line), column_(column) {}

IdealDocument::IdealDocument(std::vector<std::string> vars, std::vector<NamedIdeal> ideals)
    : vars_(std::move(vars)), ideals_(std::move(ideals)) {
  if (vars_.empty()) throw PreconditionError("a ring needs at least one variable");
  std::set<std::string> seen(vars_.begin(), vars_.end());
  if (seen.size() != vars_.size()) throw PreconditionError("variable names must be distinct");
  for (const auto& ni : ideals_)
    if (ni.ideal.nvars() != vars_.size()) throw AmbientMismatch("ideal " + ni.name + " lives in another ring");
}

const MonomialIdeal& IdealDocument::ideal(std::string_view name) const {
  for (const auto& ni : ideals_)
    if (ni.name == name) return ni.ideal;
  throw Error("no ideal named " + std::string(name));
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
  }

  std::string identifier() {
    skip_space();
    const auto [line, col] = position();
    if (pos_ >= text_.size() || !(std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      throw ParseError("expected a name" + found(), line, col);
    std::string out;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      out += advance();
    return out;
  }

  void keyword(std::string_view word) {
    const auto [line, col] = position_after_space();
    if (identifier() != word) throw ParseError("expected '" + std::string(word) + "'", line, col);
  }

  std::int64_t integer() {
    skip_space();
    const auto [line, col] = position();
    const auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
    std::int64_t value = 0;
    const auto digits = text_.substr(start, pos_ - start);
    const auto res = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty()) throw ParseError("expected a non-negative integer" + found(), line, col);
    if (res.ec != std::errc()) throw ParseError("integer out of range", line, col);
    return value;
  }

  std::pair<std::size_t, std::size_t> position_after_space() {
    skip_space();
    return position();
  }

  [[noreturn]] void fail(const std::string& what) {
    const auto [line, col] = position_after_space();
    throw ParseError(what, line, col);
  }

 private:
  std::pair<std::size_t, std::size_t> position() const { return {line_, col_}; }

  std::string found() {
    skip_space();
    if (pos_ >= text_.size()) return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

std::size_t var_index(const std::vector<std::string>& names, const std::string& name) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  return names.size();
}

Monomial parse_monomial(Scanner& in, const std::vector<std::string>& names) {
  const std::size_t n = names.size();
  std::vector<std::int64_t> exps(n, 0);
  if (std::isdigit(static_cast<unsigned char>(in.peek()))) {
    const auto [line, col] = in.position_after_space();
    if (in.integer() != 1) throw ParseError("the only numeric monomial is 1", line, col);
    return Monomial(std::move(exps));
  }
  do {
    const auto [line, col] = in.position_after_space();
    const auto name = in.identifier();
    const auto i = var_index(names, name);
    if (i == n) throw ParseError("unknown variable " + name, line, col);
    std::int64_t e = 1;
    if (in.accept('^')) e = in.integer();
    exps[i] = checked::add(exps[i], e);
  } while (in.accept('*'));
  return Monomial(std::move(exps));
}

MonomialIdeal parse_generators(Scanner& in, const std::vector<std::string>& names) {
  if (in.peek() == '0') {
    in.integer();
    return MonomialIdeal::zero(names.size());
  }
  std::vector<Monomial> gens;
  do {
    gens.push_back(parse_monomial(in, names));
  } while (in.accept(','));
  return MonomialIdeal(names.size(), std::move(gens));
}

}  // namespace

IdealDocument parse_document(std::string_view text) {
  Scanner in(text);
  in.keyword("ring");
  const auto [nline, ncol] = in.position_after_space();
  const auto n = in.integer();
  in.keyword("vars");
  std::vector<std::string> vars;
  do {
    const auto [line, col] = in.position_after_space();
    auto name = in.identifier();
    if (var_index(vars, name) != vars.size()) throw ParseError("duplicate variable " + name, line, col);
    vars.push_back(std::move(name));
  } while (in.accept(','));
  if (static_cast<std::int64_t>(vars.size()) != n)
    throw ParseError("ring declares " + std::to_string(n) + " variables but names " + std::to_string(vars.size()),
                     nline, ncol);
  in.expect(';');

  std::vector<NamedIdeal> ideals;
  do {
    in.keyword("ideal");
    const auto [line, col] = in.position_after_space();
    auto name = in.identifier();
    for (const auto& ni : ideals)
      if (ni.name == name) throw ParseError("duplicate ideal " + name, line, col);
    in.expect('=');
    auto ideal = parse_generators(in, vars);
    in.expect(';');
    ideals.push_back({std::move(name), std::move(ideal)});
  } while (!in.at_end());
  return IdealDocument(std::move(vars), std::move(ideals));
}

std::string format_document(const IdealDocument& doc) {
  std::string out = "ring " + std::to_string(doc.nvars()) + " vars ";
  for (std::size_t i = 0; i < doc.nvars(); ++i) out += (i ? "," : "") + doc.vars()[i];
  out += ";\n";
  for (const auto& ni : doc.ideals()) {
    out += "ideal " + ni.name + " = ";
    if (ni.ideal.is_zero()) out += "0";
    for (std::size_t i = 0; i < ni.ideal.mu(); ++i)
      out += (i ? ", " : "") + to_string(ni.ideal.generators()[i], doc.vars());
    out += ";\n";
  }
  return out;
}

MonomialIdeal parse_ideal(std::string_view generators, const std::vector<std::string>& names) {
  Scanner in(generators);
  auto ideal = parse_generators(in, names);
  if (!in.at_end()) in.fail("unexpected trailing input");
  return ideal;
}

}  // namespace gideal
