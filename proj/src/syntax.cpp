#include "nomrw/syntax.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "nomrw/errors.hpp"

namespace nomrw {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(std::string_view text, const Signature* sig, std::size_t line = 1, std::size_t col0 = 1)
      : text_(text), sig_(sig), line_(line), col0_(col0) {}

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    // Multi-line input: count newlines up to `at`.
    std::size_t line = line_, col = col0_;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'" + found());
  }
  std::string found() {
    skip_ws();
    if (pos_ >= text_.size()) return " but reached end of input";
    return std::string(" but found '") + text_[pos_] + "'";
  }
  void finish() {
    if (!at_end()) fail("unexpected trailing input");
  }
  std::size_t pos() const { return pos_; }

  /// Identifier, or empty when none starts here.
  std::string_view ident() {
    skip_ws();
    if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) return {};
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }
  /// Looks ahead at an identifier without consuming it.
  std::string_view peek_ident() {
    std::size_t saved = pos_;
    std::string_view id = ident();
    pos_ = saved;
    return id;
  }
  std::string_view keyword_ident(std::string_view what) {
    std::string_view id = ident();
    if (id.empty()) fail("expected " + std::string(what) + found());
    return id;
  }
  /// Names of rules and terms also allow '-'.
  std::string_view label() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (is_ident_char(text_[pos_]) || text_[pos_] == '-')) ++pos_;
    if (pos_ == start) fail("expected a name" + found());
    return text_.substr(start, pos_ - start);
  }
  std::size_t number() {
    skip_ws();
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{}) fail("expected a number" + found());
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  Atom atom_name() {
    std::size_t at = (skip_ws(), pos_);
    std::string_view id = ident();
    if (id.empty()) fail("expected an atom" + found());
    if (is_upper(id.front())) fail("'" + std::string(id) + "' is an unknown; atoms start lowercase", at);
    if (sig_ != nullptr && sig_->contains(Symbol(id))) fail("'" + std::string(id) + "' is a function symbol, not an atom", at);
    return Atom(id);
  }

  VarName var_name() {
    std::size_t at = (skip_ws(), pos_);
    std::string_view id = ident();
    if (id.empty()) fail("expected an unknown" + found());
    if (!is_upper(id.front())) fail("'" + std::string(id) + "' is not an unknown; unknowns start uppercase", at);
    return VarName(id);
  }

  /// `id` or one or more cycles. Cycles compose right-to-left.
  Perm perm() {
    if (peek() != '(') {
      std::size_t at = pos_;
      if (ident() == "id") return Perm{};
      fail("expected a permutation", at);
    }
    std::vector<Perm::Cycle> cycles;
    while (peek() == '(') {
      std::size_t at = pos_;
      expect("(");
      Perm::Cycle cycle;
      while (peek() != ')') {
        if (at_end()) fail("unterminated cycle", at);
        cycle.push_back(atom_name());
      }
      expect(")");
      for (std::size_t i = 0; i < cycle.size(); ++i)
        for (std::size_t j = i + 1; j < cycle.size(); ++j)
          if (cycle[i] == cycle[j]) fail("atom " + cycle[i].str() + " repeats in a cycle", at);
      cycles.push_back(std::move(cycle));
    }
    return Perm::from_cycles(cycles);
  }

  Term term() {
    char c = peek();
    if (c == '[') {
      expect("[");
      Atom a = atom_name();
      expect("]");
      return Term::abs(a, term());
    }
    if (c == '(') {
      Perm p = perm();
      expect(".");
      return Term::suspension(std::move(p), var_name());
    }
    std::size_t at = pos_;
    std::string_view id = ident();
    if (id.empty()) fail("expected a term" + found());
    if (is_upper(id.front())) return Term::var(VarName(id));
    if (id == "id" && peek() == '.') {
      expect(".");
      return Term::var(var_name());
    }
    const SymbolInfo* info = sig_ != nullptr ? sig_->find(Symbol(id)) : nullptr;
    if (peek() == '(') {
      if (info == nullptr) fail("unknown function symbol '" + std::string(id) + "'", at);
      expect("(");
      std::vector<Term> args;
      if (peek() != ')') {
        args.push_back(term());
        while (accept(",")) args.push_back(term());
      }
      expect(")");
      if (args.size() != info->arity)
        fail("symbol " + std::string(id) + " expects " + std::to_string(info->arity) + " argument(s), got " +
                 std::to_string(args.size()),
             at);
      return Term::app(Symbol(id), std::move(args));
    }
    if (info != nullptr) {
      if (info->arity != 0)
        fail("symbol " + std::string(id) + " expects " + std::to_string(info->arity) + " argument(s), got 0", at);
      return Term::app(Symbol(id));
    }
    return Term::atom(Atom(id));
  }

  /// `[a#X, b#Y]`, possibly empty.
  FreshnessContext context() {
    FreshnessContext ctx;
    expect("[");
    if (accept("]")) return ctx;
    do {
      Atom a = atom_name();
      expect("#");
      ctx.insert(a, var_name());
    } while (accept(","));
    expect("]");
    return ctx;
  }

  std::vector<Atom> atom_list() {
    std::vector<Atom> out;
    while (!at_end()) {
      out.push_back(atom_name());
      accept(",");
    }
    return out;
  }

 private:
  std::string_view text_;
  const Signature* sig_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t pos_ = 0;
};

QuantifiedFixpoint fixpoint_from(Parser& in, const Signature& sig) {
  std::vector<Atom> quantified;
  std::size_t at = (in.skip_ws(), in.pos());
  if (in.peek_ident() == "new") {
    in.ident();
    while (in.peek_ident() != "in") {
      if (in.at_end()) in.fail("expected 'in'");
      quantified.push_back(in.atom_name());
    }
    in.ident();
  }
  Perm p = in.perm();
  if (in.ident() != "fix") in.fail("expected 'fix'");
  Term t = in.term();
  in.finish();
  check_well_formed(t, sig);
  try {
    return QuantifiedFixpoint(std::move(quantified), std::move(p), std::move(t));
  } catch (const std::invalid_argument& e) {
    in.fail(e.what(), at);
  }
}

void print_into(std::string& out, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Atom:
      out += t.atom().str();
      return;
    case Term::Kind::Suspension:
      if (!t.perm().is_identity()) {
        out += to_string(t.perm());
        out += '.';
      }
      out += t.var().str();
      return;
    case Term::Kind::Abs:
      out += '[';
      out += t.atom().str();
      out += ']';
      print_into(out, t.body());
      return;
    case Term::Kind::App:
      out += t.symbol().str();
      if (t.args().empty()) return;
      out += '(';
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i > 0) out += ", ";
        print_into(out, t.args()[i]);
      }
      out += ')';
      return;
  }
}

void parse_line(ProblemFile& pf, std::string_view line, std::size_t line_no) {
  Parser in(line, &pf.sig, line_no);
  std::size_t at = (in.skip_ws(), in.pos());
  std::string_view kw = in.keyword_ident("a declaration");
  if (kw == "sig") {
    std::size_t name_at = (in.skip_ws(), in.pos());
    std::string_view name = in.keyword_ident("a symbol name");
    if (is_upper(name.front())) in.fail("symbol names start lowercase", name_at);
    std::size_t arity = in.number();
    bool comm = false;
    if (!in.at_end()) {
      if (in.ident() != "comm") in.fail("expected 'comm' or end of line");
      comm = true;
    }
    in.finish();
    try {
      pf.sig.declare(Symbol(name), arity, comm);
    } catch (const SignatureError& e) {
      in.fail(e.what(), name_at);
    }
    return;
  }
  auto declared_symbol = [&] {
    std::size_t name_at = (in.skip_ws(), in.pos());
    std::string_view name = in.keyword_ident("a symbol name");
    if (!pf.sig.contains(Symbol(name))) in.fail("undeclared symbol '" + std::string(name) + "'", name_at);
    return Symbol(name);
  };
  if (kw == "prec") {
    Symbol prev = declared_symbol();
    pf.prec.mention(prev);
    while (in.accept(">")) {
      std::size_t next_at = (in.skip_ws(), in.pos());
      Symbol next = declared_symbol();
      try {
        pf.prec.add(prev, next);
      } catch (const ConfigError& e) {
        in.fail(e.what(), next_at);
      }
      prev = next;
    }
    in.finish();
    return;
  }
  if (kw == "status") {
    Symbol f = declared_symbol();
    std::string_view st = in.ident();
    if (st != "mul" && st != "lex") in.fail("expected 'mul' or 'lex'");
    in.finish();
    pf.status[f] = st == "mul" ? Status::Mul : Status::Lex;
    return;
  }
  if (kw == "rule") {
    std::string name(in.label());
    in.expect(":");
    FreshnessContext ctx;
    if (line.find("|-") != std::string_view::npos) {
      ctx = in.context();
      in.expect("|-");
    }
    Term lhs = in.term();
    in.expect("->");
    Term rhs = in.term();
    in.finish();
    RewriteRule rule{std::move(name), std::move(ctx), std::move(lhs), std::move(rhs)};
    for (const auto& existing : pf.rules)
      if (existing.name == rule.name) in.fail("duplicate rule name '" + rule.name + "'", at);
    try {
      validate_rule(rule, pf.sig);
    } catch (const std::invalid_argument& e) {
      in.fail(e.what(), at);
    }
    pf.rules.push_back(std::move(rule));
    return;
  }
  if (kw == "term") {
    std::string name(in.label());
    in.expect("=");
    Term t = in.term();
    in.finish();
    if (pf.find_term(name) != nullptr) in.fail("duplicate term name '" + name + "'", at);
    pf.terms.emplace_back(std::move(name), std::move(t));
    return;
  }
  in.fail("unknown declaration '" + std::string(kw) + "'", at);
}

}  // namespace

Term parse_term(std::string_view input, const Signature& sig) {
  Parser in(input, &sig);
  Term t = in.term();
  in.finish();
  return t;
}

Perm parse_perm(std::string_view input) {
  Parser in(input, nullptr);
  Perm p = in.perm();
  in.finish();
  return p;
}

FreshnessContext parse_context(std::string_view input) {
  Parser in(input, nullptr);
  FreshnessContext ctx = in.context();
  in.finish();
  return ctx;
}

std::vector<Atom> parse_atom_list(std::string_view input) {
  Parser in(input, nullptr);
  return in.atom_list();
}

QuantifiedFixpoint parse_fixpoint(std::string_view input, const Signature& sig) {
  Parser in(input, &sig);
  return fixpoint_from(in, sig);
}

std::string print_term(const Term& t) {
  std::string out;
  print_into(out, t);
  return out;
}

std::string print_perm(const Perm& p) { return to_string(p); }

std::string print_context(const FreshnessContext& ctx) {
  std::ostringstream out;
  out << '[';
  bool first = true;
  for (const FreshConstraint& c : ctx) {
    if (!first) out << ", ";
    first = false;
    out << c.atom << '#' << c.var;
  }
  out << ']';
  return out.str();
}

std::string print_subst(const Substitution& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [x, t] : s) {
    if (!first) out << ", ";
    first = false;
    out << x << " := " << print_term(t);
  }
  out << '}';
  return out.str();
}

std::string print_position(const Position& pos) {
  if (pos.empty()) return "root";
  std::ostringstream out;
  for (std::size_t i = 0; i < pos.size(); ++i) out << (i > 0 ? "." : "") << pos[i];
  return out.str();
}

const Term* ProblemFile::find_term(std::string_view name) const {
  for (const auto& [n, t] : terms)
    if (n == name) return &t;
  return nullptr;
}

ProblemFile parse_problem(std::string_view text) {
  ProblemFile pf;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    if (line.back() == '\r') line.remove_suffix(1);
    parse_line(pf, line, line_no);
  }
  return pf;
}

ProblemFile load_problem(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

}  // namespace nomrw
