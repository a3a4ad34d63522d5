#include "mvarg/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "mvarg/errors.hpp"

namespace mvarg {

namespace {

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> words{
      "check", "degree", "prob",  "given",   "list_labellings", "and",  "or",
      "not",   "implies", "true", "false",   "T",               "label", "arg",
      "edge",  "phi",     "sigmoid", "step", "table"};
  return words;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool valid_identifier(const std::string& s) {
  if (s.empty() || !ident_start(s[0])) return false;
  return std::all_of(s.begin(), s.end(), ident_char);
}

std::string strip_comment(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
  return line;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double_field(const std::string& text, int line_no) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ParseError(Errc::SyntaxError, line_no, 1, "malformed number '" + text + "'");
  return value;
}

struct Token {
  enum class Type { Name, Number, Sym, End };
  Type type;
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    int col = static_cast<int>(i) + 1;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({Token::Type::Name, line.substr(i, j - i), col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      if (j < line.size() && line[j] == '.') {
        ++j;
        while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      }
      if (j < line.size() && line[j] == '/') {
        ++j;
        while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      }
      out.push_back({Token::Type::Number, line.substr(i, j - i), col});
      i = j;
    } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({Token::Type::Sym, "->", col});
      i += 2;
    } else if ((c == '>' || c == '<') && i + 1 < line.size() && line[i + 1] == '=') {
      out.push_back({Token::Type::Sym, std::string(1, c) + "=", col});
      i += 2;
    } else if (c == '(' || c == ')' || c == '~' || c == '&' || c == '|') {
      out.push_back({Token::Type::Sym, std::string(1, c), col});
      ++i;
    } else {
      throw ParseError(Errc::SyntaxError, line_no, col,
                       std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::Type::End, "", static_cast<int>(line.size()) + 1});
  return out;
}

/// Recursive descent over one tokenized line. The formula and query layers
/// share the token stream; a formula simply stops at any token it cannot
/// extend through, which is how `and`, `given` and `)` hand control back.
class LineParser {
 public:
  LineParser(std::vector<Token> toks, int line_no, const WeightedGraph& graph, int n)
      : toks_(std::move(toks)), line_(line_no), graph_(graph), n_(n) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at_end() const { return peek().type == Token::Type::End; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(Errc::SyntaxError, line_, peek().column, message);
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input '" + peek().text + "'");
  }

  bool accept_sym(const char* s) {
    if (peek().type == Token::Type::Sym && peek().text == s) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_name(const char* s) {
    if (peek().type == Token::Type::Name && peek().text == s) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_sym(const char* s) {
    if (!accept_sym(s)) fail(std::string("expected '") + s + "'");
  }

  FormulaPtr formula() { return formula_impl(); }

  Query::Ptr query() { return query_implies(); }

 private:
  FormulaPtr formula_impl() {
    FormulaPtr lhs = formula_or();
    if (accept_sym("->")) return Formula::impl(std::move(lhs), formula_impl());
    return lhs;
  }

  FormulaPtr formula_or() {
    FormulaPtr f = formula_and();
    while (accept_sym("|")) f = Formula::disj(std::move(f), formula_and());
    return f;
  }

  FormulaPtr formula_and() {
    FormulaPtr f = formula_unary();
    while (accept_sym("&")) f = Formula::conj(std::move(f), formula_unary());
    return f;
  }

  FormulaPtr formula_unary() {
    if (accept_sym("~")) return Formula::neg(formula_unary());
    return formula_atom();
  }

  bool next_is_open_paren() const {
    return toks_[pos_ + 1].type == Token::Type::Sym && toks_[pos_ + 1].text == "(";
  }

  FormulaPtr formula_atom() {
    const Token& t = peek();
    if (t.type == Token::Type::Sym && t.text == "(") {
      ++pos_;
      FormulaPtr f = formula_impl();
      expect_sym(")");
      return f;
    }
    if (t.type == Token::Type::Name) {
      if (t.text == "true") {
        ++pos_;
        return Formula::top();
      }
      if (t.text == "false") {
        ++pos_;
        return Formula::bot();
      }
      if (t.text == "T" && next_is_open_paren()) {
        pos_ += 2;
        FormulaPtr inner = formula_impl();
        expect_sym(")");
        try {
          return Formula::typ(std::move(inner));
        } catch (const Error& e) {
          throw ParseError(e.code(), line_, t.column, "T may not nest inside T");
        }
      }
      if (t.text == "label" && next_is_open_paren()) {
        pos_ += 2;
        const Token& idx = peek();
        if (idx.type != Token::Type::Number ||
            idx.text.find_first_of("./") != std::string::npos)
          fail("label(...) expects a nonnegative integer index");
        int value = 0;
        auto [ptr, ec] = std::from_chars(idx.text.data(), idx.text.data() + idx.text.size(), value);
        if (ec != std::errc{} || ptr != idx.text.data() + idx.text.size())
          fail("label index out of range");
        ++pos_;
        expect_sym(")");
        return Formula::label_atom(value);
      }
      if (reserved_words().count(t.text))
        fail("'" + t.text + "' is a keyword, not an argument");
      graph_.index_of(t.text);  // throws UnknownArgument
      ++pos_;
      return Formula::arg(t.text);
    }
    fail("expected a formula");
  }

  Query::Ptr query_implies() {
    Query::Ptr lhs = query_or();
    if (accept_name("implies")) return Query::implication(std::move(lhs), query_implies());
    return lhs;
  }

  Query::Ptr query_or() {
    Query::Ptr q = query_and();
    while (accept_name("or")) q = Query::disjunction(std::move(q), query_and());
    return q;
  }

  Query::Ptr query_and() {
    Query::Ptr q = query_unary();
    while (accept_name("and")) q = Query::conjunction(std::move(q), query_unary());
    return q;
  }

  Query::Ptr query_unary() {
    if (accept_name("not")) return Query::negation(query_unary());
    return query_atom();
  }

  Query::Ptr query_atom() {
    // '(' may open a grouped query or the formula of a graded leaf. Try the
    // query reading first; it can only succeed when a bound comparison sits
    // inside, which a formula can never contain.
    if (peek().type == Token::Type::Sym && peek().text == "(") {
      std::size_t saved = pos_;
      ++pos_;
      try {
        Query::Ptr q = query_implies();
        expect_sym(")");
        return q;
      } catch (const Error&) {
        pos_ = saved;
      }
    }
    return query_leaf();
  }

  Query::Ptr query_leaf() {
    const Token& start = peek();
    FormulaPtr f = formula();
    GradedImplication g;
    if (accept_sym(">="))
      g.bound_kind = GradedImplication::Bound::AtLeast;
    else if (accept_sym("<="))
      g.bound_kind = GradedImplication::Bound::AtMost;
    else
      fail("expected '>=' or '<=' after the implication");
    const Token& b = peek();
    if (b.type != Token::Type::Number) fail("expected a degree bound");
    int numerator = 0;
    try {
      numerator = parse_bound_numerator(b.text, n_);
    } catch (const Error& e) {
      throw ParseError(e.code(), line_, b.column, e.what());
    }
    ++pos_;
    if (f->kind() != Formula::Kind::Impl)
      throw ParseError(Errc::SyntaxError, line_, start.column,
                       "a graded statement needs a top-level '->'");
    g.antecedent = f->lhs();
    g.consequent = f->rhs();
    g.bound = TruthDegree(numerator, n_);
    return Query::leaf(std::move(g));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
  const WeightedGraph& graph_;
  int n_;
};

std::string phi_text(const PhiFunction& fn, int n) {
  if (std::holds_alternative<SigmoidNearest>(fn)) return "sigmoid";
  if (const auto* step = std::get_if<StepThreshold>(&fn))
    return "step " + format_double(step->threshold);
  const auto& table = std::get<ExplicitTable>(fn);
  std::string out = "table";
  for (const auto& s : table.steps)
    out += " " + format_double(s.x) + ":" + degree_str(s.value, n);
  return out;
}

PhiFunction parse_phi_function(std::istringstream& fields, int line_no, int n) {
  std::string kind;
  if (!(fields >> kind))
    throw ParseError(Errc::SyntaxError, line_no, 1, "phi needs a function");
  if (kind == "sigmoid") return SigmoidNearest{};
  if (kind == "step") {
    std::string t;
    if (!(fields >> t))
      throw ParseError(Errc::SyntaxError, line_no, 1, "step needs a threshold");
    return StepThreshold{parse_double_field(t, line_no)};
  }
  if (kind == "table") {
    ExplicitTable table;
    std::string pair;
    while (fields >> pair) {
      auto colon = pair.find(':');
      if (colon == std::string::npos || colon == 0 || colon + 1 >= pair.size())
        throw ParseError(Errc::SyntaxError, line_no, 1,
                         "table entries look like <x>:<degree>");
      double x = parse_double_field(pair.substr(0, colon), line_no);
      int value = 0;
      try {
        value = parse_bound_numerator(pair.substr(colon + 1), n);
      } catch (const Error& e) {
        throw ParseError(e.code(), line_no, 1, e.what());
      }
      table.steps.push_back({x, value});
    }
    if (table.steps.empty())
      throw ParseError(Errc::SyntaxError, line_no, 1, "table needs at least one entry");
    return table;
  }
  throw ParseError(Errc::SyntaxError, line_no, 1, "unknown phi function '" + kind + "'");
}

}  // namespace

GraphFile parse_graph(const std::string& text, int n) {
  std::vector<std::string> args;
  std::vector<EdgeSpec> edges;
  std::map<std::string, PhiFunction> overrides;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string directive;
    fields >> directive;
    if (directive == "arg") {
      std::string name;
      if (!(fields >> name))
        throw ParseError(Errc::SyntaxError, line_no, 1, "arg needs a name");
      if (!valid_identifier(name) || reserved_words().count(name))
        throw ParseError(Errc::SyntaxError, line_no, 1,
                         "'" + name + "' is not usable as an argument name");
      std::string extra;
      if (fields >> extra)
        throw ParseError(Errc::SyntaxError, line_no, 1, "trailing text after arg");
      args.push_back(name);
    } else if (directive == "edge") {
      std::string src, dst, w;
      if (!(fields >> src >> dst >> w))
        throw ParseError(Errc::SyntaxError, line_no, 1,
                         "edge needs `<source> <target> <weight>`");
      std::string extra;
      if (fields >> extra)
        throw ParseError(Errc::SyntaxError, line_no, 1, "trailing text after edge");
      edges.push_back({src, dst, parse_double_field(w, line_no)});
    } else if (directive == "phi") {
      std::string arg;
      if (!(fields >> arg))
        throw ParseError(Errc::SyntaxError, line_no, 1, "phi needs an argument name");
      if (overrides.count(arg))
        throw ParseError(Errc::SyntaxError, line_no, 1,
                         "duplicate phi for argument '" + arg + "'");
      PhiFunction fn = parse_phi_function(fields, line_no, n);
      try {
        validate_phi(fn, n);
      } catch (const Error& e) {
        throw ParseError(e.code(), line_no, 1, e.what());
      }
      overrides.emplace(arg, std::move(fn));
    } else {
      throw ParseError(Errc::SyntaxError, line_no, 1,
                       "unknown directive '" + directive + "'");
    }
  }

  GraphFile result{WeightedGraph(std::move(args), edges), std::move(overrides)};
  for (const auto& [arg, fn] : result.phi_overrides) {
    (void)fn;
    result.graph.index_of(arg);  // throws UnknownArgument
  }
  return result;
}

std::string serialize_graph(const WeightedGraph& graph,
                            const std::map<std::string, PhiFunction>& phi_overrides, int n) {
  std::string out;
  for (const auto& name : graph.arguments()) out += "arg " + name + "\n";
  for (const auto& e : graph.edges())
    out += "edge " + graph.name(e.source) + " " + graph.name(e.target) + " " +
           format_double(e.weight) + "\n";
  for (const auto& [arg, fn] : phi_overrides)
    out += "phi " + arg + " " + phi_text(fn, n) + "\n";
  return out;
}

const std::string& statement_text(const Statement& s) {
  return std::visit([](const auto& st) -> const std::string& { return st.text; }, s);
}

std::vector<Statement> parse_queries(const std::string& text, const WeightedGraph& graph,
                                     int n) {
  std::vector<Statement> out;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    LineParser p(tokenize(line, line_no), line_no, graph, n);
    if (p.accept_name("check")) {
      Query::Ptr q = p.query();
      p.expect_end();
      out.push_back(CheckStatement{std::move(q), line});
    } else if (p.accept_name("degree")) {
      FormulaPtr f = p.formula();
      p.expect_end();
      if (f->kind() != Formula::Kind::Impl)
        throw ParseError(Errc::SyntaxError, line_no, 1,
                         "degree expects `<formula> -> <formula>`");
      out.push_back(DegreeStatement{f->lhs(), f->rhs(), line});
    } else if (p.accept_name("prob")) {
      FormulaPtr event = p.formula();
      FormulaPtr given;
      if (p.accept_name("given")) given = p.formula();
      p.expect_end();
      out.push_back(ProbStatement{std::move(event), std::move(given), line});
    } else if (p.accept_name("list_labellings")) {
      p.expect_end();
      out.push_back(ListLabellingsStatement{line});
    } else {
      throw ParseError(Errc::SyntaxError, line_no, 1,
                       "statements start with check, degree, prob or list_labellings");
    }
  }
  return out;
}

FormulaPtr parse_formula(const std::string& text, const WeightedGraph& graph) {
  LineParser p(tokenize(text, 1), 1, graph, 1);
  FormulaPtr f = p.formula();
  p.expect_end();
  return f;
}

int parse_bound_numerator(const std::string& text, int n) {
  auto all_digits = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c));
    });
  };
  auto to_ll = [&](const std::string& s) -> long long {
    if (!all_digits(s)) throw Error(Errc::SyntaxError, "malformed degree '" + text + "'");
    if (s.size() > 9)
      throw Error(Errc::BoundOutOfRange, "degree '" + text + "' has too many digits");
    long long v = 0;
    for (char c : s) v = v * 10 + (c - '0');
    return v;
  };

  long long num = 0;
  long long den = 1;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = to_ll(text.substr(0, slash));
    den = to_ll(text.substr(slash + 1));
    if (den == 0) throw Error(Errc::BoundOutOfRange, "degree denominator is zero");
  } else if (auto dot = text.find('.'); dot != std::string::npos) {
    long long whole = to_ll(text.substr(0, dot));
    std::string frac = text.substr(dot + 1);
    long long frac_v = to_ll(frac);
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    num = whole * den + frac_v;
  } else {
    num = to_ll(text);
  }
  if (num < 0 || num > den)
    throw Error(Errc::BoundOutOfRange, "degree '" + text + "' is outside [0, 1]");
  if ((num * n) % den != 0)
    throw Error(Errc::BoundOutOfRange,
                "degree '" + text + "' is not a member of C_" + std::to_string(n));
  return static_cast<int>(num * n / den);
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace mvarg
