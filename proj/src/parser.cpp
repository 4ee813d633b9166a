#include "tticad/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tticad {

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + msg),
      line_(line),
      column_(column) {}

namespace {

class ExprParser {
 public:
  ExprParser(const std::string& s, const std::vector<std::string>& names, int line, int col0)
      : s_(s), names_(names), line_(line), col0_(col0) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  const std::string& s_;
  const std::vector<std::string>& names_;
  int line_;
  int col0_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col0_ + static_cast<int>(pos_) + 1);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial p = term();
    while (true) {
      if (accept('+')) {
        p += term();
      } else if (accept('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  Polynomial term() {
    Polynomial p = unary();
    while (true) {
      if (accept('*')) {
        p *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail("division is only allowed by nonzero constants");
        }
        p *= Rational(1) / d.constant_value();
      } else {
        return p;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      unsigned long e = std::stoul(s_.substr(start, pos_ - start));
      if (e > 1000) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string id = s_.substr(start, pos_ - start);
      auto it = std::find(names_.begin(), names_.end(), id);
      if (it == names_.end()) {
        pos_ = start;
        fail("unknown variable '" + id + "'");
      }
      return Polynomial::variable(static_cast<int>(it - names_.begin()));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Polynomial number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string whole = s_.substr(start, pos_ - start);
    std::string frac;
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      std::size_t fs = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      frac = s_.substr(fs, pos_ - fs);
    }
    if (whole.empty() && frac.empty()) fail("malformed number");
    Integer num(whole.empty() ? "0" : whole);
    Integer den = 1;
    for (char d : frac) {
      num = num * 10 + (d - '0');
      den *= 10;
    }
    Rational q(num, den);
    q.canonicalize();
    return Polynomial(q);
  }
};

struct RelOp {
  const char* text;
  Relation rel;
};

constexpr RelOp kRelOps[] = {{"==", Relation::Eq}, {"!=", Relation::Neq}, {"<=", Relation::Le},
                             {">=", Relation::Ge}, {"=", Relation::Eq},   {"<", Relation::Lt},
                             {">", Relation::Gt}};

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_names(const std::string& s, int line) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, ',')) {
    std::string n = trim(cur);
    if (n.empty()) throw ParseError("empty variable name", line, 1);
    for (char c : n) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw ParseError("invalid variable name '" + n + "'", line, 1);
    }
    if (std::find(out.begin(), out.end(), n) != out.end())
      throw ParseError("duplicate variable '" + n + "'", line, 1);
    out.push_back(n);
  }
  if (out.empty()) throw ParseError("no variables declared", line, 1);
  if (out.size() > static_cast<std::size_t>(kMaxVars))
    throw ParseError("at most " + std::to_string(kMaxVars) + " variables are supported", line, 1);
  return out;
}

RawConstraint parse_relation_at(const std::string& text, const std::vector<std::string>& names,
                                int line, int col0) {
  std::size_t at = text.find_first_of("<>=!");
  if (at == std::string::npos)
    throw ParseError("expected a relation (=, !=, <, <=, >, >=)", line, col0 + 1);
  const RelOp* op = nullptr;
  for (const auto& r : kRelOps) {
    if (text.compare(at, std::char_traits<char>::length(r.text), r.text) == 0) {
      op = &r;
      break;
    }
  }
  if (op == nullptr) throw ParseError("malformed relation", line, col0 + static_cast<int>(at) + 1);
  std::size_t len = std::char_traits<char>::length(op->text);
  std::string lhs = text.substr(0, at);
  std::string rhs = text.substr(at + len);
  if (rhs.find_first_of("<>=!") != std::string::npos)
    throw ParseError("more than one relation in a constraint", line,
                     col0 + static_cast<int>(at + len + rhs.find_first_of("<>=!")) + 1);
  Polynomial l = ExprParser(lhs, names, line, col0).parse_all();
  Polynomial r = ExprParser(rhs, names, line, col0 + static_cast<int>(at + len)).parse_all();
  return RawConstraint{l - r, op->rel};
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names,
                            int line) {
  return ExprParser(text, names, line, 0).parse_all();
}

RawConstraint parse_relation(const std::string& text, const std::vector<std::string>& names,
                             int line) {
  return parse_relation_at(text, names, line, 0);
}

Problem parse_problem(const std::string& text) {
  Problem prob;
  std::istringstream is(text);
  std::string raw;
  int line = 0;
  bool have_vars = false;
  while (std::getline(is, raw)) {
    ++line;
    std::string body = raw.substr(0, raw.find('#'));
    if (trim(body).empty()) continue;
    std::size_t colon = body.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'key: value'", line, 1);
    std::string key = trim(body.substr(0, colon));
    std::string value = body.substr(colon + 1);
    int vcol = static_cast<int>(colon + 1);
    if (key == "variables") {
      if (have_vars) throw ParseError("variables declared twice", line, 1);
      prob.variables = split_names(value, line);
      have_vars = true;
    } else if (key == "mode") {
      std::string m = trim(value);
      if (m == "tti") {
        prob.mode = Mode::Tti;
      } else if (m == "sign") {
        prob.mode = Mode::Sign;
      } else {
        throw ParseError("mode must be 'tti' or 'sign'", line, vcol + 1);
      }
    } else if (key == "order") {
      prob.order = trim(value);
    } else if (key == "system") {
      if (!have_vars) throw ParseError("system given before variables", line, 1);
      std::string v = value;
      // Normalise the separators "&&" and "and" to ','.
      for (std::size_t p; (p = v.find("&&")) != std::string::npos;) v.replace(p, 2, " ,");
      for (std::size_t p = 0; (p = v.find(" and ", p)) != std::string::npos;) v.replace(p, 5, "   , ");
      std::vector<RawConstraint> sys;
      std::size_t start = 0;
      while (start <= v.size()) {
        std::size_t end = v.find(',', start);
        if (end == std::string::npos) end = v.size();
        std::string piece = v.substr(start, end - start);
        if (!trim(piece).empty()) {
          sys.push_back(parse_relation_at(piece, prob.variables, line, vcol + static_cast<int>(start)));
        }
        start = end + 1;
      }
      prob.systems.push_back(std::move(sys));
      prob.system_text.push_back(trim(value));
    } else {
      throw ParseError("unknown key '" + key + "'", line, 1);
    }
  }
  if (!have_vars) throw ParseError("missing 'variables:' line", line == 0 ? 1 : line, 1);
  if (prob.systems.empty()) throw ParseError("no systems given", line == 0 ? 1 : line, 1);
  return prob;
}

}  // namespace tticad
