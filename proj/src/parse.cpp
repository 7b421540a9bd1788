#include "fewnomial/parse.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "json.hpp"

namespace fewnomial {

namespace {

using nlohmann::json;

[[noreturn]] void fail(std::string_view text, std::size_t pos, const std::string& expected) {
  std::string near = pos < text.size() ? "'" + std::string(1, text[pos]) + "'" : "end of input";
  throw Error(ErrorCode::ParseError, "position " + std::to_string(pos) + ": expected " + expected +
                                         ", found " + near);
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(text_, pos_, std::string("'") + c + "'");
  }
  std::size_t pos() const { return pos_; }
  [[noreturn]] void error(const std::string& expected) { fail(text_, pos_, expected); }

  static bool starts_number(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '.'; }

  /// Unsigned number: digits with optional fraction and exponent, or p/q.
  Rational number() {
    skip_space();
    const std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      digits();
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t save = pos_++;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        digits();
      else
        pos_ = save;
    }
    if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      digits();
    }
    if (pos_ == start) error("a number");
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const Error&) {
      pos_ = start;
      error("a number");
    }
  }

  /// Unsigned integer.
  long integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start || pos_ - start > 9) {
      pos_ = start;
      error("an integer exponent");
    }
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Reads `x` or `x<i>` and returns the 0-based index.
long variable(Cursor& cur, std::string_view text) {
  cur.expect('x');
  std::size_t p = cur.pos();
  std::size_t q = p;
  while (q < text.size() && std::isdigit(static_cast<unsigned char>(text[q]))) ++q;
  if (q == p) return 0;
  const long idx = cur.integer();
  if (idx < 1) fail(text, p, "a variable index of at least 1");
  return idx - 1;
}

Rational json_rational(const json& v, const std::string& field) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number_float()) return parse_rational(v.dump());
  throw Error(ErrorCode::ParseError, "field '" + field + "' must be a number");
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name))
    throw Error(ErrorCode::ParseError, std::string("missing field '") + name + "'");
  return obj.at(name);
}

}  // namespace

SparsePolynomial parse_polynomial(std::string_view text, Index num_vars) {
  Cursor cur(text);
  std::vector<std::pair<std::map<long, long>, Rational>> terms;
  long max_var = -1;
  bool first = true;
  while (!cur.done() || first) {
    Rational sign = 1;
    if (cur.accept('-')) sign = -1;
    else if (!cur.accept('+') && !first) cur.error("'+' or '-'");
    first = false;

    Rational coeff = sign;
    std::map<long, long> powers;
    do {
      const char c = cur.peek();
      if (Cursor::starts_number(c)) {
        coeff *= cur.number();
      } else if (c == 'x') {
        const long v = variable(cur, text);
        long e = 1;
        if (cur.accept('^')) {
          if (cur.peek() == '-') cur.error("a nonnegative exponent");
          e = cur.integer();
        }
        powers[v] += e;
        max_var = std::max(max_var, v);
      } else {
        cur.error("a number or a variable");
      }
    } while (cur.accept('*'));
    terms.push_back({std::move(powers), coeff});
  }

  const Index n = num_vars > 0 ? num_vars : std::max<Index>(1, max_var + 1);
  if (max_var >= n)
    throw Error(ErrorCode::ParseError, "variable x" + std::to_string(max_var + 1) +
                                           " exceeds the variable count " + std::to_string(n));
  SparsePolynomial p(n);
  for (const auto& [powers, c] : terms) {
    Exponent e(static_cast<std::size_t>(n), 0);
    for (const auto& [v, k] : powers) e[static_cast<std::size_t>(v)] = k;
    p.add_term(e, c);
  }
  return p;
}

std::string format_polynomial(const SparsePolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational a = negative ? Rational(-c) : c;
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) out += to_string(a);
    else if (a == 1) out += mono;
    else out += to_string(a) + "*" + mono;
  }
  return out;
}

KSum parse_ksum(std::string_view text) {
  Cursor cur(text);
  std::vector<Term> terms;
  bool first = true;
  while (!cur.done() || first) {
    Rational sign = 1;
    if (cur.accept('-')) sign = -1;
    else if (!cur.accept('+') && !first) cur.error("'+' or '-'");
    first = false;

    Rational coeff = sign, exponent = 0;
    bool have_x = false;
    if (Cursor::starts_number(cur.peek())) {
      coeff *= cur.number();
      if (cur.accept('*')) have_x = true;
    } else {
      have_x = true;
    }
    if (have_x) {
      cur.expect('x');
      exponent = 1;
      if (cur.accept('^')) {
        const bool paren = cur.accept('(');
        Rational s = 1;
        if (cur.accept('-')) s = -1;
        else cur.accept('+');
        exponent = s * cur.number();
        if (paren) cur.expect(')');
      }
    }
    terms.push_back({exponent, coeff});
  }
  return KSum(std::move(terms));
}

std::string format_ksum(const KSum& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto& t = f.terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    const bool negative = it->coefficient < 0;
    const Rational a = negative ? Rational(-it->coefficient) : it->coefficient;
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (it->exponent == 0) {
      out += to_string(a);
      continue;
    }
    if (a != 1) out += to_string(a) + "*";
    out += "x";
    if (it->exponent != 1) {
      const std::string e = to_string(it->exponent);
      out += is_integer(it->exponent) ? "^" + e : "^(" + e + ")";
    }
  }
  return out;
}

RationalMatrix parse_rational_matrix(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::string row;
  auto flush = [&] {
    for (char& ch : row)
      if (ch == ',') ch = ' ';
    std::vector<Rational> r;
    std::istringstream in(row);
    std::string cell;
    while (in >> cell) r.push_back(parse_rational(cell));
    if (!r.empty()) rows.push_back(std::move(r));
    row.clear();
  };
  for (char c : text) {
    if (c == ';' || c == '\n') flush();
    else row += c;
  }
  flush();
  if (rows.empty()) throw Error(ErrorCode::ParseError, "empty matrix");
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) throw Error(ErrorCode::ParseError, "matrix rows have different lengths");
  RationalMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
  return m;
}

IntMatrix parse_matrix(std::string_view text) {
  const RationalMatrix q = parse_rational_matrix(text);
  IntMatrix m(q.rows(), q.cols());
  for (Index i = 0; i < q.rows(); ++i)
    for (Index j = 0; j < q.cols(); ++j) {
      if (!is_integer(q(i, j)))
        throw Error(ErrorCode::ParseError, "matrix entry " + to_string(q(i, j)) + " is not an integer");
      m(i, j) = mp::numerator(q(i, j));
    }
  return m;
}

SparseSystem parse_system_json(std::string_view json_text) {
  const json doc = parse_json(json_text);
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "system must be a JSON object");
  auto strings = [&](const char* name) {
    std::vector<std::string> out;
    if (!doc.contains(name)) return out;
    const json& arr = doc.at(name);
    if (!arr.is_array()) throw Error(ErrorCode::ParseError, std::string("'") + name + "' must be an array");
    for (const auto& v : arr) {
      if (!v.is_string())
        throw Error(ErrorCode::ParseError, std::string("entries of '") + name + "' must be strings");
      out.push_back(v.get<std::string>());
    }
    return out;
  };
  const auto eqs = strings("equations"), ineqs = strings("inequalities");

  Index n = 0;
  if (doc.contains("n")) {
    if (!doc.at("n").is_number_integer() || doc.at("n").get<long long>() < 1)
      throw Error(ErrorCode::ParseError, "'n' must be a positive integer");
    n = static_cast<Index>(doc.at("n").get<long long>());
  } else {
    for (const auto& s : eqs) n = std::max(n, parse_polynomial(s).num_vars());
    for (const auto& s : ineqs) n = std::max(n, parse_polynomial(s).num_vars());
  }
  SparseSystem sys{std::max<Index>(n, 1), {}, {}};
  for (const auto& s : eqs) sys.equations.push_back(parse_polynomial(s, sys.num_vars));
  for (const auto& s : ineqs) sys.inequalities.push_back(parse_polynomial(s, sys.num_vars));
  return sys;
}

BinomialSystem parse_binomial_json(std::string_view json_text) {
  const json doc = parse_json(json_text);
  const json& d = field(doc, "D");
  const json& c = field(doc, "c");
  if (!d.is_array() || d.empty() || !c.is_array())
    throw Error(ErrorCode::ParseError, "'D' must be a nonempty array of rows and 'c' an array");
  BinomialSystem sys;
  const std::size_t rows = d.size(), cols = d.front().is_array() ? d.front().size() : 0;
  sys.D = IntMatrix(static_cast<Index>(rows), static_cast<Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    if (!d[i].is_array() || d[i].size() != cols)
      throw Error(ErrorCode::ParseError, "rows of 'D' must be arrays of equal length");
    for (std::size_t j = 0; j < cols; ++j) {
      const Rational v = json_rational(d[i][j], "D");
      if (!is_integer(v)) throw Error(ErrorCode::ParseError, "entries of 'D' must be integers");
      sys.D(static_cast<Index>(i), static_cast<Index>(j)) = mp::numerator(v);
    }
  }
  sys.c = RationalVector(static_cast<Index>(c.size()));
  for (std::size_t i = 0; i < c.size(); ++i) sys.c(static_cast<Index>(i)) = json_rational(c[i], "c");
  sys.R = json_rational(field(doc, "R"), "R");
  sys.epsilon = json_rational(field(doc, "epsilon"), "epsilon");
  return sys;
}

}  // namespace fewnomial
