#include "qgwa/request.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

namespace qgwa {

ParseFailure::ParseFailure(int line, int column, const std::string& message, std::set<std::string> expected)
    : Error(ErrorCode::ParseError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message +
                [&] {
                  if (expected.empty()) return std::string();
                  std::string s = " (expected one of:";
                  for (const auto& e : expected) s += " " + e;
                  return s + ")";
                }()),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

bool operator==(const AnalysisRequest& l, const AnalysisRequest& r) {
  auto same_poly = [](const FactoredPoly& x, const FactoredPoly& y) { return expand(x) == expand(y); };
  return l.conductor == r.conductor && l.base == r.base && l.q == r.q && same_poly(l.a, r.a) && l.gamma == r.gamma &&
         l.mu == r.mu && l.mu_hpower == r.mu_hpower && l.omega == r.omega && l.i0 == r.i0 &&
         l.options.bounds.grade_bound == r.options.bounds.grade_bound &&
         l.options.bounds.h_degree_bound == r.options.bounds.h_degree_bound && l.options.k_bound == r.options.k_bound &&
         l.options.verify == r.options.verify && l.options.probe == r.options.probe;
}

namespace {

// Recursive descent over one value string; positions are reported relative
// to the document through (line, col0).
class ExprParser {
 public:
  ExprParser(std::string text, int conductor, int line, int col0)
      : s_(std::move(text)), n_(conductor), line_(line), col0_(col0) {}

  FieldElement field_expr_all() {
    FieldElement v = sum();
    expect_end({"+", "-", "*", "/", "^"});
    return v;
  }

  FactoredPoly poly_all() {
    FactoredPoly f;
    f.unit = FieldElement::rational(1, n_);
    factor(f);
    while (peek() == '*') {
      ++pos_;
      factor(f);
    }
    expect_end({"*"});
    try {
      return f.canonical();
    } catch (const Error& e) {
      throw Error(ErrorCode::SemanticError, e.what());
    }
  }

 private:
  [[noreturn]] void fail(const std::string& message, std::set<std::string> expected) const {
    std::size_t at = pos_;
    std::string msg = message;
    if (at >= s_.size() && !open_.empty()) {
      at = open_.back();
      msg = "unterminated '('";
      expected.insert(")");
    }
    throw ParseFailure(line_, col0_ + static_cast<int>(at), msg, std::move(expected));
  }

  char peek() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  void expect_end(std::set<std::string> expected) {
    if (peek() != '\0') {
      expected.insert("end of value");
      fail(std::string("unexpected '") + s_[pos_] + "'", std::move(expected));
    }
  }

  void expect(char c) {
    if (peek() != c) fail(pos_ < s_.size() ? std::string("unexpected '") + s_[pos_] + "'" : "unexpected end of value",
                          {std::string(1, c)});
    ++pos_;
  }

  long integer(bool allow_sign) {
    bool negative = false;
    if (allow_sign && peek() == '-') {
      negative = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      fail(pos_ < s_.size() ? "expected an integer" : "unexpected end of value", {"integer"});
    }
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1000000) fail("integer too large", {});
    }
    return negative ? -v : v;
  }

  FieldElement guarded(const std::function<FieldElement()>& op, std::size_t at) {
    try {
      return op();
    } catch (const ParseFailure&) {
      throw;
    } catch (const Error& e) {
      pos_ = at;
      throw Error(ErrorCode::SemanticError,
                  "line " + std::to_string(line_) + ", column " + std::to_string(col0_ + static_cast<int>(at)) +
                      ": " + e.what());
    }
  }

  FieldElement sum() {
    FieldElement v = product();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      FieldElement rhs = product();
      v = c == '+' ? v + rhs : v - rhs;
    }
    return v;
  }

  FieldElement product() {
    FieldElement v = unary();
    for (char c = peek(); c == '*' || c == '/'; c = peek()) {
      const std::size_t at = pos_++;
      FieldElement rhs = unary();
      v = c == '*' ? v * rhs : guarded([&] { return v / rhs; }, at);
    }
    return v;
  }

  FieldElement unary() {
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  FieldElement power() {
    const std::size_t at = pos_;
    FieldElement base = atom();
    if (peek() == '^') {
      ++pos_;
      const long e = integer(true);
      return guarded([&] { return base.pow(e); }, at);
    }
    return base;
  }

  FieldElement atom() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return FieldElement::rational(Rational(s_.substr(start, pos_ - start)), n_);
    }
    if (c == 'z') {
      if (n_ == 1) {
        throw Error(ErrorCode::SemanticError, "line " + std::to_string(line_) + ", column " +
                                                  std::to_string(col0_ + static_cast<int>(pos_)) +
                                                  ": z needs a conductor greater than 1");
      }
      ++pos_;
      return FieldElement::zeta(n_);
    }
    if (c == '(') {
      open_.push_back(pos_++);
      FieldElement v = sum();
      expect(')');
      open_.pop_back();
      return v;
    }
    fail(c == '\0' ? "unexpected end of value" : std::string("unexpected '") + c + "'", {"number", "z", "("});
  }

  bool h_next() {
    std::size_t save = pos_;
    if (peek() == '(') {
      ++pos_;
      const bool h = peek() == 'h';
      pos_ = save;
      return h;
    }
    return false;
  }

  void add_roots_of(FactoredPoly& f, long e, const FieldElement& c, int mult, std::size_t at) {
    // h^e - c = prod (h - r0 w^j) once a single root r0 is known.
    if (c.is_zero()) {
      f.h_power += static_cast<int>(e) * mult;
      return;
    }
    auto w = primitive_root_of_unity(n_, e);
    std::optional<FieldElement> r0;
    for (const FieldElement& u : torsion_elements(n_)) {
      const FieldElement rest = c / u.pow(e);
      if (!rest.is_rational()) continue;
      const Rational v = rest.as_rational();
      if (v < 0 && e % 2 == 0) continue;
      mpz_class num = abs(v.get_num()), den = v.get_den(), rn, rd;
      mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e));
      mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(e));
      Rational root(rn, rd);
      root.canonicalize();
      if (v < 0) root = -root;
      FieldElement cand = u * FieldElement::rational(root, n_);
      if (cand.pow(e) == c) {
        r0 = cand;
        break;
      }
    }
    if (!r0 || !w) {
      throw Error(ErrorCode::SemanticError, "line " + std::to_string(line_) + ", column " +
                                                std::to_string(col0_ + static_cast<int>(at)) + ": h^" +
                                                std::to_string(e) + " - (" + c.to_string() +
                                                ") does not split over Q(zeta_" + std::to_string(n_) + ")");
    }
    FieldElement r = *r0;
    for (long j = 0; j < e; ++j) {
      f.roots.push_back(Root{r, mult});
      r *= *w;
    }
  }

  void factor(FactoredPoly& f) {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      f.unit = -f.unit;
      factor(f);
      return;
    }
    if (c == 'h') {
      ++pos_;
      long e = 1;
      if (peek() == '^') {
        ++pos_;
        e = integer(true);
      }
      f.h_power += static_cast<int>(e);
      return;
    }
    if (h_next()) {
      const std::size_t at = pos_;
      open_.push_back(pos_);
      ++pos_;
      expect('h');
      long e = 1;
      if (peek() == '^') {
        ++pos_;
        e = integer(false);
        if (e < 1) fail("exponent inside a factor must be positive", {"integer"});
      }
      std::optional<FieldElement> constant;
      const char sign = peek();
      if (sign == '+' || sign == '-') {
        ++pos_;
        FieldElement v = sum();
        constant = sign == '-' ? v : -v;  // factor is h^e - constant
      } else if (sign != ')') {
        fail(sign == '\0' ? "unexpected end of value" : std::string("unexpected '") + sign + "'", {"+", "-", ")"});
      }
      expect(')');
      open_.pop_back();
      int mult = 1;
      if (peek() == '^') {
        ++pos_;
        mult = static_cast<int>(integer(false));
      }
      if (!constant) {
        f.h_power += static_cast<int>(e) * mult;
      } else if (e == 1) {
        f.roots.push_back(Root{*constant, mult});
      } else {
        add_roots_of(f, e, *constant, mult, at);
      }
      return;
    }
    // Scalar factor: unary expression, optionally divided.
    FieldElement v = unary();
    while (peek() == '/') {
      const std::size_t at = pos_++;
      FieldElement d = unary();
      v = guarded([&] { return v / d; }, at);
    }
    f.unit *= v;
  }

  std::string s_;
  int n_;
  int line_;
  int col0_;
  std::size_t pos_ = 0;
  std::vector<std::size_t> open_;
};

struct Entry {
  std::string value;
  int line = 0;
  int column = 0;  // of the first value character
};

const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> keys{
      {"algebra", {"conductor", "base", "q", "a"}},
      {"automorphism", {"gamma", "mu", "mu_hpower", "omega", "i0"}},
      {"options", {"grade_bound", "h_degree_bound", "k_bound", "verify", "probe"}},
  };
  return keys;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long to_integer(const Entry& e) {
  try {
    std::size_t used = 0;
    const long v = std::stol(e.value, &used);
    if (used == e.value.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseFailure(e.line, e.column, "expected an integer", {"integer"});
}

bool to_bool(const Entry& e) {
  if (e.value == "true") return true;
  if (e.value == "false") return false;
  throw ParseFailure(e.line, e.column, "expected a boolean", {"true", "false"});
}

}  // namespace

FieldElement parse_field_expr(const std::string& text, int conductor) {
  return ExprParser(text, conductor, 1, 1).field_expr_all();
}

FactoredPoly parse_factored_poly(const std::string& text, int conductor) {
  return ExprParser(text, conductor, 1, 1).poly_all();
}

AnalysisRequest parse_request(const std::string& text) {
  std::map<std::string, Entry> entries;  // "section.key"
  std::string section;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    // Strip comments outside quotes.
    bool quoted = false;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] == '"') quoted = !quoted;
      if (raw[i] == '#' && !quoted) {
        raw.resize(i);
        break;
      }
    }
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const int indent = static_cast<int>(raw.find_first_not_of(" \t"));
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseFailure(line_no, indent + static_cast<int>(line.size()) + 1, "unclosed section", {"]"});
      section = trim(line.substr(1, line.size() - 2));
      if (!known_keys().count(section)) {
        throw ParseFailure(line_no, indent + 2, "unknown section '" + section + "'",
                           {"algebra", "automorphism", "options"});
      }
      continue;
    }
    const auto eq = raw.find('=');
    if (eq == std::string::npos) throw ParseFailure(line_no, static_cast<int>(raw.size()) + 1, "missing '='", {"="});
    const std::string key = trim(raw.substr(0, eq));
    if (key.empty() || !std::all_of(key.begin(), key.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; })) {
      throw ParseFailure(line_no, indent + 1, "expected a key", {"key"});
    }
    if (section.empty()) throw ParseFailure(line_no, indent + 1, "key outside a section", {"["});
    if (!known_keys().at(section).count(key)) {
      throw ParseFailure(line_no, indent + 1, "unknown key '" + key + "' in [" + section + "]", known_keys().at(section));
    }
    std::size_t vstart = raw.find_first_not_of(" \t", eq + 1);
    if (vstart == std::string::npos) throw ParseFailure(line_no, static_cast<int>(raw.size()) + 1, "missing value", {"value"});
    Entry e;
    e.line = line_no;
    std::string rest = raw.substr(vstart);
    if (rest.front() == '"') {
      const auto close = rest.find('"', 1);
      if (close == std::string::npos) throw ParseFailure(line_no, static_cast<int>(vstart) + 1, "unterminated string", {"\""});
      if (!trim(rest.substr(close + 1)).empty()) {
        throw ParseFailure(line_no, static_cast<int>(vstart + close) + 2, "text after the closing quote", {"end of line"});
      }
      e.value = rest.substr(1, close - 1);
      e.column = static_cast<int>(vstart) + 2;
    } else {
      e.value = trim(rest);
      e.column = static_cast<int>(vstart) + 1;
    }
    const std::string full = section + "." + key;
    if (entries.count(full)) throw ParseFailure(line_no, indent + 1, "duplicate key '" + key + "'", {});
    entries[full] = e;
  }

  auto get = [&](const std::string& k) -> const Entry* {
    auto it = entries.find(k);
    return it == entries.end() ? nullptr : &it->second;
  };
  AnalysisRequest req;
  if (const Entry* e = get("algebra.conductor")) {
    const long n = to_integer(*e);
    if (n < 1 || n > 10000) throw Error(ErrorCode::SemanticError, "conductor must be between 1 and 10000");
    req.conductor = static_cast<int>(n);
  }
  if (const Entry* e = get("algebra.base")) {
    if (e->value == "poly") {
      req.base = BaseKind::Poly;
    } else if (e->value == "laurent") {
      req.base = BaseKind::Laurent;
    } else {
      throw ParseFailure(e->line, e->column, "unknown base ring", {"poly", "laurent"});
    }
  }
  const Entry* q = get("algebra.q");
  const Entry* a = get("algebra.a");
  if (!q || !a) throw Error(ErrorCode::SemanticError, "[algebra] needs both q and a");
  auto field = [&](const Entry& e) { return ExprParser(e.value, req.conductor, e.line, e.column).field_expr_all(); };
  req.q = field(*q);
  req.a = ExprParser(a->value, req.conductor, a->line, a->column).poly_all();
  if (const Entry* e = get("automorphism.gamma")) req.gamma = field(*e);
  if (const Entry* e = get("automorphism.mu")) req.mu = field(*e);
  if (const Entry* e = get("automorphism.mu_hpower")) req.mu_hpower = static_cast<int>(to_integer(*e));
  if (const Entry* e = get("automorphism.omega")) req.omega = to_bool(*e);
  if (const Entry* e = get("automorphism.i0")) req.i0 = static_cast<int>(to_integer(*e));
  if (const Entry* e = get("options.grade_bound")) req.options.bounds.grade_bound = static_cast<int>(to_integer(*e));
  if (const Entry* e = get("options.h_degree_bound")) req.options.bounds.h_degree_bound = static_cast<int>(to_integer(*e));
  if (const Entry* e = get("options.k_bound")) req.options.k_bound = to_integer(*e);
  if (const Entry* e = get("options.verify")) req.options.verify = to_bool(*e);
  if (const Entry* e = get("options.probe")) req.options.probe = to_bool(*e);
  if (req.options.bounds.grade_bound < 0 || req.options.bounds.h_degree_bound < 0 || req.options.k_bound < 1) {
    throw Error(ErrorCode::SemanticError, "bounds must be nonnegative and k_bound positive");
  }
  return req;
}

std::string emit_request(const AnalysisRequest& r) {
  std::ostringstream out;
  out << "[algebra]\n"
      << "conductor = " << r.conductor << "\n"
      << "base = \"" << to_string(r.base) << "\"\n"
      << "q = \"" << r.q.to_string() << "\"\n"
      << "a = \"" << r.a.to_string("h") << "\"\n\n"
      << "[automorphism]\n"
      << "gamma = \"" << r.gamma.to_string() << "\"\n"
      << "mu = \"" << r.mu.to_string() << "\"\n"
      << "mu_hpower = " << r.mu_hpower << "\n"
      << "omega = " << (r.omega ? "true" : "false") << "\n";
  if (r.i0) out << "i0 = " << *r.i0 << "\n";
  out << "\n[options]\n"
      << "grade_bound = " << r.options.bounds.grade_bound << "\n"
      << "h_degree_bound = " << r.options.bounds.h_degree_bound << "\n"
      << "k_bound = " << r.options.k_bound << "\n"
      << "verify = " << (r.options.verify ? "true" : "false") << "\n"
      << "probe = " << (r.options.probe ? "true" : "false") << "\n";
  return out.str();
}

}  // namespace qgwa
