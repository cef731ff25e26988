#include "semiclass/multipoly.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace semiclass {

bool GradedLexGreater::operator()(const std::vector<unsigned>& a,
                                  const std::vector<unsigned>& b) const {
  unsigned long da = std::accumulate(a.begin(), a.end(), 0ul);
  unsigned long db = std::accumulate(b.begin(), b.end(), 0ul);
  if (da != db) return da > db;
  return a > b;  // lexicographic on exponent vectors, x1 strongest
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Rational& value) {
  MultiPoly p(std::move(variables));
  p.add_term(std::vector<unsigned>(p.nvars(), 0), value);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, std::size_t index) {
  MultiPoly p(std::move(variables));
  if (index >= p.nvars()) throw std::invalid_argument("MultiPoly::variable: index out of range");
  std::vector<unsigned> e(p.nvars(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

void MultiPoly::add_term(const std::vector<unsigned>& exponents, const Rational& coeff) {
  if (exponents.size() != nvars())
    throw std::invalid_argument("MultiPoly::add_term: exponent vector has wrong length");
  if (semiclass::is_zero(coeff)) return;
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    terms_.emplace(exponents, coeff);
  } else {
    it->second += coeff;
    if (semiclass::is_zero(it->second)) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
  if (vars_ != other.vars_)
    throw std::invalid_argument("MultiPoly: variable lists differ");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
  MultiPoly out = *this;
  out += other;
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const {
  MultiPoly out = *this;
  out -= other;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
  check_compatible(other);
  MultiPoly out(vars_);
  std::vector<unsigned> e(nvars());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator*(const Rational& scalar) const {
  MultiPoly out(vars_);
  if (semiclass::is_zero(scalar)) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * scalar);
  return out;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
  return vars_ == other.vars_ && terms_ == other.terms_;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    out << rat_to_string(a);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out << '*' << vars_[i];
      if (e[i] > 1) out << '^' << e[i];
    }
  }
  return out.str();
}

MultiPoly poly_partial(const MultiPoly& p, std::size_t var_index) {
  if (var_index >= p.nvars())
    throw std::invalid_argument("poly_partial: variable index out of range");
  MultiPoly out(p.variables());
  for (const auto& [e, c] : p.terms()) {
    if (e[var_index] == 0) continue;
    std::vector<unsigned> d = e;
    d[var_index] -= 1;
    out.add_term(d, c * Rational(e[var_index]));
  }
  return out;
}

MultiPoly poly_partial(const MultiPoly& p, const std::string& var) {
  for (std::size_t i = 0; i < p.nvars(); ++i)
    if (p.variables()[i] == var) return poly_partial(p, i);
  throw std::invalid_argument("poly_partial: unknown variable '" + var + "'");
}

namespace {

// Recursive-descent parser over the grammar in the header. Positions are
// byte offsets into `text`.
class PolyParser {
 public:
  PolyParser(const std::string& text, const std::vector<std::string>& variables)
      : text_(text), vars_(variables) {}

  MultiPoly run() {
    MultiPoly out(vars_);
    skip_ws();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    parse_term(out, negate);
    skip_ws();
    while (pos_ < text_.size()) {
      char op = text_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      parse_term(out, op == '-');
      skip_ws();
    }
    if (out.nvars() != vars_.size()) fail("internal");
    return out;
  }

 private:
  const std::string& text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(pos_, "polynomial: " + msg + " at column " + std::to_string(pos_ + 1));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_digit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  bool at_alpha() const {
    return pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_');
  }

  unsigned long parse_uint() {
    if (!at_digit()) fail("expected digits");
    unsigned long v = 0;
    while (at_digit()) {
      v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (v > 1000000) fail("integer too large");
      ++pos_;
    }
    return v;
  }

  Rational parse_coeff() {
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    if (!at_digit()) fail("expected digits");
    while (at_digit()) ++pos_;
    if (peek() == '/') {
      ++pos_;
      std::size_t den = pos_;
      if (!at_digit()) fail("expected denominator digits");
      while (at_digit()) ++pos_;
      bool all_zero = true;
      for (std::size_t k = den; k < pos_; ++k)
        if (text_[k] != '0') all_zero = false;
      if (all_zero) throw ParseError(den, "polynomial: zero denominator at column " +
                                              std::to_string(den + 1));
    }
    Rational q(text_.substr(start, pos_ - start), 10);
    q.canonicalize();
    return q;
  }

  std::size_t parse_var() {
    if (!at_alpha()) fail("expected variable name");
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return i;
    throw ParseError(start, "polynomial: unknown variable '" + name + "' at column " +
                                std::to_string(start + 1));
  }

  // factor ::= var ('^' uint)?  accumulated into the exponent vector
  void parse_factor(std::vector<unsigned>& exp) {
    std::size_t v = parse_var();
    unsigned long e = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      e = parse_uint();
    }
    exp[v] += static_cast<unsigned>(e);
  }

  void parse_term(MultiPoly& acc, bool negate) {
    skip_ws();
    Rational coeff = 1;
    std::vector<unsigned> exp(vars_.size(), 0);
    if (at_digit()) {
      coeff = parse_coeff();
      skip_ws();
      while (peek() == '*') {
        ++pos_;
        skip_ws();
        parse_factor(exp);
        skip_ws();
      }
    } else if (at_alpha()) {
      parse_factor(exp);
      skip_ws();
      while (peek() == '*') {
        ++pos_;
        skip_ws();
        parse_factor(exp);
        skip_ws();
      }
    } else {
      fail("expected a term");
    }
    if (negate) coeff = -coeff;
    acc.add_term(exp, coeff);
  }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& variables) {
  return PolyParser(text, variables).run();
}

std::vector<std::string> chart_variables(std::size_t n) {
  std::vector<std::string> vars;
  vars.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  return vars;
}

}  // namespace semiclass
