// Sparse multivariate polynomials over exact rationals, with the text grammar
//   poly ::= ['-'] term (('+'|'-') term)*
//   term ::= coeff ('*' var ('^' uint)?)*     (a bare leading var is accepted)
//   coeff ::= int ('/' posint)?
// Canonical printing uses graded-lex descending monomial order and always
// writes the coefficient, so parse(print(p)) round-trips bit-exactly.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "semiclass/rational.hpp"

namespace semiclass {

// Graded lexicographic order: compare total degree first, then exponent
// vectors left to right (x1 beats x2). Used descending for printing.
struct GradedLexGreater {
  bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const;
};

class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables);

  static MultiPoly constant(std::vector<std::string> variables, const Rational& value);
  static MultiPoly variable(std::vector<std::string> variables, std::size_t index);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Adds `coeff` to the monomial with the given exponents, dropping the term
  // if it cancels.
  void add_term(const std::vector<unsigned>& exponents, const Rational& coeff);

  const std::map<std::vector<unsigned>, Rational, GradedLexGreater>& terms() const {
    return terms_;
  }

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& other) const;
  MultiPoly operator-(const MultiPoly& other) const;
  MultiPoly operator*(const MultiPoly& other) const;
  MultiPoly operator*(const Rational& scalar) const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  bool operator==(const MultiPoly& other) const;
  bool operator!=(const MultiPoly& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  std::map<std::vector<unsigned>, Rational, GradedLexGreater> terms_;

  void check_compatible(const MultiPoly& other) const;
};

// Exact formal partial derivative with respect to the named variable.
MultiPoly poly_partial(const MultiPoly& p, const std::string& var);
MultiPoly poly_partial(const MultiPoly& p, std::size_t var_index);

// Parses the grammar above; unknown variables and malformed tokens raise
// ParseError carrying the offending position.
MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& variables);

// Convenience: the variable lists used by charts ("x1".."xn").
std::vector<std::string> chart_variables(std::size_t n);

}  // namespace semiclass
