// Sparse multivariate polynomials over exact rationals (GMP), with the
// graded-lex canonical term order used for printing and golden comparisons.
#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ncpoly {

using Rat = mpq_class;

// Exponent vector; one slot per variable, same arity across a computation.
using Expo = std::vector<int>;

std::string rat_str(const Rat& r);  // "p" or "p/q", canonical sign

class Poly {
 public:
  explicit Poly(int nvars = 0) : nvars_(nvars) {}

  static Poly constant(int nvars, Rat c);
  static Poly variable(int nvars, int index, int power = 1);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  size_t term_count() const { return terms_.size(); }
  const std::map<Expo, Rat>& terms() const { return terms_; }

  // Accumulates c on exponent e, erasing the term if it cancels to zero.
  Poly& add_term(const Expo& e, const Rat& c);

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  bool operator==(const Poly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  Poly scaled(const Rat& c) const;

  // Exact polynomial division; throws std::domain_error when not exact.
  static Poly div_exact(const Poly& num, const Poly& den);

  // Remaps variable i of this poly to var_map[i] of a wider polynomial.
  Poly lift(const std::vector<int>& var_map, int new_nvars) const;

  // Substitutes given variables by constants; result keeps the arity and has
  // zero exponent on the substituted slots.
  Poly substitute(const std::map<int, Rat>& values) const;

  Rat eval(const std::vector<Rat>& point) const;
  double eval_double(const std::vector<double>& point) const;

  // Total degree in the given variable set, minimized over terms.
  // Returns 0 for the zero polynomial.
  long min_degree_in(const std::vector<int>& vars) const;

  // Part of minimal total weighted degree: returns (degree, subpolynomial).
  std::pair<long, Poly> weighted_leading(const std::vector<int>& weights) const;

  // t_l -> rho^2 t_l for the listed variables; rho_index receives the added
  // exponent (rho_index must be an existing slot, typically the last one).
  Poly rho_rescaled(const std::vector<int>& scaled_vars, int rho_index) const;

  // Coefficient of rho^k as a polynomial with the rho slot zeroed.
  Poly coeff_of(int var, int k) const;
  int min_exponent(int var) const;  // 0 for zero polynomial
  int max_exponent(int var) const;

  // Canonical string: terms ordered by (total degree asc, exponent vector
  // lex desc); e.g. "t1 + t2 + t1^2*t2 + t1*t2^2 + 4*t1*s^2 + ...".
  std::string str(const std::vector<std::string>& names) const;

 private:
  int nvars_;
  std::map<Expo, Rat> terms_;
};

// Variable name vectors: t1..tL, s, and optionally rho last.
std::vector<std::string> t_s_names(int L);
std::vector<std::string> t_s_rho_names(int L);

// Parses the canonical format back (integers, +, -, *, ^, parentheses are
// not needed: golden strings are expanded). Used by tests and the CLI.
Poly parse_poly(const std::string& text, const std::vector<std::string>& names);

}  // namespace ncpoly
