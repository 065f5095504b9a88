// Rational functions (polynomial quotients reduced by content) and formal
// Laurent-style expansion in one distinguished variable.
#pragma once

#include <vector>

#include "ncpoly/matrix.hpp"
#include "ncpoly/poly.hpp"

namespace ncpoly {

// num/den with den nonzero; normalized so both are content-free (integer
// content 1) and den's lex-leading coefficient is positive.
struct RationalFn {
  Poly num;
  Poly den;

  static RationalFn make(Poly num, Poly den);
  static RationalFn from_poly(Poly p);
  bool is_zero() const { return num.is_zero(); }

  RationalFn operator+(const RationalFn& o) const;
  RationalFn operator-(const RationalFn& o) const;
  RationalFn operator*(const RationalFn& o) const;
  // Cross-multiplied equality (exact as rational functions).
  bool operator==(const RationalFn& o) const;
};

// Divides all coefficients by the rational content; zero stays zero.
Poly content_free(const Poly& p, Rat* content_out = nullptr);

// Laurent expansion around var = 0: f = var^nu * (series truncated at the
// given order, series(0) != 0). Requires the denominator, after factoring
// out its leading var power, to have a constant nonzero coefficient at
// var^0 (otherwise the coefficients would not be polynomial).
struct Laurent {
  long nu = 0;
  Poly series;  // exponents of `var` run 0..order
};
Laurent series_in(const RationalFn& f, int var, int order);

// Entries (m^{-1})[rows[i]][cols[j]] as reduced rational functions.
std::vector<std::vector<RationalFn>> inverse_block_rf(
    const PolyMat& m, const std::vector<int>& rows,
    const std::vector<int>& cols);

}  // namespace ncpoly
