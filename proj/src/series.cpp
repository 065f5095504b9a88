// Rational-function arithmetic and single-variable series expansion.
#include "ncpoly/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncpoly {

Poly content_free(const Poly& p, Rat* content_out) {
  if (p.is_zero()) {
    if (content_out) *content_out = 0;
    return p;
  }
  // Content = gcd of numerators / lcm of denominators, sign from the
  // lex-leading term so the normalized leading coefficient is positive.
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            c.get_den().get_mpz_t());
  }
  Rat content(num_gcd, den_lcm);
  content.canonicalize();
  // Lex-greatest exponent vector decides the sign.
  const auto* lead = &*p.terms().begin();
  for (const auto& t : p.terms())
    if (t.first > lead->first) lead = &t;
  if (lead->second < 0) content = -content;
  if (content_out) *content_out = content;
  Poly out = Poly::constant(p.nvars(), 0);
  for (const auto& [e, c] : p.terms()) out.add_term(e, c / content);
  return out;
}

RationalFn RationalFn::make(Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("rational function: zero denominator");
  if (num.is_zero())
    return RationalFn{Poly::constant(num.nvars(), 0),
                      Poly::constant(den.nvars(), 1)};
  Rat cn, cd;
  Poly n = content_free(num, &cn);
  Poly d = content_free(den, &cd);
  Rat scale = cn / cd;
  // Fold the residual rational scale into the numerator exactly.
  return RationalFn{n.scaled(scale), d};
}

RationalFn RationalFn::from_poly(Poly p) {
  int nv = p.nvars();
  return RationalFn{std::move(p), Poly::constant(nv, 1)};
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
  return make(num * o.den + o.num * den, den * o.den);
}
RationalFn RationalFn::operator-(const RationalFn& o) const {
  return make(num * o.den - o.num * den, den * o.den);
}
RationalFn RationalFn::operator*(const RationalFn& o) const {
  return make(num * o.num, den * o.den);
}
bool RationalFn::operator==(const RationalFn& o) const {
  return num * o.den == o.num * den;
}

Laurent series_in(const RationalFn& f, int var, int order) {
  if (order < 0) throw std::domain_error("series order must be >= 0");
  if (f.num.is_zero()) {
    return Laurent{0, Poly::constant(f.num.nvars(), 0)};
  }
  long vn = f.num.min_exponent(var);
  long vd = f.den.min_exponent(var);
  // Strip the leading var powers from both sides.
  auto strip = [&](const Poly& p, long val, int upto) {
    Poly out = Poly::constant(p.nvars(), 0);
    for (const auto& [e, c] : p.terms()) {
      if (e[var] - val > upto) continue;
      Expo e2 = e;
      e2[var] -= static_cast<int>(val);
      out.add_term(e2, c);
    }
    return out;
  };
  Poly n0 = strip(f.num, vn, order);
  Poly d0 = strip(f.den, vd, order);
  Poly dc = d0.coeff_of(var, 0);
  if (!dc.is_constant())
    throw std::domain_error(
        "series_in: denominator's lowest-order coefficient is not constant");
  Rat c0 = dc.is_zero() ? Rat(0) : dc.terms().begin()->second;
  if (c0 == 0)
    throw std::domain_error("series_in: denominator vanished after stripping");
  // s_k = (n_k - sum_{j<k} s_j d_{k-j}) / c0, per power of var.
  std::vector<Poly> s;
  Poly series = Poly::constant(f.num.nvars(), 0);
  for (int k = 0; k <= order; ++k) {
    Poly acc = n0.coeff_of(var, k);
    for (int j = 0; j < k; ++j) acc -= s[j] * d0.coeff_of(var, k - j);
    Poly sk = acc.scaled(Rat(1) / c0);
    s.push_back(sk);
    series += sk * Poly::variable(f.num.nvars(), var, k);
  }
  return Laurent{vn - vd, series};
}

std::vector<std::vector<RationalFn>> inverse_block_rf(
    const PolyMat& m, const std::vector<int>& rows,
    const std::vector<int>& cols) {
  std::vector<int> block = rows;
  for (int c : cols)
    if (std::find(block.begin(), block.end(), c) == block.end())
      block.push_back(c);
  std::sort(block.begin(), block.end());
  BlockInverse bi = block_inverse(m, block);
  auto pos = [&](int idx) {
    return static_cast<int>(
        std::find(block.begin(), block.end(), idx) - block.begin());
  };
  std::vector<std::vector<RationalFn>> out(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    out[i].reserve(cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
      out[i].push_back(
          RationalFn::make(bi.num[pos(rows[i])][pos(cols[j])], bi.den));
  }
  return out;
}

}  // namespace ncpoly
