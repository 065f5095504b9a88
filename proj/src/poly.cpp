// Implementation of the sparse multivariate polynomial arithmetic and the
// canonical text form (graded order, ties broken lex-descending).
#include "ncpoly/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace ncpoly {

std::string rat_str(const Rat& r) { return r.get_str(); }

Poly Poly::constant(int nvars, Rat c) {
  Poly p(nvars);
  if (c != 0) p.terms_[Expo(nvars, 0)] = std::move(c);
  return p;
}

Poly Poly::variable(int nvars, int index, int power) {
  if (index < 0 || index >= nvars) throw std::out_of_range("variable index");
  Poly p(nvars);
  Expo e(nvars, 0);
  e[index] = power;
  p.terms_[e] = 1;
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Expo& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Poly& Poly::add_term(const Expo& e, const Rat& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("exponent arity mismatch");
  if (c == 0) return *this;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("arity mismatch");
  Poly r(nvars_);
  Expo e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly Poly::scaled(const Rat& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
  return r;
}

Poly Poly::div_exact(const Poly& num, const Poly& den) {
  if (num.nvars_ != den.nvars_) throw std::invalid_argument("arity mismatch");
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  Poly q(num.nvars_);
  Poly r = num;
  // Lex-largest exponent vector acts as the leading monomial.
  const auto& dlead = *den.terms_.rbegin();
  Expo m(num.nvars_);
  while (!r.is_zero()) {
    const auto& rlead = *r.terms_.rbegin();
    for (int i = 0; i < num.nvars_; ++i) {
      m[i] = rlead.first[i] - dlead.first[i];
      if (m[i] < 0) throw std::domain_error("polynomial division not exact");
    }
    Rat c = rlead.second / dlead.second;
    q.add_term(m, c);
    Poly step(num.nvars_);
    step.terms_[m] = c;
    r -= step * den;
  }
  return q;
}

Poly Poly::lift(const std::vector<int>& var_map, int new_nvars) const {
  if (static_cast<int>(var_map.size()) != nvars_)
    throw std::invalid_argument("var_map arity mismatch");
  Poly r(new_nvars);
  Expo e(new_nvars);
  for (const auto& [eo, c] : terms_) {
    std::fill(e.begin(), e.end(), 0);
    for (int i = 0; i < nvars_; ++i) {
      if (eo[i] == 0) continue;
      int j = var_map[i];
      if (j < 0 || j >= new_nvars) throw std::out_of_range("var_map target");
      e[j] += eo[i];
    }
    r.add_term(e, c);
  }
  return r;
}

Poly Poly::substitute(const std::map<int, Rat>& values) const {
  Poly r(nvars_);
  Expo e(nvars_);
  for (const auto& [eo, c] : terms_) {
    Rat k = c;
    e = eo;
    for (const auto& [var, val] : values) {
      for (int p = 0; p < eo[var]; ++p) k *= val;
      e[var] = 0;
    }
    r.add_term(e, k);
  }
  return r;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("point arity mismatch");
  Rat acc = 0;
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (int i = 0; i < nvars_; ++i)
      for (int p = 0; p < e[i]; ++p) term *= point[i];
    acc += term;
  }
  return acc;
}

double Poly::eval_double(const std::vector<double>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("point arity mismatch");
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c.get_d();
    for (int i = 0; i < nvars_; ++i)
      if (e[i] != 0) term *= std::pow(point[i], e[i]);
    acc += term;
  }
  return acc;
}

long Poly::min_degree_in(const std::vector<int>& vars) const {
  if (terms_.empty()) return 0;
  long best = -1;
  for (const auto& [e, c] : terms_) {
    long d = 0;
    for (int v : vars) d += e[v];
    if (best < 0 || d < best) best = d;
  }
  return best;
}

std::pair<long, Poly> Poly::weighted_leading(
    const std::vector<int>& weights) const {
  if (static_cast<int>(weights.size()) != nvars_)
    throw std::invalid_argument("weights arity mismatch");
  Poly part(nvars_);
  if (terms_.empty()) return {0, part};
  long best = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    long d = 0;
    for (int i = 0; i < nvars_; ++i) d += static_cast<long>(weights[i]) * e[i];
    if (first || d < best) {
      best = d;
      first = false;
    }
  }
  for (const auto& [e, c] : terms_) {
    long d = 0;
    for (int i = 0; i < nvars_; ++i) d += static_cast<long>(weights[i]) * e[i];
    if (d == best) part.terms_[e] = c;
  }
  return {best, part};
}

Poly Poly::rho_rescaled(const std::vector<int>& scaled_vars,
                        int rho_index) const {
  if (rho_index < 0 || rho_index >= nvars_)
    throw std::out_of_range("rho index");
  Poly r(nvars_);
  Expo e(nvars_);
  for (const auto& [eo, c] : terms_) {
    e = eo;
    int extra = 0;
    for (int v : scaled_vars) extra += 2 * eo[v];
    e[rho_index] += extra;
    r.add_term(e, c);
  }
  return r;
}

Poly Poly::coeff_of(int var, int k) const {
  Poly r(nvars_);
  Expo e(nvars_);
  for (const auto& [eo, c] : terms_) {
    if (eo[var] != k) continue;
    e = eo;
    e[var] = 0;
    r.add_term(e, c);
  }
  return r;
}

int Poly::min_exponent(int var) const {
  int best = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[var] < best) best = e[var];
    first = false;
  }
  return best;
}

int Poly::max_exponent(int var) const {
  int best = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[var] > best) best = e[var];
    first = false;
  }
  return best;
}

namespace {

// Canonical display order: total degree ascending, then exponent vector
// lexicographically descending (earlier variables dominate).
bool display_less(const Expo& a, const Expo& b) {
  long da = 0, db = 0;
  for (int x : a) da += x;
  for (int x : b) db += x;
  if (da != db) return da < db;
  return a > b;
}

std::string monomial_str(const Expo& e, const std::vector<std::string>& names) {
  std::string out;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

std::string Poly::str(const std::vector<std::string>& names) const {
  if (static_cast<int>(names.size()) != nvars_)
    throw std::invalid_argument("names arity mismatch");
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Expo, Rat>*> order;
  order.reserve(terms_.size());
  for (const auto& term : terms_) order.push_back(&term);
  std::sort(order.begin(), order.end(),
            [](auto* a, auto* b) { return display_less(a->first, b->first); });
  std::string out;
  for (auto* term : order) {
    const Rat& c = term->second;
    std::string mono = monomial_str(term->first, names);
    Rat abs_c = abs(c);
    std::string piece;
    if (mono.empty()) {
      piece = abs_c.get_str();
    } else if (abs_c == 1) {
      piece = mono;
    } else {
      piece = abs_c.get_str() + "*" + mono;
    }
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + piece;
    } else {
      out += (c < 0 ? "-" : "+") + piece;
    }
  }
  return out;
}

std::vector<std::string> t_s_names(int L) {
  std::vector<std::string> names;
  names.reserve(L + 1);
  for (int i = 1; i <= L; ++i) names.push_back("t" + std::to_string(i));
  names.push_back("s");
  return names;
}

std::vector<std::string> t_s_rho_names(int L) {
  auto names = t_s_names(L);
  names.push_back("rho");
  return names;
}

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;
  const std::vector<std::string>& names;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string read_integer() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) throw std::invalid_argument("expected integer at " +
                                                  std::to_string(start));
    return text.substr(start, pos - start);
  }

  int read_name() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_'))
      ++pos;
    std::string word = text.substr(start, pos - start);
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == word) return static_cast<int>(i);
    throw std::invalid_argument("unknown variable '" + word + "'");
  }

  // term := [rational] ('*' factor)*   |   factor ('*' factor)*
  void read_term(Poly& acc, int sign) {
    Rat coeff = sign;
    Expo e(names.size(), 0);
    bool any = false;
    skip_ws();
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::string num = read_integer();
      std::string denom = "1";
      if (eat('/')) denom = read_integer();
      Rat q(num + "/" + denom);
      q.canonicalize();
      coeff *= q;
      any = true;
      if (!eat('*')) {
        acc.add_term(e, coeff);
        return;
      }
    }
    while (true) {
      int var = read_name();
      int power = 1;
      if (eat('^')) power = std::stoi(read_integer());
      e[var] += power;
      any = true;
      if (!eat('*')) break;
    }
    if (!any) throw std::invalid_argument("empty term");
    acc.add_term(e, coeff);
  }
};

}  // namespace

Poly parse_poly(const std::string& text,
                const std::vector<std::string>& names) {
  Poly acc(static_cast<int>(names.size()));
  Parser p{text, 0, names};
  p.skip_ws();
  if (p.pos >= text.size()) throw std::invalid_argument("empty polynomial");
  if (text.compare(p.pos, 1, "0") == 0 && p.pos + 1 == text.size()) return acc;
  int sign = 1;
  if (p.eat('-'))
    sign = -1;
  else
    p.eat('+');
  p.read_term(acc, sign);
  while (true) {
    p.skip_ws();
    if (p.pos >= text.size()) break;
    if (p.eat('+'))
      sign = 1;
    else if (p.eat('-'))
      sign = -1;
    else
      throw std::invalid_argument("expected + or - at " +
                                  std::to_string(p.pos));
    p.read_term(acc, sign);
  }
  return acc;
}

}  // namespace ncpoly
