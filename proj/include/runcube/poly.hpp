#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "runcube/checked.hpp"

namespace runcube {

// Dense univariate polynomial with exact signed 64-bit coefficients.
// Canonical form: no trailing zero coefficients; zero polynomial is empty.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly constant(std::int64_t v) { return IntPoly(std::vector<std::int64_t>{v}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  std::int64_t coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0;
  }
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  void set_coeff(int i, std::int64_t v) {
    if (i < 0) throw std::domain_error("IntPoly: negative degree");
    if (i >= static_cast<int>(c_.size())) c_.resize(i + 1, 0);
    c_[i] = v;
    trim();
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<std::int64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
      r[i] = checked_add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)), "poly add");
    return IntPoly(std::move(r));
  }

  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<std::int64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
      r[i] = checked_sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)), "poly sub");
    return IntPoly(std::move(r));
  }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<std::int64_t> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] = checked_add(r[i + j], checked_mul(a.c_[i], b.c_[j], "poly mul"), "poly mul");
    return IntPoly(std::move(r));
  }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  std::int64_t eval(std::int64_t x) const {
    std::int64_t r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      r = checked_add(checked_mul(r, x, "poly eval"), *it, "poly eval");
    return r;
  }

  // Value of the first derivative at x.
  std::int64_t eval_derivative(std::int64_t x) const {
    std::int64_t r = 0, pw = 1;
    for (int i = 1; i <= degree(); ++i) {
      r = checked_add(r, checked_mul(checked_mul(c_[i], i, "poly d/dx"), pw, "poly d/dx"),
                      "poly d/dx");
      pw = checked_mul(pw, x, "poly d/dx");
    }
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<std::int64_t> c_;
};

// Sparse polynomial in two variables, exponents capped at 64 per variable.
// Terms are kept in lexicographic order of the exponent pair, zero
// coefficients are never stored.
class BiPoly {
 public:
  static constexpr int kMaxExponent = 64;
  using Exp = std::pair<int, int>;

  BiPoly() = default;

  static BiPoly constant(std::int64_t v) {
    BiPoly p;
    p.add_term(0, 0, v);
    return p;
  }
  // Monomial c * x0^a * x1^b (slots 0 and 1 are the two variables).
  static BiPoly monomial(int a, int b, std::int64_t c = 1) {
    BiPoly p;
    p.add_term(a, b, c);
    return p;
  }
  static BiPoly from_univariate(const IntPoly& p, int slot) {
    BiPoly r;
    for (int i = 0; i <= p.degree(); ++i)
      if (p.coeff(i) != 0) r.add_term(slot == 0 ? i : 0, slot == 0 ? 0 : i, p.coeff(i));
    return r;
  }

  bool is_zero() const { return t_.empty(); }
  std::int64_t coeff(int a, int b) const {
    auto it = t_.find({a, b});
    return it == t_.end() ? 0 : it->second;
  }
  const std::map<Exp, std::int64_t>& terms() const { return t_; }

  void add_term(int a, int b, std::int64_t c) {
    if (a < 0 || b < 0 || a > kMaxExponent || b > kMaxExponent)
      throw std::length_error("BiPoly: exponent out of range");
    if (c == 0) return;
    auto [it, inserted] = t_.try_emplace({a, b}, c);
    if (!inserted) {
      it->second = checked_add(it->second, c, "bipoly add");
      if (it->second == 0) t_.erase(it);
    }
  }

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [e, c] : b.t_) r.add_term(e.first, e.second, c);
    return r;
  }

  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [e, c] : b.t_)
      r.add_term(e.first, e.second, checked_sub(0, c, "bipoly sub"));
    return r;
  }

  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_)
        r.add_term(ea.first + eb.first, ea.second + eb.second,
                   checked_mul(ca, cb, "bipoly mul"));
    return r;
  }

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }

  std::int64_t eval(std::int64_t x0, std::int64_t x1) const {
    std::int64_t r = 0;
    for (const auto& [e, c] : t_) {
      std::int64_t term = c;
      for (int i = 0; i < e.first; ++i) term = checked_mul(term, x0, "bipoly eval");
      for (int i = 0; i < e.second; ++i) term = checked_mul(term, x1, "bipoly eval");
      r = checked_add(r, term, "bipoly eval");
    }
    return r;
  }

  // d/dx0 evaluated at (x0, x1) = (1, 1).
  std::int64_t derivative_slot0_at_ones() const {
    std::int64_t r = 0;
    for (const auto& [e, c] : t_)
      r = checked_add(r, checked_mul(c, e.first, "bipoly d/dx"), "bipoly d/dx");
    return r;
  }

 private:
  std::map<Exp, std::int64_t> t_;
};

// Power series truncated at a fixed order: rows[n] is the coefficient of t^n.
struct SeriesTable {
  int order = 0;
  std::vector<BiPoly> rows;  // rows.size() == order + 1

  const BiPoly& row(int n) const { return rows.at(static_cast<std::size_t>(n)); }
};

// Expands numerator/denominator (polynomials in t with BiPoly coefficients)
// into the unique power series S with den * S = num, truncated at t^order.
// The denominator must have constant term 1.
inline SeriesTable expand_rational(const std::vector<BiPoly>& num,
                                   const std::vector<BiPoly>& den, int order) {
  if (order < 0) throw std::domain_error("expand_rational: negative order");
  if (den.empty() || !(den[0] == BiPoly::constant(1)))
    throw std::invalid_argument("expand_rational: denominator constant term must be 1");
  SeriesTable s;
  s.order = order;
  s.rows.resize(static_cast<std::size_t>(order) + 1);
  for (int j = 0; j <= order; ++j) {
    BiPoly v = j < static_cast<int>(num.size()) ? num[j] : BiPoly();
    int imax = std::min<int>(j, static_cast<int>(den.size()) - 1);
    for (int i = 1; i <= imax; ++i) v = v - den[i] * s.rows[j - i];
    s.rows[j] = std::move(v);
  }
  return s;
}

namespace detail {
// Numerator/denominator of the down-degree enumerator series with the degree
// variable replaced by an arbitrary polynomial (identity for the d-series,
// q+x for the cube census).
inline void down_series_parts(const BiPoly& v, std::vector<BiPoly>& num,
                              std::vector<BiPoly>& den) {
  const BiPoly one = BiPoly::constant(1);
  const BiPoly v2 = v * v;
  const BiPoly vv1 = v * (v - one);
  // t*(1 + v + v t + (v^2-1) t^2 + v(v-1) t^3 + v(v-1) t^4)
  num = {BiPoly(), one + v, v, v2 - one, vv1, vv1};
  // 1 - t - t^2 - (v-1) t^3 - v(v-1) t^5
  den = {one, BiPoly() - one, BiPoly() - one, one - v, BiPoly(), BiPoly() - vv1};
}
}  // namespace detail

// Series whose t^n row is the down-degree enumerator polynomial of the n-bit
// run-constrained family (variable in slot 0).
inline SeriesTable gf_down_degree(int order) {
  if (order < 1) throw std::domain_error("gf_down_degree: order must be >= 1");
  std::vector<BiPoly> num, den;
  detail::down_series_parts(BiPoly::monomial(1, 0), num, den);
  return expand_rational(num, den, order);
}

// Series of up-degree enumerator polynomials (variable in slot 0).
inline SeriesTable gf_up_degree(int order) {
  if (order < 1) throw std::domain_error("gf_up_degree: order must be >= 1");
  const BiPoly one = BiPoly::constant(1);
  const BiPoly u = BiPoly::monomial(1, 0);
  // t*(1 + u + (2-u) t - 2u t^2 + (u-2) t^3 + (1-u) t^5 + (1-u) t^6)
  std::vector<BiPoly> num = {BiPoly(),
                             one + u,
                             BiPoly::constant(2) - u,
                             BiPoly() - (u + u),
                             u - BiPoly::constant(2),
                             BiPoly(),
                             one - u,
                             one - u};
  // 1 - u t - 2 t^2 + (2u-1) t^3 + t^4 + (1-u) t^5 - (1-u) t^7
  std::vector<BiPoly> den = {one,
                             BiPoly() - u,
                             BiPoly::constant(-2),
                             u + u - one,
                             one,
                             one - u,
                             BiPoly(),
                             u - one};
  return expand_rational(num, den, order);
}

// Series counting induced k-dimensional subcubes at distance d from the
// all-zero vertex: slot 0 tracks the distance (q), slot 1 the dimension (x).
// Obtained from the down-degree series by the substitution d -> q + x.
inline SeriesTable gf_cube_census(int order) {
  if (order < 1) throw std::domain_error("gf_cube_census: order must be >= 1");
  std::vector<BiPoly> num, den;
  detail::down_series_parts(BiPoly::monomial(1, 0) + BiPoly::monomial(0, 1), num, den);
  return expand_rational(num, den, order);
}

}  // namespace runcube
