#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dunkl {

/// Hard cap on the number of variables a polynomial may use.  The library
/// targets low-rank product structures, so a small fixed bound keeps the
/// monomial key trivially copyable and cheap to compare.
inline constexpr int kMaxVars = 4;

using Complex = std::complex<double>;

/// Monomial exponent vector.  Unused slots stay zero, so equality and
/// ordering can ignore the actual variable count.
struct Exponents {
  std::array<int, kMaxVars> e{};

  int total_degree() const {
    int d = 0;
    for (int v : e) d += v;
    return d;
  }
  int operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return e[static_cast<std::size_t>(i)]; }
  bool operator==(const Exponents&) const = default;
};

/// Graded lexicographic order: first by total degree, ties broken
/// lexicographically on the exponent vector.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int da = a.total_degree();
    const int db = b.total_degree();
    if (da != db) return da < db;
    return a.e < b.e;
  }
};

/// Sparse multivariate polynomial with complex coefficients.  Terms live in a
/// map keyed by exponent vector in graded-lex order, which fixes the term
/// traversal order everywhere (evaluation, serialization, norms).
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Complex, GradedLex>;

  Polynomial() : nvars_(0) {}
  explicit Polynomial(int nvars) : nvars_(check_vars(nvars)) {}

  static Polynomial constant(int nvars, Complex c) {
    Polynomial p(nvars);
    if (c != 0.0) p.terms_[Exponents{}] = c;
    return p;
  }
  static Polynomial monomial(int nvars, const Exponents& ex, Complex c) {
    Polynomial p(nvars);
    for (int i = 0; i < kMaxVars; ++i) {
      if (ex[i] < 0) throw std::invalid_argument("Polynomial: negative exponent");
      if (i >= nvars && ex[i] != 0)
        throw std::invalid_argument("Polynomial: exponent outside variable range");
    }
    if (c != 0.0) p.terms_[ex] = c;
    return p;
  }

  int vars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first.total_degree();
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.total_degree();
    return terms_.rbegin()->first.total_degree() == d;
  }

  Complex coefficient(const Exponents& ex) const {
    auto it = terms_.find(ex);
    return it == terms_.end() ? Complex{0.0} : it->second;
  }

  void add_term(const Exponents& ex, Complex c) {
    if (c == 0.0) return;
    auto [it, inserted] = terms_.try_emplace(ex, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0.0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    adopt_vars(o);
    for (const auto& [ex, c] : o.terms_) add_term(ex, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    adopt_vars(o);
    for (const auto& [ex, c] : o.terms_) add_term(ex, -c);
    return *this;
  }
  Polynomial& operator*=(Complex s) {
    if (s == 0.0) {
      terms_.clear();
      return *this;
    }
    for (auto& [ex, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, Complex s) { return a *= s; }
  friend Polynomial operator*(Complex s, Polynomial a) { return a *= s; }

  Polynomial operator*(const Polynomial& o) const {
    if (nvars_ != o.nvars_)
      throw std::invalid_argument("Polynomial: mixed variable counts");
    Polynomial r(nvars_);
    for (const auto& [ea, ca] : terms_)
      for (const auto& [eb, cb] : o.terms_) {
        Exponents ex = ea;
        for (int i = 0; i < nvars_; ++i) ex[i] += eb[i];
        r.add_term(ex, ca * cb);
      }
    return r;
  }

  /// Partial derivative in variable j.
  Polynomial derivative(int j) const {
    check_var_index(j);
    Polynomial r(nvars_);
    for (const auto& [ex, c] : terms_) {
      if (ex[j] == 0) continue;
      Exponents e2 = ex;
      e2[j] -= 1;
      r.add_term(e2, c * static_cast<double>(ex[j]));
    }
    return r;
  }

  /// Composition with the sign flip x_j -> -x_j.  Terms with odd exponent in
  /// variable j change sign; the operation is exact.
  Polynomial sign_flip(int j) const {
    check_var_index(j);
    Polynomial r(nvars_);
    for (const auto& [ex, c] : terms_) r.terms_[ex] = (ex[j] % 2 != 0) ? -c : c;
    return r;
  }

  /// Exact division by x_j.  Every term must contain x_j, otherwise the
  /// quotient would not be a polynomial and we refuse.
  Polynomial divide_coordinate(int j) const {
    check_var_index(j);
    Polynomial r(nvars_);
    for (const auto& [ex, c] : terms_) {
      if (ex[j] == 0)
        throw std::domain_error("Polynomial: term without x_" + std::to_string(j) +
                                " in exact coordinate division");
      Exponents e2 = ex;
      e2[j] -= 1;
      r.terms_[e2] = c;
    }
    return r;
  }

  /// Multiplication by x_j^power (cheap exponent shift).
  Polynomial shift_coordinate(int j, int power) const {
    check_var_index(j);
    if (power < 0) throw std::invalid_argument("Polynomial: negative shift power");
    Polynomial r(nvars_);
    for (const auto& [ex, c] : terms_) {
      Exponents e2 = ex;
      e2[j] += power;
      r.terms_[e2] = c;
    }
    return r;
  }

  /// Coefficient-wise complex conjugation.
  Polynomial conjugate() const {
    Polynomial r(nvars_);
    for (const auto& [ex, c] : terms_) r.terms_[ex] = std::conj(c);
    return r;
  }

  Complex eval(std::span<const Complex> x) const {
    if (static_cast<int>(x.size()) != nvars_)
      throw std::invalid_argument("Polynomial::eval: point dimension mismatch");
    Complex sum = 0.0;
    for (const auto& [ex, c] : terms_) {
      Complex t = c;
      for (int i = 0; i < nvars_; ++i) t *= int_pow(x[static_cast<std::size_t>(i)], ex[i]);
      sum += t;
    }
    return sum;
  }

  double eval_real(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != nvars_)
      throw std::invalid_argument("Polynomial::eval: point dimension mismatch");
    double sum = 0.0;
    for (const auto& [ex, c] : terms_) {
      double t = c.real();
      for (int i = 0; i < nvars_; ++i) t *= int_pow(x[static_cast<std::size_t>(i)], ex[i]);
      sum += t;
    }
    return sum;
  }

  /// Euclidean norm of the coefficient vector.
  double coefficient_norm() const {
    double s = 0.0;
    for (const auto& [ex, c] : terms_) s += std::norm(c);
    return std::sqrt(s);
  }

  /// Largest coefficient magnitude; 0 for the zero polynomial.
  double max_coefficient() const {
    double m = 0.0;
    for (const auto& [ex, c] : terms_) m = std::max(m, std::abs(c));
    return m;
  }

 private:
  static int check_vars(int nvars) {
    if (nvars < 1 || nvars > kMaxVars)
      throw std::invalid_argument("Polynomial: variable count out of range");
    return nvars;
  }
  void check_var_index(int j) const {
    if (j < 0 || j >= nvars_)
      throw std::invalid_argument("Polynomial: variable index out of range");
  }
  /// Default-constructed (0-variable) polynomials silently adopt the other
  /// operand's variable count so accumulator patterns stay natural.
  void adopt_vars(const Polynomial& o) {
    if (nvars_ == 0) nvars_ = o.nvars_;
    if (o.nvars_ != 0 && nvars_ != o.nvars_)
      throw std::invalid_argument("Polynomial: mixed variable counts");
  }
  template <class T>
  static T int_pow(T base, int p) {
    T r{1.0};
    while (p > 0) {
      if (p & 1) r *= base;
      base *= base;
      p >>= 1;
    }
    return r;
  }

  int nvars_;
  TermMap terms_;
};

}  // namespace dunkl
