#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace eqsplit {

using BigInt = mpz_class;
using Rational = mpq_class;

unsigned euler_phi(unsigned n);

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
/// Computed by dividing x^n - 1 by Phi_d for every proper divisor d; cached.
const std::vector<BigInt>& cyclotomic_polynomial(unsigned n);

/// Element of Q(zeta_N) stored in the power basis 1, z, ..., z^(phi(N)-1)
/// of Q[x]/(Phi_N). Values are immutable; binary operations lift both
/// operands to the lcm of their conductors.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// zeta_n^k (k may be negative).
  static Cyclotomic root_of_unity(unsigned n, long k);

  /// Reduces an arbitrary-length polynomial in zeta_n modulo Phi_n.
  static Cyclotomic from_polynomial(unsigned n, std::vector<Rational> coeffs);

  unsigned conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Re-express in Q(zeta_m); requires conductor() | m.
  Cyclotomic lifted(unsigned m) const;

  /// The same number written over the smallest conductor dividing
  /// conductor() whose field contains it.
  Cyclotomic minimized() const;

  /// Complex conjugate (zeta -> zeta^-1).
  Cyclotomic conj() const;

  bool is_zero() const;
  std::optional<Rational> as_rational() const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }
  Cyclotomic divided_by(const Rational& r) const;

  /// Lexicographic comparison of coefficient vectors after lifting both to
  /// Q(zeta_m). Used only for deterministic ordering.
  static int compare_at(const Cyclotomic& a, const Cyclotomic& b, unsigned m);

  /// Text encoding "a0+a1*z^1+...@N", e.g. "-1-z^1@3" for zeta_3^2; the
  /// suffix is omitted for rationals.
  std::string encode() const;
  static Cyclotomic parse(std::string_view text);

 private:
  Cyclotomic(unsigned n, std::vector<Rational> coeffs);

  unsigned conductor_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

/// Polynomial in t with nonnegative integer coefficients (rational Betti
/// numbers). Coefficients are indexed by degree and trimmed of trailing zeros.
class PoincarePolynomial {
 public:
  using Coeff = std::uint64_t;

  PoincarePolynomial() = default;
  explicit PoincarePolynomial(std::vector<Coeff> coeffs);
  static PoincarePolynomial monomial(unsigned degree, Coeff c = 1);
  static PoincarePolynomial one() { return monomial(0); }

  Coeff coefficient(unsigned degree) const {
    return degree < coeffs_.size() ? coeffs_[degree] : 0;
  }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Highest degree with nonzero coefficient; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Coeff value_at_one() const;
  bool even_supported() const;

  /// Multiply by t^d.
  PoincarePolynomial shifted(unsigned d) const;

  friend PoincarePolynomial operator+(const PoincarePolynomial& a,
                                      const PoincarePolynomial& b);
  friend PoincarePolynomial operator*(const PoincarePolynomial& a,
                                      const PoincarePolynomial& b);
  PoincarePolynomial& operator+=(const PoincarePolynomial& b);
  friend bool operator==(const PoincarePolynomial&,
                         const PoincarePolynomial&) = default;

  /// "1 + t^2 + 2t^4"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Coeff> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const PoincarePolynomial& p);

/// Gaussian binomial [N choose m] in q = t^2: the Poincare polynomial of
/// Gr_m(C^N). Throws DomainError when m > N.
PoincarePolynomial q_binomial(unsigned N, unsigned m);

}  // namespace eqsplit
