#include "eqsplit/exactnum.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "eqsplit/error.hpp"

namespace eqsplit {

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

using IntPoly = std::vector<BigInt>;

// Exact division of a by a monic b; both low-to-high.
IntPoly divide_monic(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    BigInt c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (a[i] != 0) throw InternalError("cyclotomic division left a remainder");
  }
  return q;
}

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw DomainError("cyclotomic polynomial of order 0");
  static std::mutex mu;
  static std::map<unsigned, IntPoly> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_monic(std::move(p), cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mu);
  // std::map never invalidates references on insert.
  return cache.emplace(n, std::move(p)).first->second;
}

// ---------------------------------------------------------------------------
// Cyclotomic

Cyclotomic::Cyclotomic() : conductor_(1), coeffs_{Rational(0)} {}

Cyclotomic::Cyclotomic(long value) : conductor_(1), coeffs_{Rational(value)} {}

Cyclotomic::Cyclotomic(const Rational& value)
    : conductor_(1), coeffs_{value} {
  coeffs_[0].canonicalize();
}

// Callers may pass mpq values built from a numerator/denominator pair, which
// GMP leaves unreduced; equality compares coefficients, so reduce here.
Cyclotomic::Cyclotomic(unsigned n, std::vector<Rational> coeffs)
    : conductor_(n), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
}

Cyclotomic Cyclotomic::from_polynomial(unsigned n, std::vector<Rational> c) {
  if (n == 0) throw DomainError("conductor must be positive");
  const IntPoly& phi = cyclotomic_polynomial(n);
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = c.size(); i-- > d;) {
    Rational lead = c[i];
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) c[i - d + j] -= lead * phi[j];
  }
  c.resize(d, Rational(0));
  return Cyclotomic(n, std::move(c));
}

Cyclotomic Cyclotomic::root_of_unity(unsigned n, long k) {
  if (n == 0) throw DomainError("root of unity of order 0");
  long e = k % static_cast<long>(n);
  if (e < 0) e += n;
  std::vector<Rational> c(static_cast<std::size_t>(e) + 1, Rational(0));
  c[static_cast<std::size_t>(e)] = 1;
  return from_polynomial(n, std::move(c));
}

Cyclotomic Cyclotomic::lifted(unsigned m) const {
  if (m == conductor_) return *this;
  if (m % conductor_ != 0) {
    throw DomainError("cannot lift conductor " + std::to_string(conductor_) +
                      " to " + std::to_string(m));
  }
  const unsigned step = m / conductor_;
  std::vector<Rational> c(m, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * step] = coeffs_[i];
  return from_polynomial(m, std::move(c));
}

Cyclotomic Cyclotomic::minimized() const {
  if (auto r = as_rational()) return Cyclotomic(*r);
  const std::size_t rows = coeffs_.size();
  for (unsigned d = 2; d < conductor_; ++d) {
    if (conductor_ % d != 0) continue;
    // Solve sum_i c_i zeta_d^i = *this for c in Q^phi(d).
    const std::size_t cols = cyclotomic_polynomial(d).size() - 1;
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
    for (std::size_t i = 0; i < cols; ++i) {
      const auto basis = root_of_unity(d, static_cast<long>(i)).lifted(conductor_);
      for (std::size_t r = 0; r < rows; ++r) a[r][i] = basis.coeffs_[r];
    }
    for (std::size_t r = 0; r < rows; ++r) a[r][cols] = coeffs_[r];
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
      std::size_t p = rank;
      while (p < rows && a[p][c] == 0) ++p;
      if (p == rows) continue;
      std::swap(a[p], a[rank]);
      const Rational inv = 1 / a[rank][c];
      for (auto& x : a[rank]) x *= inv;
      for (std::size_t r = 0; r < rows; ++r) {
        if (r == rank || a[r][c] == 0) continue;
        const Rational f = a[r][c];
        for (std::size_t k = 0; k <= cols; ++k) a[r][k] -= f * a[rank][k];
      }
      pivots.push_back(c);
      ++rank;
    }
    bool consistent = true;
    for (std::size_t r = rank; r < rows; ++r) consistent = consistent && a[r][cols] == 0;
    if (!consistent) continue;
    std::vector<Rational> c(cols, Rational(0));
    for (std::size_t r = 0; r < rank; ++r) c[pivots[r]] = a[r][cols];
    return Cyclotomic(d, std::move(c));
  }
  return *this;
}

Cyclotomic Cyclotomic::conj() const {
  const unsigned n = conductor_;
  std::vector<Rational> c(n, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    c[(n - i) % n] += coeffs_[i];
  }
  return from_polynomial(n, std::move(c));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

std::optional<Rational> Cyclotomic::as_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return std::nullopt;
  }
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  auto c = coeffs_;
  for (auto& x : c) x = -x;
  return Cyclotomic(conductor_, std::move(c));
}

namespace {

unsigned common_conductor(const Cyclotomic& a, const Cyclotomic& b) {
  return std::lcm(a.conductor(), b.conductor());
}

}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  const unsigned m = common_conductor(a, b);
  Cyclotomic x = a.lifted(m);
  const Cyclotomic y = b.lifted(m);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
  return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  return a + (-b);
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == 1 && a.coeffs_[0] != 0) {
    auto c = b.coeffs_;
    for (auto& x : c) x *= a.coeffs_[0];
    return Cyclotomic(b.conductor_, std::move(c));
  }
  const unsigned m = common_conductor(a, b);
  const Cyclotomic x = a.lifted(m);
  const Cyclotomic y = b.lifted(m);
  std::vector<Rational> prod(x.coeffs_.size() + y.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
      prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  return Cyclotomic::from_polynomial(m, std::move(prod));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  const unsigned m = common_conductor(a, b);
  return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
}

Cyclotomic Cyclotomic::divided_by(const Rational& r) const {
  if (r == 0) throw DomainError("division by zero");
  auto c = coeffs_;
  for (auto& x : c) x /= r;
  return Cyclotomic(conductor_, std::move(c));
}

int Cyclotomic::compare_at(const Cyclotomic& a, const Cyclotomic& b,
                           unsigned m) {
  const auto x = a.lifted(m);
  const auto y = b.lifted(m);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    const int c = cmp(x.coeffs_[i], y.coeffs_[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string Cyclotomic::encode() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << "z^" << i;
    }
    first = false;
  }
  if (first) os << '0';
  if (conductor_ != 1) os << '@' << conductor_;
  return os.str();
}

Cyclotomic Cyclotomic::parse(std::string_view text) {
  auto at = text.rfind('@');
  unsigned n = 1;
  if (at == std::string_view::npos) {
    at = text.size();
  } else {
    try {
      n = static_cast<unsigned>(std::stoul(std::string(text.substr(at + 1))));
    } catch (const std::exception&) {
      throw InputError("bad conductor in '" + std::string(text) + "'");
    }
  }
  if (n == 0) throw InputError("conductor must be positive");

  const std::string body(text.substr(0, at));
  std::vector<Rational> poly(1, Rational(0));
  auto fail = [&]() {
    throw InputError("malformed cyclotomic value '" + std::string(text) + "'");
  };
  std::size_t pos = 0;
  auto skip_ws = [&]() {
    while (pos < body.size() && body[pos] == ' ') ++pos;
  };
  skip_ws();
  if (pos == body.size()) fail();
  while (pos < body.size()) {
    int sign = 1;
    if (body[pos] == '+' || body[pos] == '-') {
      if (body[pos] == '-') sign = -1;
      ++pos;
      skip_ws();
    }
    Rational coef(1);
    bool have_number = false;
    const std::size_t start = pos;
    while (pos < body.size() &&
           (std::isdigit(static_cast<unsigned char>(body[pos])) || body[pos] == '/')) {
      ++pos;
    }
    if (pos > start) {
      try {
        coef = Rational(body.substr(start, pos - start));
        coef.canonicalize();
      } catch (const std::exception&) {
        fail();
      }
      if (coef.get_den() == 0) fail();
      have_number = true;
    }
    std::size_t exponent = 0;
    if (pos < body.size() && body[pos] == '*') {
      if (!have_number) fail();
      ++pos;
    }
    if (pos < body.size() && body[pos] == 'z') {
      ++pos;
      exponent = 1;
      if (pos < body.size() && body[pos] == '^') {
        ++pos;
        const std::size_t es = pos;
        while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) ++pos;
        if (pos == es) fail();
        exponent = std::stoul(body.substr(es, pos - es));
      }
    } else if (!have_number) {
      fail();
    }
    skip_ws();
    if (pos < body.size() && body[pos] != '+' && body[pos] != '-') fail();
    if (poly.size() <= exponent) poly.resize(exponent + 1, Rational(0));
    poly[exponent] += sign * coef;
  }
  return from_polynomial(n, std::move(poly));
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) {
  return os << c.encode();
}

// ---------------------------------------------------------------------------
// PoincarePolynomial

PoincarePolynomial::PoincarePolynomial(std::vector<Coeff> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

PoincarePolynomial PoincarePolynomial::monomial(unsigned degree, Coeff c) {
  std::vector<Coeff> v(degree + 1, 0);
  v[degree] = c;
  return PoincarePolynomial(std::move(v));
}

void PoincarePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PoincarePolynomial::Coeff PoincarePolynomial::value_at_one() const {
  Coeff s = 0;
  for (Coeff c : coeffs_) s += c;
  return s;
}

bool PoincarePolynomial::even_supported() const {
  for (std::size_t i = 1; i < coeffs_.size(); i += 2) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

PoincarePolynomial PoincarePolynomial::shifted(unsigned d) const {
  if (coeffs_.empty()) return {};
  std::vector<Coeff> v(d, 0);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return PoincarePolynomial(std::move(v));
}

PoincarePolynomial& PoincarePolynomial::operator+=(const PoincarePolynomial& b) {
  if (b.coeffs_.size() > coeffs_.size()) coeffs_.resize(b.coeffs_.size(), 0);
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  trim();
  return *this;
}

PoincarePolynomial operator+(const PoincarePolynomial& a,
                             const PoincarePolynomial& b) {
  PoincarePolynomial r = a;
  r += b;
  return r;
}

PoincarePolynomial operator*(const PoincarePolynomial& a,
                             const PoincarePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<PoincarePolynomial::Coeff> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return PoincarePolynomial(std::move(v));
}

std::string PoincarePolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    const Coeff c = coeffs_[d];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (d == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << 't';
    if (d != 1) os << '^' << d;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PoincarePolynomial& p) {
  return os << p.to_string();
}

PoincarePolynomial q_binomial(unsigned N, unsigned m) {
  if (m > N) {
    throw DomainError("q_binomial: m = " + std::to_string(m) + " exceeds N = " +
                      std::to_string(N));
  }
  // Pascal row by row: [n, j] = [n-1, j-1] + q^j [n-1, j], q = t^2.
  std::vector<PoincarePolynomial> row(m + 1);
  row[0] = PoincarePolynomial::one();
  for (unsigned n = 1; n <= N; ++n) {
    for (unsigned j = std::min(n, m); j >= 1; --j) {
      row[j] = row[j - 1] + row[j].shifted(2 * j);
    }
  }
  return row[m];
}

}  // namespace eqsplit
