#include "csobstruct/exactq.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace csobstruct {

BigInt big(std::int64_t v) {
  static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 platform required");
  return BigInt(static_cast<long>(v));
}

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  const bool neg = !s.empty() && s.front() == '-';
  const std::string digits = neg ? s.substr(1) : s;
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](unsigned char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return BigInt(s, 10);
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (sgn(b) <= 0) throw std::domain_error("floor_div: divisor must be positive");
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  if (sgn(m) <= 0) throw std::domain_error("mod_floor: modulus must be positive");
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// ---------------------------------------------------------------- Rational

Rational::Rational(std::int64_t n) : q_(big(n)) {}

Rational::Rational(const BigInt& n) : q_(n) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (sgn(denominator) == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  return Rational(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

BigInt Rational::floor() const { return floor_div(q_.get_num(), q_.get_den()); }

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
  return Rational(q_.get_den(), q_.get_num());
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  q_ += rhs.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  q_ -= rhs.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  q_ *= rhs.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= rhs.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

CsValue normalize_mod(const Rational& r, Modulus m) {
  if (m == Modulus::Mod1) return {r - Rational(r.floor()), m};
  const Rational quarter = r / Rational(4);
  Rational rep = r - Rational(4) * Rational(quarter.floor());
  if (rep.is_zero()) rep = Rational(4);
  return {rep, m};
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : IntMatrix(rows, cols, std::vector<BigInt>(rows * cols, BigInt(0))) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("IntMatrix: dimensions must be positive");
  if (data_.size() != rows * cols) {
    throw std::invalid_argument("IntMatrix: expected " + std::to_string(rows * cols) +
                                " entries, got " + std::to_string(data_.size()));
  }
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<BigInt> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("IntMatrix: ragged rows");
    for (auto v : row) entries.push_back(big(v));
  }
  return IntMatrix(r, c, std::move(entries));
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<BigInt>& diag) {
  IntMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

IntMatrix IntMatrix::parse(std::istream& in) {
  long long rows = 0;
  long long cols = 0;
  if (!(in >> rows >> cols) || rows <= 0 || cols <= 0) {
    throw std::invalid_argument("matrix input: expected positive 'rows cols' header");
  }
  std::vector<BigInt> entries;
  entries.reserve(static_cast<std::size_t>(rows * cols));
  std::string token;
  while (static_cast<long long>(entries.size()) < rows * cols && in >> token) {
    entries.push_back(parse_bigint(token));
  }
  if (static_cast<long long>(entries.size()) != rows * cols) {
    throw std::invalid_argument("matrix input: expected " + std::to_string(rows * cols) +
                                " entries, got " + std::to_string(entries.size()));
  }
  if (in >> token) throw std::invalid_argument("matrix input: trailing data '" + token + "'");
  return IntMatrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols),
                   std::move(entries));
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

BigInt determinant(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && sgn(a(swap, k)) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------- Smith form

namespace {

BigInt tdiv(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[dst] += factor * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& factor) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += factor * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& factor) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += factor * m(i, src);
}

}  // namespace

SmithDecomposition smith_decompose(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t limit = std::min(m.rows(), m.cols());
  std::size_t t = 0;

  while (t < limit) {
    // Pivot: smallest |entry| in the trailing block, ties to lowest (row, col).
    bool found = false;
    std::size_t pr = 0;
    std::size_t pc = 0;
    BigInt best;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j) {
        if (sgn(a(i, j)) == 0) continue;
        BigInt mag = ::abs(a(i, j));
        if (!found || mag < best) {
          found = true;
          best = mag;
          pr = i;
          pc = j;
        }
      }
    if (!found) break;

    swap_rows(a, t, pr);
    swap_rows(u, t, pr);
    swap_cols(a, t, pc);
    swap_cols(v, t, pc);

    bool clean = true;
    for (std::size_t i = t + 1; i < a.rows(); ++i) {
      if (sgn(a(i, t)) == 0) continue;
      const BigInt q = -tdiv(a(i, t), a(t, t));
      add_row(a, i, t, q);
      add_row(u, i, t, q);
      if (sgn(a(i, t)) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < a.cols(); ++j) {
      if (sgn(a(t, j)) == 0) continue;
      const BigInt q = -tdiv(a(t, j), a(t, t));
      add_col(a, j, t, q);
      add_col(v, j, t, q);
      if (sgn(a(t, j)) != 0) clean = false;
    }
    if (!clean) continue;  // a smaller remainder appeared: re-pivot

    // Divisibility: fold an offending row into the pivot row and retry.
    bool divides = true;
    for (std::size_t i = t + 1; i < a.rows() && divides; ++i)
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
          add_row(a, t, i, BigInt(1));
          add_row(u, t, i, BigInt(1));
          divides = false;
          break;
        }
      }
    if (!divides) continue;

    if (sgn(a(t, t)) < 0) {
      add_row(a, t, t, BigInt(-2));
      add_row(u, t, t, BigInt(-2));
    }
    ++t;
  }

  SmithForm form;
  form.rank = t;
  for (std::size_t i = 0; i < t; ++i) form.invariant_factors.push_back(a(i, i));
  return {std::move(u), std::move(a), std::move(v), std::move(form)};
}

SmithForm smith_normal_form(const IntMatrix& m) { return smith_decompose(m).form; }

// ---------------------------------------------------------------- groups

bool AbelianGroup::is_cyclic() const {
  return (torsion.size() == 1 && free_rank == 0) || (torsion.empty() && free_rank <= 1);
}

std::optional<BigInt> AbelianGroup::order() const {
  if (free_rank > 0) return std::nullopt;
  BigInt n = 1;
  for (const auto& t : torsion) n *= t;
  return n;
}

std::string AbelianGroup::str() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t.get_str();
    first = false;
  }
  if (free_rank > 0) {
    os << (first ? "" : " + ") << "Z";
    if (free_rank > 1) os << "^" << free_rank;
  }
  return os.str();
}

AbelianGroup h1_presented(const IntMatrix& m) {
  const SmithForm f = smith_normal_form(m);
  AbelianGroup g;
  for (const auto& d : f.invariant_factors)
    if (d != 1) g.torsion.push_back(d);
  g.free_rank = m.cols() - f.rank;
  return g;
}

// ---------------------------------------------------------------- CRT

std::optional<Congruence> crt_solve(const std::vector<Congruence>& system) {
  BigInt x = 0;
  BigInt mod = 1;
  for (const auto& c : system) {
    if (sgn(c.modulus) <= 0) throw std::invalid_argument("crt_solve: moduli must be positive");
    const BigInt r = mod_floor(c.residue, c.modulus);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), mod.get_mpz_t(), c.modulus.get_mpz_t());
    const BigInt diff = r - x;
    if (!mpz_divisible_p(diff.get_mpz_t(), g.get_mpz_t())) return std::nullopt;
    const BigInt m1 = mod / g;
    const BigInt m2 = c.modulus / g;
    BigInt inv = 0;
    if (m2 == 1) {
      inv = 0;
    } else if (mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t()) == 0) {
      throw std::logic_error("crt_solve: reduced moduli not coprime");
    }
    const BigInt k = mod_floor((diff / g) * inv, m2);
    const BigInt lcm = mod * m2;
    x = mod_floor(x + mod * k, lcm);
    mod = lcm;
  }
  return Congruence{x, mod};
}

}  // namespace csobstruct
