#pragma once

/**
 * @file exactq.hpp
 * @brief Exact integer and rational arithmetic used by every other module.
 *
 * Integers are GMP `mpz_class` values; `Rational` keeps a canonical
 * reduced form (denominator > 0, zero stored as 0/1). Chern-Simons values
 * live in `CsValue`, a residue class modulo 1 or 4 with a fixed
 * representative range: [0,1) for Mod1 and (0,4] for Mod4, so the trivial
 * connection reads as 4 rather than 0.
 *
 * Nothing in this header touches floating point.
 */

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace csobstruct {

using BigInt = mpz_class;

/// Lossless conversion from a 64-bit integer (gmpxx has no long long ctor).
BigInt big(std::int64_t v);

/// Parses a decimal integer with optional sign; throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);

/// Floor division for a positive divisor.
BigInt floor_div(const BigInt& a, const BigInt& b);

/// Least non-negative residue of a modulo m (m > 0).
BigInt mod_floor(const BigInt& a, const BigInt& m);

class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n);  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Accepts "n" or "n/d" with optional leading sign.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  BigInt floor() const;
  Rational abs() const;
  Rational reciprocal() const;
  double to_double() const { return q_.get_d(); }

  /// "num/den" in lowest terms, or just "num" for integers.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

enum class Modulus { Mod1, Mod4 };

/// A Chern-Simons value as a residue class with its canonical representative.
struct CsValue {
  Rational value;
  Modulus modulus = Modulus::Mod1;

  std::string str() const { return value.str(); }
  friend bool operator==(const CsValue&, const CsValue&) = default;
};

/// Representative of r in [0,1) (Mod1) or (0,4] (Mod4).
CsValue normalize_mod(const Rational& r, Modulus m);

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<BigInt>& diag);

  /// Reads "rows cols" followed by rows*cols whitespace-separated integers.
  static IntMatrix parse(std::istream& in);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> data_;
};

/// Exact determinant via fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& m);

struct SmithForm {
  std::vector<BigInt> invariant_factors;  // positive, each divides the next
  std::size_t rank = 0;
};

/// U * M * V = D with U, V unimodular and D the Smith diagonal.
struct SmithDecomposition {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
  SmithForm form;
};

SmithDecomposition smith_decompose(const IntMatrix& m);
SmithForm smith_normal_form(const IntMatrix& m);

/// Finitely generated abelian group: Z/t1 + ... + Z/tk + Z^free_rank.
struct AbelianGroup {
  std::vector<BigInt> torsion;
  std::size_t free_rank = 0;

  bool is_trivial() const { return torsion.empty() && free_rank == 0; }
  bool is_cyclic() const;
  /// Order when finite, nullopt for infinite groups.
  std::optional<BigInt> order() const;
  std::string str() const;
};

/// Group with generators = columns and relations = rows of the matrix.
AbelianGroup h1_presented(const IntMatrix& m);

struct Congruence {
  BigInt residue;
  BigInt modulus;
  friend bool operator==(const Congruence&, const Congruence&) = default;
};

/// Solves a system of congruences with arbitrary (not necessarily coprime)
/// positive moduli. Returns the solution modulo the lcm, or nullopt if the
/// system is inconsistent.
std::optional<Congruence> crt_solve(const std::vector<Congruence>& system);

}  // namespace csobstruct
