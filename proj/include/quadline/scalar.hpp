#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace quadline {

// Coordinate field: the rationals or a prime field F_p with p an odd prime.
class FieldSpec
{
public:
  enum class Kind
  {
    Rational,
    Prime
  };

  // Largest supported characteristic; keeps residue products inside 64 bits.
  static constexpr std::uint32_t max_prime = 2147483647u;

  static FieldSpec rational() { return FieldSpec{}; }

  // Throws ParseError unless p is an odd prime no larger than max_prime.
  static FieldSpec prime(std::uint64_t p);

  // Accepts "rational" or "f<p>" (e.g. "f7").
  static FieldSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  // Characteristic; 0 for the rationals.
  std::uint32_t characteristic() const { return p_; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
  friend class Scalar;

  FieldSpec() = default;
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_ = Kind::Rational;
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

// Immutable element of a FieldSpec. Rationals are kept in lowest terms with a
// positive denominator; residues live in [0, p).
//
// A default-constructed Scalar is the rational zero.
class Scalar
{
public:
  Scalar() : value_(mpq_class(0)) {}

  static Scalar rational(const mpq_class& q);
  static Scalar rational(long num, long den = 1);
  static Scalar residue(std::int64_t v, std::uint32_t p);
  // The integer n read in `field`.
  static Scalar from_int(const FieldSpec& field, long n);
  static Scalar zero(const FieldSpec& field) { return from_int(field, 0); }
  static Scalar one(const FieldSpec& field) { return from_int(field, 1); }

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  // Throws ZeroDivisor on zero.
  Scalar inverse() const;

  // Smaller residue over F_p, positive root over Q; nullopt for non-squares.
  std::optional<Scalar> sqrt() const;

  // Re-establishes canonical form; a no-op for every value built through the
  // public API.
  Scalar normalized() const;

  // Residue in [0, p); only valid over a prime field.
  std::uint32_t residue_value() const;
  // Only valid over the rationals.
  const mpq_class& rational_value() const;

  std::string to_string() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  // Exact equality; values from different fields compare unequal.
  friend bool operator==(const Scalar& a, const Scalar& b);

  // Total order used for deterministic output: numeric order over Q, residue
  // order over F_p. Not a field order.
  friend bool canonical_less(const Scalar& a, const Scalar& b);

private:
  struct Residue
  {
    std::uint32_t value;
    std::uint32_t p;
    friend bool operator==(const Residue&, const Residue&) = default;
  };

  explicit Scalar(mpq_class q) : value_(std::move(q)) {}
  explicit Scalar(Residue r) : value_(r) {}

  std::variant<mpq_class, Residue> value_;
};

enum class ArithOp
{
  Add,
  Sub,
  Mul,
  Div
};

// Throws FieldMismatch for operands from different fields, ZeroDivisor for
// division by zero.
Scalar arith(const Scalar& a, const Scalar& b, ArithOp op);

// `n` or `n/d` with optional leading '-' over Q; a decimal residue (reduced
// mod p, optional '-') over F_p.
Scalar parse_scalar(const FieldSpec& field, std::string_view text);

}  // namespace quadline
