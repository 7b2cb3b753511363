#include "quadline/scalar.hpp"

#include "quadline/errors.hpp"

namespace quadline {

namespace {

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp, std::uint32_t p)
{
  std::uint32_t result = 1 % p;
  while (exp > 0)
  {
    if (exp & 1)
      result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

// Tonelli-Shanks. `a` must be a nonzero quadratic residue mod p.
std::uint32_t tonelli_shanks(std::uint32_t a, std::uint32_t p)
{
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0)
  {
    q >>= 1;
    ++s;
  }
  std::uint32_t z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1)
    ++z;

  std::uint32_t m = s;
  std::uint32_t c = pow_mod(z, q, p);
  std::uint32_t t = pow_mod(a, q, p);
  std::uint32_t r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1)
  {
    std::uint32_t i = 0;
    std::uint32_t t2 = t;
    while (t2 != 1)
    {
      t2 = mul_mod(t2, t2, p);
      ++i;
    }
    std::uint32_t b = c;
    for (std::uint32_t j = 0; j + i + 1 < m; ++j)
      b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  return r;
}

bool is_decimal(std::string_view s)
{
  if (s.empty())
    return false;
  for (char ch : s)
    if (ch < '0' || ch > '9')
      return false;
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p)
{
  if (p == 2)
    throw ParseError("characteristic 2 is not supported");
  if (p > max_prime)
    throw ParseError("prime " + std::to_string(p) + " exceeds " +
                     std::to_string(max_prime));
  if (!is_prime(p))
    throw ParseError(std::to_string(p) + " is not a prime");
  return FieldSpec{Kind::Prime, static_cast<std::uint32_t>(p)};
}

FieldSpec FieldSpec::parse(std::string_view text)
{
  if (text == "rational")
    return rational();
  if (text.size() >= 2 && text.front() == 'f' && is_decimal(text.substr(1)))
  {
    const auto digits = text.substr(1);
    if (digits.size() > 10)
      throw ParseError("field characteristic too large: " + std::string(text));
    return prime(std::stoull(std::string(digits)));
  }
  throw ParseError("unknown field '" + std::string(text) +
                   "' (expected 'rational' or 'f<p>')");
}

std::string FieldSpec::to_string() const
{
  return is_rational() ? "rational" : "f" + std::to_string(p_);
}

Scalar Scalar::rational(const mpq_class& q)
{
  mpq_class copy(q);
  copy.canonicalize();
  return Scalar(std::move(copy));
}

Scalar Scalar::rational(long num, long den)
{
  if (den == 0)
    throw ZeroDivisor();
  return rational(mpq_class(num, den));
}

Scalar Scalar::residue(std::int64_t v, std::uint32_t p)
{
  auto m = v % static_cast<std::int64_t>(p);
  if (m < 0)
    m += p;
  return Scalar(Residue{static_cast<std::uint32_t>(m), p});
}

Scalar Scalar::from_int(const FieldSpec& field, long n)
{
  return field.is_rational() ? rational(n)
                             : residue(n, field.characteristic());
}

FieldSpec Scalar::field() const
{
  if (const auto* r = std::get_if<Residue>(&value_))
    return FieldSpec{FieldSpec::Kind::Prime, r->p};
  return FieldSpec::rational();
}

bool Scalar::is_zero() const
{
  if (const auto* r = std::get_if<Residue>(&value_))
    return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const
{
  if (const auto* r = std::get_if<Residue>(&value_))
    return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

Scalar Scalar::inverse() const
{
  if (is_zero())
    throw ZeroDivisor();
  if (const auto* r = std::get_if<Residue>(&value_))
    return Scalar(Residue{pow_mod(r->value, r->p - 2, r->p), r->p});
  mpq_class inv = 1 / std::get<mpq_class>(value_);
  inv.canonicalize();
  return Scalar(std::move(inv));
}

std::optional<Scalar> Scalar::sqrt() const
{
  if (const auto* r = std::get_if<Residue>(&value_))
  {
    const auto p = r->p;
    if (r->value == 0)
      return *this;
    if (pow_mod(r->value, (p - 1) / 2, p) != 1)
      return std::nullopt;
    auto root = tonelli_shanks(r->value, p);
    if (p - root < root)
      root = p - root;
    return Scalar(Residue{root, p});
  }
  const auto& q = std::get<mpq_class>(value_);
  if (sgn(q) < 0)
    return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) ||
      !mpz_perfect_square_p(q.get_den_mpz_t()))
    return std::nullopt;
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  return rational(mpq_class(num, den));
}

Scalar Scalar::normalized() const
{
  if (const auto* r = std::get_if<Residue>(&value_))
    return Scalar(Residue{r->value % r->p, r->p});
  return rational(std::get<mpq_class>(value_));
}

std::uint32_t Scalar::residue_value() const
{
  if (const auto* r = std::get_if<Residue>(&value_))
    return r->value;
  throw DomainError("residue_value on a rational scalar");
}

const mpq_class& Scalar::rational_value() const
{
  if (const auto* q = std::get_if<mpq_class>(&value_))
    return *q;
  throw DomainError("rational_value on a prime-field scalar");
}

std::string Scalar::to_string() const
{
  if (const auto* r = std::get_if<Residue>(&value_))
    return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

Scalar Scalar::operator-() const
{
  if (const auto* r = std::get_if<Residue>(&value_))
    return Scalar(Residue{r->value == 0 ? 0 : r->p - r->value, r->p});
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

namespace {

void require_same_field(const Scalar& a, const Scalar& b)
{
  if (!(a.field() == b.field()))
    throw FieldMismatch(a.field().to_string(), b.field().to_string());
}

}  // namespace

Scalar arith(const Scalar& a, const Scalar& b, ArithOp op)
{
  switch (op)
  {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw DomainError("unknown arithmetic operation");
}

Scalar operator+(const Scalar& a, const Scalar& b)
{
  const auto* ra = std::get_if<Scalar::Residue>(&a.value_);
  const auto* rb = std::get_if<Scalar::Residue>(&b.value_);
  if (ra && rb && ra->p == rb->p)
  {
    auto s = static_cast<std::uint64_t>(ra->value) + rb->value;
    return Scalar(Scalar::Residue{static_cast<std::uint32_t>(s % ra->p), ra->p});
  }
  if (!ra && !rb)
    return Scalar(mpq_class(std::get<mpq_class>(a.value_) +
                            std::get<mpq_class>(b.value_)));
  require_same_field(a, b);
  return {};
}

Scalar operator-(const Scalar& a, const Scalar& b)
{
  const auto* ra = std::get_if<Scalar::Residue>(&a.value_);
  const auto* rb = std::get_if<Scalar::Residue>(&b.value_);
  if (ra && rb && ra->p == rb->p)
  {
    auto s = static_cast<std::uint64_t>(ra->value) + ra->p - rb->value;
    return Scalar(Scalar::Residue{static_cast<std::uint32_t>(s % ra->p), ra->p});
  }
  if (!ra && !rb)
    return Scalar(mpq_class(std::get<mpq_class>(a.value_) -
                            std::get<mpq_class>(b.value_)));
  require_same_field(a, b);
  return {};
}

Scalar operator*(const Scalar& a, const Scalar& b)
{
  const auto* ra = std::get_if<Scalar::Residue>(&a.value_);
  const auto* rb = std::get_if<Scalar::Residue>(&b.value_);
  if (ra && rb && ra->p == rb->p)
    return Scalar(Scalar::Residue{mul_mod(ra->value, rb->value, ra->p), ra->p});
  if (!ra && !rb)
    return Scalar(mpq_class(std::get<mpq_class>(a.value_) *
                            std::get<mpq_class>(b.value_)));
  require_same_field(a, b);
  return {};
}

Scalar operator/(const Scalar& a, const Scalar& b)
{
  require_same_field(a, b);
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b)
{
  return a.value_ == b.value_;
}

bool canonical_less(const Scalar& a, const Scalar& b)
{
  require_same_field(a, b);
  if (const auto* ra = std::get_if<Scalar::Residue>(&a.value_))
    return ra->value < std::get<Scalar::Residue>(b.value_).value;
  return std::get<mpq_class>(a.value_) < std::get<mpq_class>(b.value_);
}

Scalar parse_scalar(const FieldSpec& field, std::string_view text)
{
  auto fail = [&]() -> ParseError {
    return ParseError("malformed scalar '" + std::string(text) + "' for field " +
                      field.to_string());
  };
  if (text.empty())
    throw fail();

  if (!field.is_rational())
  {
    const auto p = field.characteristic();
    const bool negative = text.front() == '-';
    const auto digits = negative ? text.substr(1) : text;
    if (!is_decimal(digits))
      throw fail();
    // Reduce digit by digit so arbitrarily long literals stay exact.
    std::uint64_t r = 0;
    for (char ch : digits)
      r = (r * 10 + static_cast<std::uint64_t>(ch - '0')) % p;
    auto s = Scalar::residue(static_cast<std::int64_t>(r), p);
    return negative ? -s : s;
  }

  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  const auto num_digits = !num_text.empty() && num_text.front() == '-'
                              ? num_text.substr(1)
                              : num_text;
  if (!is_decimal(num_digits))
    throw fail();
  mpz_class num(std::string(num_text), 10);
  mpz_class den = 1;
  if (slash != std::string_view::npos)
  {
    const auto den_text = text.substr(slash + 1);
    if (!is_decimal(den_text))
      throw fail();
    den = mpz_class(std::string(den_text), 10);
    if (den == 0)
      throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return Scalar::rational(mpq_class(num, den));
}

}  // namespace quadline
