#include "ehalg/field.hpp"

#include <cctype>
#include <charconv>

#include "ehalg/error.hpp"

namespace ehalg {

namespace {

bool is_prime_number(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  require(is_prime_number(p), ErrorKind::InvalidArgument, "field characteristic " + std::to_string(p) + " is not prime");
  require(p < (1u << 31), ErrorKind::InvalidArgument, "prime " + std::to_string(p) + " is too large");
  return Field(Kind::Prime, p);
}

Field Field::rationals() { return Field(Kind::Rational, 0); }

Field Field::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s == "Q" || s == "QQ") return rationals();
  if (s.substr(0, 3) == "GF(" && s.size() > 4 && s.back() == ')') {
    s = s.substr(3, s.size() - 4);
  } else if (!s.empty() && s.front() == 'F') {
    s.remove_prefix(1);
    if (!s.empty() && s.front() == '_') s.remove_prefix(1);
  } else {
    fail(ErrorKind::Parse, "unknown field '" + std::string(text) + "' (expected Q or F p)");
  }
  s = trim(s);
  std::uint32_t p = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), p);
  require(ec == std::errc() && ptr == s.data() + s.size(), ErrorKind::Parse,
          "unknown field '" + std::string(text) + "' (expected Q or F p)");
  return prime(p);
}

std::string Field::name() const { return is_prime() ? "F" + std::to_string(p_) : "Q"; }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t n) const {
  if (is_prime()) return Scalar(mod(n, p_));
  return Scalar(mpq_class(static_cast<long>(n)));
}

Scalar Field::from_fraction(std::int64_t num, std::int64_t den) const {
  require(den != 0, ErrorKind::InvalidArgument, "zero denominator");
  if (is_prime()) return mul(from_int(num), inv(from_int(den)));
  mpq_class q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (is_prime()) return Scalar(mod(a.residue() + b.residue(), p_));
  return Scalar(mpq_class(a.rational() + b.rational()));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (is_prime()) return Scalar(mod(a.residue() - b.residue(), p_));
  return Scalar(mpq_class(a.rational() - b.rational()));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (is_prime()) return Scalar(mod(a.residue() * b.residue(), p_));
  return Scalar(mpq_class(a.rational() * b.rational()));
}

Scalar Field::neg(const Scalar& a) const {
  if (is_prime()) return Scalar(mod(-a.residue(), p_));
  return Scalar(mpq_class(-a.rational()));
}

Scalar Field::inv(const Scalar& a) const {
  require(!is_zero(a), ErrorKind::InvalidArgument, "division by zero");
  if (!is_prime()) return Scalar(mpq_class(1 / a.rational()));
  // Fermat: a^(p-2)
  std::int64_t result = 1, base = a.residue(), e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return Scalar(result);
}

bool Field::is_zero(const Scalar& a) const { return is_prime() ? a.residue() == 0 : sgn(a.rational()) == 0; }

bool Field::is_one(const Scalar& a) const { return is_prime() ? a.residue() == 1 : a.rational() == 1; }

std::string Field::format(const Scalar& a, bool fraction_form) const {
  if (is_prime()) return std::to_string(a.residue());
  const mpq_class& q = a.rational();
  if (fraction_form) return q.get_num().get_str() + "/" + q.get_den().get_str();
  return q.get_str();
}

Scalar Field::parse_scalar(std::string_view text) const {
  std::string s(trim(text));
  require(!s.empty(), ErrorKind::Parse, "empty scalar");
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  mpz_class n, d;
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  require(valid_int(num) && valid_int(den), ErrorKind::Parse, "malformed scalar '" + s + "'");
  n.set_str(num[0] == '+' ? num.substr(1) : num, 10);
  d.set_str(den[0] == '+' ? den.substr(1) : den, 10);
  require(d != 0, ErrorKind::Parse, "zero denominator in scalar '" + s + "'");
  if (!is_prime()) {
    mpq_class q(n, d);
    q.canonicalize();
    return Scalar(std::move(q));
  }
  mpz_class pn = n % p_, pd = d % p_;
  if (pn < 0) pn += p_;
  if (pd < 0) pd += p_;
  require(pd != 0, ErrorKind::Parse, "denominator of '" + s + "' vanishes in " + name());
  return mul(Scalar(static_cast<std::int64_t>(pn.get_si())), inv(Scalar(static_cast<std::int64_t>(pd.get_si()))));
}

Vec Field::unit_vec(std::size_t n, std::size_t i) const {
  Vec v = zero_vec(n);
  v.at(i) = one();
  return v;
}

Vec vec_add(const Field& f, const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b.at(i));
  return out;
}

Vec vec_sub(const Field& f, const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b.at(i));
  return out;
}

Vec vec_scale(const Field& f, const Scalar& c, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
  return out;
}

void vec_axpy(const Field& f, Vec& y, const Scalar& c, const Vec& x) {
  if (f.is_zero(c)) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!f.is_zero(x.at(i))) y[i] = f.add(y[i], f.mul(c, x[i]));
}

bool vec_is_zero(const Field& f, const Vec& a) {
  for (const auto& x : a)
    if (!f.is_zero(x)) return false;
  return true;
}

std::string format_vec(const Field& f, const Vec& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) out += (i ? ", " : "") + f.format(a[i]);
  return out + ")";
}

}  // namespace ehalg
