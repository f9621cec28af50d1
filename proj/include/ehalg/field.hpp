#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace ehalg {

// A field element. Prime-field elements are residues in [0,p); rationals are
// reduced GMP fractions. The owning Field decides which alternative is live.
class Scalar {
 public:
  Scalar() : value_(std::int64_t{0}) {}
  explicit Scalar(std::int64_t residue) : value_(residue) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}

  bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }
  std::int64_t residue() const { return std::get<std::int64_t>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.value_.index() != b.value_.index()) return false;
    if (a.is_rational()) return a.rational() == b.rational();
    return a.residue() == b.residue();
  }

 private:
  std::variant<std::int64_t, mpq_class> value_;
};

using Vec = std::vector<Scalar>;

class Field {
 public:
  enum class Kind { Prime, Rational };

  static Field prime(std::uint32_t p);
  static Field rationals();
  // Accepts "Q", "F p", "Fp", "F_p" and "GF(p)".
  static Field parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  bool is_prime() const { return kind_ == Kind::Prime; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t n) const;
  Scalar from_fraction(std::int64_t num, std::int64_t den) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;

  // Rationals print as "num/den" when `fraction_form` is set, otherwise in
  // GMP's shortest form; residues always print as integers.
  std::string format(const Scalar& a, bool fraction_form = false) const;
  Scalar parse_scalar(std::string_view text) const;

  Vec zero_vec(std::size_t n) const { return Vec(n, zero()); }
  Vec unit_vec(std::size_t n, std::size_t i) const;

  friend bool operator==(const Field& a, const Field& b) { return a.kind_ == b.kind_ && a.p_ == b.p_; }

 private:
  Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

// Vector helpers; all operands must belong to `f` and have equal length.
Vec vec_add(const Field& f, const Vec& a, const Vec& b);
Vec vec_sub(const Field& f, const Vec& a, const Vec& b);
Vec vec_scale(const Field& f, const Scalar& c, const Vec& a);
void vec_axpy(const Field& f, Vec& y, const Scalar& c, const Vec& x);
bool vec_is_zero(const Field& f, const Vec& a);
std::string format_vec(const Field& f, const Vec& a);

}  // namespace ehalg
