#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace rigdim {

using Scalar = mpq_class;

/// Ground field: the rationals or a prime field F_p.
///
/// F_p elements are stored as integer-valued rationals in [0, p), so the same
/// Scalar type serves both cases and every arithmetic operation goes through
/// the field to keep values canonical.
class Field {
 public:
  static Field rational() { return Field(0); }
  /// Throws Error if p is not prime.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const { return p_; }

  Scalar from_int(long v) const { return normalize(Scalar(v)); }
  Scalar normalize(const Scalar& v) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Requires a != 0.
  Scalar inv(const Scalar& a) const;

  /// "Q" or "F<p>".
  std::string name() const;
  static Field parse(const std::string& text);

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

/// Exact textual form: "3", "-3/2".
std::string to_string(const Scalar& v);
/// Parses an exact scalar string and normalizes it into the field.
Scalar parse_scalar(const Field& field, const std::string& text);

}  // namespace rigdim
