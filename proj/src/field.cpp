#include "rigdim/field.hpp"

#include <cctype>

#include "rigdim/errors.hpp"

namespace rigdim {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

mpz_class mod_p(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error("F_p requires a prime, got " + std::to_string(p));
  return Field(p);
}

Scalar Field::normalize(const Scalar& v) const {
  if (p_ == 0) {
    Scalar r = v;
    r.canonicalize();
    return r;
  }
  mpz_class num = mod_p(v.get_num(), p_);
  mpz_class den = mod_p(v.get_den(), p_);
  if (den == 0) throw Error("denominator divisible by the characteristic");
  if (den != 1) {
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class dinv;
    mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = mod_p(num * dinv, p_);
  }
  return Scalar(num);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a + b;
  mpz_class s = a.get_num() + b.get_num();
  if (s >= static_cast<unsigned long>(p_)) s -= static_cast<unsigned long>(p_);
  return Scalar(s);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a - b;
  mpz_class s = a.get_num() - b.get_num();
  if (s < 0) s += static_cast<unsigned long>(p_);
  return Scalar(s);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a * b;
  return Scalar(mod_p(a.get_num() * b.get_num(), p_));
}

Scalar Field::neg(const Scalar& a) const {
  if (p_ == 0) return -a;
  if (a == 0) return a;
  return Scalar(mpz_class(static_cast<unsigned long>(p_)) - a.get_num());
}

Scalar Field::inv(const Scalar& a) const {
  if (a == 0) throw Error("division by zero");
  if (p_ == 0) return 1 / a;
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), p.get_mpz_t());
  return Scalar(r);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

Field Field::parse(const std::string& text) {
  if (text == "Q") return rational();
  if (text.size() >= 2 && text[0] == 'F') {
    std::uint64_t p = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("bad field '" + text + "'");
      p = p * 10 + static_cast<std::uint64_t>(text[i] - '0');
      if (p > (1ULL << 31)) throw ParseError("characteristic too large: " + text);
    }
    try {
      return prime(p);
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("bad field '" + text + "' (expected Q or F<p>)");
}

std::string to_string(const Scalar& v) { return v.get_str(); }

Scalar parse_scalar(const Field& field, const std::string& text) {
  auto valid = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool slash = false, digits = false;
    for (; i < s.size(); ++i) {
      if (s[i] == '/') {
        if (slash || !digits) return false;
        slash = true;
        digits = false;
      } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        digits = true;
      } else {
        return false;
      }
    }
    return digits;
  };
  if (!valid(text)) throw ParseError("bad scalar '" + text + "'");
  std::string t = text[0] == '+' ? text.substr(1) : text;
  Scalar v;
  if (v.set_str(t, 10) != 0) throw ParseError("bad scalar '" + text + "'");
  if (v.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  v.canonicalize();
  try {
    return field.normalize(v);
  } catch (const Error& e) {
    throw ParseError(std::string(e.what()) + " in '" + text + "'");
  }
}

}  // namespace rigdim
