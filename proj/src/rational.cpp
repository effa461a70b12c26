#include "mlt/rational.hpp"

#include <limits>

#include "mlt/error.hpp"

namespace mlt {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotConvex: return "NotConvex";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::SingularLattice: return "SingularLattice";
    case ErrorKind::NotCentrallySymmetric: return "NotCentrallySymmetric";
    case ErrorKind::NotATile: return "NotATile";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorKind::NonGenericPoint: return "NonGenericPoint";
    case ErrorKind::ConfigInvalid: return "ConfigInvalid";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
  }
  return "Unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

namespace {

bool parse_integer(std::string_view s, Integer& out, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  bool negative = false;
  if (allow_sign && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9') return false;
  }
  out.set_str(std::string(s.substr(i)), 10);
  if (negative) out = -out;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num, true))
      throw Error(ErrorKind::ParseError, "bad number '" + std::string(text) + "'");
  } else {
    if (!parse_integer(text.substr(0, slash), num, true) ||
        !parse_integer(text.substr(slash + 1), den, false))
      throw Error(ErrorKind::ParseError, "bad fraction '" + std::string(text) + "'");
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  return make_rational(num, den);
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_decimal(const Rational& r, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const Rational scaled = abs_of(r) * scale + Rational(1, 2);
  const Integer units = floor_of(scaled);
  std::string s = units.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (r < 0 && units != 0) s.insert(0, "-");
  return s;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

bool is_half_integer_multiple(const Rational& r) {
  return r.get_den() == 1 || r.get_den() == 2;
}

Integer floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil_of(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rational abs_of(const Rational& r) { return r < 0 ? Rational(-r) : r; }

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw Error(ErrorKind::InternalInconsistency, "integer out of range: " + z.get_str());
  return z.get_si();
}

}  // namespace mlt
