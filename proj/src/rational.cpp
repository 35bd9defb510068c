#include "spheremap/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace spheremap {

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string strip_plus(std::string_view s) {
  return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den[0] == '-')
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  Integer n(strip_plus(num), 10);
  Integer d(strip_plus(den), 10);
  if (sgn(d) == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

CplxRat& CplxRat::operator/=(const CplxRat& o) {
  Rational den = o.norm_sq();
  if (sgn(den) == 0) throw std::domain_error("division by zero Gaussian rational");
  *this *= o.conj();
  re_ /= den;
  im_ /= den;
  return *this;
}

std::string format_cplx(const CplxRat& c) {
  if (c.is_real()) return format_rational(c.re());
  std::string out;
  if (sgn(c.re()) != 0) out = format_rational(c.re()) + (sgn(c.im()) > 0 ? "+" : "");
  return out + format_rational(c.im()) + "i";
}

}  // namespace spheremap
