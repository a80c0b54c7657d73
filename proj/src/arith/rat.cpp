#include "hecke/arith/rat.hpp"

#include <cctype>
#include <limits>

#include "hecke/error.hpp"

namespace hecke {

Rat::Rat(long num, long den) : Rat(Int(num), Int(den)) {}

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

bool parse_int(std::string_view s, Int& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  std::string buf(s[0] == '+' ? s.substr(1) : s);
  return out.set_str(buf, 10) == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  Int n, d = 1;
  bool ok = slash == std::string_view::npos
                ? parse_int(s, n)
                : parse_int(trim(s.substr(0, slash)), n) && parse_int(trim(s.substr(slash + 1)), d);
  if (!ok) throw ParseError("not a rational: '" + std::string(text) + "'");
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rat(n, d);
}

Rat Rat::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return Rat(mpq_class(1 / v_));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero");
  v_ /= o.v_;
  return *this;
}

Int Rat::floor() const { return floor_div(v_.get_num(), v_.get_den()); }

Rat Rat::frac() const { return *this - Rat(floor()); }

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int mod(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

long to_long(const Int& v) {
  if (!v.fits_slong_p()) throw Error("integer does not fit in a machine word: " + v.get_str());
  return v.get_si();
}

}  // namespace hecke
