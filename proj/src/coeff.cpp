#include "tlloops/coeff.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace tlloops {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

mpz_class parse_mpz(const std::string& digits, std::string_view context) {
  if (digits.empty()) throw ParseError("empty integer in '" + std::string(context) + "'");
  std::size_t start = (digits[0] == '-' || digits[0] == '+') ? 1 : 0;
  if (start == digits.size()) throw ParseError("bad integer '" + digits + "'");
  for (std::size_t i = start; i < digits.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(digits[i])))
      throw ParseError("bad integer '" + digits + "'");
  mpz_class v;
  v.set_str(digits[0] == '+' ? digits.substr(1) : digits, 10);
  return v;
}

std::uint32_t reduce_mod(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t v, std::uint32_t p) {
  // p prime, v != 0: Fermat
  std::uint64_t result = 1, base = v, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

IntPoly poly_add(const IntPoly& x, const IntPoly& y, bool negate_y) {
  IntPoly out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].exp < y[j].exp)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].exp < x[i].exp) {
      out.push_back({y[j].exp, negate_y ? mpz_class(-y[j].coeff) : y[j].coeff});
      ++j;
    } else {
      mpz_class c = negate_y ? mpz_class(x[i].coeff - y[j].coeff) : mpz_class(x[i].coeff + y[j].coeff);
      if (c != 0) out.push_back({x[i].exp, c});
      ++i;
      ++j;
    }
  }
  return out;
}

IntPoly poly_mul(const IntPoly& x, const IntPoly& y) {
  std::map<std::uint32_t, mpz_class> acc;
  for (const auto& s : x)
    for (const auto& t : y) acc[s.exp + t.exp] += s.coeff * t.coeff;
  IntPoly out;
  for (auto& [e, c] : acc)
    if (c != 0) out.push_back({e, c});
  return out;
}

void require_same(const Scalar& s, const Scalar& t) {
  if (!(s.domain() == t.domain()))
    throw DomainMismatch("mixed domains: " + s.domain().name() + " and " + t.domain().name());
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

Domain Domain::prime_field(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("prime_field: " + std::to_string(p) + " is not a supported prime");
  return Domain(Kind::prime_field, p);
}

Domain Domain::parse(std::string_view name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "z") return integers();
  if (s == "q") return rationals();
  if (s == "za" || s == "z[a]") return int_poly_a();
  if (s.size() >= 2 && s[0] == 'f') {
    std::string digits = s.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("unknown ring '" + std::string(name) + "'");
    return prime_field(static_cast<std::uint32_t>(std::stoul(digits)));
  }
  throw ParseError("unknown ring '" + std::string(name) + "'");
}

std::string Domain::name() const {
  switch (kind_) {
    case Kind::integers: return "Z";
    case Kind::rationals: return "Q";
    case Kind::prime_field: return "F" + std::to_string(p_);
    case Kind::int_poly_a: return "Z[a]";
  }
  return "?";
}

Scalar::Scalar(Domain domain) : domain_(domain) {
  switch (domain.kind()) {
    case Domain::Kind::integers: value_ = mpz_class(0); break;
    case Domain::Kind::rationals: value_ = mpq_class(0); break;
    case Domain::Kind::prime_field: value_ = std::uint32_t{0}; break;
    case Domain::Kind::int_poly_a: value_ = IntPoly{}; break;
  }
}

Scalar Scalar::from_int(Domain d, long v) { return from_int(d, mpz_class(v)); }

Scalar Scalar::from_int(Domain d, const mpz_class& v) {
  Scalar s(d);
  switch (d.kind()) {
    case Domain::Kind::integers: s.value_ = v; break;
    case Domain::Kind::rationals: s.value_ = mpq_class(v); break;
    case Domain::Kind::prime_field: s.value_ = reduce_mod(v, d.modulus()); break;
    case Domain::Kind::int_poly_a:
      s.value_ = v == 0 ? IntPoly{} : IntPoly{{0, v}};
      break;
  }
  return s;
}

Scalar Scalar::rational(const mpq_class& q) {
  Scalar s(Domain::rationals());
  mpq_class c = q;
  c.canonicalize();
  s.value_ = c;
  return s;
}

Scalar Scalar::a_power(std::uint32_t k) {
  Scalar s(Domain::int_poly_a());
  s.value_ = IntPoly{{k, mpz_class(1)}};
  return s;
}

Scalar Scalar::from_poly(IntPoly terms) {
  std::map<std::uint32_t, mpz_class> acc;
  for (auto& t : terms) acc[t.exp] += t.coeff;
  IntPoly out;
  for (auto& [e, c] : acc)
    if (c != 0) out.push_back({e, c});
  Scalar s(Domain::int_poly_a());
  s.value_ = std::move(out);
  return s;
}

Scalar Scalar::parse(std::string_view text, Domain d) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty scalar");
  switch (d.kind()) {
    case Domain::Kind::integers: return from_int(d, parse_mpz(s, text));
    case Domain::Kind::rationals: {
      auto slash = s.find('/');
      if (slash == std::string::npos) return from_int(d, parse_mpz(s, text));
      mpz_class num = parse_mpz(s.substr(0, slash), text);
      mpz_class den = parse_mpz(s.substr(slash + 1), text);
      if (den == 0) throw ParseError("zero denominator in '" + s + "'");
      return rational(mpq_class(num, den));
    }
    case Domain::Kind::prime_field: {
      auto pos = s.find("mod");
      if (pos == std::string::npos) return from_int(d, parse_mpz(s, text));
      mpz_class p = parse_mpz(s.substr(pos + 3), text);
      if (p != d.modulus()) throw DomainMismatch("residue modulus " + p.get_str() + " does not match " + d.name());
      return from_int(d, parse_mpz(s.substr(0, pos), text));
    }
    case Domain::Kind::int_poly_a: {
      IntPoly terms;
      std::size_t i = 0;
      while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
          if (s[i] == '-') sign = -1;
          ++i;
        } else if (i != 0) {
          throw ParseError("expected sign in '" + s + "'");
        }
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        mpz_class c = j > i ? parse_mpz(s.substr(i, j - i), text) : mpz_class(1);
        std::uint32_t e = 0;
        if (j < s.size() && s[j] == '*') ++j;
        if (j < s.size() && s[j] == 'a') {
          e = 1;
          ++j;
          if (j < s.size() && s[j] == '^') {
            std::size_t k = ++j;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == k) throw ParseError("missing exponent in '" + s + "'");
            e = static_cast<std::uint32_t>(std::stoul(s.substr(k, j - k)));
          }
        } else if (j == i) {
          throw ParseError("bad Z[a] term in '" + s + "'");
        }
        terms.push_back({e, sign * c});
        i = j;
      }
      return from_poly(std::move(terms));
    }
  }
  throw ParseError("unreachable");
}

bool Scalar::is_zero() const {
  switch (domain_.kind()) {
    case Domain::Kind::integers: return std::get<mpz_class>(value_) == 0;
    case Domain::Kind::rationals: return std::get<mpq_class>(value_) == 0;
    case Domain::Kind::prime_field: return std::get<std::uint32_t>(value_) == 0;
    case Domain::Kind::int_poly_a: return std::get<IntPoly>(value_).empty();
  }
  return false;
}

bool Scalar::is_one() const { return *this == one(domain_); }

std::string Scalar::str() const {
  switch (domain_.kind()) {
    case Domain::Kind::integers: return std::get<mpz_class>(value_).get_str();
    case Domain::Kind::rationals: {
      const auto& q = std::get<mpq_class>(value_);
      if (q.get_den() == 1) return q.get_num().get_str();
      return q.get_num().get_str() + "/" + q.get_den().get_str();
    }
    case Domain::Kind::prime_field:
      return std::to_string(std::get<std::uint32_t>(value_)) + " mod " + std::to_string(domain_.modulus());
    case Domain::Kind::int_poly_a: {
      const auto& terms = std::get<IntPoly>(value_);
      if (terms.empty()) return "0";
      std::ostringstream out;
      for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        mpz_class c = it->coeff;
        bool first = it == terms.rbegin();
        if (c < 0) {
          out << '-';
          c = -c;
        } else if (!first) {
          out << '+';
        }
        if (it->exp == 0) {
          out << c.get_str();
        } else {
          if (c != 1) out << c.get_str();
          out << 'a';
          if (it->exp > 1) out << '^' << it->exp;
        }
      }
      return out.str();
    }
  }
  return "?";
}

const mpz_class& Scalar::as_integer() const {
  if (domain_.kind() != Domain::Kind::integers) throw DomainMismatch("not an integer scalar");
  return std::get<mpz_class>(value_);
}
const mpq_class& Scalar::as_rational() const {
  if (domain_.kind() != Domain::Kind::rationals) throw DomainMismatch("not a rational scalar");
  return std::get<mpq_class>(value_);
}
std::uint32_t Scalar::as_residue() const {
  if (domain_.kind() != Domain::Kind::prime_field) throw DomainMismatch("not a residue");
  return std::get<std::uint32_t>(value_);
}
const IntPoly& Scalar::as_poly() const {
  if (domain_.kind() != Domain::Kind::int_poly_a) throw DomainMismatch("not a Z[a] scalar");
  return std::get<IntPoly>(value_);
}

int Scalar::weight() const {
  if (domain_.kind() != Domain::Kind::int_poly_a) return 0;
  const auto& t = std::get<IntPoly>(value_);
  if (t.size() != 1) return -1;
  return static_cast<int>(t[0].exp);
}

Scalar Scalar::operator-() const {
  Scalar out(domain_);
  switch (domain_.kind()) {
    case Domain::Kind::integers: out.value_ = mpz_class(-std::get<mpz_class>(value_)); break;
    case Domain::Kind::rationals: out.value_ = mpq_class(-std::get<mpq_class>(value_)); break;
    case Domain::Kind::prime_field: {
      auto v = std::get<std::uint32_t>(value_);
      out.value_ = v == 0 ? 0u : domain_.modulus() - v;
      break;
    }
    case Domain::Kind::int_poly_a: {
      IntPoly t = std::get<IntPoly>(value_);
      for (auto& term : t) term.coeff = -term.coeff;
      out.value_ = std::move(t);
      break;
    }
  }
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar out(domain_);
  switch (domain_.kind()) {
    case Domain::Kind::rationals: out.value_ = mpq_class(1 / std::get<mpq_class>(value_)); break;
    case Domain::Kind::prime_field:
      out.value_ = inverse_mod(std::get<std::uint32_t>(value_), domain_.modulus());
      break;
    default: throw DomainMismatch("inverse requires a field, got " + domain_.name());
  }
  return out;
}

Scalar operator+(const Scalar& s, const Scalar& t) {
  require_same(s, t);
  Scalar out(s.domain_);
  switch (s.domain_.kind()) {
    case Domain::Kind::integers:
      out.value_ = mpz_class(std::get<mpz_class>(s.value_) + std::get<mpz_class>(t.value_));
      break;
    case Domain::Kind::rationals:
      out.value_ = mpq_class(std::get<mpq_class>(s.value_) + std::get<mpq_class>(t.value_));
      break;
    case Domain::Kind::prime_field: {
      std::uint64_t v = std::uint64_t{std::get<std::uint32_t>(s.value_)} + std::get<std::uint32_t>(t.value_);
      out.value_ = static_cast<std::uint32_t>(v % s.domain_.modulus());
      break;
    }
    case Domain::Kind::int_poly_a:
      out.value_ = poly_add(std::get<IntPoly>(s.value_), std::get<IntPoly>(t.value_), false);
      break;
  }
  return out;
}

Scalar operator-(const Scalar& s, const Scalar& t) {
  require_same(s, t);
  if (s.domain_.kind() == Domain::Kind::int_poly_a) {
    Scalar out(s.domain_);
    out.value_ = poly_add(std::get<IntPoly>(s.value_), std::get<IntPoly>(t.value_), true);
    return out;
  }
  return s + (-t);
}

Scalar operator*(const Scalar& s, const Scalar& t) {
  require_same(s, t);
  Scalar out(s.domain_);
  switch (s.domain_.kind()) {
    case Domain::Kind::integers:
      out.value_ = mpz_class(std::get<mpz_class>(s.value_) * std::get<mpz_class>(t.value_));
      break;
    case Domain::Kind::rationals:
      out.value_ = mpq_class(std::get<mpq_class>(s.value_) * std::get<mpq_class>(t.value_));
      break;
    case Domain::Kind::prime_field: {
      std::uint64_t v = std::uint64_t{std::get<std::uint32_t>(s.value_)} * std::get<std::uint32_t>(t.value_);
      out.value_ = static_cast<std::uint32_t>(v % s.domain_.modulus());
      break;
    }
    case Domain::Kind::int_poly_a:
      out.value_ = poly_mul(std::get<IntPoly>(s.value_), std::get<IntPoly>(t.value_));
      break;
  }
  return out;
}

bool operator==(const Scalar& s, const Scalar& t) {
  require_same(s, t);
  return s.value_ == t.value_;
}

std::variant<Scalar, bool> arith(ArithOp op, const Scalar& s, const Scalar& t) {
  switch (op) {
    case ArithOp::add: return s + t;
    case ArithOp::mul: return s * t;
    case ArithOp::neg: return -s;
    case ArithOp::eq: return s == t;
    case ArithOp::is_zero: return s.is_zero();
  }
  return false;
}

PointedRing::PointedRing(Domain domain, Scalar a_value) : domain_(domain), a_(std::move(a_value)) {
  if (!(a_.domain() == domain_)) throw DomainMismatch("pointed ring: a is not in " + domain_.name());
}

PointedRing PointedRing::universal() { return PointedRing(Domain::int_poly_a(), Scalar::a_power(1)); }

PointedRing PointedRing::with_a(Domain domain, long a) {
  if (domain.kind() == Domain::Kind::int_poly_a) return universal();
  return PointedRing(domain, Scalar::from_int(domain, a));
}

Scalar PointedRing::a_power(std::uint32_t k) const {
  if (domain_.kind() == Domain::Kind::int_poly_a) return Scalar::a_power(k);
  Scalar out = Scalar::one(domain_);
  for (std::uint32_t i = 0; i < k; ++i) out *= a_;
  return out;
}

std::string PointedRing::name() const {
  if (domain_.kind() == Domain::Kind::int_poly_a) return "(Z[a],a)";
  return "(" + domain_.name() + "," + a_.str() + ")";
}

Scalar embed_integer(const mpz_class& v, const Domain& target) { return Scalar::from_int(target, v); }

Scalar specialize(const Scalar& s, const PointedRing& target) {
  const IntPoly& terms = s.as_poly();
  if (target.domain().kind() == Domain::Kind::int_poly_a) return s;
  Scalar out(target.domain());
  for (const auto& term : terms) out += embed_integer(term.coeff, target.domain()) * target.a_power(term.exp);
  return out;
}

}  // namespace tlloops
