#include "comvar/field.hpp"

#include <charconv>
#include <stdexcept>

namespace comvar {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw std::invalid_argument("not a supported prime characteristic: " +
                                std::to_string(p));
  }
  FieldSpec f;
  f.kind_ = FieldKind::PrimeField;
  f.p_ = static_cast<std::uint32_t>(p);
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
      s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "q" || text == "Q" || text == "QQ") return rationals();
  if (text.starts_with("p=")) text.remove_prefix(2);
  else if (text.starts_with("mod ")) text.remove_prefix(4);
  text = trim(text);
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("malformed field: '" + std::string(text) + "'");
  }
  return prime(p);
}

void FieldSpec::normalize(Coeff& c) const {
  c.canonicalize();
  if (kind_ == FieldKind::Rationals) return;
  mpz_class pz(p_);
  mpz_class num = c.get_num() % pz;
  mpz_class den = c.get_den() % pz;
  if (den == 0) throw std::domain_error("denominator divisible by characteristic");
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
  mpz_class v = (num * inv) % pz;
  if (v < 0) v += pz;
  c = mpq_class(v);
}

Coeff FieldSpec::from_integer(long v) const {
  Coeff c(v);
  normalize(c);
  return c;
}

Coeff FieldSpec::inverse(const Coeff& c) const {
  if (c == 0) throw std::domain_error("inverse of zero");
  Coeff r = 1 / c;
  normalize(r);
  return r;
}

Coeff FieldSpec::display_value(const Coeff& c) const {
  if (kind_ == FieldKind::Rationals) return c;
  if (c > Coeff(p_ / 2)) return c - Coeff(p_);
  return c;
}

std::string FieldSpec::to_string() const {
  if (kind_ == FieldKind::Rationals) return "q";
  return "p=" + std::to_string(p_);
}

}  // namespace comvar
