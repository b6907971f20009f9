#include "comvar/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "comvar/errors.hpp"
#include "kernel.hpp"

namespace comvar {

namespace {

void sort_and_combine(const Ring& ring, std::vector<Term>& terms) {
  const auto& order = ring.order();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.mono.exponents(), b.mono.exponents()) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(std::move(t));
    }
  }
  const auto& field = ring.field();
  std::erase_if(out, [&](Term& t) {
    field.normalize(t.coeff);
    return sgn(t.coeff) == 0;
  });
  terms = std::move(out);
}

}  // namespace

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.mono.arity() != ring.arity()) {
      throw std::invalid_argument("monomial arity does not match ring");
    }
  }
  sort_and_combine(ring, terms);
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::constant(Ring ring, Coeff c) {
  std::vector<Term> t;
  t.push_back(Term{Monomial(ring.arity()), std::move(c)});
  return from_terms(std::move(ring), std::move(t));
}

Polynomial Polynomial::variable(Ring ring, std::size_t index) {
  if (index >= ring.arity()) throw std::out_of_range("variable index");
  Monomial m(ring.arity());
  m[index] = 1;
  std::vector<Term> t;
  t.push_back(Term{std::move(m), Coeff(1)});
  return from_terms(std::move(ring), std::move(t));
}

Polynomial Polynomial::variable(Ring ring, std::string_view name) {
  std::size_t i = ring.require(name);
  return variable(std::move(ring), i);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

long Polynomial::total_degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  long d = terms_.front().mono.total_degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.mono.total_degree() == d; });
}

void Polynomial::require_same_ring(const Polynomial& o) const {
  if (!(ring_ == o.ring_)) throw RingMismatch("polynomials live in different rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_ring(o);
  std::vector<Term> t = terms_;
  t.insert(t.end(), o.terms_.begin(), o.terms_.end());
  sort_and_combine(ring_, t);
  terms_ = std::move(t);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  require_same_ring(o);
  std::vector<Term> t;
  t.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) t.push_back(Term{a.mono * b.mono, a.coeff * b.coeff});
  }
  sort_and_combine(ring_, t);
  terms_ = std::move(t);
  return *this;
}

Polynomial Polynomial::operator-() const { return scaled(Coeff(-1)); }

Polynomial Polynomial::scaled(const Coeff& c) const {
  std::vector<Term> t = terms_;
  for (auto& x : t) x.coeff *= c;
  return from_terms(ring_, std::move(t));
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Coeff& c) const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) t.push_back(Term{x.mono * m, x.coeff * c});
  return from_terms(ring_, std::move(t));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, Coeff(1));
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_.field().inverse(leading_coeff()));
}

Coeff Polynomial::evaluate(std::span<const Coeff> point) const {
  if (point.size() != ring_.arity()) throw std::invalid_argument("point arity mismatch");
  Coeff sum = 0;
  for (const auto& t : terms_) {
    Coeff v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (Exponent k = 0; k < t.mono[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  ring_.field().normalize(sum);
  return sum;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> t;
  for (const auto& x : terms_) {
    if (x.mono[var] == 0) continue;
    Monomial m = x.mono;
    Coeff c = x.coeff * m[var];
    m[var] -= 1;
    t.push_back(Term{std::move(m), std::move(c)});
  }
  return from_terms(ring_, std::move(t));
}

Polynomial Polynomial::reinterpreted(const Ring& target) const {
  if (target.names() != ring_.names() || !(target.field() == ring_.field())) {
    throw RingMismatch("reinterpretation needs identical variables and field");
  }
  return from_terms(target, terms_);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Coeff c = ring_.field().display_value(t.coeff);
    bool neg = sgn(c) < 0;
    Coeff mag = neg ? Coeff(-c) : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < t.mono.arity(); ++i) {
      if (t.mono[i] == 0) continue;
      std::string f = ring_.name(i);
      if (t.mono[i] > 1) f += "^" + std::to_string(t.mono[i]);
      factors.push_back(std::move(f));
    }
    if (factors.empty()) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) os << '*';
      os << factors[k];
    }
  }
  return os.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.ring_ == b.ring_ && a.terms_ == b.terms_;
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
  }
  return a;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors) {
  for (const auto& g : divisors) {
    if (!(g.ring() == f.ring())) throw RingMismatch("normal_form: divisor in another ring");
    if (g.is_zero()) throw std::invalid_argument("normal_form: zero divisor polynomial");
  }
  const Ring& ring = f.ring();
  return detail::with_field(ring.field(), [&](auto field) {
    using K = decltype(field);
    detail::Kernel<K> kn(field, ring.arity(), ring.order());
    std::vector<detail::KPoly<K>> ks;
    ks.reserve(divisors.size());
    for (const auto& g : divisors) ks.push_back(kn.convert(g));
    std::vector<typename detail::Kernel<K>::Divisor> ds;
    for (const auto& k : ks) ds.push_back(kn.make_divisor(k));
    return kn.back(kn.normal_form(kn.convert(f), ds), ring);
  });
}

Polynomial ring_map(const Polynomial& f, const Ring& target,
                    std::span<const Polynomial> images) {
  const Ring& src = f.ring();
  if (images.size() != src.arity()) {
    throw std::invalid_argument("ring_map: need one image per source variable");
  }
  for (const auto& im : images) {
    if (!(im.ring() == target)) throw RingMismatch("ring_map: image outside target ring");
  }
  // Powers are cached per variable since catalog maps reuse them heavily.
  std::vector<std::vector<Polynomial>> powers(src.arity());
  auto power = [&](std::size_t i, Exponent e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, Coeff(1)));
    while (cache.size() <= static_cast<std::size_t>(e)) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial out(target);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < src.arity(); ++i) {
      if (t.mono[i] != 0) term *= power(i, t.mono[i]);
    }
    out += term;
  }
  return out;
}

Polynomial ring_map(const Polynomial& f, std::span<const Polynomial> images) {
  if (images.empty()) throw std::invalid_argument("ring_map: empty image list");
  return ring_map(f, images.front().ring(), images);
}

Polynomial rename_into(const Polynomial& f, const Ring& target) {
  const Ring& src = f.ring();
  if (!(src.field() == target.field())) throw RingMismatch("rename_into: field mismatch");
  std::vector<std::size_t> pos(src.arity());
  for (std::size_t i = 0; i < src.arity(); ++i) pos[i] = target.require(src.name(i));
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target.arity());
    for (std::size_t i = 0; i < src.arity(); ++i) m[pos[i]] = t.mono[i];
    terms.push_back(Term{std::move(m), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

// ---------------------------------------------------------------------------
// Parser: expr := ['+'|'-'] term (('+'|'-') term)*
//         term := power ('*' power)*
//         power := atom ['^' integer]
//         atom := integer ['/' integer] | identifier | '(' expr ')'

namespace {

class Parser {
 public:
  Parser(const Ring& ring, std::string_view text) : ring_(ring), s_(text) {}

  Polynomial parse() {
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, 1, pos_ + 1);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Polynomial acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = power();
    while (eat('*')) acc *= power();
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (eat('^')) {
      skip();
      std::size_t begin = pos_;
      mpz_class e = integer();
      if (e > 10000) {
        pos_ = begin;
        fail("exponent too large");
      }
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  mpz_class integer() {
    skip();
    std::size_t begin = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (begin == pos_) fail("expected integer");
    return mpz_class(std::string(s_.substr(begin, pos_ - begin)));
  }

  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class value(integer());
      if (eat('/')) {
        std::size_t at = pos_;
        mpz_class den = integer();
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
        value /= mpq_class(den);
      }
      try {
        return Polynomial::constant(ring_, value);
      } catch (const std::domain_error&) {
        fail("denominator vanishes in the field");
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t begin = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string_view name = s_.substr(begin, pos_ - begin);
      auto idx = ring_.index_of(name);
      if (!idx) {
        pos_ = begin;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const Ring& ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const Ring& ring, std::string_view text) {
  return Parser(ring, text).parse();
}

}  // namespace comvar
