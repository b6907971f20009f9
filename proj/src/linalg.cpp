#include "comvar/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace comvar {

std::size_t rank_bareiss(IntMatrix m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    const mpz_class& p = m[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const mpz_class f = m[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = p * m[i][j] - f * m[rank][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(v);
      }
      m[i][c] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(const RatMatrix& m) {
  IntMatrix z;
  z.reserve(m.size());
  for (const auto& row : m) {
    mpz_class l = 1;
    for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<mpz_class> out;
    out.reserve(row.size());
    for (const auto& q : row) out.push_back(q.get_num() * (l / q.get_den()));
    z.push_back(std::move(out));
  }
  return rank_bareiss(std::move(z));
}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

std::size_t rank_mod_p(ModMatrix m, std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32)) throw std::invalid_argument("rank_mod_p: p must be < 2^32");
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    const std::uint64_t inv = pow_mod(m[rank][c], p - 2, p);
    auto& top = m[rank];
    for (std::size_t j = c; j < cols; ++j) top[j] = top[j] * inv % p;
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::uint64_t f = m[i][c];
      if (f == 0) continue;
      auto& row = m[i];
      for (std::size_t j = c; j < cols; ++j) {
        row[j] = (row[j] + (p - f) * top[j]) % p;
      }
    }
    ++rank;
  }
  return rank;
}

std::uint64_t reduce_mod_p(const mpq_class& q, std::uint64_t p) {
  mpz_class pm = static_cast<unsigned long>(p);
  mpz_class num = q.get_num() % pm, den = q.get_den() % pm;
  if (num < 0) num += pm;
  if (den == 0) throw std::domain_error("reduce_mod_p: denominator divisible by p");
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pm.get_mpz_t());
  mpz_class r = num * inv % pm;
  return r.get_ui();
}

}  // namespace comvar
