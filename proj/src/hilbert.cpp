#include "comvar/hilbert.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace comvar {

namespace {

using Numer = std::vector<std::int64_t>;

void trim(Numer& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Numer add(Numer a, const Numer& b, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
  trim(a);
  return a;
}

Numer mul(const Numer& a, const Numer& b) {
  if (a.empty() || b.empty()) return {};
  Numer out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(a.exponents().begin(), a.exponents().end(),
                                        b.exponents().begin(), b.exponents().end());
  });
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(),
                                 [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) out.push_back(std::move(g));
  }
  gens = std::move(out);
}

Numer numerator_rec(std::vector<Monomial> gens, std::size_t n) {
  minimalize(gens);
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {};

  // Pairwise coprime generators: product of (1 - t^deg).
  std::vector<int> uses(n, 0);
  bool coprime = true;
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i] == 0) continue;
      if (++uses[i] > 1) coprime = false;
    }
  }
  if (coprime) {
    Numer acc{1};
    for (const auto& g : gens) {
      Numer f(static_cast<std::size_t>(g.total_degree()) + 1, 0);
      f.front() = 1;
      f.back() = -1;
      acc = mul(acc, f);
    }
    return acc;
  }

  std::size_t pivot = static_cast<std::size_t>(
      std::max_element(uses.begin(), uses.end()) - uses.begin());
  Monomial x(n);
  x[pivot] = 1;

  std::vector<Monomial> plus;
  plus.reserve(gens.size() + 1);
  for (const auto& g : gens) {
    if (g[pivot] == 0) plus.push_back(g);
  }
  plus.push_back(x);

  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) {
    Monomial h = g;
    if (h[pivot] > 0) h[pivot] -= 1;
    colon.push_back(std::move(h));
  }
  return add(numerator_rec(std::move(plus), n), numerator_rec(std::move(colon), n), 1);
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

HilbertData from_leading_terms(const GroebnerBasis& G, std::size_t N) {
  HilbertData h;
  const std::size_t n = G.ring().arity();
  if (G.is_unit()) {
    h.dimension = -1;
    h.denominator_power = 0;
    h.coefficients.assign(N, 0);
    return h;
  }
  Numer num = hilbert_numerator(G.leading_monomials(), n);
  int power = static_cast<int>(n);
  // Cancel (1 - t) while the numerator vanishes at t = 1.
  while (power > 0 && !num.empty() && std::accumulate(num.begin(), num.end(), std::int64_t{0}) == 0) {
    Numer q(num.size() - 1, 0);
    // Synthetic division by (1 - t): num = (1 - t) q  ⇒  q_i = Σ_{j ≤ i} num_j.
    std::int64_t run = 0;
    for (std::size_t i = 0; i + 1 < num.size(); ++i) {
      run += num[i];
      q[i] = run;
    }
    num = std::move(q);
    trim(num);
    --power;
  }
  h.numerator = num;
  h.denominator_power = power;
  h.dimension = power;
  h.coefficients = series_coefficients(num, power, N);
  return h;
}

}  // namespace

std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> generators,
                                            std::size_t nvars) {
  for (const auto& g : generators) {
    if (g.arity() != nvars) throw std::invalid_argument("hilbert_numerator: arity mismatch");
  }
  return numerator_rec(std::move(generators), nvars);
}

std::vector<std::int64_t> series_coefficients(const std::vector<std::int64_t>& numerator,
                                              int power, std::size_t N) {
  std::vector<std::int64_t> out(N, 0);
  for (std::size_t m = 0; m < N; ++m) {
    std::int64_t c = 0;
    for (std::size_t i = 0; i < numerator.size() && i <= m; ++i) {
      std::int64_t ways = power == 0 ? (m == i ? 1 : 0)
                                     : binomial(static_cast<std::int64_t>(m - i) + power - 1,
                                                power - 1);
      c += numerator[i] * ways;
    }
    out[m] = c;
  }
  return out;
}

HilbertData hilbert_series(const GroebnerBasis& G, std::size_t N) {
  for (const auto& g : G.basis()) {
    if (!g.is_homogeneous()) {
      throw std::invalid_argument("hilbert_series: ideal is not homogeneous");
    }
  }
  return from_leading_terms(G, N);
}

long krull_dimension(const GroebnerBasis& G) {
  const auto kind = G.ring().order().kind;
  if (kind == OrderKind::Lex || kind == OrderKind::Block) {
    throw std::invalid_argument("krull_dimension needs a graded order");
  }
  return from_leading_terms(G, 0).dimension;
}

long krull_dimension(const IdealPresentation& I, const GbBudget& budget) {
  if (I.ring.order().kind == OrderKind::GrevLex) {
    return krull_dimension(buchberger(I, budget));
  }
  Ring graded = I.ring.with_order(MonomialOrder::grevlex());
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators) gens.push_back(g.reinterpreted(graded));
  return krull_dimension(buchberger(IdealPresentation(graded, std::move(gens)), budget));
}

}  // namespace comvar
