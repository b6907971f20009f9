// Internal Gröbner kernel. Not installed; the public API converts into and
// out of these types.
#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "comvar/errors.hpp"
#include "comvar/groebner.hpp"
#include "comvar/polynomial.hpp"

namespace comvar::detail {

struct FpField {
  using Elem = std::uint32_t;
  std::uint32_t p;

  static bool is_zero(Elem a) { return a == 0; }
  static Elem one() { return 1; }
  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (p - b); }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const {
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::tie(t, nt) = std::make_pair(nt, t - q * nt);
      std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (t < 0) t += p;
    return static_cast<Elem>(t);
  }
  Elem from(const mpq_class& q) const {
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class n = q.get_num() % pz;
    if (n < 0) n += pz;
    mpz_class d = q.get_den() % pz;
    Elem num = static_cast<Elem>(n.get_ui());
    Elem den = static_cast<Elem>(d.get_ui());
    return mul(num, inv(den));
  }
  static mpq_class to(Elem a) { return mpq_class(static_cast<unsigned long>(a)); }
};

struct QField {
  using Elem = mpq_class;

  static bool is_zero(const Elem& a) { return sgn(a) == 0; }
  static Elem one() { return 1; }
  static Elem add(const Elem& a, const Elem& b) { return a + b; }
  static Elem sub(const Elem& a, const Elem& b) { return a - b; }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static Elem neg(const Elem& a) { return -a; }
  static Elem inv(const Elem& a) { return 1 / a; }
  static Elem from(const mpq_class& q) { return q; }
  static mpq_class to(const Elem& a) { return a; }
};

// Invoke fn with the kernel field described by the given FieldSpec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.is_prime_field()) return fn(FpField{spec.characteristic()});
  return fn(QField{});
}

// Monomials are stored flat with stride nvars + 1; slot 0 holds the total
// degree.
template <class K>
struct KPoly {
  std::vector<Exponent> exps;
  std::vector<typename K::Elem> coefs;

  std::size_t size() const { return coefs.size(); }
  bool empty() const { return coefs.empty(); }
};

using Mask = std::uint64_t;

template <class K>
class Kernel {
 public:
  using Elem = typename K::Elem;
  using Poly = KPoly<K>;

  Kernel(K field, std::size_t nvars, MonomialOrder order)
      : k_(field), n_(nvars), stride_(nvars + 1), order_(order) {}

  const K& field() const { return k_; }
  std::size_t stride() const { return stride_; }
  std::size_t nvars() const { return n_; }

  const Exponent* mono(const Poly& p, std::size_t i) const {
    return p.exps.data() + i * stride_;
  }

  // Three-way comparison in the configured order.
  int cmp(const Exponent* a, const Exponent* b) const {
    switch (order_.kind) {
      case OrderKind::GrevLex:
        if (a[0] != b[0]) return a[0] < b[0] ? -1 : 1;
        for (std::size_t i = n_; i >= 1; --i) {
          if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        }
        return 0;
      case OrderKind::Lex:
        for (std::size_t i = 1; i <= n_; ++i) {
          if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
      case OrderKind::Block: {
        const std::size_t k = order_.block_split;
        long da = 0, db = 0;
        for (std::size_t i = 1; i <= k; ++i) {
          da += a[i];
          db += b[i];
        }
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t i = k; i >= 1; --i) {
          if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        }
        long ra = a[0] - da, rb = b[0] - db;
        if (ra != rb) return ra < rb ? -1 : 1;
        for (std::size_t i = n_; i > k; --i) {
          if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        }
        return 0;
      }
    }
    return 0;
  }

  bool divides(const Exponent* a, const Exponent* b) const {
    if (a[0] > b[0]) return false;
    for (std::size_t i = 1; i <= n_; ++i) {
      if (a[i] > b[i]) return false;
    }
    return true;
  }

  Mask mask(const Exponent* a) const {
    Mask m = 0;
    for (std::size_t i = 1; i <= n_; ++i) {
      if (a[i] != 0) m |= Mask{1} << ((i - 1) % 64);
    }
    return m;
  }

  void lcm(const Exponent* a, const Exponent* b, Exponent* out) const {
    out[0] = 0;
    for (std::size_t i = 1; i <= n_; ++i) {
      out[i] = std::max(a[i], b[i]);
      out[0] += out[i];
    }
  }

  bool coprime(const Exponent* a, const Exponent* b) const {
    for (std::size_t i = 1; i <= n_; ++i) {
      if (a[i] != 0 && b[i] != 0) return false;
    }
    return true;
  }

  bool is_constant(const Poly& p) const { return p.size() == 1 && mono(p, 0)[0] == 0; }

  Poly convert(const Polynomial& f) const {
    Poly out;
    out.exps.reserve(f.size() * stride_);
    out.coefs.reserve(f.size());
    for (const auto& t : f.terms()) {
      out.exps.push_back(static_cast<Exponent>(t.mono.total_degree()));
      for (std::size_t i = 0; i < n_; ++i) out.exps.push_back(t.mono[i]);
      out.coefs.push_back(k_.from(t.coeff));
    }
    return out;
  }

  Polynomial back(const Poly& p, const Ring& ring) const {
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Exponent* m = mono(p, i);
      terms.push_back(Term{Monomial(std::vector<Exponent>(m + 1, m + stride_)), k_.to(p.coefs[i])});
    }
    return Polynomial::from_terms(ring, std::move(terms));
  }

  Poly monic(Poly p) const {
    if (p.empty()) return p;
    Elem c = k_.inv(p.coefs[0]);
    for (auto& x : p.coefs) x = k_.mul(x, c);
    return p;
  }

  // f[start..] - c * m * g, where the leading terms cancel exactly.
  Poly sub_mul(const Poly& f, std::size_t start, const Elem& c, const Exponent* m,
               const Poly& g) const {
    Poly out;
    const std::size_t fn = f.size(), gn = g.size();
    out.exps.reserve((fn - start + gn) * stride_);
    out.coefs.reserve(fn - start + gn);
    std::vector<Exponent> buf(stride_);
    auto shifted = [&](std::size_t j) {
      const Exponent* gm = mono(g, j);
      for (std::size_t i = 0; i < stride_; ++i) buf[i] = gm[i] + m[i];
      return buf.data();
    };
    auto push = [&](const Exponent* e, Elem v) {
      out.exps.insert(out.exps.end(), e, e + stride_);
      out.coefs.push_back(std::move(v));
    };
    std::size_t i = start + 1, j = 1;
    while (i < fn && j < gn) {
      const Exponent* gm = shifted(j);
      int c0 = cmp(mono(f, i), gm);
      if (c0 > 0) {
        push(mono(f, i), f.coefs[i]);
        ++i;
      } else if (c0 < 0) {
        push(gm, k_.neg(k_.mul(c, g.coefs[j])));
        ++j;
      } else {
        Elem v = k_.sub(f.coefs[i], k_.mul(c, g.coefs[j]));
        if (!K::is_zero(v)) push(gm, std::move(v));
        ++i;
        ++j;
      }
    }
    for (; i < fn; ++i) push(mono(f, i), f.coefs[i]);
    for (; j < gn; ++j) push(shifted(j), k_.neg(k_.mul(c, g.coefs[j])));
    return out;
  }

  struct Divisor {
    const Poly* poly;
    Mask lm_mask;
    Elem lc_inv;
  };

  Divisor make_divisor(const Poly& p) const {
    return Divisor{&p, mask(mono(p, 0)), k_.inv(p.coefs[0])};
  }

  // Full normal form: no term of the result is divisible by any divisor's
  // leading monomial. Divisors are tried in list order.
  Poly normal_form(Poly f, const std::vector<Divisor>& divs) const {
    Poly rem;
    std::vector<Exponent> quot(stride_);
    std::size_t start = 0;
    std::size_t steps = 0;
    while (start < f.size()) {
      const Exponent* lead = mono(f, start);
      const Mask lm = mask(lead);
      const Divisor* hit = nullptr;
      for (const auto& d : divs) {
        if ((d.lm_mask & ~lm) != 0) continue;
        if (divides(mono(*d.poly, 0), lead)) {
          hit = &d;
          break;
        }
      }
      if (hit == nullptr) {
        rem.exps.insert(rem.exps.end(), lead, lead + stride_);
        rem.coefs.push_back(f.coefs[start]);
        ++start;
        continue;
      }
      const Exponent* dm = mono(*hit->poly, 0);
      for (std::size_t i = 0; i < stride_; ++i) quot[i] = lead[i] - dm[i];
      Elem c = k_.mul(f.coefs[start], hit->lc_inv);
      f = sub_mul(f, start, c, quot.data(), *hit->poly);
      start = 0;
      if ((++steps & 255) == 0) check_deadline();
    }
    return rem;
  }

  // A single reduction can run long over Q, so the wall-clock cap is also
  // enforced inside normal_form.
  void set_deadline(std::chrono::steady_clock::time_point t, double seconds) {
    deadline_ = t;
    budget_seconds_ = seconds;
    has_deadline_ = true;
  }

  void check_deadline() const {
    if (has_deadline_ && std::chrono::steady_clock::now() > deadline_) {
      throw BudgetExceeded("wall-clock budget of " + std::to_string(budget_seconds_) +
                           " s exceeded");
    }
  }

  Poly spoly(const Poly& a, const Poly& b, const Exponent* l) const {
    // Both operands are monic.
    std::vector<Exponent> ma(stride_), mb(stride_);
    const Exponent* la = mono(a, 0);
    const Exponent* lb = mono(b, 0);
    for (std::size_t i = 0; i < stride_; ++i) {
      ma[i] = l[i] - la[i];
      mb[i] = l[i] - lb[i];
    }
    // a*ma has the same leading term as b*mb; build a*ma then subtract.
    Poly am;
    am.exps.reserve(a.size() * stride_);
    for (std::size_t t = 0; t < a.size(); ++t) {
      const Exponent* e = mono(a, t);
      for (std::size_t i = 0; i < stride_; ++i) am.exps.push_back(e[i] + ma[i]);
    }
    am.coefs = a.coefs;
    Elem c = k_.mul(a.coefs[0], k_.inv(b.coefs[0]));
    return sub_mul(am, 0, c, mb.data(), b);
  }

 private:
  K k_;
  std::size_t n_;
  std::size_t stride_;
  MonomialOrder order_;
  bool has_deadline_ = false;
  double budget_seconds_ = 0.0;
  std::chrono::steady_clock::time_point deadline_{};
};

template <class K>
struct KernelBasis {
  std::vector<KPoly<K>> basis;
  GbStats stats;
};

// Buchberger with normal pair selection and the Gebauer–Möller criteria.
// Returns the reduced, monic basis sorted ascending by leading monomial.
template <class K>
KernelBasis<K> buchberger(Kernel<K>& kn, std::vector<KPoly<K>> input,
                          const GbBudget& budget) {
  using Poly = KPoly<K>;
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  if (budget.max_seconds > 0) {
    kn.set_deadline(t0 + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(budget.max_seconds)),
                    budget.max_seconds);
  }
  const std::size_t S = kn.stride();

  KernelBasis<K> result;
  GbStats& st = result.stats;

  std::vector<Poly> polys;
  std::vector<bool> active;

  struct Pair {
    std::size_t i, j;
    std::vector<Exponent> lcm;
  };
  std::vector<Pair> pairs;

  auto lm = [&](std::size_t i) { return kn.mono(polys[i], 0); };

  auto check_budget = [&] {
    if (budget.max_pairs != 0 && st.pairs_reduced > budget.max_pairs) {
      throw BudgetExceeded("S-pair budget of " + std::to_string(budget.max_pairs) +
                           " exceeded");
    }
    if (budget.max_seconds > 0) {
      double el = std::chrono::duration<double>(Clock::now() - t0).count();
      if (el > budget.max_seconds) {
        throw BudgetExceeded("wall-clock budget of " + std::to_string(budget.max_seconds) +
                             " s exceeded");
      }
    }
  };

  auto unit_result = [&] {
    Poly one;
    one.exps.assign(S, 0);
    one.coefs.push_back(K::one());
    result.basis = {one};
    st.basis_size = 1;
    st.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return result;
  };

  auto reducers = [&] {
    std::vector<typename Kernel<K>::Divisor> ds;
    for (std::size_t i = 0; i < polys.size(); ++i) {
      if (active[i]) ds.push_back(kn.make_divisor(polys[i]));
    }
    return ds;
  };

  // Gebauer–Möller update with the new element h = polys.back().
  auto update = [&] {
    const std::size_t h = polys.size() - 1;
    const Exponent* lh = lm(h);
    struct Cand {
      std::size_t g;
      std::vector<Exponent> lcm;
      bool coprime;
    };
    std::vector<Cand> c;
    for (std::size_t g = 0; g < h; ++g) {
      if (!active[g]) continue;
      Cand cd{g, std::vector<Exponent>(S), kn.coprime(lh, lm(g))};
      kn.lcm(lh, lm(g), cd.lcm.data());
      c.push_back(std::move(cd));
    }
    std::vector<Cand> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      bool keep = c[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c.size() && keep; ++b) {
          if (kn.divides(c[b].lcm.data(), c[a].lcm.data())) keep = false;
        }
        for (std::size_t b = 0; b < d.size() && keep; ++b) {
          if (kn.divides(d[b].lcm.data(), c[a].lcm.data())) keep = false;
        }
      }
      if (keep) d.push_back(std::move(c[a]));
    }
    std::vector<Pair> kept;
    kept.reserve(pairs.size() + d.size());
    std::vector<Exponent> l1(S), l2(S);
    for (auto& pr : pairs) {
      bool drop = false;
      if (kn.divides(lh, pr.lcm.data())) {
        kn.lcm(lm(pr.i), lh, l1.data());
        kn.lcm(lh, lm(pr.j), l2.data());
        drop = kn.cmp(l1.data(), pr.lcm.data()) != 0 && kn.cmp(l2.data(), pr.lcm.data()) != 0;
      }
      if (drop) ++st.pairs_skipped;
      else kept.push_back(std::move(pr));
    }
    for (auto& cd : d) {
      if (cd.coprime) {
        ++st.pairs_skipped;
        continue;
      }
      kept.push_back(Pair{cd.g, h, std::move(cd.lcm)});
    }
    st.pairs_skipped += c.size() - d.size();
    pairs = std::move(kept);
    for (std::size_t g = 0; g < h; ++g) {
      if (active[g] && kn.divides(lh, lm(g))) active[g] = false;
    }
  };

  auto insert = [&](Poly p) {
    polys.push_back(kn.monic(std::move(p)));
    active.push_back(true);
    update();
    std::size_t n_active = std::count(active.begin(), active.end(), true);
    st.max_basis_size = std::max(st.max_basis_size, n_active);
  };

  // Seed with the input, lowest leading monomials first.
  std::vector<Poly> gens;
  for (auto& f : input) {
    if (!f.empty()) gens.push_back(std::move(f));
  }
  std::sort(gens.begin(), gens.end(), [&](const Poly& a, const Poly& b) {
    return kn.cmp(kn.mono(a, 0), kn.mono(b, 0)) < 0;
  });
  for (auto& f : gens) {
    Poly r = kn.normal_form(std::move(f), reducers());
    if (r.empty()) continue;
    if (kn.is_constant(r)) return unit_result();
    insert(std::move(r));
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t q = 1; q < pairs.size(); ++q) {
      const auto& a = pairs[q];
      const auto& b = pairs[best];
      if (a.lcm[0] != b.lcm[0]) {
        if (a.lcm[0] < b.lcm[0]) best = q;
        continue;
      }
      int c = kn.cmp(a.lcm.data(), b.lcm.data());
      if (c < 0 || (c == 0 && std::tie(a.j, a.i) < std::tie(b.j, b.i))) best = q;
    }
    Pair pr = std::move(pairs[best]);
    pairs[best] = std::move(pairs.back());
    pairs.pop_back();

    ++st.pairs_reduced;
    check_budget();
    Poly s = kn.spoly(polys[pr.i], polys[pr.j], pr.lcm.data());
    Poly r = kn.normal_form(std::move(s), reducers());
    if (r.empty()) {
      ++st.zero_reductions;
      continue;
    }
    if (kn.is_constant(r)) return unit_result();
    insert(std::move(r));
  }

  // Interreduce the (already minimal) active set.
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (active[i]) idx.push_back(i);
  }
  std::vector<Poly> reduced;
  for (std::size_t a : idx) {
    std::vector<typename Kernel<K>::Divisor> others;
    for (std::size_t b : idx) {
      if (b != a) others.push_back(kn.make_divisor(polys[b]));
    }
    reduced.push_back(kn.monic(kn.normal_form(polys[a], others)));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
    return kn.cmp(kn.mono(a, 0), kn.mono(b, 0)) < 0;
  });
  result.basis = std::move(reduced);
  st.basis_size = result.basis.size();
  st.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return result;
}

}  // namespace comvar::detail
