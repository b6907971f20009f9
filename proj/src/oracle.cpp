#include "comvar/oracle.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "comvar/errors.hpp"
#include "comvar/linalg.hpp"

namespace comvar {

namespace {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

constexpr std::uint64_t kOraclePrime = 4294967291ULL;  // largest prime below 2^32
constexpr long kParamRange = 999;

std::string indexed(std::string_view base, int i) { return std::string(base) + std::to_string(i); }

PolyMatrix identity(const Ring& ring, std::size_t n) {
  PolyMatrix m(n, std::vector<Polynomial>(n, Polynomial(ring)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Polynomial::constant(ring, Coeff(1));
  return m;
}

PolyMatrix mul(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t n = a.size();
  PolyMatrix out(n, std::vector<Polynomial>(n, Polynomial(a[0][0].ring())));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

// I + t e_{row,col} (1-based indices).
PolyMatrix elementary(const Ring& ring, int row, int col, const Polynomial& t) {
  PolyMatrix m = identity(ring, 3);
  m[row - 1][col - 1] = t;
  return m;
}

struct Conjugator {
  PolyMatrix g, g_inv;
};

// g = U L with U = E12(d) E13(e) E23(f) and L = E21(a) E31(b) E32(c); the
// parameters are the ring variables g1..g6 in the order a, b, c, d, e, f.
Conjugator unipotent_conjugator(const Ring& ring) {
  auto p = [&](int k) { return Polynomial::variable(ring, indexed("g", k)); };
  PolyMatrix L = mul(mul(elementary(ring, 2, 1, p(1)), elementary(ring, 3, 1, p(2))),
                     elementary(ring, 3, 2, p(3)));
  PolyMatrix U = mul(mul(elementary(ring, 1, 2, p(4)), elementary(ring, 1, 3, p(5))),
                     elementary(ring, 2, 3, p(6)));
  PolyMatrix L_inv = mul(mul(elementary(ring, 3, 2, -p(3)), elementary(ring, 3, 1, -p(2))),
                         elementary(ring, 2, 1, -p(1)));
  PolyMatrix U_inv = mul(mul(elementary(ring, 2, 3, -p(6)), elementary(ring, 1, 3, -p(5))),
                         elementary(ring, 1, 2, -p(4)));
  return {mul(U, L), mul(L_inv, U_inv)};
}

// The 8 sl3 coordinates (11 12 13 21 22 23 31 32) of a matrix.
void push_sl3(std::vector<Polynomial>& out, const PolyMatrix& m) {
  for (auto [r, c] : {std::pair{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}}) {
    out.push_back(m[r][c]);
  }
}

std::vector<std::string> with_indexed(std::vector<std::string> head, std::string_view base,
                                      int lo, int hi) {
  for (int i = lo; i <= hi; ++i) head.push_back(indexed(base, i));
  return head;
}

Ring param_ring(std::vector<std::string> names) {
  return make_ring(std::move(names), FieldSpec::rationals());
}

// sl2 tuples (x, y, z) = coef_i * (ax, ay, az), appended to out.
void push_scaled(std::vector<Polynomial>& out, const Polynomial& coef, const Polynomial& ax,
                 const Polynomial& ay, const Polynomial& az) {
  out.push_back(coef * ax);
  out.push_back(coef * ay);
  out.push_back(coef * az);
}

void push_zero_tuple(std::vector<Polynomial>& out, const Ring& ring) {
  for (int k = 0; k < 3; ++k) out.push_back(Polynomial(ring));
}

Parametrization make(const VarietyId& id, std::string tag, Ring params, Ring ambient,
                     std::vector<Polynomial> coords) {
  if (coords.size() != ambient.arity()) {
    throw std::logic_error("parametrization arity mismatch for " + id.to_string());
  }
  return Parametrization{id, std::move(tag), std::move(params), std::move(ambient),
                         std::move(coords)};
}

// Nilpotent sl2 tuples on slots lo..hi of an r-tuple, zero elsewhere.
Parametrization sl2_nil_param(const VarietyId& id, std::string tag, int r, int lo) {
  Ring P = param_ring(with_indexed({"a", "b"}, "c", lo, r));
  auto a = Polynomial::variable(P, std::string_view("a"));
  auto b = Polynomial::variable(P, std::string_view("b"));
  std::vector<Polynomial> coords;
  for (int i = 1; i < lo; ++i) push_zero_tuple(coords, P);
  for (int i = lo; i <= r; ++i) {
    push_scaled(coords, Polynomial::variable(P, indexed("c", i)), a * b, -(a * a), b * b);
  }
  return make(id, std::move(tag), P, sl2_ring(r, FieldSpec::rationals()), std::move(coords));
}

// Generic commuting sl2 tuples on slots lo..hi, zero elsewhere.
Parametrization sl2_comm_param(const VarietyId& id, std::string tag, int r, int lo) {
  Ring P = param_ring(with_indexed({"p", "q", "w"}, "b", lo, r));
  auto p = Polynomial::variable(P, std::string_view("p"));
  auto q = Polynomial::variable(P, std::string_view("q"));
  auto w = Polynomial::variable(P, std::string_view("w"));
  std::vector<Polynomial> coords;
  for (int i = 1; i < lo; ++i) push_zero_tuple(coords, P);
  for (int i = lo; i <= r; ++i) push_scaled(coords, Polynomial::variable(P, indexed("b", i)), p, q, w);
  return make(id, std::move(tag), P, sl2_ring(r, FieldSpec::rationals()), std::move(coords));
}

Parametrization gl2_param(const VarietyId& id, int r) {
  auto names = with_indexed({"p", "q", "w"}, "al", 1, r);
  names = with_indexed(std::move(names), "b", 1, r);
  Ring P = param_ring(std::move(names));
  auto p = Polynomial::variable(P, std::string_view("p"));
  auto q = Polynomial::variable(P, std::string_view("q"));
  auto w = Polynomial::variable(P, std::string_view("w"));
  std::vector<Polynomial> coords;
  for (int i = 1; i <= r; ++i) {
    auto al = Polynomial::variable(P, indexed("al", i));
    auto b = Polynomial::variable(P, indexed("b", i));
    coords.push_back(al + b * p);
    coords.push_back(b * q);
    coords.push_back(b * w);
    coords.push_back(al - b * p);
  }
  return make(id, "", P, gl2_ring(r, FieldSpec::rationals()), std::move(coords));
}

Parametrization sl3_u_param(const VarietyId& id, int r) {
  auto names = with_indexed({"s", "t"}, "c", 1, r);
  names = with_indexed(std::move(names), "y", 1, r);
  Ring P = param_ring(std::move(names));
  auto s = Polynomial::variable(P, std::string_view("s"));
  auto t = Polynomial::variable(P, std::string_view("t"));
  std::vector<Polynomial> coords;
  for (int i = 1; i <= r; ++i) {
    auto c = Polynomial::variable(P, indexed("c", i));
    coords.push_back(c * s);
    coords.push_back(Polynomial::variable(P, indexed("y", i)));
    coords.push_back(c * t);
  }
  return make(id, "", P, sl2_ring(r, FieldSpec::rationals()), std::move(coords));
}

Parametrization sl3_nil_param(const VarietyId& id, int r) {
  auto names = with_indexed({}, "g", 1, 6);
  names.push_back("s");
  names.push_back("t");
  names = with_indexed(std::move(names), "c", 1, r);
  names = with_indexed(std::move(names), "y", 1, r);
  Ring P = param_ring(std::move(names));
  auto conj = unipotent_conjugator(P);
  auto s = Polynomial::variable(P, std::string_view("s"));
  auto t = Polynomial::variable(P, std::string_view("t"));
  std::vector<Polynomial> coords;
  for (int i = 1; i <= r; ++i) {
    auto c = Polynomial::variable(P, indexed("c", i));
    PolyMatrix u(3, std::vector<Polynomial>(3, Polynomial(P)));
    u[1][0] = c * s;
    u[2][0] = Polynomial::variable(P, indexed("y", i));
    u[2][1] = c * t;
    push_sl3(coords, mul(mul(conj.g, u), conj.g_inv));
  }
  return make(id, "", P, sl3_ring(r, FieldSpec::rationals()), std::move(coords));
}

Parametrization subreg_param(const VarietyId& id, int r) {
  const auto desc = build_subreg_components(r)[static_cast<std::size_t>(id.j - 1)];
  auto names = with_indexed({}, "g", 1, 6);
  names.push_back("c0");
  names = with_indexed(std::move(names), "a", 2, r);
  names = with_indexed(std::move(names), "b", 2, r);
  Ring P = param_ring(std::move(names));
  auto conj = unipotent_conjugator(P);
  auto lift = [&](const IntMatrix3& m, const Polynomial& scale) {
    PolyMatrix out(3, std::vector<Polynomial>(3, Polynomial(P)));
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        if (m[a][b] != 0) out[a][b] = scale.scaled(Coeff(m[a][b]));
      }
    }
    return out;
  };
  auto add = [](PolyMatrix a, const PolyMatrix& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < a.size(); ++j) a[i][j] += b[i][j];
    }
    return a;
  };
  std::vector<Polynomial> coords;
  push_sl3(coords, mul(mul(conj.g, lift(desc.v_sub, Polynomial::variable(P, std::string_view("c0")))),
                       conj.g_inv));
  for (int k = 2; k <= r; ++k) {
    auto u = add(lift(desc.plane[0], Polynomial::variable(P, indexed("a", k))),
                 lift(desc.plane[1], Polynomial::variable(P, indexed("b", k))));
    push_sl3(coords, mul(mul(conj.g, u), conj.g_inv));
  }
  return make(id, std::to_string(id.j), P, sl3_ring(r, FieldSpec::rationals()), std::move(coords));
}

Parametrization cut_line_param(const VarietyId& id, int r, long sy, long sz) {
  Ring P = param_ring(with_indexed({}, "t", 1, r));
  std::vector<Polynomial> coords;
  for (int i = 1; i <= r; ++i) {
    auto t = Polynomial::variable(P, indexed("t", i));
    coords.push_back(t);
    coords.push_back(t.scaled(Coeff(sy)));
    coords.push_back(t.scaled(Coeff(sz)));
  }
  return make(id, "", P, sl2_ring(r, FieldSpec::rationals()), std::move(coords));
}

// Draws nonzero integers in [-kParamRange, kParamRange].
class ParamSource {
 public:
  explicit ParamSource(std::uint64_t seed) : rng_(seed), dist_(-kParamRange, kParamRange) {}

  std::vector<long> draw(std::size_t count) {
    std::vector<long> out(count);
    for (auto& v : out) {
      do v = dist_(rng_);
      while (v == 0);
    }
    return out;
  }

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<long> dist_;
};

IdealPresentation variety_ideal(const VarietyId& id) {
  const FieldSpec q = FieldSpec::rationals();
  if (id.family == Family::CutComponent) {
    auto nil = build_sl2_nilcomm(id.r, q);
    return nil.plus({Polynomial::variable(nil.ring, std::string_view("y1")) +
                     Polynomial::variable(nil.ring, std::string_view("z1"))});
  }
  VarietyId whole = id;
  whole.component = 0;
  return build(whole, q);
}

bool annihilates(const IdealPresentation& I, std::span<const Coeff> point) {
  return std::all_of(I.generators.begin(), I.generators.end(),
                     [&](const Polynomial& g) { return g.evaluate(point) == 0; });
}

void enumerate_monomials(std::size_t v, int n, std::vector<std::vector<int>>& out) {
  std::vector<int> e(v, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == v) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, n);
}

std::uint64_t binom_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t pow_mod(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e > 0) {
    if (e & 1) r = r * b % kOraclePrime;
    b = b * b % kOraclePrime;
    e >>= 1;
  }
  return r;
}

class PointStream {
 public:
  PointStream(const VarietyId& id, std::uint64_t seed)
      : comps_(parametrize_components(id)), params_(seed) {}

  VarietySample next() {
    const auto& c = comps_[next_ % comps_.size()];
    ++next_;
    VarietySample s;
    s.parameters = params_.draw(c.parameter_count());
    s.point = c.evaluate(s.parameters);
    s.component_tag = c.component_tag;
    return s;
  }

  std::size_t ambient_arity() const { return comps_.front().ambient.arity(); }

 private:
  std::vector<Parametrization> comps_;
  ParamSource params_;
  std::size_t next_ = 0;
};

}  // namespace

std::vector<Coeff> Parametrization::evaluate(std::span<const long> params) const {
  if (params.size() != parameter_count()) {
    throw std::invalid_argument("parametrization expects " + std::to_string(parameter_count()) +
                                " parameters");
  }
  std::vector<Coeff> p(params.begin(), params.end());
  std::vector<Coeff> out;
  out.reserve(coordinates.size());
  for (const auto& c : coordinates) out.push_back(c.evaluate(p));
  return out;
}

std::vector<Parametrization> parametrize_components(const VarietyId& id) {
  const int r = id.r;
  switch (id.family) {
    case Family::Sl2Comm: return {sl2_comm_param(id, "", r, 1)};
    case Family::Sl2NilComm: return {sl2_nil_param(id, "", r, 1)};
    case Family::Gl2Comm: return {gl2_param(id, r)};
    case Family::Sl3UComm: return {sl3_u_param(id, r)};
    case Family::Sl3NilComm: return {sl3_nil_param(id, r)};
    case Family::SubregComponent: return {subreg_param(id, r)};
    case Family::Mixed: {
      std::vector<Parametrization> out;
      if (id.component != 2) out.push_back(sl2_nil_param(id, "1", r, 1));
      if (id.component != 1) out.push_back(sl2_comm_param(id, "2", r, id.i + 1));
      return out;
    }
    case Family::CutComponent:
      if (id.r < 2) throw std::invalid_argument("cut components need r >= 2");
      if (id.j == 1) return {sl2_nil_param(id, "", r, 2)};
      if (id.j == 2) return {cut_line_param(id, r, 1, -1)};
      return {cut_line_param(id, r, -1, 1)};
    case Family::FamilyF:
      break;
  }
  throw std::invalid_argument("no parametrization for " + id.to_string());
}

Parametrization parametrize(const VarietyId& id) {
  auto comps = parametrize_components(id);
  if (comps.size() != 1) {
    throw std::invalid_argument(id.to_string() + " has several components; choose one");
  }
  return std::move(comps.front());
}

std::vector<VarietySample> sample(const VarietyId& id, std::size_t count, std::uint64_t seed) {
  PointStream stream(id, seed);
  const IdealPresentation I = variety_ideal(id);
  std::vector<VarietySample> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    auto s = stream.next();
    s.seed = seed;
    if (!annihilates(I, s.point)) {
      throw std::logic_error("sample of " + id.to_string() + " violates a generator");
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string samples_to_json(const std::vector<VarietySample>& samples) {
  std::string out = "[";
  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (k) out += ",";
    out += "[";
    for (std::size_t i = 0; i < samples[k].point.size(); ++i) {
      if (i) out += ",";
      out += "\"" + samples[k].point[i].get_str() + "\"";
    }
    out += "]";
  }
  return out + "]";
}

HfRank hilbert_rank(const VarietyId& id, int n, std::uint64_t seed, std::size_t max_samples,
                    std::size_t exact_limit) {
  if (n < 0) throw std::invalid_argument("hilbert_rank: degree must be >= 0");
  PointStream stream(id, seed);
  const std::size_t v = stream.ambient_arity();
  const std::uint64_t N = binom_u64(static_cast<std::uint64_t>(n) + v - 1, v - 1);
  HfRank res;
  res.monomials = N;
  if (max_samples == 0) max_samples = N + 1;

  if (N <= exact_limit) {
    std::vector<std::vector<int>> monos;
    enumerate_monomials(v, n, monos);
    const std::size_t S = std::min<std::size_t>(N + 4, std::max<std::size_t>(max_samples, 1));
    RatMatrix M;
    for (std::size_t s = 0; s < S; ++s) {
      auto pt = stream.next().point;
      std::vector<std::vector<Coeff>> pw(v, std::vector<Coeff>(n + 1, Coeff(1)));
      for (std::size_t k = 0; k < v; ++k) {
        for (int e = 1; e <= n; ++e) pw[k][e] = pw[k][e - 1] * pt[k];
      }
      std::vector<Coeff> row;
      row.reserve(monos.size());
      for (const auto& m : monos) {
        Coeff c(1);
        for (std::size_t k = 0; k < v; ++k) {
          if (m[k]) c *= pw[k][m[k]];
        }
        row.push_back(c);
      }
      M.push_back(std::move(row));
    }
    res.rank = rank_rational(M);
    res.samples = S;
    res.exact = true;
    return res;
  }

  std::vector<std::vector<std::uint64_t>> pts;
  ModMatrix G;
  std::size_t target = std::min<std::size_t>(64, max_samples);
  while (true) {
    while (pts.size() < target) {
      auto pt = stream.next().point;
      std::vector<std::uint64_t> m;
      m.reserve(v);
      for (const auto& c : pt) m.push_back(reduce_mod_p(c, kOraclePrime));
      pts.push_back(std::move(m));
    }
    const std::size_t S = pts.size();
    G.assign(S, std::vector<std::uint64_t>(S, 0));
    for (std::size_t a = 0; a < S; ++a) {
      for (std::size_t b = a; b < S; ++b) {
        std::uint64_t dot = 0;
        for (std::size_t k = 0; k < v; ++k) dot = (dot + pts[a][k] * pts[b][k]) % kOraclePrime;
        G[a][b] = G[b][a] = pow_mod(dot, n);
      }
    }
    res.rank = rank_mod_p(G, kOraclePrime);
    res.samples = S;
    if (res.rank < S || res.rank == N) return res;
    if (S >= max_samples) {
      throw std::runtime_error("hilbert_rank: sample cap " + std::to_string(max_samples) +
                               " reached at full rank");
    }
    target = std::min<std::size_t>(2 * S, max_samples);
  }
}

std::size_t hilbert_function_by_evaluation(const VarietyId& id, int n, std::size_t sample_count,
                                           std::uint64_t seed) {
  auto a = hilbert_rank(id, n, seed, sample_count);
  auto b = hilbert_rank(id, n, seed + 1, sample_count);
  if (a.rank != b.rank) throw OracleDisagreement(a.rank, b.rank);
  return a.rank;
}

std::size_t jacobian_rank_dimension(const VarietyId& id, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("jacobian_rank_dimension: trials must be >= 1");
  ParamSource params(seed);
  std::size_t best = 0;
  for (const auto& comp : parametrize_components(id)) {
    const std::size_t np = comp.parameter_count();
    std::vector<std::vector<Polynomial>> jac;
    for (const auto& c : comp.coordinates) {
      std::vector<Polynomial> row;
      for (std::size_t p = 0; p < np; ++p) row.push_back(c.derivative(p));
      jac.push_back(std::move(row));
    }
    for (int t = 0; t < trials; ++t) {
      auto draw = params.draw(np);
      std::vector<Coeff> at(draw.begin(), draw.end());
      RatMatrix m;
      for (const auto& row : jac) {
        std::vector<Coeff> vals;
        for (const auto& d : row) vals.push_back(d.evaluate(at));
        m.push_back(std::move(vals));
      }
      best = std::max(best, rank_rational(m));
    }
  }
  return best;
}

std::vector<int> component_membership(std::span<const Coeff> point, const VarietyId& id) {
  const IdealPresentation I = variety_ideal(id);
  if (point.size() != I.ring.arity()) {
    throw std::invalid_argument("component_membership: point has wrong length");
  }
  if (!annihilates(I, point)) {
    throw std::invalid_argument("component_membership: point not on " + id.to_string());
  }
  const std::size_t r = static_cast<std::size_t>(id.r);
  auto tuple_zero = [&](std::size_t k, std::size_t width) {
    for (std::size_t c = 0; c < width; ++c) {
      if (point[width * k + c] != 0) return false;
    }
    return true;
  };
  std::vector<int> out;
  switch (id.family) {
    case Family::Mixed: {
      bool nil = true;
      for (std::size_t k = 0; k < r; ++k) {
        const Coeff &x = point[3 * k], &y = point[3 * k + 1], &z = point[3 * k + 2];
        if (x * x + y * z != 0) nil = false;
      }
      bool zero = true;
      for (std::size_t k = 0; k < static_cast<std::size_t>(id.i); ++k) zero = zero && tuple_zero(k, 3);
      if (nil) out.push_back(1);
      if (zero) out.push_back(2);
      return out;
    }
    case Family::SubregComponent: {
      auto entry = [&](std::size_t k, int a, int b) -> Coeff {
        if (a == 2 && b == 2) return -(point[8 * k] + point[8 * k + 4]);
        static constexpr int slot[3][3] = {{0, 1, 2}, {3, 4, 5}, {6, 7, -1}};
        return point[8 * k + static_cast<std::size_t>(slot[a][b])];
      };
      RatMatrix vertical, horizontal(3);
      for (std::size_t k = 0; k < r; ++k) {
        for (int a = 0; a < 3; ++a) {
          std::vector<Coeff> row;
          for (int b = 0; b < 3; ++b) {
            row.push_back(entry(k, a, b));
            horizontal[a].push_back(entry(k, a, b));
          }
          vertical.push_back(std::move(row));
        }
      }
      if (rank_rational(vertical) <= 1) out.push_back(1);
      if (rank_rational(horizontal) <= 1) out.push_back(2);
      return out;
    }
    case Family::CutComponent: {
      if (tuple_zero(0, 3)) out.push_back(1);
      bool v2 = true, v3 = true;
      for (std::size_t k = 0; k < r; ++k) {
        const Coeff &x = point[3 * k], &y = point[3 * k + 1], &z = point[3 * k + 2];
        v2 = v2 && y == x && z == -x;
        v3 = v3 && y == -x && z == x;
      }
      if (v2) out.push_back(2);
      if (v3) out.push_back(3);
      return out;
    }
    default:
      return {1};
  }
}

}  // namespace comvar
