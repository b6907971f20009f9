#include "comvar/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "comvar/catalog.hpp"
#include "comvar/character.hpp"
#include "comvar/errors.hpp"
#include "comvar/hilbert.hpp"
#include "comvar/ideal_io.hpp"
#include "comvar/oracle.hpp"

namespace comvar {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <class T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw std::invalid_argument("config: bad value '" + std::string(value) + "' for " +
                                std::string(key));
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw std::invalid_argument("config: bad boolean '" + std::string(value) + "' for " +
                              std::string(key));
}

std::string r_label(int r) { return "r=" + std::to_string(r); }

Polynomial var(const Ring& ring, const std::string& name) {
  return Polynomial::variable(ring, name);
}

VarietyId vid(Family family, int r) {
  VarietyId id;
  id.family = family;
  id.r = r;
  return id;
}

std::string indexed(char c, int k) { return std::string(1, c) + std::to_string(k); }

/// Jacobian dimension from two seeds, or an object holding both values when
/// they differ.
json two_seed_jacobian(ScenarioContext& ctx, const VarietyId& id, int trials = 2) {
  const auto a = jacobian_rank_dimension(id, trials, ctx.seed());
  const auto b = jacobian_rank_dimension(id, trials, ctx.seed() + 1);
  if (a == b) return a;
  return json{{"seed", a}, {"seed+1", b}};
}

Polynomial random_polynomial(const Ring& ring, std::mt19937_64& rng, int terms, int maxdeg) {
  std::uniform_int_distribution<int> coeff(-5, 5), var_pick(0, static_cast<int>(ring.arity()) - 1),
      deg(0, maxdeg);
  std::vector<Term> out;
  for (int t = 0; t < terms; ++t) {
    Monomial m(ring.arity());
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) m[var_pick(rng)] += 1;
    int c = coeff(rng);
    if (c == 0) c = 1;
    out.push_back({m, Coeff(c)});
  }
  return Polynomial::from_terms(ring, std::move(out));
}

// --- dimension scenarios ---------------------------------------------------

void run_gb_dimensions(ScenarioContext& ctx, Family family, std::vector<int> rs,
                       long (*expected)(int)) {
  for (int r : ctx.r_values(std::move(rs))) {
    ctx.record(r_label(r), ctx.dimension(build(vid(family, r), ctx.field())), expected(r));
  }
}

void dim_sl3nilcomm(ScenarioContext& ctx) {
  ctx.add_seed(ctx.seed());
  ctx.add_seed(ctx.seed() + 1);
  for (int r : ctx.r_values({1, 2, 3})) {
    VarietyId id = vid(Family::Sl3NilComm, r);
    // Characteristic check only; the Jacobian itself is computed over Q.
    build_sl3_nilcomm(r, ctx.field());
    ctx.record(r_label(r) + " jacobian", two_seed_jacobian(ctx, id), 2 * r + 4);
    if (r == 1) ctx.record("r=1 gb", ctx.dimension(build(id, ctx.field())), 6);
  }
}

void dim_subreg(ScenarioContext& ctx) {
  ctx.add_seed(ctx.seed());
  ctx.add_seed(ctx.seed() + 1);
  for (int r : ctx.r_values({2, 3})) {
    const json whole = two_seed_jacobian(ctx, vid(Family::Sl3NilComm, r));
    ctx.record(r_label(r) + " nilcone", whole, 2 * r + 4);
    for (int j : {1, 2}) {
      VarietyId id = vid(Family::SubregComponent, r);
      id.j = j;
      const json part = two_seed_jacobian(ctx, id);
      const std::string tag = r_label(r) + " component " + std::to_string(j);
      ctx.record(tag, part, 2 * r + 2);
      json codim = (whole.is_number() && part.is_number())
                       ? json(whole.get<long>() - part.get<long>())
                       : json("undetermined");
      ctx.record(tag + " codim", codim, 2);
    }
  }
}

void dim_mixed(ScenarioContext& ctx) {
  ctx.add_seed(ctx.seed());
  ctx.add_seed(ctx.seed() + 1);
  for (int total = 2; total <= 4; ++total) {
    if (ctx.config().r && *ctx.config().r != total) continue;
    for (int i = 1; i < total; ++i) {
      const int j = total - i;
      const std::string tag = "i=" + std::to_string(i) + ",j=" + std::to_string(j);
      VarietyId id = vid(Family::Mixed, total);
      id.i = i;
      id.j = j;
      id.component = 1;
      const json c1 = two_seed_jacobian(ctx, id);
      id.component = 2;
      const json c2 = two_seed_jacobian(ctx, id);
      ctx.record(tag + " component 1", c1, i + j + 1);
      ctx.record(tag + " component 2", c2, j + 2);
      json top = (c1.is_number() && c2.is_number()) ? json(std::max(c1.get<long>(), c2.get<long>()))
                                                    : json("undetermined");
      ctx.record(tag + " max", top, i + j + 1);
      ctx.record(tag + " gb", ctx.dimension(build_mixed(i, j, ctx.field()).mixed), i + j + 1);
    }
  }
}

void dim_family_f(ScenarioContext& ctx) {
  for (int r : ctx.r_values({2, 3})) {
    for (const auto& member : build_family_F(r, ctx.field())) {
      const std::string& label = member.label;
      long expected = -2;
      const int m = label.size() > 2 ? std::atoi(label.c_str() + 2) : 0;
      if (label.starts_with("I_")) expected = m + 1;
      if (label.starts_with("P_")) expected = r - m;
      if (label == "MaxIdeal") expected = 0;
      if (expected == -2) continue;
      ctx.record(r_label(r) + " " + label, ctx.dimension(member.presentation), expected);
    }
  }
}

void gb_sl3nilcomm(ScenarioContext& ctx) {
  for (int r : ctx.r_values({2})) {
    ctx.record(r_label(r), ctx.dimension(build_sl3_nilcomm(r, ctx.field()), 600.0), 2 * r + 4);
  }
}

// --- radicality and decomposition -------------------------------------------

void nonradical_witness(ScenarioContext& ctx) {
  for (int r : ctx.r_values({2})) {
    auto I = build_sl2_nilcomm(r, ctx.field());
    const Ring& R = I.ring;
    Polynomial f = var(R, "x1") * var(R, "x2") + var(R, "y1") * var(R, "z2");
    const auto G = ctx.gb(I);
    ctx.record(r_label(r) + " member", ideal_member(f, G), false);
    ctx.record(r_label(r) + " radical member", radical_member(f, I, ctx.budget()), true);
  }
}

void appendix(ScenarioContext& ctx, std::string_view prefix) {
  for (int r : ctx.r_values({2, 3, 4})) {
    for (const auto& o : appendix_cases(r, ctx.field())) {
      if (!o.label.starts_with(prefix)) continue;
      bool measured = false;
      bool expected = true;
      switch (o.kind) {
        case ObligationKind::Member: measured = ideal_member(o.f, ctx.gb(o.ideal)); break;
        case ObligationKind::NonMember:
          measured = ideal_member(o.f, ctx.gb(o.ideal));
          expected = false;
          break;
        case ObligationKind::RadicalMember:
          measured = radical_member(o.f, o.ideal, ctx.budget());
          break;
        case ObligationKind::RadicalNonMember:
          measured = radical_member(o.f, o.ideal, ctx.budget());
          expected = false;
          break;
      }
      ctx.record(r_label(r) + " " + o.label, measured, expected);
    }
  }
}

void cut_decomposition(ScenarioContext& ctx) {
  for (int r : ctx.r_values({2})) {
    auto c = build_cut_components(r, ctx.field());
    auto nil = build_sl2_nilcomm(r, ctx.field());
    auto cut = nil.plus({var(nil.ring, "y1") + var(nil.ring, "z1")});
    auto inter = intersect_ideals(c.v1, intersect_ideals(c.v2, c.v3, ctx.budget()), ctx.budget());
    ctx.record(r_label(r), ideal_equal_radical(cut, inter, ctx.budget()), true);
  }
}

void cut_line(ScenarioContext& ctx) {
  for (int r : ctx.r_values({2})) {
    auto c = build_cut_components(r, ctx.field());
    const Ring& R = c.v1.ring;
    std::vector<Polynomial> line{var(R, "x1"), var(R, "y1"), var(R, "z1")};
    for (int k = 2; k <= r; ++k) {
      line.push_back(var(R, indexed('y', k)) - var(R, indexed('x', k)));
      line.push_back(var(R, indexed('z', k)) + var(R, indexed('x', k)));
    }
    const auto sum = ctx.gb(c.v1 + c.v2);
    const auto expected = ctx.gb(IdealPresentation(R, line));
    json basis = json::array();
    for (const auto& g : sum.basis()) basis.push_back(g.to_string());
    json want = json::array();
    for (const auto& g : expected.basis()) want.push_back(g.to_string());
    ctx.record(r_label(r), basis, want);
  }
}

void cut_origin(ScenarioContext& ctx) {
  for (int r : ctx.r_values({2})) {
    auto c = build_cut_components(r, ctx.field());
    const Ring& R = c.v2.ring;
    std::vector<Polynomial> all;
    for (std::size_t v = 0; v < R.arity(); ++v) all.push_back(Polynomial::variable(R, v));
    ctx.record(r_label(r), ideal_equal(c.v2 + c.v3, IdealPresentation(R, all), ctx.budget()),
               true);
  }
}

void mixed_samples(ScenarioContext& ctx) {
  ctx.add_seed(ctx.seed());
  for (int total = 2; total <= 4; ++total) {
    if (ctx.config().r && *ctx.config().r != total) continue;
    for (int i = 1; i < total; ++i) {
      const int j = total - i;
      VarietyId id = vid(Family::Mixed, total);
      id.i = i;
      id.j = j;
      auto mixed = build_mixed(i, j, FieldSpec::rationals()).mixed;
      std::size_t vanishing = 0;
      std::size_t total_samples = 0;
      for (const auto& s : sample(id, 40, ctx.seed())) {
        ++total_samples;
        if (std::all_of(mixed.generators.begin(), mixed.generators.end(),
                        [&](const Polynomial& g) { return g.evaluate(s.point) == 0; })) {
          ++vanishing;
        }
      }
      ctx.record("i=" + std::to_string(i) + ",j=" + std::to_string(j), vanishing, total_samples);
    }
  }
}

void mixed_intersection(ScenarioContext& ctx) {
  for (int j : {2}) {
    auto m = build_mixed(1, j, ctx.field());
    auto target = family_I(1 + j, j, ctx.field());
    ctx.record("i=1,j=" + std::to_string(j),
               ideal_equal_radical(m.nilpotent_component + m.zero_sl2_component, target,
                                   ctx.budget()),
               true);
  }
}

// --- characters -------------------------------------------------------------

void char_series_match(ScenarioContext& ctx) {
  ctx.add_seed(ctx.seed());
  ctx.add_seed(ctx.seed() + 1);
  for (int r : ctx.r_values({1, 2, 3})) {
    VarietyId id = vid(Family::Sl2NilComm, r);
    for (int n = 0; n <= 8; ++n) {
      json measured;
      try {
        measured = hilbert_function_by_evaluation(id, n, 0, ctx.seed());
      } catch (const OracleDisagreement& e) {
        measured = json{{"seed", e.first()}, {"seed+1", e.second()}};
      }
      ctx.record(r_label(r) + ",n=" + std::to_string(n), measured,
                 partition_count(r, n) * static_cast<std::uint64_t>(2 * n + 1));
    }
  }
}

void char_series_r1(ScenarioContext& ctx) {
  const auto G = ctx.gb(build_sl2_nilcomm(1, ctx.field()));
  const auto h = hilbert_series(G, 9);
  const auto dims = character_series(1, 8).dimensions();
  for (int n = 0; n <= 8; ++n) {
    ctx.record("n=" + std::to_string(n), h.coefficients[n], 2 * n + 1);
    ctx.record("n=" + std::to_string(n) + " character", dims[n], 2 * n + 1);
  }
}

void char_multiplicity(ScenarioContext& ctx) {
  for (int r : ctx.r_values({1, 2, 3})) {
    const auto totals = total_multiplicities(decompose_good_filtration(character_series(r, 6).degrees));
    for (int m = 0; m <= 6; ++m) {
      const auto it = totals.find(m);
      ctx.record(r_label(r) + ",m=" + std::to_string(m), it == totals.end() ? 0 : it->second,
                 partition_count(r, m));
    }
  }
}

// --- gl2 ---------------------------------------------------------------------

void gl2_iso(ScenarioContext& ctx) {
  ctx.add_seed(ctx.seed());
  const FieldSpec Q = FieldSpec::rationals();
  for (int r : ctx.r_values({1, 2, 3})) {
    const std::string tag = r_label(r);
    std::size_t round_trips = 0, back_trips = 0, lands = 0;
    auto gl2 = sample(vid(Family::Gl2Comm, r), 100, ctx.seed());
    auto sl2 = build_sl2_comm(r, Q);
    for (const auto& s : gl2) {
      auto split = gl2_split(s.point, Q);
      if (gl2_unsplit(split, Q) == s.point) ++round_trips;
      std::vector<Coeff> sl2_part(split.begin(), split.begin() + 3 * r);
      if (std::all_of(sl2.generators.begin(), sl2.generators.end(),
                      [&](const Polynomial& g) { return g.evaluate(sl2_part) == 0; })) {
        ++lands;
      }
    }
    std::mt19937_64 rng(ctx.seed());
    std::uniform_int_distribution<long> trace(-999, 999);
    for (const auto& s : sample(vid(Family::Sl2Comm, r), 100, ctx.seed())) {
      std::vector<Coeff> point = s.point;
      for (int k = 0; k < r; ++k) point.emplace_back(trace(rng));
      if (gl2_split(gl2_unsplit(point, Q), Q) == point) ++back_trips;
    }
    ctx.record(tag + " unsplit(split(p)) = p", round_trips, 100);
    ctx.record(tag + " split(unsplit(q)) = q", back_trips, 100);
    ctx.record(tag + " split lands in the sl2 variety", lands, 100);

    const auto images = gl2_unsplit_images(r, ctx.field());
    const Ring affine = sl2_affine_ring(r, ctx.field());
    auto target = build_sl2_comm(r, ctx.field());
    std::vector<Polynomial> moved;
    for (const auto& g : target.generators) moved.push_back(rename_into(g, affine));
    const auto G = ctx.gb(IdealPresentation(affine, moved));
    std::size_t reduced = 0;
    const auto source = build_gl2_comm(r, ctx.field());
    for (const auto& g : source.generators) {
      if (ideal_member(ring_map(g, affine, images), G)) ++reduced;
    }
    ctx.record(tag + " pullback normal forms vanish", reduced, source.generators.size());
  }
}

// --- engine self-certification ------------------------------------------------

std::vector<std::pair<std::string, IdealPresentation>> small_catalog(const FieldSpec& field,
                                                                     int max_r) {
  std::vector<std::pair<std::string, IdealPresentation>> out;
  for (int r = 1; r <= max_r; ++r) {
    out.emplace_back("sl2-comm:" + r_label(r), build_sl2_comm(r, field));
    out.emplace_back("sl2-nilcomm:" + r_label(r), build_sl2_nilcomm(r, field));
    out.emplace_back("gl2-comm:" + r_label(r), build_gl2_comm(r, field));
    out.emplace_back("sl3-u-comm:" + r_label(r), build_sl3_u_comm(r, field));
  }
  return out;
}

std::vector<std::string> basis_strings(const GroebnerBasis& G) {
  std::vector<std::string> out;
  for (const auto& g : G.basis()) out.push_back(g.to_string());
  return out;
}

void engine_permutation(ScenarioContext& ctx) {
  ctx.add_seed(ctx.seed());
  std::mt19937_64 rng(ctx.seed());
  for (auto& [label, I] : small_catalog(ctx.field(), 3)) {
    const auto reference = basis_strings(ctx.gb(I));
    std::size_t same = 0;
    for (int k = 0; k < 3; ++k) {
      auto shuffled = I;
      std::shuffle(shuffled.generators.begin(), shuffled.generators.end(), rng);
      if (basis_strings(ctx.gb(shuffled)) == reference) ++same;
    }
    ctx.record(label, same, 3);
  }
}

void engine_spoly(ScenarioContext& ctx) {
  auto list = small_catalog(ctx.field(), 3);
  auto m = build_mixed(1, 2, ctx.field());
  list.emplace_back("mixed:i=1,j=2", m.mixed);
  for (const auto& member : build_family_F(2, ctx.field())) {
    list.emplace_back("family-f:r=2," + member.label, member.presentation);
  }
  for (auto& [label, I] : list) {
    const auto G = ctx.gb(I);
    ctx.record(label, is_groebner_basis(G.basis()), true);
  }
}

void engine_radical_determinantal(ScenarioContext& ctx) {
  ctx.add_seed(ctx.seed());
  std::mt19937_64 rng(ctx.seed());
  std::vector<std::pair<std::string, IdealPresentation>> list;
  for (int r : {2, 3}) {
    list.emplace_back("sl2-comm:" + r_label(r), build_sl2_comm(r, ctx.field()));
    list.emplace_back("sl3-u-comm:" + r_label(r), build_sl3_u_comm(r, ctx.field()));
  }
  for (auto& [label, I] : list) {
    const auto G = ctx.gb(I);
    json disagreements = json::array();
    for (int k = 0; k < 12; ++k) {
      Polynomial f(I.ring);
      if (k % 2 == 0) {
        for (const auto& g : I.generators) f += random_polynomial(I.ring, rng, 2, 1) * g;
      } else {
        f = random_polynomial(I.ring, rng, 3, 2);
      }
      // Every fourth candidate is a square.
      if (k % 4 == 3) f = f.pow(2);
      if (ideal_member(f, G) != radical_member(f, I, ctx.budget())) {
        disagreements.push_back(f.to_string());
      }
    }
    ctx.record(label, disagreements, json::array());
  }
}

void engine_field_agreement(ScenarioContext& ctx) {
  const FieldSpec Fp = FieldSpec::prime(kDefaultPrime);
  const FieldSpec Q = FieldSpec::rationals();
  auto list = small_catalog(Fp, 3);
  list.emplace_back("sl3-nilcomm:r=1", build_sl3_nilcomm(1, Fp));
  list.emplace_back("subreg:r=1", build_sl3_subreg_comm(1, Fp));
  for (int total = 2; total <= 3; ++total) {
    for (int i = 1; i < total; ++i) {
      list.emplace_back("mixed:i=" + std::to_string(i) + ",j=" + std::to_string(total - i),
                        build_mixed(i, total - i, Fp).mixed);
    }
  }
  for (int r : {2, 3}) {
    for (const auto& member : build_family_F(r, Fp)) {
      list.emplace_back("family-f:" + r_label(r) + "," + member.label, member.presentation);
    }
    auto c = build_cut_components(r, Fp);
    list.emplace_back("cut:" + r_label(r) + ",v=V1", c.v1);
    list.emplace_back("cut:" + r_label(r) + ",v=V2", c.v2);
    list.emplace_back("cut:" + r_label(r) + ",v=V3", c.v3);
  }
  for (auto& [label, I] : list) {
    const long over_p = ctx.dimension(I);
    const long over_q = ctx.dimension(recast(I, Q, I.ring.order()));
    ctx.record(label, over_q, over_p);
  }
}

Scenario make(std::string id, std::string claim, Provenance prov, std::vector<int> criteria,
              bool field_sensitive, std::function<void(ScenarioContext&)> run) {
  Scenario s;
  s.id = std::move(id);
  s.claim = std::move(claim);
  s.provenance = prov;
  s.criteria = std::move(criteria);
  s.field_sensitive = field_sensitive;
  s.run = std::move(run);
  return s;
}

std::vector<Scenario> build_registry() {
  using P = Provenance;
  std::vector<Scenario> s;
  s.push_back(make("dim.sl2comm", "dim C_r(sl2) = r + 2 for r = 1..4", P::Published, {1}, true,
                   [](ScenarioContext& c) {
                     run_gb_dimensions(c, Family::Sl2Comm, {1, 2, 3, 4},
                                       [](int r) { return long(r + 2); });
                   }));
  s.push_back(make("dim.sl2nilcomm", "dim C_r(N, sl2) = r + 1 for r = 1..4", P::Published, {1},
                   true, [](ScenarioContext& c) {
                     run_gb_dimensions(c, Family::Sl2NilComm, {1, 2, 3, 4},
                                       [](int r) { return long(r + 1); });
                   }));
  s.push_back(make("dim.gl2comm", "dim C_r(gl2) = 2r + 2 for r = 1..3", P::Published, {1}, true,
                   [](ScenarioContext& c) {
                     run_gb_dimensions(c, Family::Gl2Comm, {1, 2, 3},
                                       [](int r) { return long(2 * r + 2); });
                   }));
  s.push_back(make("dim.sl3ucomm", "dim C_r(u, sl3) = 2r + 1 for r = 1..4", P::Published, {1},
                   true, [](ScenarioContext& c) {
                     run_gb_dimensions(c, Family::Sl3UComm, {1, 2, 3, 4},
                                       [](int r) { return long(2 * r + 1); });
                   }));
  s.push_back(make("dim.sl3nilcomm",
                   "dim C_r(N, sl3) = 2r + 4 for r = 1..3 by exact Jacobian ranks, two seeds",
                   P::Published, {7}, true, dim_sl3nilcomm));
  s.push_back(make("dim.subreg",
                   "both subregular components have dimension 2r + 2, codimension 2 in "
                   "C_r(N, sl3), r = 2, 3",
                   P::Published, {8}, false, dim_subreg));
  s.push_back(make("dim.mixed", "dim C_{i,j} = i + j + 1 = max(i + j + 1, j + 2) for i + j <= 4",
                   P::Published, {9}, true, dim_mixed));
  s.push_back(make("dim.familyF", "dim I_m = m + 1, dim P_m = r - m, maximal ideal dimension 0",
                   P::Derived, {}, true, dim_family_f));
  {
    auto heavy = make("gb.sl3nilcomm", "Gröbner dimension of C_2(N, sl3) is 8", P::Published, {7},
                      true, gb_sl3nilcomm);
    heavy.heavy = true;
    heavy.default_seconds = 600.0;
    s.push_back(std::move(heavy));
  }
  s.push_back(make("nonradical.witness",
                   "x1 x2 + y1 z2 is in the radical of the C_2(N, sl2) ideal but not in the ideal",
                   P::Published, {2}, true, nonradical_witness));
  s.push_back(make("appendix.case1", "Case 1 membership identities hold for r = 2, 3, 4",
                   P::Published, {3}, true, [](ScenarioContext& c) { appendix(c, "case1:"); }));
  s.push_back(make("appendix.case2",
                   "Case 2 membership and radical-membership identities hold for r = 2, 3, 4",
                   P::Published, {3}, true, [](ScenarioContext& c) { appendix(c, "case2:"); }));
  s.push_back(make("appendix.nzd", "the non-zero-divisor elements avoid their prime ideals",
                   P::Published, {3}, true, [](ScenarioContext& c) { appendix(c, "nzd:"); }));
  s.push_back(make("cut.decomposition",
                   "C_2(N) cut by y1 + z1 equals V1 u V2 u V3 as radical ideals", P::Published,
                   {4}, true, cut_decomposition));
  s.push_back(make("cut.line", "I(V1) + I(V2) is the ideal of the line (0, 0, 0, x2, x2, -x2)",
                   P::Published, {4}, true, cut_line));
  s.push_back(make("cut.origin", "I(V2) + I(V3) is the maximal ideal", P::Published, {4}, true,
                   cut_origin));
  s.push_back(make("mixed.samples",
                   "mixed generators vanish on samples of both displayed components",
                   P::Derived, {9}, false, mixed_samples));
  s.push_back(make("mixed.intersection",
                   "C_3(N) meets 0 x C_2(sl2) in 0 x C_2(N), as radical ideals", P::Published,
                   {9}, true, mixed_intersection));
  s.push_back(make("char.series.match",
                   "dim k[C_r(N)]_n = P_r(n)(2n + 1) for r = 1..3, n = 0..8, two seeds",
                   P::Published, {5}, false, char_series_match));
  s.push_back(make("char.series.r1",
                   "the Hilbert series of x^2 + yz has coefficients 2n + 1", P::Derived, {5},
                   true, char_series_r1));
  s.push_back(make("char.multiplicity",
                   "chi(m alpha) occurs with total multiplicity P_r(m), r = 1..3, m = 0..6",
                   P::Published, {6}, false, char_multiplicity));
  s.push_back(make("gl2.iso",
                   "the split map gl2^r -> sl2^r x A^r is an isomorphism of commuting varieties",
                   P::Published, {10}, true, gl2_iso));
  s.push_back(make("engine.permutation", "reduced bases do not depend on generator order",
                   P::Trivial, {11}, true, engine_permutation));
  s.push_back(make("engine.spoly", "every S-polynomial of each basis reduces to zero",
                   P::Trivial, {11}, true, engine_spoly));
  s.push_back(make("engine.radical-determinantal",
                   "radical membership agrees with membership on determinantal ideals, r <= 3",
                   P::Trivial, {11}, true, engine_radical_determinantal));
  s.push_back(make("engine.field-agreement",
                   "catalog dimensions agree over GF(32003) and Q for r <= 3", P::Trivial, {11},
                   false, engine_field_agreement));
  std::sort(s.begin(), s.end(), [](const Scenario& a, const Scenario& b) { return a.id < b.id; });
  return s;
}

Report execute(const Scenario& scenario, const Config& config) {
  Report rep;
  rep.id = scenario.id;
  rep.claim = scenario.claim;
  rep.provenance = scenario.provenance;
  rep.heavy = scenario.heavy;
  rep.field = config.field.to_string();
  if (config.r) rep.params["r"] = *config.r;

  Config local = config;
  if (local.budget_seconds <= 0.0) local.budget_seconds = scenario.default_seconds;
  ScenarioContext ctx(local);
  const auto start = std::chrono::steady_clock::now();
  try {
    scenario.run(ctx);
    const bool ok = std::all_of(ctx.cases().begin(), ctx.cases().end(),
                                [](const CaseResult& c) { return c.passed(); });
    rep.status = ok ? Status::Pass : Status::Fail;
    if (!ok) {
      for (const auto& c : ctx.cases()) {
        if (c.passed()) continue;
        if (!rep.detail.empty()) rep.detail += "; ";
        rep.detail += c.label + ": measured " + c.measured.dump() + ", expected " +
                      c.expected.dump();
      }
    }
  } catch (const BudgetExceeded& e) {
    rep.status = Status::Aborted;
    rep.detail = std::string("budget: ") + e.what();
  } catch (const CharacteristicError& e) {
    rep.status = Status::Error;
    rep.detail = std::string("characteristic: ") + e.what();
  } catch (const std::exception& e) {
    rep.status = Status::Error;
    rep.detail = e.what();
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  rep.cases = std::move(ctx.cases());
  rep.seeds = std::move(ctx.seeds());
  rep.pairs = ctx.pairs();
  rep.max_basis_size = ctx.max_basis_size();
  return rep;
}

}  // namespace

// --- Config ------------------------------------------------------------------

void Config::set(std::string_view key, std::string_view value) {
  if (key == "field") {
    field = FieldSpec::parse(value);
  } else if (key == "seed") {
    seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "budget_pairs") {
    budget_pairs = parse_number<std::uint64_t>(key, value);
  } else if (key == "budget_seconds") {
    budget_seconds = parse_number<double>(key, value);
    if (budget_seconds < 0) throw std::invalid_argument("config: budget_seconds must be >= 0");
  } else if (key == "r") {
    const int v = parse_number<int>(key, value);
    if (v < 1) throw std::invalid_argument("config: r must be >= 1");
    r = v;
  } else if (key == "include_heavy") {
    include_heavy = parse_bool(key, value);
  } else if (key == "certify_q") {
    certify_q = parse_bool(key, value);
  } else if (key == "workers") {
    workers = parse_number<unsigned>(key, value);
    if (workers == 0) throw std::invalid_argument("config: workers must be >= 1");
  } else {
    throw std::invalid_argument("config: unknown key '" + std::string(key) + "'");
  }
}

Config Config::parse(std::string_view text) {
  Config c;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(number) + ": expected key=value");
    }
    try {
      c.set(trim(std::string_view(t).substr(0, eq)), trim(std::string_view(t).substr(eq + 1)));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config line " + std::to_string(number) + ": " + e.what());
    }
  }
  return c;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

json Config::to_json() const {
  json j{{"field", field.to_string()},
         {"seed", seed},
         {"budget_pairs", budget_pairs},
         {"budget_seconds", budget_seconds},
         {"include_heavy", include_heavy},
         {"certify_q", certify_q}};
  j["r"] = r ? json(*r) : json(nullptr);
  return j;
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Published: return "published";
    case Provenance::Trivial: return "trivial";
    case Provenance::Derived: return "derived";
  }
  return "derived";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Aborted: return "aborted";
    case Status::Error: return "error";
  }
  return "error";
}

json Report::to_json(bool with_timing) const {
  json measured = json::object(), expected = json::object();
  for (const auto& c : cases) {
    measured[c.label] = c.measured;
    expected[c.label] = c.expected;
  }
  json j{{"id", id},
         {"claim", claim},
         {"status", comvar::to_string(status)},
         {"provenance", comvar::to_string(provenance)},
         {"params", params},
         {"measured", measured},
         {"expected", expected},
         {"seeds", seeds},
         {"field", field},
         {"heavy", heavy},
         {"stats", {{"pairs", pairs}, {"max_basis_size", max_basis_size}}},
         {"detail", detail}};
  j["certify_q"] = certify_q ? json(comvar::to_string(*certify_q)) : json(nullptr);
  if (with_timing) j["timing"] = {{"seconds", seconds}};
  return j;
}

// --- ScenarioContext -------------------------------------------------------------

GbBudget ScenarioContext::budget(double default_seconds) const {
  GbBudget b;
  b.max_pairs = config_.budget_pairs;
  b.max_seconds = config_.budget_seconds > 0 ? config_.budget_seconds : default_seconds;
  return b;
}

std::vector<int> ScenarioContext::r_values(std::vector<int> defaults) const {
  if (config_.r) return {*config_.r};
  return defaults;
}

void ScenarioContext::record(std::string label, json measured, json expected) {
  cases_.push_back({std::move(label), std::move(measured), std::move(expected)});
}

void ScenarioContext::add_stats(const GbStats& stats) {
  pairs_ += stats.pairs_reduced;
  max_basis_ = std::max(max_basis_, stats.max_basis_size);
}

void ScenarioContext::add_seed(std::uint64_t seed) {
  if (std::find(seeds_.begin(), seeds_.end(), seed) == seeds_.end()) seeds_.push_back(seed);
}

GroebnerBasis ScenarioContext::gb(const IdealPresentation& I, double default_seconds) {
  auto G = buchberger(I, budget(default_seconds));
  add_stats(G.stats());
  return G;
}

long ScenarioContext::dimension(const IdealPresentation& I, double default_seconds) {
  const Ring ring = I.ring.with_order(MonomialOrder::grevlex());
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators) gens.push_back(g.reinterpreted(ring));
  return krull_dimension(gb(IdealPresentation(ring, std::move(gens)), default_seconds));
}

// --- registry and runners ------------------------------------------------------------

const std::vector<Scenario>& registry() {
  static const std::vector<Scenario> reg = build_registry();
  return reg;
}

const Scenario* find_scenario(std::string_view id) {
  for (const auto& s : registry()) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

bool matches_filter(std::string_view filter, std::string_view id) {
  if (filter.empty()) return true;
  // Iterative glob with single backtrack point for '*'.
  std::size_t f = 0, s = 0, star = std::string_view::npos, mark = 0;
  while (s < id.size()) {
    if (f < filter.size() && (filter[f] == '?' || filter[f] == id[s])) {
      ++f;
      ++s;
    } else if (f < filter.size() && filter[f] == '*') {
      star = f++;
      mark = s;
    } else if (star != std::string_view::npos) {
      f = star + 1;
      s = ++mark;
    } else {
      return false;
    }
  }
  while (f < filter.size() && filter[f] == '*') ++f;
  return f == filter.size();
}

Report run_scenario(std::string_view id, const Config& config) {
  const Scenario* s = find_scenario(id);
  if (!s) throw std::invalid_argument("unknown scenario '" + std::string(id) + "'");
  Report rep = execute(*s, config);
  if (config.certify_q && s->field_sensitive && rep.status == Status::Pass &&
      config.field.is_prime_field()) {
    Config q = config;
    q.field = FieldSpec::rationals();
    const Report rerun = execute(*s, q);
    rep.certify_q = rerun.status;
    rep.seconds += rerun.seconds;
    if (rerun.status != Status::Pass) {
      rep.status = rerun.status;
      rep.detail = "over Q: " + rerun.detail;
    }
  }
  return rep;
}

int exit_code_for(const Report& report) {
  switch (report.status) {
    case Status::Pass: return 0;
    case Status::Aborted: return 3;
    case Status::Fail:
    case Status::Error: return 1;
  }
  return 1;
}

SuiteResult run_suite(std::string_view filter, const Config& config) {
  std::vector<const Scenario*> chosen;
  for (const auto& s : registry()) {
    if (!matches_filter(filter, s.id)) continue;
    if (s.heavy && !config.include_heavy) continue;
    chosen.push_back(&s);
  }
  SuiteResult out;
  if (chosen.empty()) {
    out.warnings.push_back("no scenario matches filter '" + std::string(filter) + "'");
    return out;
  }
  std::vector<Report> reports(chosen.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < chosen.size(); k = next++) {
      reports[k] = run_scenario(chosen[k]->id, config);
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(config.workers, chosen.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::sort(reports.begin(), reports.end(),
            [](const Report& a, const Report& b) { return a.id < b.id; });
  bool failed = false, aborted = false;
  for (const auto& r : reports) {
    if (r.status == Status::Fail || r.status == Status::Error) failed = true;
    if (r.status == Status::Aborted && !r.heavy) aborted = true;
  }
  out.exit_code = failed ? 1 : aborted ? 3 : 0;
  out.reports = std::move(reports);
  return out;
}

json suite_to_json(const SuiteResult& suite, const Config& config, bool with_timing) {
  json reports = json::array();
  std::map<std::string, int> counts{{"pass", 0}, {"fail", 0}, {"aborted", 0}, {"error", 0}};
  double total = 0.0;
  for (const auto& r : suite.reports) {
    reports.push_back(r.to_json(with_timing));
    ++counts[to_string(r.status)];
    total += r.seconds;
  }
  json j{{"schema", "comvar-report/1"},
         {"config", config.to_json()},
         {"reports", reports},
         {"summary", counts},
         {"warnings", suite.warnings},
         {"exit_code", suite.exit_code}};
  if (with_timing) j["timing"] = {{"seconds", total}};
  return j;
}

std::vector<AuditEntry> audit() {
  static const std::vector<std::pair<int, std::string>> criteria{
      {1, "Gröbner dimensions of the sl2, nilpotent sl2, gl2 and sl3 u commuting varieties"},
      {2, "non-radicality witness for C_2(N, sl2)"},
      {3, "membership obligations of the principal radical system for r = 2, 3, 4"},
      {4, "decomposition of the hypersurface cut into V1, V2, V3"},
      {5, "graded dimensions of C_r(N, sl2) follow P_r(n)(2n + 1)"},
      {6, "good-filtration multiplicities equal P_r(m)"},
      {7, "dim C_r(N, sl3) = 2r + 4"},
      {8, "subregular components have dimension 2r + 2 and codimension 2"},
      {9, "mixed commuting varieties: dimensions, samples and the intersection identity"},
      {10, "gl2 versus sl2 x A^r isomorphism"},
      {11, "engine self-certification"},
  };
  std::vector<AuditEntry> out;
  for (const auto& [n, summary] : criteria) {
    AuditEntry e{n, summary, {}};
    for (const auto& s : registry()) {
      if (std::find(s.criteria.begin(), s.criteria.end(), n) != s.criteria.end()) {
        e.scenarios.push_back(s.id);
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace comvar
