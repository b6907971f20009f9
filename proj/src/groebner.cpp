#include "comvar/groebner.hpp"

#include <algorithm>
#include <stdexcept>

#include "comvar/errors.hpp"
#include "kernel.hpp"

namespace comvar {

IdealPresentation::IdealPresentation(Ring r, std::vector<Polynomial> gens, bool radical)
    : ring(std::move(r)), generators(std::move(gens)), radical_closure(radical) {
  for (const auto& g : generators) {
    if (!(g.ring() == ring)) throw RingMismatch("generator outside the presentation ring");
  }
  std::erase_if(generators, [](const Polynomial& g) { return g.is_zero(); });
}

IdealPresentation IdealPresentation::operator+(const IdealPresentation& other) const {
  if (!(ring == other.ring)) throw RingMismatch("ideal sum across rings");
  auto gens = generators;
  gens.insert(gens.end(), other.generators.begin(), other.generators.end());
  return IdealPresentation(ring, std::move(gens), radical_closure || other.radical_closure);
}

IdealPresentation IdealPresentation::plus(std::vector<Polynomial> extra) const {
  return *this + IdealPresentation(ring, std::move(extra), false);
}

bool IdealPresentation::is_homogeneous() const {
  return std::all_of(generators.begin(), generators.end(),
                     [](const Polynomial& g) { return g.is_homogeneous(); });
}

GroebnerBasis::GroebnerBasis(IdealPresentation source, std::vector<Polynomial> basis,
                             GbStats stats)
    : source_(std::move(source)), basis_(std::move(basis)), stats_(stats) {}

bool GroebnerBasis::is_unit() const {
  return basis_.size() == 1 && basis_.front().is_constant() && !basis_.front().is_zero();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(basis_.size());
  for (const auto& g : basis_) out.push_back(g.leading_monomial());
  return out;
}

std::vector<Polynomial> reduced_basis(const Ring& ring, std::span<const Polynomial> gens,
                                      const GbBudget& budget, GbStats* stats) {
  for (const auto& g : gens) {
    if (!(g.ring() == ring)) throw RingMismatch("buchberger: generator in another ring");
  }
  return detail::with_field(ring.field(), [&](auto field) {
    using K = decltype(field);
    detail::Kernel<K> kn(field, ring.arity(), ring.order());
    std::vector<detail::KPoly<K>> in;
    in.reserve(gens.size());
    for (const auto& g : gens) in.push_back(kn.convert(g));
    auto res = detail::buchberger(kn, std::move(in), budget);
    std::vector<Polynomial> out;
    out.reserve(res.basis.size());
    for (const auto& b : res.basis) out.push_back(kn.back(b, ring));
    if (stats) *stats = res.stats;
    return out;
  });
}

GroebnerBasis buchberger(const IdealPresentation& I, const GbBudget& budget) {
  GbStats stats;
  auto basis = reduced_basis(I.ring, I.generators, budget, &stats);
  return GroebnerBasis(I, std::move(basis), stats);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (!(f.ring() == g.ring())) throw RingMismatch("s_polynomial across rings");
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  const auto& field = f.ring().field();
  Polynomial a = f.times_monomial(l / f.leading_monomial(), field.inverse(f.leading_coeff()));
  Polynomial b = g.times_monomial(l / g.leading_monomial(), field.inverse(g.leading_coeff()));
  return a - b;
}

bool is_groebner_basis(std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    }
  }
  return true;
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& G) {
  if (!(f.ring() == G.ring())) throw RingMismatch("ideal_member across rings");
  if (G.basis().empty()) return f.is_zero();
  return normal_form(f, G.basis()).is_zero();
}

bool ideal_member(const Polynomial& f, const IdealPresentation& I, const GbBudget& budget) {
  if (I.radical_closure) return radical_member(f, I, budget);
  return ideal_member(f, buchberger(I, budget));
}

namespace {

std::string fresh_name(const Ring& ring, std::string base) {
  std::string name = base;
  for (int k = 0; ring.index_of(name); ++k) name = base + std::to_string(k);
  return name;
}

Ring kept_ring(const Ring& ring, const std::vector<std::string>& names) {
  MonomialOrder order = ring.order();
  if (order.kind == OrderKind::Block) order = MonomialOrder::grevlex();
  return make_ring(names, ring.field(), order);
}

}  // namespace

bool radical_member(const Polynomial& f, const IdealPresentation& I, const GbBudget& budget) {
  if (!(f.ring() == I.ring)) throw RingMismatch("radical_member across rings");
  if (f.is_zero()) return true;
  auto names = I.ring.names();
  names.push_back(fresh_name(I.ring, "t"));
  Ring ext = make_ring(names, I.ring.field(), MonomialOrder::grevlex());
  std::vector<Polynomial> gens;
  gens.reserve(I.generators.size() + 1);
  for (const auto& g : I.generators) gens.push_back(rename_into(g, ext));
  Polynomial t = Polynomial::variable(ext, ext.arity() - 1);
  gens.push_back(Polynomial::constant(ext, Coeff(1)) - t * rename_into(f, ext));
  auto basis = reduced_basis(ext, gens, budget);
  return basis.size() == 1 && basis.front().is_constant();
}

IdealPresentation eliminate(const IdealPresentation& I, std::span<const std::string> drop,
                            const GbBudget& budget) {
  const Ring& ring = I.ring;
  std::vector<bool> dropped(ring.arity(), false);
  for (const auto& d : drop) dropped[ring.require(d)] = true;
  std::vector<std::string> head, tail;
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    (dropped[i] ? head : tail).push_back(ring.name(i));
  }
  if (tail.empty()) throw std::invalid_argument("eliminate: cannot drop every variable");
  Ring kept = kept_ring(ring, tail);
  if (head.empty()) {
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators) gens.push_back(rename_into(g, kept));
    return IdealPresentation(kept, std::move(gens), I.radical_closure);
  }
  std::vector<std::string> all = head;
  all.insert(all.end(), tail.begin(), tail.end());
  Ring block = make_ring(all, ring.field(), MonomialOrder::block(head.size()));
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators) gens.push_back(rename_into(g, block));
  auto basis = reduced_basis(block, gens, budget);
  std::vector<Polynomial> out;
  for (const auto& b : basis) {
    bool free = std::all_of(b.terms().begin(), b.terms().end(), [&](const Term& t) {
      for (std::size_t i = 0; i < head.size(); ++i) {
        if (t.mono[i] != 0) return false;
      }
      return true;
    });
    if (!free) continue;
    std::vector<Term> terms;
    for (const auto& t : b.terms()) {
      auto e = t.mono.exponents();
      terms.push_back(Term{Monomial(std::vector<Exponent>(e.begin() + head.size(), e.end())),
                           t.coeff});
    }
    out.push_back(Polynomial::from_terms(kept, std::move(terms)));
  }
  return IdealPresentation(kept, std::move(out), I.radical_closure);
}

IdealPresentation intersect_ideals(const IdealPresentation& I, const IdealPresentation& J,
                                   const GbBudget& budget) {
  if (!(I.ring == J.ring)) throw RingMismatch("intersect_ideals across rings");
  const Ring& ring = I.ring;
  std::vector<std::string> names{fresh_name(ring, "t")};
  names.insert(names.end(), ring.names().begin(), ring.names().end());
  Ring ext = make_ring(names, ring.field(), MonomialOrder::grevlex());
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, Coeff(1)) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators) gens.push_back(t * rename_into(g, ext));
  for (const auto& g : J.generators) gens.push_back(one_minus_t * rename_into(g, ext));
  IdealPresentation aux(ext, std::move(gens));
  std::vector<std::string> drop{names.front()};
  IdealPresentation cut = eliminate(aux, drop, budget);
  std::vector<Polynomial> out;
  for (const auto& g : cut.generators) out.push_back(rename_into(g, ring));
  return IdealPresentation(ring, std::move(out), I.radical_closure && J.radical_closure);
}

namespace {

// Every generator of I lies in √J.
bool contained_in_radical(const IdealPresentation& I, const IdealPresentation& J,
                          const GbBudget& budget) {
  GroebnerBasis gj = buchberger(J, budget);
  for (const auto& g : I.generators) {
    if (ideal_member(g, gj)) continue;
    if (!radical_member(g, J, budget)) return false;
  }
  return true;
}

}  // namespace

bool ideal_equal_radical(const IdealPresentation& I, const IdealPresentation& J,
                         const GbBudget& budget) {
  if (!(I.ring == J.ring)) throw RingMismatch("ideal_equal_radical across rings");
  return contained_in_radical(I, J, budget) && contained_in_radical(J, I, budget);
}

bool ideal_equal(const IdealPresentation& I, const IdealPresentation& J,
                 const GbBudget& budget) {
  if (!(I.ring == J.ring)) throw RingMismatch("ideal_equal across rings");
  return buchberger(I, budget).basis() == buchberger(J, budget).basis();
}

}  // namespace comvar
