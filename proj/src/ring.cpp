#include "comvar/ring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace comvar {

namespace {

long degree_of(std::span<const Exponent> e) {
  return std::accumulate(e.begin(), e.end(), 0L);
}

// Graded reverse lex on a contiguous slice.
std::strong_ordering grevlex_cmp(std::span<const Exponent> a,
                                 std::span<const Exponent> b) {
  long da = degree_of(a), db = degree_of(b);
  if (da != db) return da <=> db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

MonomialOrder MonomialOrder::parse(std::string_view text) {
  if (text == "lex") return lex();
  if (text == "grevlex") return grevlex();
  if (text.starts_with("block:")) {
    text.remove_prefix(6);
    std::size_t k = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
    if (ec == std::errc{} && ptr == text.data() + text.size()) return block(k);
  }
  throw std::invalid_argument("malformed monomial order: '" + std::string(text) + "'");
}

std::string MonomialOrder::to_string() const {
  switch (kind) {
    case OrderKind::Lex: return "lex";
    case OrderKind::GrevLex: return "grevlex";
    case OrderKind::Block: return "block:" + std::to_string(block_split);
  }
  return "?";
}

std::strong_ordering MonomialOrder::compare(std::span<const Exponent> a,
                                            std::span<const Exponent> b) const {
  switch (kind) {
    case OrderKind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case OrderKind::GrevLex:
      return grevlex_cmp(a, b);
    case OrderKind::Block: {
      auto head = grevlex_cmp(a.first(block_split), b.first(block_split));
      if (head != 0) return head;
      return grevlex_cmp(a.subspan(block_split), b.subspan(block_split));
    }
  }
  return std::strong_ordering::equal;
}

long Monomial::total_degree() const { return degree_of(exps_); }

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m(arity());
  for (std::size_t i = 0; i < exps_.size(); ++i) m[i] = std::max(exps_[i], other[i]);
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m(arity());
  for (std::size_t i = 0; i < exps_.size(); ++i) m[i] = exps_[i] + other[i];
  return m;
}

Monomial Monomial::operator/(const Monomial& d) const {
  Monomial m(arity());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (d[i] > exps_[i]) throw std::invalid_argument("monomial does not divide");
    m[i] = exps_[i] - d[i];
  }
  return m;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!std::isalpha(head) && head != '_') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Ring make_ring(std::vector<std::string> names, FieldSpec field, MonomialOrder order) {
  if (names.empty()) throw std::invalid_argument("ring needs at least one variable");
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (!is_identifier(n)) throw std::invalid_argument("bad variable name '" + n + "'");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable '" + n + "'");
  }
  if (order.kind == OrderKind::Block &&
      (order.block_split == 0 || order.block_split >= names.size())) {
    throw std::invalid_argument("block split must lie in [1, arity)");
  }
  if (order.kind != OrderKind::Block) order.block_split = 0;
  auto d = std::make_shared<const Ring::Data>(Ring::Data{std::move(names), field, order});
  return Ring(std::move(d));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  const auto& n = data_->names;
  auto it = std::find(n.begin(), n.end(), name);
  if (it == n.end()) return std::nullopt;
  return static_cast<std::size_t>(it - n.begin());
}

std::size_t Ring::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

Ring Ring::with_order(MonomialOrder order) const {
  return make_ring(data_->names, data_->field, order);
}

bool operator==(const Ring& a, const Ring& b) {
  if (a.data_ == b.data_) return true;
  if (!a.data_ || !b.data_) return false;
  return a.data_->field == b.data_->field && a.data_->order == b.data_->order &&
         a.data_->names == b.data_->names;
}

}  // namespace comvar
