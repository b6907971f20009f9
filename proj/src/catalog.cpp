#include "comvar/catalog.hpp"

#include <charconv>
#include <map>
#include <stdexcept>

#include "comvar/errors.hpp"

namespace comvar {

namespace {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

constexpr std::array<const char*, 8> kSl3Entries{"11", "12", "13", "21", "22", "23", "31", "32"};

std::string indexed(std::string_view base, int i) { return std::string(base) + std::to_string(i); }

std::string sl3_name(int i, const char* rc) { return "m" + std::to_string(i) + "_" + rc; }

Polynomial var(const Ring& ring, const std::string& name) {
  return Polynomial::variable(ring, std::string_view(name));
}

void require_not_char2(const FieldSpec& field, std::string_view what) {
  if (!field.allows_sl2()) {
    throw CharacteristicError(std::string(what) + " needs characteristic other than 2");
  }
}

void require_r(int r, int min, std::string_view what) {
  if (r < min) {
    throw std::invalid_argument(std::string(what) + ": r must be at least " + std::to_string(min));
  }
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t n = a.size();
  const Ring& ring = a[0][0].ring();
  PolyMatrix out(n, std::vector<Polynomial>(n, Polynomial(ring)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

PolyMatrix gl2_matrix(const Ring& ring, int i) {
  return {{var(ring, indexed("a", i)), var(ring, indexed("b", i))},
          {var(ring, indexed("c", i)), var(ring, indexed("d", i))}};
}

PolyMatrix sl3_matrix(const Ring& ring, int i) {
  PolyMatrix m(3, std::vector<Polynomial>(3, Polynomial(ring)));
  for (const char* rc : kSl3Entries) {
    m[rc[0] - '1'][rc[1] - '1'] = var(ring, sl3_name(i, rc));
  }
  m[2][2] = -(m[0][0] + m[1][1]);
  return m;
}

// Entries of AB - BA, skipping the last diagonal entry (minus the trace of
// the rest, hence redundant).
std::vector<Polynomial> commutator_entries(const PolyMatrix& a, const PolyMatrix& b) {
  auto ab = mat_mul(a, b), ba = mat_mul(b, a);
  const std::size_t n = a.size();
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == n - 1 && j == n - 1) continue;
      out.push_back(ab[i][j] - ba[i][j]);
    }
  }
  return out;
}

Polynomial det3(const PolyMatrix& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Polynomial trace_of_square(const PolyMatrix& m) {
  Polynomial t(m[0][0].ring());
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = 0; b < m.size(); ++b) t += m[a][b] * m[b][a];
  }
  return t;
}

// All 2-minors of the matrix whose columns are cols[k].
std::vector<Polynomial> two_minors(const std::vector<std::vector<Polynomial>>& cols) {
  std::vector<Polynomial> out;
  const std::size_t rows = cols.empty() ? 0 : cols[0].size();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    for (std::size_t j = i + 1; j < cols.size(); ++j) {
      for (std::size_t a = 0; a < rows; ++a) {
        for (std::size_t b = a + 1; b < rows; ++b) {
          out.push_back(cols[i][a] * cols[j][b] - cols[j][a] * cols[i][b]);
        }
      }
    }
  }
  return out;
}

// sl2 nilcomm generators for tuples lo..hi (1-based, inclusive).
std::vector<Polynomial> sl2_nilcomm_gens(const Ring& ring, int lo, int hi) {
  std::vector<Polynomial> out;
  for (int i = lo; i <= hi; ++i) {
    auto x = var(ring, indexed("x", i)), y = var(ring, indexed("y", i)),
         z = var(ring, indexed("z", i));
    out.push_back(x * x + y * z);
  }
  for (int i = lo; i <= hi; ++i) {
    for (int j = i + 1; j <= hi; ++j) {
      auto xi = var(ring, indexed("x", i)), yi = var(ring, indexed("y", i)),
           zi = var(ring, indexed("z", i));
      auto xj = var(ring, indexed("x", j)), yj = var(ring, indexed("y", j)),
           zj = var(ring, indexed("z", j));
      out.push_back(xi * yj - xj * yi);
      out.push_back(yi * zj - yj * zi);
      out.push_back(xi * zj - xj * zi);
    }
  }
  return out;
}

std::vector<Polynomial> sl2_comm_gens(const Ring& ring, int lo, int hi) {
  std::vector<Polynomial> out;
  for (int i = lo; i <= hi; ++i) {
    for (int j = i + 1; j <= hi; ++j) {
      auto xi = var(ring, indexed("x", i)), yi = var(ring, indexed("y", i)),
           zi = var(ring, indexed("z", i));
      auto xj = var(ring, indexed("x", j)), yj = var(ring, indexed("y", j)),
           zj = var(ring, indexed("z", j));
      out.push_back(xi * yj - xj * yi);
      out.push_back(yi * zj - yj * zi);
      out.push_back(xi * zj - xj * zi);
    }
  }
  return out;
}

std::vector<Polynomial> tuple_vars(const Ring& ring, int i) {
  return {var(ring, indexed("x", i)), var(ring, indexed("y", i)), var(ring, indexed("z", i))};
}

int parse_int(std::string_view key, std::string_view v) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    throw std::invalid_argument("variety id: bad integer for '" + std::string(key) + "': '" +
                                std::string(v) + "'");
  }
  return out;
}

const std::map<std::string, Family, std::less<>>& family_names() {
  static const std::map<std::string, Family, std::less<>> names{
      {"sl2-comm", Family::Sl2Comm},         {"sl2-nilcomm", Family::Sl2NilComm},
      {"gl2-comm", Family::Gl2Comm},         {"sl3-u-comm", Family::Sl3UComm},
      {"sl3-nilcomm", Family::Sl3NilComm},   {"mixed", Family::Mixed},
      {"family-f", Family::FamilyF},         {"subreg", Family::SubregComponent},
      {"cut", Family::CutComponent},
  };
  return names;
}

}  // namespace

// --- VarietyId -------------------------------------------------------------

VarietyId VarietyId::parse(std::string_view text) {
  VarietyId id;
  auto colon = text.find(':');
  std::string_view head = text.substr(0, colon);
  auto it = family_names().find(head);
  if (it == family_names().end()) {
    throw std::invalid_argument("unknown variety family '" + std::string(head) + "'");
  }
  id.family = it->second;
  bool have_r = false;
  std::string_view rest = colon == std::string_view::npos ? "" : text.substr(colon + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view kv = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? "" : rest.substr(comma + 1);
    auto eq = kv.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("variety id: expected key=value, got '" + std::string(kv) + "'");
    }
    std::string_view key = kv.substr(0, eq), val = kv.substr(eq + 1);
    if (key == "r") {
      id.r = parse_int(key, val);
      have_r = true;
    } else if (key == "i") {
      id.i = parse_int(key, val);
    } else if (key == "j") {
      id.j = parse_int(key, val);
    } else if (key == "component") {
      id.component = parse_int(key, val);
    } else if (key == "label") {
      id.label = std::string(val);
    } else if (key == "v") {
      if (val.starts_with("V") || val.starts_with("v")) val.remove_prefix(1);
      id.j = parse_int(key, val);
    } else {
      throw std::invalid_argument("variety id: unknown key '" + std::string(key) + "'");
    }
  }
  switch (id.family) {
    case Family::Mixed:
      if (id.i < 1 || id.j < 1) throw std::invalid_argument("mixed: need i >= 1 and j >= 1");
      if (id.component < 0 || id.component > 2) {
        throw std::invalid_argument("mixed: component must be 0, 1 or 2");
      }
      id.r = id.i + id.j;
      have_r = true;
      break;
    case Family::FamilyF:
      if (id.label.empty()) throw std::invalid_argument("family-f: label required");
      break;
    case Family::SubregComponent:
      if (id.j != 1 && id.j != 2) throw std::invalid_argument("subreg: j must be 1 or 2");
      break;
    case Family::CutComponent:
      if (id.j < 1 || id.j > 3) throw std::invalid_argument("cut: v must be V1, V2 or V3");
      break;
    default:
      break;
  }
  if (!have_r) throw std::invalid_argument("variety id: r required");
  if (id.r < 1) throw std::invalid_argument("variety id: r must be at least 1");
  return id;
}

std::string VarietyId::to_string() const {
  std::string head;
  for (const auto& [name, fam] : family_names()) {
    if (fam == family) head = name;
  }
  switch (family) {
    case Family::Mixed: {
      std::string s = head + ":i=" + std::to_string(i) + ",j=" + std::to_string(j);
      if (component != 0) s += ",component=" + std::to_string(component);
      return s;
    }
    case Family::FamilyF:
      return head + ":r=" + std::to_string(r) + ",label=" + label;
    case Family::SubregComponent:
      return head + ":r=" + std::to_string(r) + ",j=" + std::to_string(j);
    case Family::CutComponent:
      return head + ":r=" + std::to_string(r) + ",v=V" + std::to_string(j);
    default:
      return head + ":r=" + std::to_string(r);
  }
}

// --- rings -----------------------------------------------------------------

Ring sl2_ring(int r, const FieldSpec& field) {
  require_r(r, 1, "sl2 ring");
  std::vector<std::string> names;
  for (int i = 1; i <= r; ++i) {
    for (const char* c : {"x", "y", "z"}) names.push_back(indexed(c, i));
  }
  return make_ring(std::move(names), field);
}

Ring gl2_ring(int r, const FieldSpec& field) {
  require_r(r, 1, "gl2 ring");
  std::vector<std::string> names;
  for (int i = 1; i <= r; ++i) {
    for (const char* c : {"a", "b", "c", "d"}) names.push_back(indexed(c, i));
  }
  return make_ring(std::move(names), field);
}

Ring sl2_affine_ring(int r, const FieldSpec& field) {
  require_r(r, 1, "sl2 x A^r ring");
  std::vector<std::string> names = sl2_ring(r, field).names();
  for (int i = 1; i <= r; ++i) names.push_back(indexed("s", i));
  return make_ring(std::move(names), field);
}

Ring sl3_ring(int r, const FieldSpec& field) {
  require_r(r, 1, "sl3 ring");
  std::vector<std::string> names;
  for (int i = 1; i <= r; ++i) {
    for (const char* rc : kSl3Entries) names.push_back(sl3_name(i, rc));
  }
  return make_ring(std::move(names), field);
}

// --- builders --------------------------------------------------------------

IdealPresentation build_sl2_comm(int r, const FieldSpec& field) {
  require_not_char2(field, "sl2 commuting variety");
  Ring ring = sl2_ring(r, field);
  return IdealPresentation(ring, sl2_comm_gens(ring, 1, r));
}

IdealPresentation sl2_comm_by_minors(int r, const FieldSpec& field) {
  require_not_char2(field, "sl2 commuting variety");
  Ring ring = sl2_ring(r, field);
  std::vector<std::vector<Polynomial>> cols;
  for (int i = 1; i <= r; ++i) cols.push_back(tuple_vars(ring, i));
  // Row pairs come out as (x,y), (x,z), (y,z); reorder to match eq. order.
  auto minors = two_minors(cols);
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < minors.size(); k += 3) {
    out.push_back(minors[k]);
    out.push_back(minors[k + 2]);
    out.push_back(minors[k + 1]);
  }
  return IdealPresentation(ring, std::move(out));
}

IdealPresentation build_sl2_nilcomm(int r, const FieldSpec& field) {
  require_not_char2(field, "sl2 nilpotent commuting variety");
  Ring ring = sl2_ring(r, field);
  return IdealPresentation(ring, sl2_nilcomm_gens(ring, 1, r));
}

IdealPresentation build_gl2_comm(int r, const FieldSpec& field) {
  require_not_char2(field, "gl2 commuting variety");
  Ring ring = gl2_ring(r, field);
  std::vector<Polynomial> gens;
  for (int i = 1; i <= r; ++i) {
    for (int j = i + 1; j <= r; ++j) {
      auto e = commutator_entries(gl2_matrix(ring, i), gl2_matrix(ring, j));
      gens.insert(gens.end(), e.begin(), e.end());
    }
  }
  return IdealPresentation(ring, std::move(gens));
}

IdealPresentation build_sl3_u_comm(int r, const FieldSpec& field) {
  Ring ring = sl2_ring(r, field);
  std::vector<Polynomial> gens;
  for (int i = 1; i <= r; ++i) {
    for (int j = i + 1; j <= r; ++j) {
      gens.push_back(var(ring, indexed("x", i)) * var(ring, indexed("z", j)) -
                     var(ring, indexed("x", j)) * var(ring, indexed("z", i)));
    }
  }
  return IdealPresentation(ring, std::move(gens));
}

IdealPresentation sl3_u_comm_by_minors(int r, const FieldSpec& field) {
  Ring ring = sl2_ring(r, field);
  std::vector<std::vector<Polynomial>> cols;
  for (int i = 1; i <= r; ++i) {
    cols.push_back({var(ring, indexed("x", i)), var(ring, indexed("z", i))});
  }
  return IdealPresentation(ring, two_minors(cols));
}

IdealPresentation build_sl3_nilcomm(int r, const FieldSpec& field) {
  if (field.is_prime_field() && field.characteristic() <= 3) {
    throw CharacteristicError("sl3 nilpotent cone equations need characteristic 0 or p > 3");
  }
  Ring ring = sl3_ring(r, field);
  std::vector<Polynomial> gens;
  for (int i = 1; i <= r; ++i) {
    for (int j = i + 1; j <= r; ++j) {
      auto e = commutator_entries(sl3_matrix(ring, i), sl3_matrix(ring, j));
      gens.insert(gens.end(), e.begin(), e.end());
    }
  }
  for (int i = 1; i <= r; ++i) {
    auto m = sl3_matrix(ring, i);
    gens.push_back(trace_of_square(m));
    gens.push_back(det3(m));
  }
  return IdealPresentation(ring, std::move(gens));
}

IdealPresentation build_sl3_subreg_comm(int r, const FieldSpec& field) {
  Ring ring = sl3_ring(r, field);
  std::vector<Polynomial> gens;
  for (int i = 1; i <= r; ++i) {
    for (int j = i + 1; j <= r; ++j) {
      auto e = commutator_entries(sl3_matrix(ring, i), sl3_matrix(ring, j));
      gens.insert(gens.end(), e.begin(), e.end());
    }
  }
  for (int i = 1; i <= r; ++i) {
    auto m = sl3_matrix(ring, i);
    std::vector<std::vector<Polynomial>> cols;
    for (int c = 0; c < 3; ++c) cols.push_back({m[0][c], m[1][c], m[2][c]});
    auto minors = two_minors(cols);
    gens.insert(gens.end(), minors.begin(), minors.end());
  }
  return IdealPresentation(ring, std::move(gens));
}

std::vector<Coeff> gl2_split(std::span<const Coeff> p, const FieldSpec& field) {
  require_not_char2(field, "gl2 split");
  if (p.size() % 4 != 0) throw std::invalid_argument("gl2_split: point length not 4r");
  const std::size_t r = p.size() / 4;
  std::vector<Coeff> out(4 * r);
  Coeff half = field.inverse(field.from_integer(2));
  for (std::size_t i = 0; i < r; ++i) {
    const Coeff &a = p[4 * i], &b = p[4 * i + 1], &c = p[4 * i + 2], &d = p[4 * i + 3];
    out[3 * i] = (a - d) * half;
    out[3 * i + 1] = b;
    out[3 * i + 2] = c;
    out[3 * r + i] = a + d;
  }
  for (auto& v : out) field.normalize(v);
  return out;
}

std::vector<Coeff> gl2_unsplit(std::span<const Coeff> p, const FieldSpec& field) {
  require_not_char2(field, "gl2 unsplit");
  if (p.size() % 4 != 0) throw std::invalid_argument("gl2_unsplit: point length not 4r");
  const std::size_t r = p.size() / 4;
  std::vector<Coeff> out(4 * r);
  Coeff half = field.inverse(field.from_integer(2));
  for (std::size_t i = 0; i < r; ++i) {
    const Coeff &x = p[3 * i], &y = p[3 * i + 1], &z = p[3 * i + 2], &s = p[3 * r + i];
    out[4 * i] = x + s * half;
    out[4 * i + 1] = y;
    out[4 * i + 2] = z;
    out[4 * i + 3] = s * half - x;
  }
  for (auto& v : out) field.normalize(v);
  return out;
}

std::vector<Polynomial> gl2_unsplit_images(int r, const FieldSpec& field) {
  require_not_char2(field, "gl2 unsplit");
  Ring target = sl2_affine_ring(r, field);
  Coeff half = field.inverse(field.from_integer(2));
  std::vector<Polynomial> out;
  for (int i = 1; i <= r; ++i) {
    auto x = var(target, indexed("x", i)), s = var(target, indexed("s", i));
    out.push_back(x + s.scaled(half));
    out.push_back(var(target, indexed("y", i)));
    out.push_back(var(target, indexed("z", i)));
    out.push_back(s.scaled(half) - x);
  }
  return out;
}

std::vector<Polynomial> gl2_split_images(int r, const FieldSpec& field) {
  require_not_char2(field, "gl2 split");
  Ring target = gl2_ring(r, field);
  Coeff half = field.inverse(field.from_integer(2));
  std::vector<Polynomial> out;
  for (int i = 1; i <= r; ++i) {
    auto a = var(target, indexed("a", i)), d = var(target, indexed("d", i));
    out.push_back((a - d).scaled(half));
    out.push_back(var(target, indexed("b", i)));
    out.push_back(var(target, indexed("c", i)));
  }
  for (int i = 1; i <= r; ++i) {
    out.push_back(var(target, indexed("a", i)) + var(target, indexed("d", i)));
  }
  return out;
}

MixedPresentation build_mixed(int i, int j, const FieldSpec& field) {
  require_not_char2(field, "mixed variety");
  if (i < 1 || j < 1) throw std::invalid_argument("build_mixed: need i >= 1 and j >= 1");
  const int r = i + j;
  Ring ring = sl2_ring(r, field);

  std::vector<Polynomial> mixed;
  for (int k = 1; k <= i; ++k) {
    auto x = var(ring, indexed("x", k)), y = var(ring, indexed("y", k)),
         z = var(ring, indexed("z", k));
    mixed.push_back(x * x + y * z);
  }
  auto comm = sl2_comm_gens(ring, 1, r);
  mixed.insert(mixed.end(), comm.begin(), comm.end());

  std::vector<Polynomial> zero;
  for (int k = 1; k <= i; ++k) {
    auto t = tuple_vars(ring, k);
    zero.insert(zero.end(), t.begin(), t.end());
  }
  auto tail = sl2_comm_gens(ring, i + 1, r);
  zero.insert(zero.end(), tail.begin(), tail.end());

  return MixedPresentation{
      IdealPresentation(ring, std::move(mixed)),
      IdealPresentation(ring, sl2_nilcomm_gens(ring, 1, r), true),
      IdealPresentation(ring, std::move(zero)),
  };
}

IdealPresentation family_I(int r, int m, const FieldSpec& field) {
  require_not_char2(field, "family I_m");
  if (m < 1 || m > r) throw std::invalid_argument("family_I: need 1 <= m <= r");
  Ring ring = sl2_ring(r, field);
  auto gens = sl2_nilcomm_gens(ring, 1, r);
  for (int k = 1; k <= r - m; ++k) {
    auto t = tuple_vars(ring, k);
    gens.insert(gens.end(), t.begin(), t.end());
  }
  return IdealPresentation(ring, std::move(gens), true);
}

IdealPresentation family_P(int r, int m, const FieldSpec& field) {
  require_not_char2(field, "family P_m");
  if (m < 0 || m > r) throw std::invalid_argument("family_P: need 0 <= m <= r");
  Ring ring = sl2_ring(r, field);
  std::vector<Polynomial> gens;
  for (int k = 1; k <= m; ++k) {
    auto t = tuple_vars(ring, k);
    gens.insert(gens.end(), t.begin(), t.end());
  }
  for (int k = m + 1; k <= r; ++k) {
    auto x = var(ring, indexed("x", k)), y = var(ring, indexed("y", k)),
         z = var(ring, indexed("z", k));
    gens.push_back(x - y);
    gens.push_back(y + z);
  }
  return IdealPresentation(ring, std::move(gens));
}

std::vector<FamilyFMember> build_family_F(int r, const FieldSpec& field) {
  require_not_char2(field, "family F");
  require_r(r, 1, "build_family_F");
  Ring ring = sl2_ring(r, field);
  std::vector<FamilyFMember> out;
  for (int m = 1; m <= r; ++m) out.push_back({"I_" + std::to_string(m), family_I(r, m, field)});
  for (int m = 1; m <= r; ++m) out.push_back({"P_" + std::to_string(m), family_P(r, m, field)});

  const IdealPresentation Ir = family_I(r, r, field);
  std::vector<Polynomial> yz;
  for (int k = 1; k <= r; ++k) {
    yz.push_back(var(ring, indexed("y", k)) + var(ring, indexed("z", k)));
  }
  for (int m = 1; m <= r; ++m) {
    out.push_back({"Chain1_" + std::to_string(m),
                   Ir.plus(std::vector<Polynomial>(yz.begin(), yz.begin() + m))});
  }
  for (int n = 0; n <= r; ++n) {
    std::vector<Polynomial> extra = yz;
    for (int k = 1; k <= n; ++k) {
      extra.push_back(var(ring, indexed("x", k)) + var(ring, indexed("y", k)));
    }
    out.push_back({"Chain2_" + std::to_string(n), Ir.plus(std::move(extra))});
  }
  std::vector<Polynomial> all;
  for (std::size_t v = 0; v < ring.arity(); ++v) all.push_back(Polynomial::variable(ring, v));
  out.push_back({"MaxIdeal", IdealPresentation(ring, std::move(all))});
  return out;
}

CutComponents build_cut_components(int r, const FieldSpec& field) {
  require_not_char2(field, "cut components");
  require_r(r, 2, "build_cut_components");
  Ring ring = sl2_ring(r, field);
  std::vector<Polynomial> v1 = tuple_vars(ring, 1);
  auto rest = sl2_nilcomm_gens(ring, 2, r);
  v1.insert(v1.end(), rest.begin(), rest.end());
  std::vector<Polynomial> v2, v3;
  for (int k = 1; k <= r; ++k) {
    auto x = var(ring, indexed("x", k)), y = var(ring, indexed("y", k)),
         z = var(ring, indexed("z", k));
    v2.push_back(y - x);
    v2.push_back(z + x);
    v3.push_back(y + x);
    v3.push_back(z - x);
  }
  return CutComponents{IdealPresentation(ring, std::move(v1), true),
                       IdealPresentation(ring, std::move(v2)),
                       IdealPresentation(ring, std::move(v3))};
}

std::array<SubregDescriptor, 2> build_subreg_components(int r) {
  require_r(r, 1, "build_subreg_components");
  auto unit = [](int row, int col) {
    IntMatrix3 m{};
    m[row - 1][col - 1] = 1;
    return m;
  };
  SubregDescriptor w1{1, unit(2, 1), {unit(2, 1), unit(3, 1)}};
  SubregDescriptor w2{2, unit(2, 1), {unit(2, 1), unit(2, 3)}};
  return {w1, w2};
}

std::vector<Obligation> appendix_cases(int r, const FieldSpec& field) {
  require_not_char2(field, "appendix obligations");
  require_r(r, 1, "appendix_cases");
  Ring ring = sl2_ring(r, field);
  const IdealPresentation nil(ring, sl2_nilcomm_gens(ring, 1, r));
  auto X = [&](int k) { return var(ring, indexed("x", k)); };
  auto Y = [&](int k) { return var(ring, indexed("y", k)); };
  auto Z = [&](int k) { return var(ring, indexed("z", k)); };
  const char* coord = "xyz";

  std::vector<Obligation> out;
  // Case 1: (y_{m+1} + z_{m+1}) kills x_j, y_j, z_j modulo nil + Σ_{i≤m} ⟨y_i + z_i⟩.
  for (int m = 1; m <= r - 1; ++m) {
    std::vector<Polynomial> extra;
    for (int i = 1; i <= m; ++i) extra.push_back(Y(i) + Z(i));
    IdealPresentation I = nil.plus(extra);
    Polynomial g = Y(m + 1) + Z(m + 1);
    for (int j = 1; j <= m; ++j) {
      auto t = tuple_vars(ring, j);
      for (int c = 0; c < 3; ++c) {
        out.push_back({"case1:m=" + std::to_string(m) + ",j=" + std::to_string(j) + "," +
                           coord[c],
                       ObligationKind::Member, g * t[c], I});
      }
    }
  }
  // Case 2: modulo nil + Σ_{i≤r} ⟨y_i + z_i⟩ + Σ_{i≤n} ⟨x_i + y_i⟩.
  for (int n = 0; n <= r - 1; ++n) {
    std::vector<Polynomial> extra;
    for (int i = 1; i <= r; ++i) extra.push_back(Y(i) + Z(i));
    for (int i = 1; i <= n; ++i) extra.push_back(X(i) + Y(i));
    IdealPresentation I = nil.plus(extra);
    Polynomial g = X(n + 1) + Y(n + 1);
    const std::string tag = "case2:n=" + std::to_string(n);
    for (int j = 1; j <= n; ++j) {
      auto t = tuple_vars(ring, j);
      for (int c = 0; c < 3; ++c) {
        out.push_back({tag + ",j=" + std::to_string(j) + "," + coord[c], ObligationKind::Member,
                       g * t[c], I});
      }
    }
    for (int h = n + 1; h <= r; ++h) {
      Polynomial w = X(n + 1) * X(h) + Y(n + 1) * Z(h);
      out.push_back({tag + ",h=" + std::to_string(h) + ",reduce", ObligationKind::Member,
                     g * (X(h) - Y(h)) - w, I});
      out.push_back({tag + ",h=" + std::to_string(h) + ",radical", ObligationKind::RadicalMember,
                     w, nil});
    }
  }
  // Non-zero-divisors.
  for (int m = 1; m <= r - 1; ++m) {
    out.push_back({"nzd:m=" + std::to_string(m), ObligationKind::RadicalNonMember,
                   Y(m + 1) + Z(m + 1), family_I(r, r - m, field)});
  }
  for (int n = 0; n <= r - 1; ++n) {
    out.push_back({"nzd:n=" + std::to_string(n), ObligationKind::NonMember, X(n + 1) + Y(n + 1),
                   family_P(r, n, field)});
  }
  return out;
}

IdealPresentation build(const VarietyId& id, const FieldSpec& field) {
  switch (id.family) {
    case Family::Sl2Comm: return build_sl2_comm(id.r, field);
    case Family::Sl2NilComm: return build_sl2_nilcomm(id.r, field);
    case Family::Gl2Comm: return build_gl2_comm(id.r, field);
    case Family::Sl3UComm: return build_sl3_u_comm(id.r, field);
    case Family::Sl3NilComm: return build_sl3_nilcomm(id.r, field);
    case Family::Mixed: {
      auto m = build_mixed(id.i, id.j, field);
      if (id.component == 1) return m.nilpotent_component;
      if (id.component == 2) return m.zero_sl2_component;
      return m.mixed;
    }
    case Family::FamilyF: {
      for (auto& member : build_family_F(id.r, field)) {
        if (member.label == id.label) return member.presentation;
      }
      throw std::invalid_argument("family-f: no member '" + id.label + "' at r=" +
                                  std::to_string(id.r));
    }
    case Family::SubregComponent: return build_sl3_subreg_comm(id.r, field);
    case Family::CutComponent: {
      auto c = build_cut_components(id.r, field);
      return id.j == 1 ? c.v1 : id.j == 2 ? c.v2 : c.v3;
    }
  }
  throw std::invalid_argument("unsupported variety id");
}

}  // namespace comvar
