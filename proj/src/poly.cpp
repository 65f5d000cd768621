#include "poincare/poly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <tuple>

#include "poincare/error.hpp"

namespace poincare {

// --- monomials --------------------------------------------------------------

int degree(const Monomial& m) { return m[0] + m[1] + m[2] + m[3]; }

namespace {

std::size_t binom(long n, long k) {
  if (k < 0 || n < k) return 0;
  std::size_t r = 1;
  for (long i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

}  // namespace

std::size_t monomial_count(int d) { return d < 0 ? 0 : binom(d + 3, 3); }

std::size_t mono_index(const Monomial& m) {
  const long d = degree(m);
  // monomials with larger e1, then same e1 and larger e2, then larger e3
  return binom(d - m[0] + 2, 3) + binom(d - m[0] - m[1] + 1, 2) + static_cast<std::size_t>(d - m[0] - m[1] - m[2]);
}

const std::vector<Monomial>& monomials(int d) {
  static std::mutex mu;
  static std::map<int, std::vector<Monomial>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  std::vector<Monomial> out;
  out.reserve(monomial_count(d));
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b)
      for (int c = d - a - b; c >= 0; --c) out.push_back({a, b, c, d - a - b - c});
  return cache.emplace(d, std::move(out)).first->second;
}

Weight mono_weight(const Monomial& m) { return {m[0] + m[1] - m[2] - m[3], m[0] - m[1] + m[2] - m[3]}; }

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  int da = degree(a), db = degree(b);
  if (da != db) return da > db;
  return a > b;
}

// --- Poly -------------------------------------------------------------------

Poly Poly::constant(const Rational& c) { return monomial({0, 0, 0, 0}, c); }

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p;
  p.add_term(m, c);
  return p;
}

Poly Poly::z(int i) {
  if (i < 1 || i > 4) throw Error("variable index out of range");
  Monomial m{0, 0, 0, 0};
  m[i - 1] = 1;
  return monomial(m);
}

Poly Poly::det() { return z(1) * z(4) - z(2) * z(3); }

Rational Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Poly::degree() const { return terms_.empty() ? -1 : poincare::degree(terms_.begin()->first); }

bool Poly::homogeneous() const {
  int d = degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return poincare::degree(t.first) == d; });
}

Poly Poly::pow(int k) const {
  if (k < 0) throw Error("negative power");
  Poly r = constant(1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

Poly operator+(Poly a, const Poly& b) {
  for (const auto& [m, c] : b.terms_) a.add_term(m, c);
  return a;
}

Poly operator-(Poly a, const Poly& b) {
  for (const auto& [m, c] : b.terms_) a.add_term(m, -c);
  return a;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      r.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2], ma[3] + mb[3]}, ca * cb);
  return r;
}

Poly operator*(const Rational& c, Poly a) {
  if (c == 0) return {};
  for (auto& [m, x] : a.terms_) x *= c;
  return a;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = degree(m) == 0;
    if (mag != 1 || constant) {
      os << to_string(mag);
      if (!constant) os << "*";
    }
    bool sep = false;
    for (int i = 0; i < 4; ++i) {
      if (!m[i]) continue;
      if (sep) os << "*";
      os << "z" << i + 1;
      if (m[i] > 1) os << "^" << m[i];
      sep = true;
    }
  }
  return os.str();
}

nlohmann::json to_json(const Poly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) out.push_back({m[0], m[1], m[2], m[3], to_string(c)});
  return out;
}

Poly poly_from_json(const nlohmann::json& j) {
  Poly p;
  for (const auto& t : j)
    p.add_term({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>(), t.at(3).get<int>()},
               parse_rational(t.at(4).get<std::string>()));
  return p;
}

// --- VPoly ------------------------------------------------------------------

VPoly VPoly::zero(IrrepLabel target) { return {target, std::vector<Poly>(dim(target))}; }

VPoly VPoly::scalar_times(const Poly& p, IrrepLabel target, std::size_t c) {
  VPoly v = zero(target);
  v.components.at(c) = p;
  return v;
}

bool VPoly::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const Poly& p) { return p.is_zero(); });
}

int VPoly::degree() const {
  int d = -1;
  for (const auto& p : components) d = std::max(d, p.degree());
  return d;
}

// --- derivation action --------------------------------------------------------

namespace {

// For E/F: variable i goes to variable image[i] (or -1 if killed).
// For H: variable i is scaled by scale[i].
struct Derivation {
  bool diagonal;
  std::array<int, 4> image;
  std::array<int, 4> scale;
};

const Derivation& derivation(Gen g) {
  static const std::array<Derivation, 6> table{{
      {false, {-1, -1, 0, 1}, {}},         // E_L: z3->z1, z4->z2
      {false, {2, 3, -1, -1}, {}},         // F_L: z1->z3, z2->z4
      {true, {}, {1, 1, -1, -1}},          // H_L
      {false, {-1, 0, -1, 2}, {}},         // E_R: z2->z1, z4->z3
      {false, {1, -1, 3, -1}, {}},         // F_R: z1->z2, z3->z4
      {true, {}, {1, -1, 1, -1}},          // H_R
  }};
  return table[static_cast<int>(g)];
}

template <class F>
void derive_monomial(Gen g, const Monomial& m, F&& emit) {
  const Derivation& d = derivation(g);
  if (d.diagonal) {
    int w = 0;
    for (int i = 0; i < 4; ++i) w += d.scale[i] * m[i];
    if (w) emit(m, w);
    return;
  }
  for (int i = 0; i < 4; ++i) {
    if (!m[i] || d.image[i] < 0) continue;
    Monomial n = m;
    --n[i];
    ++n[d.image[i]];
    emit(n, m[i]);
  }
}

}  // namespace

Poly act_generator(Gen g, const Poly& p) {
  Poly out;
  for (const auto& [m, c] : p.terms())
    derive_monomial(g, m, [&](const Monomial& n, int k) { out.add_term(n, c * k); });
  return out;
}

VPoly act_generator_v(Gen g, const VPoly& p) {
  const std::size_t n = dim(p.target);
  if (p.components.size() != n) throw DimensionMismatch("VPoly length does not match its target");
  VPoly out = VPoly::zero(p.target);
  auto irrep = irrep_matrices(p.target);
  const Matrix& a = irrep[g];
  for (std::size_t c = 0; c < n; ++c) {
    if (p.components[c].is_zero()) continue;
    out.components[c] = out.components[c] + act_generator(g, p.components[c]);
    for (std::size_t r = 0; r < n; ++r) {
      Rational x = a.at(r, c);
      if (x != 0) out.components[r] = out.components[r] + x * p.components[c];
    }
  }
  return out;
}

// --- coordinates --------------------------------------------------------------

std::size_t space_dim(int d, IrrepLabel target) { return monomial_count(d) * dim(target); }

SparseVec coords(const VPoly& p, int d) {
  const std::size_t n = dim(p.target);
  std::vector<SparseVec::Entry> e;
  for (std::size_t c = 0; c < p.components.size(); ++c)
    for (const auto& [m, x] : p.components[c].terms()) {
      if (degree(m) != d) throw Error("polynomial is not homogeneous of degree " + std::to_string(d));
      e.emplace_back(mono_index(m) * n + c, x);
    }
  return SparseVec(std::move(e));
}

SparseVec coords(const Poly& p, int d) { return coords(VPoly{{0, 0}, {p}}, d); }

VPoly vpoly_from_coords(const SparseVec& v, int d, IrrepLabel target) {
  const std::size_t n = dim(target);
  const auto& monos = monomials(d);
  VPoly out = VPoly::zero(target);
  for (const auto& [i, x] : v.entries()) {
    if (i / n >= monos.size()) throw DimensionMismatch("coordinate beyond degree space");
    out.components[i % n].add_term(monos[i / n], x);
  }
  return out;
}

Poly poly_from_coords(const SparseVec& v, int d) { return vpoly_from_coords(v, d, {0, 0}).components[0]; }

Weight coord_weight(std::size_t index, int d, IrrepLabel target) {
  const std::size_t n = dim(target);
  Weight w = mono_weight(monomials(d).at(index / n));
  std::size_t c = index % n;
  int j = static_cast<int>(c) / (target.b + 1), k = static_cast<int>(c) % (target.b + 1);
  return {w.l + target.a - 2 * j, w.r + target.b - 2 * k};
}

namespace {

using CacheKey = std::tuple<int, int, int, int>;

template <class Build>
const Matrix& cached(std::map<CacheKey, Matrix>& cache, std::mutex& mu, CacheKey key, Build&& build) {
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Matrix m = build();
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(m)).first->second;
}

}  // namespace

const Matrix& g0_matrix(Gen g, int d, IrrepLabel target) {
  static std::mutex mu;
  static std::map<CacheKey, Matrix> cache;
  return cached(cache, mu, {static_cast<int>(g), d, target.a, target.b}, [&] {
    const std::size_t n = dim(target);
    const auto& monos = monomials(d);
    std::vector<SparseVec> acol = irrep_matrices(target)[g].columns();
    std::vector<std::vector<SparseVec::Entry>> cols(monos.size() * n);
    for (std::size_t mi = 0; mi < monos.size(); ++mi) {
      for (std::size_t c = 0; c < n; ++c) {
        auto& col = cols[mi * n + c];
        derive_monomial(g, monos[mi], [&](const Monomial& m, int k) { col.emplace_back(mono_index(m) * n + c, k); });
        for (const auto& [r, x] : acol[c].entries()) col.emplace_back(mi * n + r, x);
      }
    }
    std::vector<SparseVec> sv;
    sv.reserve(cols.size());
    for (auto& c : cols) sv.emplace_back(std::move(c));
    return Matrix::from_columns(sv, monos.size() * n);
  });
}

const Matrix& mult_matrix(int var, int d, IrrepLabel target) {
  static std::mutex mu;
  static std::map<CacheKey, Matrix> cache;
  if (var < 0 || var > 3) throw Error("variable index out of range");
  return cached(cache, mu, {var, d, target.a, target.b}, [&] {
    const std::size_t n = dim(target);
    const auto& monos = monomials(d);
    Matrix m(monomial_count(d + 1) * n, monos.size() * n);
    for (std::size_t mi = 0; mi < monos.size(); ++mi) {
      Monomial up = monos[mi];
      ++up[var];
      std::size_t row = mono_index(up) * n;
      for (std::size_t c = 0; c < n; ++c) m.set(row + c, mi * n + c, 1);
    }
    return m;
  });
}

Subspace g0_closure(const std::vector<SparseVec>& vectors, int d, IrrepLabel target) {
  const std::size_t n = space_dim(d, target);
  Subspace s = Subspace::span(n, vectors);
  std::vector<SparseVec> frontier = s.basis();
  while (!frontier.empty()) {
    std::vector<SparseVec> fresh;
    for (const auto& v : frontier)
      for (Gen g : kAllGens) {
        if (g == Gen::HL || g == Gen::HR) continue;  // weight vectors in, weight vectors out
        SparseVec w = g0_matrix(g, d, target).apply(v);
        if (!s.contains(w)) {
          fresh.push_back(w);
          s = s.sum(Subspace::span(n, {w}));
        }
      }
    frontier = std::move(fresh);
  }
  // H images of non-weight input vectors are already inside: H = [E, F].
  return s;
}

std::vector<HighestWeightVector> highest_weight_vectors(const Subspace& space, int d, IrrepLabel target) {
  const std::size_t n = space_dim(d, target);
  if (space.ambient_dim() != n) throw DimensionMismatch("subspace is not in the degree-d space");
  for (const auto& b : space.basis())
    for (Gen g : kAllGens)
      if (!space.contains(g0_matrix(g, d, target).apply(b))) throw NotInvariant("space is not g0-invariant");

  // Split by weight: an H-stable space is the sum of its weight projections.
  std::map<Weight, std::vector<SparseVec>> pieces;
  for (const auto& b : space.basis()) {
    std::map<Weight, std::vector<SparseVec::Entry>> split;
    for (const auto& [i, x] : b.entries()) split[coord_weight(i, d, target)].emplace_back(i, x);
    for (auto& [w, e] : split)
      if (w.l >= 0 && w.r >= 0) pieces[w].emplace_back(std::move(e));
  }
  std::vector<HighestWeightVector> out;
  for (const auto& [w, vs] : pieces) {
    Subspace ws = Subspace::span(n, vs);
    std::vector<SparseVec> images;
    for (const auto& b : ws.basis()) {
      SparseVec e = g0_matrix(Gen::EL, d, target).apply(b);
      e.axpy(1, g0_matrix(Gen::ER, d, target).apply(b).shifted(n));
      images.push_back(std::move(e));
    }
    Subspace ker = left_kernel(images, 2 * n);
    std::vector<SparseVec> hw;
    for (const auto& c : ker.basis()) {
      SparseVec v;
      for (const auto& [i, x] : c.entries()) v.axpy(x, ws.basis()[i]);
      hw.push_back(std::move(v));
    }
    Subspace hs = Subspace::span(n, hw);
    for (const auto& v : hs.basis()) out.push_back({{w.l, w.r}, v});
  }
  return out;
}

// --- components ---------------------------------------------------------------

Poly component_hw(ComponentLabel c) { return Poly::z(1).pow(c.r) * Poly::det().pow(c.s); }

Subspace component_span(ComponentLabel c) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Subspace> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({c.r, c.s});
    if (it != cache.end()) return it->second;
  }
  Subspace s = g0_closure({coords(component_hw(c), c.degree())}, c.degree(), {0, 0});
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(c.r, c.s), std::move(s)).first->second;
}

std::vector<ComponentLabel> degree_components(int d) {
  std::vector<ComponentLabel> out;
  for (int s = 0; 2 * s <= d; ++s) out.push_back({d - 2 * s, s});
  return out;
}

}  // namespace poincare
