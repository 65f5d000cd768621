#include "poincare/rep.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "poincare/error.hpp"

namespace poincare {

// --- quotients ----------------------------------------------------------------

VPoly QuotientModule::representative(std::size_t i) const {
  auto [d, c] = basis.at(i);
  return vpoly_from_coords(SparseVec::unit(c), d, source);
}

QuotientModule build_quotient(IrrepLabel source, const std::vector<VPoly>& gens, int degree_cap) {
  if (gens.empty()) throw Error("build_quotient needs at least one generator");
  std::vector<std::pair<int, SparseVec>> coord_gens;
  int maxdeg = 0;
  for (const auto& g : gens) {
    if (g.target != source) throw DimensionMismatch("generator target differs from the source label");
    if (g.is_zero()) throw Error("zero generator");
    for (const auto& p : g.components)
      if (!p.is_zero() && (!p.homogeneous() || p.degree() != g.degree()))
        throw Error("generators must be homogeneous");
    maxdeg = std::max(maxdeg, g.degree());
    coord_gens.emplace_back(g.degree(), coords(g, g.degree()));
  }
  if (degree_cap < maxdeg) throw Error("degree cap is below the generator degree");
  auto ideal = generate_ideal(source, coord_gens, degree_cap);
  if (!ideal.saturation)
    throw NotFiniteDimensional("ideal does not fill a whole degree by degree " + std::to_string(degree_cap));
  QuotientModule q;
  q.source = source;
  q.gens = gens;
  q.degree_cap = degree_cap;
  q.saturation = *ideal.saturation;
  q.ideal_per_degree = std::move(ideal.per_degree);
  for (int d = 0; d < q.saturation; ++d)
    for (std::size_t c : q.ideal_per_degree.at(d).complement_coordinates()) q.basis.emplace_back(d, c);
  return q;
}

// --- RepMatrices ----------------------------------------------------------------

std::vector<const Matrix*> RepMatrices::generators() const {
  std::vector<const Matrix*> out;
  for (const auto& x : p_minus) out.push_back(&x);
  for (const auto& x : g0) out.push_back(&x);
  if (odd)
    for (const auto& x : *odd) out.push_back(&x);
  return out;
}

RepMatrices RepMatrices::zero(std::size_t n) {
  RepMatrices m;
  m.dim = n;
  for (auto& x : m.p_minus) x = Matrix(n, n);
  for (auto& x : m.g0) x = Matrix(n, n);
  return m;
}

RepMatrices rep_matrices(const QuotientModule& q) {
  const std::size_t n = q.dim();
  RepMatrices m = RepMatrices::zero(n);
  std::map<std::pair<int, std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[q.basis[i]] = i;
  auto place = [&](Matrix& target, std::size_t col, int d, const SparseVec& v) {
    if (d >= q.saturation) return;
    SparseVec r = q.ideal_per_degree.at(d).reduce(v);
    for (const auto& [c, x] : r.entries()) target.set(index.at({d, c}), col, x);
  };
  for (std::size_t i = 0; i < n; ++i) {
    auto [d, c] = q.basis[i];
    SparseVec e = SparseVec::unit(c);
    for (int var = 0; var < 4; ++var) place(m.p_minus[var], i, d + 1, mult_matrix(var, d, q.source).apply(e));
    for (Gen g : kAllGens) place(m.g0[static_cast<int>(g)], i, d, g0_matrix(g, d, q.source).apply(e));
    m.grading.push_back(d);
  }
  return m;
}

bool verify_lie_relations(const RepMatrices& m) {
  for (const Matrix* x : m.generators())
    if (x->rows() != m.dim || x->cols() != m.dim) return false;
  for (int i = 0; i < 4; ++i) {
    if (!is_nilpotent(m.p_minus[i])) return false;
    for (int j = i + 1; j < 4; ++j)
      if (!commutator(m.p_minus[i], m.p_minus[j]).is_zero()) return false;
  }
  if (!satisfies_sl2_relations(m.g0)) return false;
  for (Gen g : kAllGens) {
    const Matrix& d = g0_matrix(g, 1, {0, 0});  // column i: g(z_i)
    for (int i = 0; i < 4; ++i) {
      Matrix expect(m.dim, m.dim);
      for (int j = 0; j < 4; ++j) {
        Rational c = d.at(j, i);
        if (c != 0) expect = expect + c * m.p_minus[j];
      }
      if (!(commutator(m[g], m.p_minus[i]) == expect)) return false;
    }
  }
  return true;
}

// --- component graphs -------------------------------------------------------------

namespace {

Matrix submatrix(const Matrix& m, const std::vector<std::size_t>& idx) {
  std::vector<std::size_t> pos(m.cols(), static_cast<std::size_t>(-1));
  for (std::size_t k = 0; k < idx.size(); ++k) pos[idx[k]] = k;
  Matrix out(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (const auto& [c, x] : m.row(idx[r]).entries())
      if (pos[c] != static_cast<std::size_t>(-1)) out.set(r, pos[c], x);
  return out;
}

// Null space of the stacked matrices, all with `cols` columns.
Subspace joint_kernel(const std::vector<const Matrix*>& ms, std::size_t cols) {
  std::vector<SparseVec> rows;
  for (const Matrix* m : ms)
    for (const auto& r : m->row_data()) rows.push_back(r);
  return rref(Matrix::from_rows(std::move(rows), cols)).null_space;
}

// Matrix of an operator restricted to an invariant subspace, in the
// subspace's basis.
Matrix restrict_to(const Matrix& op, const std::vector<SparseVec>& basis, std::size_t ambient) {
  Coordinates co(basis, ambient);
  std::vector<SparseVec> cols;
  for (const auto& b : basis) {
    auto c = co.of(op.apply(b));
    if (!c) throw NotInvariant("operator does not preserve the subspace");
    cols.push_back(SparseVec::from_dense(*c));
  }
  return Matrix::from_columns(cols, basis.size());
}

// Eigenspaces for nonnegative integer eigenvalues 0, 1, 2, ... until they
// exhaust the space.
std::vector<std::pair<int, Subspace>> integer_eigenspaces(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::pair<int, Subspace>> out;
  std::size_t found = 0;
  for (int lam = 0; found < n; ++lam) {
    if (lam > static_cast<int>(2 * n + 2)) throw Error("highest weights are not small nonnegative integers");
    Matrix shifted = a - Rational(lam) * Matrix::identity(n);
    Subspace k = rref(shifted).null_space;
    if (k.dim()) {
      found += k.dim();
      out.emplace_back(lam, std::move(k));
    }
  }
  return out;
}

struct Isotypic {
  int grade;
  IrrepLabel label;
  std::size_t multiplicity;
  std::vector<SparseVec> basis;  // global coordinates
};

std::vector<Isotypic> isotypic_components(const RepMatrices& m) {
  if (m.grading.size() != m.dim) throw Error("component graph needs a grading");
  std::map<int, std::vector<std::size_t>> by_grade;
  for (std::size_t i = 0; i < m.dim; ++i) by_grade[m.grading[i]].push_back(i);
  std::vector<Isotypic> out;
  for (const auto& [grade, idx] : by_grade) {
    const std::size_t k = idx.size();
    std::array<Matrix, 6> local;
    for (Gen g : kAllGens) {
      // g0 must keep the grade.
      for (std::size_t c : idx) {
        SparseVec img = m[g].apply(SparseVec::unit(c));
        for (const auto& [r, x] : img.entries())
          if (m.grading[r] != grade) throw NotInvariant("g0 does not preserve the grading");
      }
      local[static_cast<int>(g)] = submatrix(m[g], idx);
    }
    Subspace hw = joint_kernel({&local[0], &local[3]}, k);
    if (!hw.dim()) continue;
    Matrix hl = restrict_to(local[2], hw.basis(), k);
    for (auto& [lam, el] : integer_eigenspaces(hl)) {
      std::vector<SparseVec> lam_vecs;
      for (const auto& c : el.basis()) {
        SparseVec v;
        for (const auto& [i, x] : c.entries()) v.axpy(x, hw.basis()[i]);
        lam_vecs.push_back(std::move(v));
      }
      Matrix hr = restrict_to(local[5], lam_vecs, k);
      for (auto& [mu, er] : integer_eigenspaces(hr)) {
        Isotypic iso{grade, {lam, mu}, er.dim(), {}};
        for (const auto& c : er.basis()) {
          SparseVec h;
          for (const auto& [i, x] : c.entries()) h.axpy(x, lam_vecs[i]);
          // Lower to the whole irreducible.
          SparseVec row = h;
          for (int j = 0; j <= lam; ++j) {
            SparseVec v = row;
            for (int l = 0; l <= mu; ++l) {
              iso.basis.push_back(v);
              v = local[4].apply(v);
            }
            row = local[1].apply(row);
          }
        }
        // Back to global coordinates.
        for (auto& v : iso.basis) {
          std::vector<SparseVec::Entry> e;
          for (const auto& [i, x] : v.entries()) e.emplace_back(idx[i], x);
          v = SparseVec(std::move(e));
        }
        out.push_back(std::move(iso));
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Isotypic& a, const Isotypic& b) {
    return std::tie(a.grade, a.label) < std::tie(b.grade, b.label);
  });
  return out;
}

}  // namespace

ComponentGraph component_graph(const RepMatrices& m) {
  auto comps = isotypic_components(m);
  ComponentGraph g;
  std::vector<SparseVec> all;
  std::vector<std::size_t> offset;
  for (const auto& c : comps) {
    g.nodes.push_back({c.grade, c.label, c.multiplicity});
    offset.push_back(all.size());
    all.insert(all.end(), c.basis.begin(), c.basis.end());
  }
  if (all.size() != m.dim) throw Error("g0 action is not completely reducible into the expected weights");
  Coordinates co(all, m.dim);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    std::vector<Vec> images;
    for (const auto& b : comps[i].basis)
      for (const auto& p : m.p_minus) images.push_back(*co.of(p.apply(b)));
    for (std::size_t j = 0; j < comps.size(); ++j) {
      std::size_t lo = offset[j], len = comps[j].basis.size();
      std::vector<SparseVec> proj;
      for (const auto& v : images) {
        std::vector<SparseVec::Entry> e;
        for (std::size_t k = 0; k < len; ++k)
          if (v[lo + k] != 0) e.emplace_back(k, v[lo + k]);
        if (!e.empty()) proj.emplace_back(std::move(e));
      }
      std::size_t rank = Subspace::span(len, proj).dim();
      if (!rank) continue;
      std::size_t d = dim(comps[j].label);
      if (rank % d) throw Error("projected image is not a g0-submodule");
      g.arrows.push_back({i, j, rank / d});
    }
  }
  return g;
}

ComponentGraph component_graph(const QuotientModule& q) { return component_graph(rep_matrices(q)); }

bool ComponentGraph::is_acyclic() const {
  std::vector<std::size_t> indeg(nodes.size(), 0);
  for (const auto& a : arrows) ++indeg[a.to];
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (!indeg[i]) ready.push_back(i);
  std::size_t seen = 0;
  while (!ready.empty()) {
    std::size_t v = ready.back();
    ready.pop_back();
    ++seen;
    for (const auto& a : arrows)
      if (a.from == v && --indeg[a.to] == 0) ready.push_back(a.to);
  }
  return seen == nodes.size();
}

std::vector<std::size_t> ComponentGraph::sources() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (std::none_of(arrows.begin(), arrows.end(), [i](const ComponentArrow& a) { return a.to == i; })) out.push_back(i);
  return out;
}

std::vector<std::size_t> ComponentGraph::sinks() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (std::none_of(arrows.begin(), arrows.end(), [i](const ComponentArrow& a) { return a.from == i; })) out.push_back(i);
  return out;
}

ComponentGraph reversed(const ComponentGraph& g) {
  std::vector<std::size_t> order(g.nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::make_pair(-g.nodes[a].grade, g.nodes[a].label) < std::make_pair(-g.nodes[b].grade, g.nodes[b].label);
  });
  std::vector<std::size_t> where(order.size());
  ComponentGraph out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    where[order[k]] = k;
    auto n = g.nodes[order[k]];
    n.grade = -n.grade;
    out.nodes.push_back(n);
  }
  for (const auto& a : g.arrows) out.arrows.push_back({where[a.to], where[a.from], a.count});
  std::sort(out.arrows.begin(), out.arrows.end(),
            [](const ComponentArrow& a, const ComponentArrow& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
  return out;
}

// --- constructions ----------------------------------------------------------------

RepMatrices dualize(const RepMatrices& m) {
  RepMatrices out = m;
  for (auto& x : out.p_minus) x = Rational(-1) * x.transpose();
  for (auto& x : out.g0) x = Rational(-1) * x.transpose();
  if (out.odd)
    for (auto& x : *out.odd) x = Rational(-1) * x.transpose();
  for (auto& g : out.grading) g = -g;
  return out;
}

RepMatrices direct_sum(const RepMatrices& a, const RepMatrices& b) {
  const std::size_t n = a.dim + b.dim;
  RepMatrices out = RepMatrices::zero(n);
  auto block = [&](const Matrix& x, const Matrix& y) {
    Matrix r(n, n);
    r.set_block(0, 0, x);
    r.set_block(a.dim, a.dim, y);
    return r;
  };
  for (int i = 0; i < 4; ++i) out.p_minus[i] = block(a.p_minus[i], b.p_minus[i]);
  for (int i = 0; i < 6; ++i) out.g0[i] = block(a.g0[i], b.g0[i]);
  if (a.odd && b.odd) {
    out.odd.emplace();
    for (int i = 0; i < 4; ++i) (*out.odd)[i] = block((*a.odd)[i], (*b.odd)[i]);
  } else if (a.odd || b.odd) {
    throw Error("direct sum of a super and a non-super representation");
  }
  if (a.grading.size() == a.dim && b.grading.size() == b.dim) {
    out.grading = a.grading;
    out.grading.insert(out.grading.end(), b.grading.begin(), b.grading.end());
  }
  return out;
}

RepMatrices conjugate(const RepMatrices& m, const Matrix& p) {
  auto inv = inverse(p);
  if (!inv) throw Error("conjugating matrix is singular");
  RepMatrices out = m;
  for (auto& x : out.p_minus) x = p * x * *inv;
  for (auto& x : out.g0) x = p * x * *inv;
  if (out.odd)
    for (auto& x : *out.odd) x = p * x * *inv;
  out.grading.clear();
  return out;
}

// --- intertwiners -------------------------------------------------------------------

namespace {

SparseVec flatten(const Matrix& t) {
  std::vector<SparseVec::Entry> e;
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (const auto& [j, x] : t.row(i).entries()) e.emplace_back(i * t.cols() + j, x);
  return SparseVec(std::move(e));
}

Matrix unflatten(const SparseVec& v, std::size_t rows, std::size_t cols) {
  Matrix t(rows, cols);
  for (const auto& [k, x] : v.entries()) t.set(k / cols, k % cols, x);
  return t;
}

bool is_diagonal(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [j, x] : m.row(i).entries())
      if (i != j) return false;
  return true;
}

}  // namespace

Subspace hom_space(const RepMatrices& a, const RepMatrices& b) {
  const std::size_t na = a.dim, nb = b.dim;
  auto ga = a.generators();
  auto gb = b.generators();
  if (ga.size() != gb.size()) throw Error("hom between a super and a non-super representation");
  // Start from the weight-compatible matrix units when both H's are
  // diagonal; every other constraint then acts on a much smaller space.
  std::vector<Matrix> basis;
  std::vector<std::size_t> pending;
  const std::size_t hl = 4 + static_cast<int>(Gen::HL), hr = 4 + static_cast<int>(Gen::HR);
  bool diag = is_diagonal(*ga[hl]) && is_diagonal(*ga[hr]) && is_diagonal(*gb[hl]) && is_diagonal(*gb[hr]);
  if (diag) {
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < na; ++j)
        if (gb[hl]->at(i, i) == ga[hl]->at(j, j) && gb[hr]->at(i, i) == ga[hr]->at(j, j)) {
          Matrix t(nb, na);
          t.set(i, j, 1);
          basis.push_back(std::move(t));
        }
  } else {
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < na; ++j) {
        Matrix t(nb, na);
        t.set(i, j, 1);
        basis.push_back(std::move(t));
      }
  }
  // Raising operators first: they cut the most.
  std::vector<std::size_t> order{4 + static_cast<std::size_t>(Gen::EL), 4 + static_cast<std::size_t>(Gen::ER),
                                 4 + static_cast<std::size_t>(Gen::FL), 4 + static_cast<std::size_t>(Gen::FR)};
  if (!diag) {
    order.push_back(hl);
    order.push_back(hr);
  }
  for (std::size_t i = 0; i < 4; ++i) order.push_back(i);
  for (std::size_t i = 10; i < ga.size(); ++i) order.push_back(i);
  for (std::size_t k : order) {
    if (basis.empty()) break;
    std::vector<SparseVec> images;
    images.reserve(basis.size());
    for (const auto& t : basis) images.push_back(flatten(t * *ga[k] - *gb[k] * t));
    Subspace ker = left_kernel(images, na * nb);
    std::vector<Matrix> next;
    for (const auto& c : ker.basis()) {
      Matrix t(nb, na);
      for (const auto& [i, x] : c.entries()) t = t + x * basis[i];
      next.push_back(std::move(t));
    }
    basis = std::move(next);
  }
  std::vector<SparseVec> flat;
  for (const auto& t : basis) flat.push_back(flatten(t));
  return Subspace::span(na * nb, flat);
}

std::vector<Matrix> hom_basis(const RepMatrices& a, const RepMatrices& b) {
  Subspace s = hom_space(a, b);
  std::vector<Matrix> out;
  for (const auto& v : s.basis()) out.push_back(unflatten(v, b.dim, a.dim));
  return out;
}

namespace {

// Lattice points c in N^m with |c| = k, first coordinate largest first.
void compositions(std::size_t m, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> c(m, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
    if (i + 1 == m) {
      c[i] = left;
      out.push_back(c);
      return;
    }
    for (std::size_t x = left + 1; x-- > 0;) {
      c[i] = x;
      rec(i + 1, left - x);
    }
  };
  if (m) rec(0, k);
}

Matrix combine(const std::vector<Matrix>& ts, const std::vector<std::size_t>& c) {
  Matrix t(ts[0].rows(), ts[0].cols());
  for (std::size_t i = 0; i < ts.size(); ++i)
    if (c[i]) t = t + Rational(static_cast<long>(c[i])) * ts[i];
  return t;
}

}  // namespace

EquivalenceReport equivalence(const RepMatrices& a, const RepMatrices& b, Exec exec) {
  EquivalenceReport rep;
  if (a.dim != b.dim) {
    rep.reason = "dimensions differ";
    return rep;
  }
  if (a.odd.has_value() != b.odd.has_value()) {
    rep.reason = "one representation is super, the other is not";
    return rep;
  }
  auto ts = hom_basis(a, b);
  if (ts.empty()) {
    rep.reason = "no nonzero intertwiner";
    return rep;
  }
  // For equivalent modules all four of these spaces have the same size.
  std::size_t ea = hom_space(a, a).dim(), eb = hom_space(b, b).dim(), ba = hom_space(b, a).dim();
  if (ts.size() != ea || ea != eb || eb != ba) {
    rep.reason = "hom and endomorphism dimensions differ";
    return rep;
  }
  const std::size_t n = a.dim;
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::vector<std::size_t>> pts;
    compositions(ts.size(), k, pts);
    auto hit = find_first(pts.size(), exec, [&](std::size_t i) { return determinant(combine(ts, pts[i])) != 0; });
    if (hit) {
      rep.points_tried += *hit + 1;
      rep.equivalent = true;
      rep.intertwiner = combine(ts, pts[*hit]);
      rep.reason = "invertible intertwiner found";
      return rep;
    }
    rep.points_tried += pts.size();
  }
  rep.reason = "determinant vanishes on the whole lattice";
  return rep;
}

bool are_equivalent(const RepMatrices& a, const RepMatrices& b) { return equivalence(a, b).equivalent; }

std::optional<Matrix> element_of_rank(const std::vector<Matrix>& basis, std::size_t rank, Exec exec) {
  if (rank == 0) return basis.empty() ? Matrix() : Matrix(basis[0].rows(), basis[0].cols());
  if (basis.empty()) return std::nullopt;
  // Some r x r minor is a nonzero polynomial of degree r if the rank is
  // attained at all, so the simplex |c| <= r suffices.
  for (std::size_t k = 0; k <= rank; ++k) {
    std::vector<std::vector<std::size_t>> pts;
    compositions(basis.size(), k, pts);
    auto hit = find_first(pts.size(), exec, [&](std::size_t i) { return rref(combine(basis, pts[i])).rank >= rank; });
    if (hit) return combine(basis, pts[*hit]);
  }
  return std::nullopt;
}

IndecomposabilityReport indecomposability(const RepMatrices& m) {
  auto ts = hom_basis(m, m);
  IndecomposabilityReport rep;
  rep.commutant_dim = ts.size();
  const std::size_t k = ts.size();
  Matrix gram(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Rational t = (ts[i] * ts[j]).trace();
      gram.set(i, j, t);
      gram.set(j, i, t);
    }
  Subspace rad = rref(gram).null_space;
  rep.radical_dim = rad.dim();
  // A/J commutative iff every commutator lands in J.
  std::vector<SparseVec> flat;
  for (const auto& t : ts) flat.push_back(flatten(t));
  Coordinates co(flat, m.dim * m.dim);
  for (std::size_t i = 0; i < k && rep.quotient_commutative; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      auto c = co.of(flatten(commutator(ts[i], ts[j])));
      if (!c || !rad.contains(SparseVec::from_dense(*c))) {
        rep.quotient_commutative = false;
        break;
      }
    }
  return rep;
}

bool is_indecomposable(const RepMatrices& m) { return indecomposability(m).indecomposable(); }

// --- explicit realizations ------------------------------------------------------------

RepMatrices explicit_six_dim() {
  RepMatrices m = RepMatrices::zero(6);
  static const int row5[4] = {1, -1, -1, 1};  // p_i sends e_{5-i} to row5[i] e_5
  for (int i = 0; i < 4; ++i) {
    m.p_minus[i].set(1 + i, 0, 1);
    m.p_minus[i].set(5, 4 - i, row5[i]);
  }
  for (Gen g : kAllGens) m.g0[static_cast<int>(g)].set_block(1, 1, g0_matrix(g, 1, {0, 0}));
  m.grading = {0, 1, 1, 1, 1, 2};
  return m;
}

std::array<Matrix, 4> degree_one_projection(IrrepLabel source, IrrepLabel sink) {
  const std::size_t n1 = space_dim(1, source);
  auto hws = highest_weight_vectors(Subspace::full(n1), 1, source);
  std::vector<SparseVec> all;
  std::size_t sink_at = 0, sink_count = 0;
  for (const auto& h : hws) {
    if (h.weight == sink) {
      sink_at = all.size();
      ++sink_count;
    }
    SparseVec row = h.vector;
    for (int j = 0; j <= h.weight.a; ++j) {
      SparseVec v = row;
      for (int k = 0; k <= h.weight.b; ++k) {
        all.push_back(v);
        v = g0_matrix(Gen::FR, 1, source).apply(v);
      }
      row = g0_matrix(Gen::FL, 1, source).apply(row);
    }
  }
  if (sink_count != 1) throw Error("sink label does not occur exactly once in p- (x) source");
  Coordinates co(all, n1);
  const std::size_t ds = dim(source), dt = dim(sink);
  std::array<Matrix, 4> out;
  for (int var = 0; var < 4; ++var) {
    out[var] = Matrix(dt, ds);
    for (std::size_t s = 0; s < ds; ++s) {
      auto c = co.of(mult_matrix(var, 0, source).apply(SparseVec::unit(s)));
      for (std::size_t t = 0; t < dt; ++t)
        if ((*c)[sink_at + t] != 0) out[var].set(t, s, (*c)[sink_at + t]);
    }
  }
  return out;
}

RepMatrices build_family(const FamilySpec& f) {
  const std::size_t d1 = dim(f.source1), d2 = dim(f.source2), d3 = dim(f.sink2), d4 = dim(f.sink3);
  const std::size_t o2 = d1, o3 = d1 + d2, o4 = d1 + d2 + d3, n = o4 + d4;
  auto F1 = degree_one_projection(f.source1, f.sink2);
  auto F2 = degree_one_projection(f.source2, f.sink2);
  auto G1 = degree_one_projection(f.source1, f.sink3);
  auto G2 = degree_one_projection(f.source2, f.sink3);
  RepMatrices m = RepMatrices::zero(n);
  const auto& [alpha, beta, gamma, delta] = f.params;
  for (int k = 0; k < 4; ++k) {
    m.p_minus[k].set_block(o3, 0, alpha * F1[k]);
    m.p_minus[k].set_block(o3, o2, beta * F2[k]);
    m.p_minus[k].set_block(o4, 0, gamma * G1[k]);
    m.p_minus[k].set_block(o4, o2, delta * G2[k]);
  }
  auto t1 = irrep_matrices(f.source1), t2 = irrep_matrices(f.source2), t3 = irrep_matrices(f.sink2),
       t4 = irrep_matrices(f.sink3);
  for (Gen g : kAllGens) {
    Matrix& x = m.g0[static_cast<int>(g)];
    x.set_block(0, 0, t1[g]);
    x.set_block(o2, o2, t2[g]);
    x.set_block(o3, o3, t3[g]);
    x.set_block(o4, o4, t4[g]);
  }
  m.grading.assign(n, 1);
  std::fill(m.grading.begin(), m.grading.begin() + static_cast<long>(o3), 0);
  return m;
}

bool family_equivalence(const FamilySpec& f1, const FamilySpec& f2) {
  if (f1.source1 != f2.source1 || f1.source2 != f2.source2 || f1.sink2 != f2.sink2 || f1.sink3 != f2.sink3)
    throw Error("family members have different bases");
  return are_equivalent(build_family(f1), build_family(f2));
}

// --- sweeps -------------------------------------------------------------------------

std::vector<SweepEntry> first_order_sweep(IrrepLabel v0, Exec exec) {
  auto deg1 = highest_weight_vectors(Subspace::full(space_dim(1, v0)), 1, v0);
  auto deg2 = highest_weight_vectors(Subspace::full(space_dim(2, v0)), 2, v0);
  const std::size_t k = deg1.size();
  const std::size_t count = (std::size_t{1} << k) - 1;
  std::vector<SweepEntry> out(count);
  for_each_index(count, exec, [&](std::size_t i) {
    std::size_t mask = i + 1;
    std::vector<VPoly> gens;
    for (const auto& h : deg2) gens.push_back(vpoly_from_coords(h.vector, 2, v0));
    SweepEntry e;
    for (std::size_t c = 0; c < k; ++c) {
      if (mask >> c & 1)
        e.kept.push_back(deg1[c].weight);
      else
        gens.push_back(vpoly_from_coords(deg1[c].vector, 1, v0));
    }
    auto m = rep_matrices(build_quotient(v0, gens));
    e.dim = m.dim;
    e.relations_ok = verify_lie_relations(m);
    e.indecomposable = is_indecomposable(m);
    out[i] = std::move(e);
  });
  return out;
}

// --- serialization --------------------------------------------------------------------

nlohmann::json to_json(const RepMatrices& m) {
  nlohmann::json j;
  j["dim"] = m.dim;
  j["p_minus"] = nlohmann::json::array();
  for (const auto& x : m.p_minus) j["p_minus"].push_back(to_json(x));
  j["g0"] = nlohmann::json::object();
  for (Gen g : kAllGens) j["g0"][gen_name(g)] = to_json(m[g]);
  if (m.grading.size() == m.dim) j["grading"] = m.grading;
  if (m.odd) {
    static const char* names[] = {"w1_1", "w1_2", "w2_1", "w2_2"};
    j["odd"] = nlohmann::json::object();
    for (int i = 0; i < 4; ++i) j["odd"][names[i]] = to_json((*m.odd)[i]);
  }
  return j;
}

RepMatrices rep_from_json(const nlohmann::json& j) {
  RepMatrices m;
  m.dim = j.at("dim").get<std::size_t>();
  for (int i = 0; i < 4; ++i) m.p_minus[i] = matrix_from_json(j.at("p_minus").at(i));
  for (Gen g : kAllGens) m.g0[static_cast<int>(g)] = matrix_from_json(j.at("g0").at(gen_name(g)));
  if (j.contains("grading")) m.grading = j.at("grading").get<std::vector<int>>();
  if (j.contains("odd")) {
    static const char* names[] = {"w1_1", "w1_2", "w2_1", "w2_2"};
    m.odd.emplace();
    for (int i = 0; i < 4; ++i) (*m.odd)[i] = matrix_from_json(j.at("odd").at(names[i]));
  }
  return m;
}

nlohmann::json to_json(const ComponentGraph& g) {
  nlohmann::json j;
  j["nodes"] = nlohmann::json::array();
  for (const auto& n : g.nodes) j["nodes"].push_back({{"grade", n.grade}, {"label", n.label}, {"multiplicity", n.multiplicity}});
  j["arrows"] = nlohmann::json::array();
  for (const auto& a : g.arrows) j["arrows"].push_back({{"from", a.from}, {"to", a.to}, {"count", a.count}});
  return j;
}

std::string to_dot(const ComponentGraph& g) {
  std::ostringstream os;
  os << "digraph components {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& n = g.nodes[i];
    os << "  n" << i << " [label=\"" << spin_notation(n.label);
    if (n.multiplicity > 1) os << "×" << n.multiplicity;
    os << "\"];\n";
  }
  for (const auto& a : g.arrows) {
    os << "  n" << a.from << " -> n" << a.to;
    if (a.count > 1) os << " [label=\"" << a.count << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace poincare
