#include "poincare/super.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <tuple>

#include "poincare/error.hpp"

namespace poincare {

std::string letter_name(int letter) {
  static const char* names[] = {"z1", "z2", "z3", "z4", "w1^1", "w1^2", "w2^1", "w2^2"};
  if (letter < 0 || letter > 7) throw Error("bad letter");
  return names[letter];
}

int SuperMonomial::parity() const { return std::popcount(odd) % 2; }

int SuperMonomial::space() const { return 3 * std::popcount(odd & 3u) + std::popcount(odd >> 2 & 3u) + 1; }

// --- elements -----------------------------------------------------------------

SuperElement SuperElement::one() { return monomial({}); }

SuperElement SuperElement::letter(int l) {
  SuperMonomial m;
  if (is_odd(l))
    m.odd = 1u << (l - W1_1);
  else
    m.even[l] = 1;
  return monomial(m);
}

SuperElement SuperElement::monomial(const SuperMonomial& m, const Rational& c) {
  SuperElement e;
  e.add_term(m, c);
  return e;
}

void SuperElement::add_term(const SuperMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational SuperElement::coeff(const SuperMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int SuperElement::parity() const {
  if (terms_.empty()) return 0;
  int p = terms_.begin()->first.parity();
  for (const auto& [m, c] : terms_)
    if (m.parity() != p) throw Error("element mixes parities");
  return p;
}

SuperElement operator+(SuperElement a, const SuperElement& b) {
  for (const auto& [m, c] : b.terms_) a.add_term(m, c);
  return a;
}

SuperElement operator-(SuperElement a, const SuperElement& b) {
  for (const auto& [m, c] : b.terms_) a.add_term(m, -c);
  return a;
}

SuperElement operator*(const Rational& c, SuperElement a) {
  if (c == 0) return {};
  for (auto& [m, x] : a.terms_) x *= c;
  return a;
}

namespace {

using Word = std::vector<int>;

Word word_of(const SuperMonomial& m) {
  Word w;
  for (int i = 0; i < 4; ++i) w.insert(w.end(), m.even[i], i);
  for (int k = 0; k < 4; ++k)
    if (m.odd >> k & 1u) w.push_back(W1_1 + k);
  return w;
}

bool is_redex(int a, int b) { return a > b || (a == b && is_odd(a)); }

}  // namespace

SuperElement operator*(const SuperElement& a, const SuperElement& b) {
  SuperElement out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Word w = word_of(ma);
      Word wb = word_of(mb);
      w.insert(w.end(), wb.begin(), wb.end());
      out = out + (ca * cb) * normal_order(w);
    }
  return out;
}

std::string to_string(const SuperElement& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    Word w = word_of(m);
    Rational a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool unit = a == 1 && !w.empty();
    if (!unit) os << to_string(a);
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      if (!unit || i > 0) os << "*";
      os << letter_name(w[i]);
      if (j - i > 1) os << "^" << (j - i);
      i = j;
    }
  }
  return os.str();
}

SuperElement normal_order(const Word& word, Rewrite strategy) {
  for (int l : word)
    if (l < 0 || l > 7) throw Error("bad letter in word");
  std::map<Word, Rational> pending{{word, Rational(1)}};
  auto push = [&](Word w, const Rational& c) {
    auto [it, fresh] = pending.try_emplace(std::move(w), c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) pending.erase(it);
    }
  };
  SuperElement out;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    Word w = std::move(node.key());
    Rational c = node.mapped();
    std::optional<std::size_t> at;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      std::size_t k = strategy == Rewrite::LeftmostFirst ? i : w.size() - 2 - i;
      if (is_redex(w[k], w[k + 1])) {
        at = k;
        break;
      }
    }
    if (!at) {
      SuperMonomial m;
      for (int l : w) {
        if (is_odd(l))
          m.odd |= 1u << (l - W1_1);
        else
          ++m.even[l];
      }
      out.add_term(m, c);
      continue;
    }
    std::size_t i = *at;
    int a = w[i], b = w[i + 1];
    if (a == b) continue;  // odd square
    bool oa = is_odd(a), ob = is_odd(b);
    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    if (!oa || !ob) {
      push(std::move(swapped), c);  // z's are central
    } else if ((a >= W2_1) == (b >= W2_1)) {
      push(std::move(swapped), -c);
    } else {
      // w2^i w1^j = -w1^j w2^i + z_ij
      int zi = 2 * (a - W2_1) + (b - W1_1);
      push(std::move(swapped), -c);
      Word contracted(w.begin(), w.begin() + static_cast<long>(i));
      contracted.push_back(zi);
      contracted.insert(contracted.end(), w.begin() + static_cast<long>(i) + 2, w.end());
      push(std::move(contracted), c);
    }
  }
  return out;
}

SuperElement super_bracket(const SuperElement& x, const SuperElement& y) {
  int sign = (x.parity() && y.parity()) ? -1 : 1;
  return x * y - Rational(sign) * (y * x);
}

namespace {

// Column l of the letter action of g: (letter, coefficient) pairs.
std::vector<std::pair<int, Rational>> letter_image(Gen g, int l) {
  static const IrrepMatrices w1 = irrep_matrices({0, 1});
  static const IrrepMatrices w2 = irrep_matrices({1, 0});
  std::vector<std::pair<int, Rational>> out;
  if (!is_odd(l)) {
    SparseVec col = g0_matrix(g, 1, {0, 0}).apply(SparseVec::unit(l));
    for (const auto& [r, x] : col.entries()) out.emplace_back(static_cast<int>(r), x);
  } else if (l < W2_1) {
    SparseVec col = w1[g].apply(SparseVec::unit(l - W1_1));
    for (const auto& [r, x] : col.entries()) out.emplace_back(W1_1 + static_cast<int>(r), x);
  } else {
    SparseVec col = w2[g].apply(SparseVec::unit(l - W2_1));
    for (const auto& [r, x] : col.entries()) out.emplace_back(W2_1 + static_cast<int>(r), x);
  }
  return out;
}

}  // namespace

SuperElement act_g0(Gen g, const SuperElement& e) {
  SuperElement out;
  for (const auto& [m, c] : e.terms()) {
    Word w = word_of(m);
    for (std::size_t i = 0; i < w.size(); ++i)
      for (const auto& [l, x] : letter_image(g, w[i])) {
        Word v = w;
        v[i] = l;
        out = out + (c * x) * normal_order(v);
      }
  }
  return out;
}

// --- the nine spaces --------------------------------------------------------------

std::vector<unsigned> space_odd_monomials(int space) {
  if (space < 1 || space > 9) throw Error("space index must be 1..9");
  int k1 = (space - 1) / 3, k2 = (space - 1) % 3;
  std::vector<unsigned> out;
  for (unsigned m = 0; m < 16; ++m)
    if (std::popcount(m & 3u) == k1 && std::popcount(m >> 2) == k2) out.push_back(m);
  return out;
}

int super_grade(int space, int n, int d) { return 2 * (n + 2 * d) + (space - 1) / 3 + (space - 1) % 3; }

namespace {

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

}  // namespace

std::vector<DecompositionEntry> decompose_u_nsuper(int max_n, int max_d) {
  if (max_n < 0 || max_d < 0) throw Error("bounds must be nonnegative");
  std::vector<DecompositionEntry> out;
  for (int space = 1; space <= 9; ++space) {
    auto odd = space_odd_monomials(space);
    const std::size_t k = odd.size();
    // g0 on the odd part, in the basis `odd`.
    std::array<Matrix, 6> odd_action;
    for (Gen g : kAllGens) {
      Matrix a(k, k);
      for (std::size_t j = 0; j < k; ++j) {
        SuperMonomial m;
        m.odd = odd[j];
        SuperElement img = act_g0(g, SuperElement::monomial(m));
        for (std::size_t i = 0; i < k; ++i) {
          SuperMonomial t;
          t.odd = odd[i];
          a.set(i, j, img.coeff(t));
        }
      }
      odd_action[static_cast<int>(g)] = std::move(a);
    }
    for (int n = 0; n <= max_n; ++n)
      for (int d = 0; d <= max_d; ++d) {
        const int deg = n + 2 * d;
        const std::size_t md = monomial_count(deg), amb = md * k;
        Subspace comp = component_span({n, d});
        std::vector<SparseVec> basis;
        for (const auto& b : comp.basis())
          for (std::size_t o = 0; o < k; ++o) {
            std::vector<SparseVec::Entry> e;
            for (const auto& [c, x] : b.entries()) e.emplace_back(c * k + o, x);
            basis.emplace_back(std::move(e));
          }
        RepMatrices rep = RepMatrices::zero(basis.size());
        for (Gen g : kAllGens) {
          const Matrix& ev = g0_matrix(g, deg, {0, 0});
          const Matrix& od = odd_action[static_cast<int>(g)];
          Matrix full(amb, amb);
          for (std::size_t c = 0; c < md; ++c)
            for (std::size_t o = 0; o < k; ++o) {
              SparseVec ec = ev.apply(SparseVec::unit(c));
              for (const auto& [r, x] : ec.entries()) full.add_to(r * k + o, c * k + o, x);
              SparseVec eo = od.apply(SparseVec::unit(o));
              for (const auto& [r, x] : eo.entries()) full.add_to(c * k + r, c * k + o, x);
            }
          rep.g0[static_cast<int>(g)] = restrict_to(full, basis, amb);
        }
        rep.grading.assign(rep.dim, 0);
        for (const auto& node : component_graph(rep).nodes) out.push_back({space, n, d, node.label, node.multiplicity});
      }
  }
  return out;
}

std::vector<ListedLabel> listed_label_list() {
  return {
      {1, 0, 0, "1"},        {2, -1, 0, "2↑"},      {2, 1, 0, "2↓"},       {3, 0, 0, "3"},
      {4, 0, -1, "4↑"},      {4, 0, 1, "4↓"},       {5, -1, -1, "5↑↑"},    {5, -1, 1, "5↑↓"},
      {5, 1, -1, "5↓↑"},     {5, 1, 1, "5↓↓"},      {6, 0, -1, "6↑"},      {6, 1, 0, "6↓"},
      {7, 0, 0, "7"},        {8, -1, 0, "8↑"},      {8, 1, 0, "8↓"},       {9, 0, 0, "9"},
  };
}

std::vector<LabelListCheck> check_label_list(const std::vector<DecompositionEntry>& table, int max_n, int max_d) {
  std::vector<LabelListCheck> out;
  auto labels = listed_label_list();
  for (int space = 1; space <= 9; ++space)
    for (int n = 0; n <= max_n; ++n)
      for (int d = 0; d <= max_d; ++d) {
        LabelListCheck c{space, n, d, {}, {}};
        for (const auto& l : labels)
          if (l.space == space && n + l.da >= 0 && n + l.db >= 0) c.listed.push_back({n + l.da, n + l.db});
        for (const auto& e : table)
          if (e.space == space && e.n == n && e.d == d) c.computed.insert(c.computed.end(), e.multiplicity, e.weight);
        std::sort(c.listed.begin(), c.listed.end());
        std::sort(c.computed.begin(), c.computed.end());
        out.push_back(std::move(c));
      }
  return out;
}

namespace {

struct RowItem {
  int space, da, db, dn, dd;
};

struct Row {
  std::string text;
  std::vector<RowItem> items;
};

std::vector<Row> relation_rows() {
  // Literal transcription; "4[n+1,d]" in the second row is read as 4↑.
  return {
      {"8↑[n,d] ↔ 4↑[n-1,d+1]", {{8, -1, 0, 0, 0}, {4, 0, -1, -1, 1}}},
      {"8↓[n,d] ↔ 4[n+1,d]", {{8, 1, 0, 0, 0}, {4, 0, -1, 1, 0}}},
      {"5↓↓[n,d] ↔ 1[n+1,d]", {{5, 1, 1, 0, 0}, {1, 0, 0, 1, 0}}},
      {"5↑↑[n,d] ↔ 1[n-1,d+1]", {{5, -1, -1, 0, 0}, {1, 0, 0, -1, 1}}},
      {"5↓↓[n-1,d+1], 5↑↑[n+1,d] ↔ 9[n,d]", {{5, 1, 1, -1, 1}, {5, -1, -1, 1, 0}, {9, 0, 0, 0, 0}}},
      {"5↓↓[n-1,d+1], 5↓↓[n+1,d] ↔ 9[n,d]", {{5, 1, 1, -1, 1}, {5, 1, 1, 1, 0}, {9, 0, 0, 0, 0}}},
      {"6↑[n,d] ↔ 2↓[n-1,d+1]", {{6, 0, -1, 0, 0}, {2, 1, 0, -1, 1}}},
      {"6↑[n,d] ↔ 2↓[n-1,d+1] (repeated row)", {{6, 0, -1, 0, 0}, {2, 1, 0, -1, 1}}},
      {"6↓[n,d] ↔ 2↑[n+1,d]", {{6, 1, 0, 0, 0}, {2, -1, 0, 1, 0}}},
      {"6↓[n,d] ↔ 2↑[n+1,d] (repeated row)", {{6, 1, 0, 0, 0}, {2, -1, 0, 1, 0}}},
  };
}

}  // namespace

std::vector<RelationCheck> check_relation_rows(const std::vector<DecompositionEntry>& table, int max_n, int max_d) {
  std::set<std::tuple<int, int, int, int, int>> present;  // space, n, d, a, b
  for (const auto& e : table)
    if (e.multiplicity) present.insert({e.space, e.n, e.d, e.weight.a, e.weight.b});
  std::vector<RelationCheck> out;
  for (const auto& row : relation_rows()) {
    RelationCheck rc{row.text, 0, 0};
    for (int n = 0; n <= max_n; ++n)
      for (int d = 0; d <= max_d; ++d) {
        bool defined = true, ok = true;
        std::optional<std::tuple<int, int, int>> seen;  // a, b, grade
        for (const auto& it : row.items) {
          int nn = n + it.dn, dd = d + it.dd;
          int a = nn + it.da, b = nn + it.db;
          if (nn < 0 || dd < 0 || nn > max_n || dd > max_d || a < 0 || b < 0) {
            defined = false;
            break;
          }
          auto key = std::make_tuple(a, b, super_grade(it.space, nn, dd));
          if (!present.count({it.space, nn, dd, a, b})) ok = false;
          if (seen && *seen != key) ok = false;
          seen = key;
        }
        if (!defined) continue;
        ++rc.samples;
        if (ok) ++rc.matched;
      }
    out.push_back(std::move(rc));
  }
  return out;
}

bool summand_closed(int max_degree) {
  for (int deg = 0; deg <= max_degree; ++deg)
    for (const auto& ev : monomials(deg))
      for (unsigned odd = 0; odd < 16; ++odd) {
        if (!(odd >> 2)) continue;  // no W2
        SuperElement m = SuperElement::monomial({ev, odd});
        auto inside = [](const SuperElement& e) {
          return std::all_of(e.terms().begin(), e.terms().end(), [](const auto& t) { return (t.first.odd >> 2) != 0; });
        };
        for (int l = 0; l < 8; ++l)
          if (!inside(SuperElement::letter(l) * m)) return false;
        for (Gen g : kAllGens)
          if (!inside(act_g0(g, m))) return false;
      }
  return true;
}

// --- scalar ideals ------------------------------------------------------------------

ScalarIdeal ScalarIdeal::from_spec(const IdealSpec& spec, int degree_cap) {
  IdealOracle o(spec, degree_cap);
  if (!o.saturation_degree())
    throw NotFiniteDimensional("ideal " + to_string(spec) + " does not saturate by degree " + std::to_string(degree_cap));
  ScalarIdeal s;
  s.saturation_ = *o.saturation_degree();
  for (int d = 0; d < s.saturation_; ++d) s.per_degree_.emplace(d, o.at(d));
  return s;
}

ScalarIdeal ScalarIdeal::threshold(int t) {
  if (t < 0) throw Error("negative threshold");
  ScalarIdeal s;
  s.saturation_ = t;
  for (int d = 0; d < t; ++d) s.per_degree_.emplace(d, Subspace(monomial_count(d)));
  return s;
}

Subspace ScalarIdeal::at(int d) const {
  if (d >= saturation_) return Subspace::full(monomial_count(d));
  return per_degree_.at(d);
}

SparseVec ScalarIdeal::reduce(int d, const SparseVec& v) const {
  if (d >= saturation_) return {};
  return per_degree_.at(d).reduce(v);
}

bool ScalarIdeal::contains(int d, const SparseVec& v) const {
  if (d >= saturation_) return true;
  return per_degree_.at(d).contains(v);
}

bool ideal_contains(const IdealSpec& big, const IdealSpec& small) {
  return std::all_of(small.gens.begin(), small.gens.end(), [&](ComponentLabel c) { return contains_component(big, c); });
}

// --- the free U_rest model -------------------------------------------------------------

namespace {

struct FreeTerm {
  int block;
  int degree;
  int odd;
  std::size_t vr;
  SparseVec poly;
};

using Key = std::tuple<int, int, int, std::size_t>;

// Generator k in RepMatrices::generators() order: z1..z4, g0 by Gen,
// w1^1, w1^2, w2^1, w2^2.
std::map<Key, SparseVec> apply_generator(std::size_t k, const FreeTerm& t, const IrrepMatrices& vr) {
  static const IrrepMatrices w1 = irrep_matrices({0, 1});
  std::map<Key, SparseVec> out;
  auto add = [&](int block, int degree, int odd, std::size_t v, const SparseVec& p, const Rational& c) {
    if (p.empty() || c == 0) return;
    SparseVec& slot = out[{block, degree, odd, v}];
    slot.axpy(c, p);
  };
  const int d = t.degree;
  if (k < 4) {
    add(t.block, d + 1, t.odd, t.vr, mult_matrix(static_cast<int>(k), d, {0, 0}).apply(t.poly), 1);
  } else if (k < 10) {
    Gen g = kAllGens[k - 4];
    add(t.block, d, t.odd, t.vr, g0_matrix(g, d, {0, 0}).apply(t.poly), 1);
    if (t.block == 1) {
      SparseVec col = w1[g].apply(SparseVec::unit(static_cast<std::size_t>(t.odd)));
      for (const auto& [r, x] : col.entries()) add(1, d, static_cast<int>(r), t.vr, t.poly, x);
    }
    SparseVec col = vr[g].apply(SparseVec::unit(t.vr));
    for (const auto& [r, x] : col.entries()) add(t.block, d, t.odd, r, t.poly, x);
  } else if (k < 12) {
    int j = static_cast<int>(k) - 10;
    if (t.block == 0) add(1, d, j, t.vr, t.poly, 1);
    if (t.block == 1 && j != t.odd) add(2, d, 0, t.vr, t.poly, j < t.odd ? 1 : -1);  // w1^1 w1^2 = omega
  } else {
    int i = static_cast<int>(k) - 12;
    if (t.block == 1) add(0, d + 1, 0, t.vr, mult_matrix(2 * i + t.odd, d, {0, 0}).apply(t.poly), 1);
    if (t.block == 2) {
      // w2^i omega = -z_i2 w1^1 + z_i1 w1^2
      add(1, d + 1, 0, t.vr, mult_matrix(2 * i + 1, d, {0, 0}).apply(t.poly), -1);
      add(1, d + 1, 1, t.vr, mult_matrix(2 * i, d, {0, 0}).apply(t.poly), 1);
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.empty() ? out.erase(it) : std::next(it);
  return out;
}

const char* generator_name(std::size_t k) {
  static const char* names[] = {"z1",  "z2",  "z3",  "z4",   "E_L",  "F_L",  "H_L",
                                "E_R", "F_R", "H_R", "w1^1", "w1^2", "w2^1", "w2^2"};
  return names[k];
}

int odd_count(int block) { return block == 1 ? 2 : 1; }

// First failure of stability of I1 + I4 W1 + I7 omega (tensor V_r), checking
// source degrees 0..last_degree.
std::optional<std::string> stability_failure(IrrepLabel vr_label, const std::array<const ScalarIdeal*, 3>& ideals,
                                             int last_degree) {
  static const char* block_names[] = {"I1", "I4 W1", "I7 (W1^W1)"};
  IrrepMatrices vr = irrep_matrices(vr_label);
  const std::size_t nv = dim(vr_label);
  for (int block = 0; block < 3; ++block)
    for (int d = 0; d <= last_degree; ++d) {
      Subspace src = ideals[block]->at(d);
      for (const auto& p : src.basis())
        for (int o = 0; o < odd_count(block); ++o)
          for (std::size_t v = 0; v < nv; ++v)
            for (std::size_t k = 0; k < 14; ++k)
              for (const auto& [key, img] : apply_generator(k, {block, d, o, v, p}, vr)) {
                auto [b2, d2, o2, v2] = key;
                if (!ideals[b2]->contains(d2, img)) {
                  std::ostringstream os;
                  os << generator_name(k) << " maps " << block_names[block] << " in degree " << d << " out of "
                     << block_names[b2];
                  return os.str();
                }
              }
    }
  return std::nullopt;
}

}  // namespace

URestRep build_urest_quotient(IrrepLabel vr_label, const ScalarIdeal& i1, const ScalarIdeal& i4, const ScalarIdeal& i7) {
  std::array<const ScalarIdeal*, 3> ideals{&i1, &i4, &i7};
  int top = std::max({i1.saturation(), i4.saturation(), i7.saturation()});
  if (auto f = stability_failure(vr_label, ideals, top)) throw NotInvariant(*f);
  URestRep rep;
  rep.vr = vr_label;
  const std::size_t nv = dim(vr_label);
  std::map<std::tuple<int, int, int, std::size_t, std::size_t>, std::size_t> index;  // block, degree, odd, coord, vr
  for (int block = 0; block < 3; ++block) {
    std::size_t before = rep.basis.size();
    for (int d = 0; d < ideals[block]->saturation(); ++d) {
      auto free_coords = ideals[block]->at(d).complement_coordinates();
      for (int o = 0; o < odd_count(block); ++o)
        for (std::size_t c : free_coords)
          for (std::size_t v = 0; v < nv; ++v) {
            index[{block, d, o, c, v}] = rep.basis.size();
            rep.basis.push_back({block, d, c, o, v});
          }
    }
    rep.block_dims[block] = rep.basis.size() - before;
  }
  const std::size_t n = rep.basis.size();
  RepMatrices m = RepMatrices::zero(n);
  m.odd.emplace();
  for (auto& x : *m.odd) x = Matrix(n, n);
  IrrepMatrices vr = irrep_matrices(vr_label);
  for (std::size_t col = 0; col < n; ++col) {
    const auto& b = rep.basis[col];
    FreeTerm t{b.block, b.degree, b.odd, b.vr, SparseVec::unit(b.coord)};
    for (std::size_t k = 0; k < 14; ++k) {
      Matrix& target = k < 4 ? m.p_minus[k] : k < 10 ? m.g0[k - 4] : (*m.odd)[k - 10];
      for (const auto& [key, img] : apply_generator(k, t, vr)) {
        auto [b2, d2, o2, v2] = key;
        SparseVec r = ideals[b2]->reduce(d2, img);
        for (const auto& [c, x] : r.entries()) target.add_to(index.at({b2, d2, o2, c, v2}), col, x);
      }
    }
    m.grading.push_back(2 * b.degree + b.block);
  }
  rep.matrices = std::move(m);
  return rep;
}

URestRep build_urest_rep(const SuperIdealTriple& t, int degree_cap) {
  for (const auto* s : {&t.i1, &t.i4, &t.i7}) check_spec(*s);
  if (!ideal_contains(t.i4, t.i1) || !ideal_contains(t.i7, t.i4)) throw Error("triple violates I1 <= I4 <= I7");
  auto i1 = ScalarIdeal::from_spec(t.i1, degree_cap);
  auto i4 = ScalarIdeal::from_spec(t.i4, degree_cap);
  auto i7 = ScalarIdeal::from_spec(t.i7, degree_cap);
  URestRep r = build_urest_quotient({0, 0}, i1, i4, i7);
  r.triple = t;
  return r;
}

InvarianceReport super_invariance(const SuperIdealTriple& t, int degree_cap) {
  InvarianceReport rep;
  for (const auto* s : {&t.i1, &t.i4, &t.i7}) check_spec(*s);
  if (!ideal_contains(t.i4, t.i1) || !ideal_contains(t.i7, t.i4)) {
    rep.failure = "chain I1 <= I4 <= I7 fails";
    return rep;
  }
  auto i1 = ScalarIdeal::from_spec(t.i1, degree_cap);
  auto i4 = ScalarIdeal::from_spec(t.i4, degree_cap);
  auto i7 = ScalarIdeal::from_spec(t.i7, degree_cap);
  int top = std::max({i1.saturation(), i4.saturation(), i7.saturation()});
  if (auto f = stability_failure({0, 0}, {&i1, &i4, &i7}, top)) {
    rep.failure = *f;
    return rep;
  }
  rep.invariant = true;
  rep.quotient_dim = codimension(t.i1) + 2 * codimension(t.i4) + codimension(t.i7);
  // Necessary consequences: 7[n,d] in I7 puts [n,d+1] into I4 and I1, and
  // p- p- I7 lies in I1.
  for (int deg = 0; deg <= top; ++deg)
    for (auto c : degree_components(deg))
      if (contains_component(t.i7, c)) {
        ComponentLabel up{c.r, c.s + 1};
        if (!contains_component(t.i4, up) || !contains_component(t.i1, up))
          throw VerificationFailed("invariant triple breaks the det-shift condition at " + std::to_string(c.r) + "," +
                                   std::to_string(c.s));
      }
  for (int d = 0; d < top; ++d) {
    Subspace src = i7.at(d);
    for (const auto& p : src.basis())
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          SparseVec q = mult_matrix(b, d + 1, {0, 0}).apply(mult_matrix(a, d, {0, 0}).apply(p));
          if (!i1.contains(d + 2, q)) throw VerificationFailed("invariant triple with p- p- I7 not inside I1");
        }
  }
  return rep;
}

bool check_super_invariance(const SuperIdealTriple& t, int degree_cap) { return super_invariance(t, degree_cap).invariant; }

std::vector<SuperIdealTriple> enumerate_triples(const IdealSpec& i7, std::size_t codim_bound, Exec exec) {
  check_spec(i7);
  codimension(i7);  // throws for infinite codimension
  auto cands = enumerate_ideals(codim_bound);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < cands.size(); ++a) {
    if (!ideal_contains(i7, cands[a])) continue;
    for (std::size_t b = 0; b < cands.size(); ++b)
      if (ideal_contains(cands[b], cands[a]) && ideal_contains(i7, cands[b])) pairs.emplace_back(a, b);
  }
  std::vector<char> ok(pairs.size(), 0);
  for_each_index(pairs.size(), exec, [&](std::size_t k) {
    ok[k] = check_super_invariance({cands[pairs[k].first], cands[pairs[k].second], i7});
  });
  std::vector<SuperIdealTriple> out;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (ok[k]) out.push_back({cands[pairs[k].first], cands[pairs[k].second], i7});
  std::sort(out.begin(), out.end(), [](const SuperIdealTriple& x, const SuperIdealTriple& y) {
    return std::make_tuple(codimension(x.i1), x.i1, codimension(x.i4), x.i4) <
           std::make_tuple(codimension(y.i1), y.i1, codimension(y.i4), y.i4);
  });
  return out;
}

bool super_verify_relations(const RepMatrices& m) {
  if (!m.odd) return false;
  if (!verify_lie_relations(m)) return false;
  const auto& w = *m.odd;  // w1^1, w1^2, w2^1, w2^2
  for (const auto& x : w)
    if (x.rows() != m.dim || x.cols() != m.dim) return false;
  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b) {
      bool mixed = (a < 2) != (b < 2);
      Matrix expect(m.dim, m.dim);
      if (mixed) expect = m.p_minus[2 * (b - 2) + a];  // {w1^j, w2^i} = z_ij
      if (!(anticommutator(w[a], w[b]) == expect)) return false;
    }
  for (const auto& p : m.p_minus)
    for (const auto& x : w)
      if (!commutator(p, x).is_zero()) return false;
  static const IrrepMatrices w1 = irrep_matrices({0, 1});
  static const IrrepMatrices w2 = irrep_matrices({1, 0});
  for (Gen g : kAllGens)
    for (int a = 0; a < 4; ++a) {
      const Matrix& act = a < 2 ? w1[g] : w2[g];
      int base = a < 2 ? 0 : 2;
      Matrix expect(m.dim, m.dim);
      for (int r = 0; r < 2; ++r) {
        Rational c = act.at(r, a - base);
        if (c != 0) expect = expect + c * w[base + r];
      }
      if (!(commutator(m[g], w[a]) == expect)) return false;
    }
  return true;
}

bool super_verify_relations(const URestRep& r) { return super_verify_relations(r.matrices); }

Filtration urest_degree_filtration(int s, int check_degree) {
  if (s < 0) throw Error("filtration index must be nonnegative");
  Filtration f;
  f.s = s;
  f.thresholds = {s + 2, s + 1, s};
  f.check_degree = check_degree;
  auto a = ScalarIdeal::threshold(s + 2), b = ScalarIdeal::threshold(s + 1), c = ScalarIdeal::threshold(s);
  f.invariant = !stability_failure({0, 0}, {&a, &b, &c}, check_degree);
  return f;
}

RepMatrices defining_super_rep() {
  RepMatrices m = RepMatrices::zero(5);
  m.odd.emplace();
  for (auto& x : *m.odd) x = Matrix(5, 5);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.p_minus[2 * i + j].set(3 + i, j, 1);
  for (int j = 0; j < 2; ++j) (*m.odd)[j].set(2, j, 1);
  for (int i = 0; i < 2; ++i) (*m.odd)[2 + i].set(3 + i, 2, 1);
  // Right factor on block a; the signs make [X, w1] match the derivation
  // action on w1.
  m.g0[static_cast<int>(Gen::ER)].set(1, 0, -1);
  m.g0[static_cast<int>(Gen::FR)].set(0, 1, -1);
  m.g0[static_cast<int>(Gen::HR)].set(0, 0, -1);
  m.g0[static_cast<int>(Gen::HR)].set(1, 1, 1);
  m.g0[static_cast<int>(Gen::EL)].set(3, 4, 1);
  m.g0[static_cast<int>(Gen::FL)].set(4, 3, 1);
  m.g0[static_cast<int>(Gen::HL)].set(3, 3, 1);
  m.g0[static_cast<int>(Gen::HL)].set(4, 4, -1);
  m.grading = {0, 0, 1, 2, 2};
  return m;
}

SubquotientReport defining_in_urest_quotient() {
  auto q = build_urest_quotient({0, 1}, ScalarIdeal::threshold(2), ScalarIdeal::threshold(1), ScalarIdeal::threshold(0));
  auto d = defining_super_rep();
  SubquotientReport rep;
  rep.ambient_dim = q.matrices.dim;
  rep.is_sub = element_of_rank(hom_basis(d, q.matrices), d.dim).has_value();
  rep.is_quotient = element_of_rank(hom_basis(q.matrices, d), d.dim).has_value();
  return rep;
}

nlohmann::json to_json(const SuperIdealTriple& t) {
  return {{"i1", to_json(t.i1)}, {"i4", to_json(t.i4)}, {"i7", to_json(t.i7)}};
}

SuperIdealTriple triple_from_json(const nlohmann::json& j) {
  return {ideal_from_json(j.at("i1")), ideal_from_json(j.at("i4")), ideal_from_json(j.at("i7"))};
}

}  // namespace poincare
