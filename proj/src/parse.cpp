#include "poincare/parse.hpp"

#include <algorithm>
#include <cctype>

#include "poincare/error.hpp"

namespace poincare {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on `sep` outside parentheses.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth < 0) throw Error("unbalanced parentheses in '" + std::string(s) + "'");
    if (s[i] == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth) throw Error("unbalanced parentheses in '" + std::string(s) + "'");
  out.push_back(trim(s.substr(start)));
  return out;
}

int parse_nonneg_int(std::string_view s) {
  s = trim(s);
  if (s.empty() || s.size() > 6) throw Error("expected a small nonnegative integer, got '" + std::string(s) + "'");
  int v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("expected a nonnegative integer, got '" + std::string(s) + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  Poly parse() {
    skip();
    if (at_end()) throw Error("empty polynomial");
    Poly total;
    bool first = true;
    while (!at_end()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      total = total + sign * term();
      first = false;
      skip();
    }
    return total;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  Poly term() {
    Poly t = Poly::constant(1);
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
      t = Poly::constant(parse_rational(s_.substr(start, pos_ - start)));
      any = true;
      skip();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip();
      } else if (at_end() || (peek() != 'z' && peek() != 'd')) {
        return t;
      }
    }
    while (true) {
      t = t * factor();
      any = true;
      skip();
      if (at_end() || peek() != '*') break;
      ++pos_;
      skip();
    }
    if (!any) fail("expected a term");
    return t;
  }

  Poly factor() {
    Poly base;
    if (s_.substr(pos_, 3) == "det") {
      base = Poly::det();
      pos_ += 3;
    } else if (!at_end() && peek() == 'z' && pos_ + 1 < s_.size() && s_[pos_ + 1] >= '1' && s_[pos_ + 1] <= '4') {
      base = Poly::z(s_[pos_ + 1] - '0');
      pos_ += 2;
    } else {
      fail("expected z1..z4 or det");
    }
    skip();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      base = base.pow(parse_nonneg_int(s_.substr(start, pos_ - start)));
    }
    return base;
  }
};

}  // namespace

Poly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::vector<VPoly> parse_generators(std::string_view text, IrrepLabel source) {
  std::vector<VPoly> out;
  for (auto item : split_top(text, ',')) {
    if (item.empty()) throw Error("empty generator in '" + std::string(text) + "'");
    if (item.substr(0, 3) == "hw(") {
      if (item.back() != ')') throw Error("malformed '" + std::string(item) + "'");
      auto args = split_top(item.substr(3, item.size() - 4), ',');
      if (args.size() != 1 && args.size() != 3) throw Error("hw takes (d) or (d,a,b)");
      int d = parse_nonneg_int(args[0]);
      std::size_t before = out.size();
      for (const auto& h : highest_weight_vectors(Subspace::full(space_dim(d, source)), d, source)) {
        if (args.size() == 3 && !(h.weight == IrrepLabel{parse_nonneg_int(args[1]), parse_nonneg_int(args[2])})) continue;
        out.push_back(vpoly_from_coords(h.vector, d, source));
      }
      if (out.size() == before) throw Error("no highest weight vector matches '" + std::string(item) + "'");
      continue;
    }
    std::size_t k = 0;
    auto at = item.find('@');
    if (at != std::string_view::npos) {
      k = static_cast<std::size_t>(parse_nonneg_int(item.substr(at + 1)));
      item = trim(item.substr(0, at));
    }
    if (k >= dim(source)) throw Error("basis index @" + std::to_string(k) + " out of range for the source");
    Poly p = parse_poly(item);
    if (p.is_zero()) throw Error("zero generator '" + std::string(item) + "'");
    out.push_back(VPoly::scalar_times(p, source, k));
  }
  return out;
}

IrrepLabel parse_label(std::string_view text) {
  auto parts = split_top(text, ',');
  if (parts.size() != 2) throw Error("label must be 'a,b', got '" + std::string(text) + "'");
  return {parse_nonneg_int(parts[0]), parse_nonneg_int(parts[1])};
}

std::vector<IrrepLabel> parse_labels(std::string_view text) {
  std::vector<IrrepLabel> out;
  for (auto p : split_top(text, ';')) out.push_back(parse_label(p));
  return out;
}

std::array<Rational, 4> parse_params(std::string_view text) {
  auto parts = split_top(text, ',');
  if (parts.size() != 4) throw Error("expected four parameters, got '" + std::string(text) + "'");
  std::array<Rational, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = parse_rational(parts[i]);
  return out;
}

IdealSpec parse_ideal_spec(std::string_view text) {
  IdealSpec spec;
  for (const auto& g : parse_generators(text, {0, 0})) {
    const Poly& p = g.components[0];
    if (!p.homogeneous()) throw Error("ideal generators must be homogeneous");
    bool found = false;
    for (auto c : degree_components(p.degree())) {
      Poly hw = component_hw(c);
      const auto& [lead, coef] = *p.terms().begin();
      Rational h = hw.coeff(lead);
      if (h != 0 && Rational(coef / h) * hw == p) {
        spec.gens.push_back(c);
        found = true;
        break;
      }
    }
    if (!found) throw Error("'" + to_string(p) + "' is not a multiple of z1^r det^s");
  }
  std::sort(spec.gens.begin(), spec.gens.end(), [](auto x, auto y) { return x.r > y.r; });
  check_spec(spec);
  return spec;
}

}  // namespace poincare
