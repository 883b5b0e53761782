#include "redux/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

#include "redux/errors.hpp"

namespace redux {

namespace {

Rational rational_pow(const Rational& base, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

bool grlex_greater(const Term& a, const Term& b) { return grlex_less(b.mono, a.mono); }

}  // namespace

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(std::uint32_t var, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) {
    m.factors_.push_back({var, exp});
    m.degree_ = exp;
  }
  return m;
}

Monomial Monomial::from_dense(std::span<const std::uint32_t> exps) {
  Monomial m;
  for (std::uint32_t v = 0; v < exps.size(); ++v) {
    if (exps[v] > 0) {
      m.factors_.push_back({v, exps[v]});
      m.degree_ += exps[v];
    }
  }
  return m;
}

Monomial Monomial::from_factors(std::vector<VarPower> factors) {
  std::sort(factors.begin(), factors.end(), [](const VarPower& a, const VarPower& b) { return a.var < b.var; });
  Monomial m;
  for (const auto& f : factors) {
    if (f.exp == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().var == f.var) {
      m.factors_.back().exp += f.exp;
    } else {
      m.factors_.push_back(f);
    }
    m.degree_ += f.exp;
  }
  return m;
}

std::vector<std::uint32_t> Monomial::dense(std::size_t nvars) const {
  std::vector<std::uint32_t> out(nvars, 0);
  for (const auto& f : factors_) {
    if (f.var >= nvars) throw InputError("monomial variable outside layout");
    out[f.var] = f.exp;
  }
  return out;
}

std::uint32_t Monomial::exponent(std::uint32_t var) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), var,
                             [](const VarPower& f, std::uint32_t v) { return f.var < v; });
  return (it != factors_.end() && it->var == var) ? it->exp : 0;
}

std::uint32_t Monomial::degree_in(const std::vector<bool>& mask) const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) {
    if (f.var < mask.size() && mask[f.var]) d += f.exp;
  }
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  m.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->var < b->var)) {
      m.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->var < a->var) {
      m.factors_.push_back(*b++);
    } else {
      m.factors_.push_back({a->var, a->exp + b->exp});
      ++a;
      ++b;
    }
  }
  m.degree_ = degree_ + other.degree_;
  return m;
}

Monomial Monomial::with_exponent(std::uint32_t var, std::uint32_t exp) const {
  std::vector<VarPower> f;
  f.reserve(factors_.size() + 1);
  for (const auto& vp : factors_) {
    if (vp.var != var) f.push_back(vp);
  }
  f.push_back({var, exp});
  return from_factors(std::move(f));
}

std::optional<Monomial> Monomial::divide(const Monomial& other) const {
  std::vector<VarPower> f = factors_;
  for (const auto& o : other.factors_) {
    auto it = std::find_if(f.begin(), f.end(), [&](const VarPower& v) { return v.var == o.var; });
    if (it == f.end() || it->exp < o.exp) return std::nullopt;
    it->exp -= o.exp;
  }
  return from_factors(std::move(f));
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& f : factors_) {
    h ^= (static_cast<std::size_t>(f.var) << 20) ^ f.exp;
    h *= 0x100000001b3ULL;
  }
  return h;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  constexpr auto kEnd = std::numeric_limits<std::uint32_t>::max();
  while (true) {
    std::uint32_t va = i < fa.size() ? fa[i].var : kEnd;
    std::uint32_t vb = j < fb.size() ? fb[j].var : kEnd;
    if (va == kEnd && vb == kEnd) return false;
    if (va == vb) {
      if (fa[i].exp != fb[j].exp) return fa[i].exp < fb[j].exp;
      ++i;
      ++j;
    } else {
      // The monomial carrying the earlier variable is the larger one.
      return vb < va;
    }
  }
}

// ---------------------------------------------------------- TermAccumulator

void TermAccumulator::add(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
  }
  field_.reduce_in_place(it->second);
}

void TermAccumulator::add(Monomial&& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
  }
  field_.reduce_in_place(it->second);
}

void TermAccumulator::add(const Polynomial& p, const Rational& scale) {
  for (const auto& t : p.terms()) add(t.mono, t.coeff * scale);
}

Polynomial TermAccumulator::finish() && {
  Polynomial out(field_, layout_);
  out.terms_.reserve(terms_.size());
  for (auto& [m, c] : terms_) {
    if (sgn(c) != 0) out.terms_.push_back({m, std::move(c)});
  }
  std::sort(out.terms_.begin(), out.terms_.end(), grlex_greater);
  terms_.clear();
  return out;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(Field field, LayoutPtr layout) : field_(std::move(field)), layout_(std::move(layout)) {
  if (!layout_) throw InputError("polynomial requires a layout");
}

Polynomial Polynomial::constant(Field field, LayoutPtr layout, const Rational& c) {
  return monomial(std::move(field), std::move(layout), Monomial{}, c);
}

Polynomial Polynomial::variable(Field field, LayoutPtr layout, std::string_view name) {
  auto idx = layout->index(name);
  return variable(std::move(field), std::move(layout), idx);
}

Polynomial Polynomial::variable(Field field, LayoutPtr layout, std::size_t index) {
  if (index >= layout->size()) throw InputError("variable index out of range");
  return monomial(std::move(field), std::move(layout), Monomial::of(static_cast<std::uint32_t>(index)), 1);
}

Polynomial Polynomial::monomial(Field field, LayoutPtr layout, Monomial m, const Rational& c) {
  Polynomial p(std::move(field), std::move(layout));
  for (const auto& f : m.factors()) {
    if (f.var >= p.layout_->size()) throw InputError("monomial variable outside layout");
  }
  Rational r = p.field_.reduce(c);
  if (sgn(r) != 0) p.terms_.push_back({std::move(m), std::move(r)});
  return p;
}

Polynomial Polynomial::from_terms(Field field, LayoutPtr layout, std::vector<Term> terms) {
  TermAccumulator acc(field, layout);
  for (auto& t : terms) {
    for (const auto& f : t.mono.factors()) {
      if (f.var >= layout->size()) throw InputError("monomial variable outside layout");
    }
    acc.add(std::move(t.mono), field.reduce(t.coeff));
  }
  return std::move(acc).finish();
}

int Polynomial::total_degree() const {
  // Descending grlex puts the highest degree first.
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree());
}

bool Polynomial::is_homogeneous(unsigned degree) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono.degree() == degree; });
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return 0;
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(static_cast<std::uint32_t>(var)));
  return d;
}

std::vector<std::size_t> Polynomial::support() const {
  std::set<std::size_t> vars;
  for (const auto& t : terms_) {
    for (const auto& f : t.mono.factors()) vars.insert(f.var);
  }
  return {vars.begin(), vars.end()};
}

void Polynomial::require_compatible(const Polynomial& other, const char* op) const {
  if (!(field_ == other.field_)) {
    throw InputError(std::string(op) + ": field mismatch (" + field_.describe() + " vs " +
                     other.field_.describe() + ")");
  }
  if (!same_layout(layout_, other.layout_)) {
    throw InputError(std::string(op) + ": variable layout mismatch");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(field_, layout_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.mono, field_.neg(t.coeff)});
  return out;
}

namespace {

// Merge two descending-sorted term lists, b scaled by sign.
std::vector<Term> merge_terms(const Field& field, const std::vector<Term>& a, const std::vector<Term>& b,
                              bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_less(b[j].mono, a[i].mono))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_less(a[i].mono, b[j].mono)) {
      out.push_back({b[j].mono, subtract ? field.neg(b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Rational c = subtract ? field.sub(a[i].coeff, b[j].coeff) : field.add(a[i].coeff, b[j].coeff);
      if (sgn(c) != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_compatible(other, "add");
  terms_ = merge_terms(field_, terms_, other.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_compatible(other, "sub");
  terms_ = merge_terms(field_, terms_, other.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_compatible(b, "mul");
  TermAccumulator acc(a.field_, a.layout_);
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) acc.add(ta.mono * tb.mono, ta.coeff * tb.coeff);
  }
  return std::move(acc).finish();
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Rational r = field_.reduce(c);
  Polynomial out(field_, layout_);
  if (sgn(r) == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.mono, field_.mul(t.coeff, r)});
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(field_, layout_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != layout_->size()) {
    throw InputError("evaluation point has " + std::to_string(point.size()) + " coordinates, layout has " +
                     std::to_string(layout_->size()));
  }
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (const auto& f : t.mono.factors()) {
      v *= rational_pow(point[f.var], f.exp);
      if (sgn(v) == 0) break;
    }
    sum += v;
  }
  return field_.reduce(sum);
}

Polynomial Polynomial::substitute_values(std::span<const std::pair<std::size_t, Rational>> values) const {
  std::vector<std::optional<Rational>> fixed(layout_->size());
  for (const auto& [idx, val] : values) {
    if (idx >= fixed.size()) throw InputError("substitution index out of range");
    fixed[idx] = field_.reduce(val);
  }
  TermAccumulator acc(field_, layout_);
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    std::vector<VarPower> rest;
    for (const auto& f : t.mono.factors()) {
      if (fixed[f.var]) {
        c *= rational_pow(*fixed[f.var], f.exp);
      } else {
        rest.push_back(f);
      }
    }
    acc.add(Monomial::from_factors(std::move(rest)), field_.reduce(c));
  }
  return std::move(acc).finish();
}

Polynomial Polynomial::relayout(LayoutPtr target) const {
  if (same_layout(layout_, target)) {
    Polynomial out = *this;
    out.layout_ = std::move(target);
    return out;
  }
  std::vector<std::uint32_t> map(layout_->size(), std::numeric_limits<std::uint32_t>::max());
  for (std::size_t v : support()) {
    auto idx = target->find(layout_->name(v));
    if (!idx) throw InputError("relayout: variable '" + layout_->name(v) + "' missing from target layout");
    map[v] = static_cast<std::uint32_t>(*idx);
  }
  std::vector<Term> moved;
  moved.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<VarPower> f;
    for (const auto& vp : t.mono.factors()) f.push_back({map[vp.var], vp.exp});
    moved.push_back({Monomial::from_factors(std::move(f)), t.coeff});
  }
  return from_terms(field_, std::move(target), std::move(moved));
}

Polynomial Polynomial::with_field(const Field& target) const {
  std::vector<Term> ts = terms_;
  return from_terms(target, layout_, std::move(ts));
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = sgn(c) < 0 && !field_.is_prime_field();
    if (neg) c = -c;
    if (!first) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    first = false;
    bool unit = (c == 1);
    if (!unit || t.mono.is_one()) s += c.get_str();
    bool need_star = !unit;
    for (const auto& f : t.mono.factors()) {
      if (need_star) s += "*";
      s += layout_->name(f.var);
      if (f.exp > 1) s += "^" + std::to_string(f.exp);
      need_star = true;
    }
  }
  return s;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.field_ == b.field_ && same_layout(a.layout_, b.layout_) && a.terms_ == b.terms_;
}

// -------------------------------------------------------------- PolySystem

PolySystem::PolySystem(Field f, LayoutPtr l, std::vector<Polynomial> ps)
    : field(std::move(f)), layout(std::move(l)), polys(std::move(ps)) {
  for (const auto& p : polys) {
    if (!(p.field() == field)) throw InputError("system member over a different field");
    if (!same_layout(p.layout(), layout)) throw InputError("system member over a different layout");
  }
}

int PolySystem::max_degree() const {
  int d = -1;
  for (const auto& p : polys) d = std::max(d, p.total_degree());
  return d;
}

bool PolySystem::is_satisfied_by(std::span<const Rational> point) const {
  return std::all_of(polys.begin(), polys.end(), [&](const Polynomial& p) { return sgn(p.evaluate(point)) == 0; });
}

// -------------------------------------------------------------- operations

Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }
std::size_t monomial_count(const Polynomial& p) { return p.monomial_count(); }

Polynomial shift_substitute(const Polynomial& p, std::span<const Rational> offset) {
  if (offset.size() != p.vars().size()) {
    throw InputError("shift has " + std::to_string(offset.size()) + " entries, layout has " +
                     std::to_string(p.vars().size()));
  }
  const Field& field = p.field();
  std::vector<Rational> a(offset.begin(), offset.end());
  for (auto& v : a) field.reduce_in_place(v);

  TermAccumulator acc(field, p.layout());
  std::vector<VarPower> factors;
  for (const auto& t : p.terms()) {
    const auto& fs = t.mono.factors();
    // Expand prod_v (x_v + a_v)^{e_v} depth-first over the factors.
    std::function<void(std::size_t, const Rational&)> expand = [&](std::size_t k, const Rational& coeff) {
      if (k == fs.size()) {
        acc.add(Monomial::from_factors(factors), coeff);
        return;
      }
      const auto [v, e] = fs[k];
      if (sgn(a[v]) == 0) {
        factors.push_back({v, e});
        expand(k + 1, coeff);
        factors.pop_back();
        return;
      }
      for (std::uint32_t j = 0; j <= e; ++j) {
        Rational c = coeff * Rational(binomial(e, j)) * rational_pow(a[v], e - j);
        field.reduce_in_place(c);
        if (sgn(c) == 0) continue;
        if (j > 0) factors.push_back({v, j});
        expand(k + 1, c);
        if (j > 0) factors.pop_back();
      }
    };
    expand(0, t.coeff);
  }
  return std::move(acc).finish();
}

Polynomial affine_substitute(const Polynomial& p, std::span<const Polynomial> forms) {
  if (forms.size() != p.vars().size()) {
    throw InputError("affine_substitute: " + std::to_string(forms.size()) + " forms for " +
                     std::to_string(p.vars().size()) + " variables");
  }
  if (forms.empty()) {
    throw InputError("affine_substitute: target layout unknown for a 0-variable source");
  }
  const LayoutPtr& target = forms.front().layout();
  for (const auto& f : forms) {
    if (!(f.field() == p.field())) throw InputError("affine_substitute: form over a different field");
    if (!same_layout(f.layout(), target)) throw InputError("affine_substitute: forms over different layouts");
    if (f.total_degree() > 1) throw InputError("affine_substitute: form of degree > 1: " + f.str());
  }
  // powers[v][e] = forms[v]^e, filled lazily.
  std::vector<std::vector<Polynomial>> powers(forms.size());
  auto power = [&](std::uint32_t v, std::uint32_t e) -> const Polynomial& {
    auto& row = powers[v];
    if (row.empty()) row.push_back(Polynomial::constant(p.field(), target, 1));
    while (row.size() <= e) row.push_back(row.back() * forms[v]);
    return row[e];
  };
  TermAccumulator acc(p.field(), target);
  for (const auto& t : p.terms()) {
    Polynomial prod = Polynomial::constant(p.field(), target, t.coeff);
    for (const auto& f : t.mono.factors()) {
      prod = prod * power(f.var, f.exp);
      if (prod.is_zero()) break;
    }
    acc.add(prod);
  }
  return std::move(acc).finish();
}

Polynomial partial_derivative(const Polynomial& p, std::string_view var) {
  return partial_derivative(p, p.vars().index(var));
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
  if (var >= p.vars().size()) throw InputError("partial_derivative: variable index out of range");
  const auto v = static_cast<std::uint32_t>(var);
  TermAccumulator acc(p.field(), p.layout());
  for (const auto& t : p.terms()) {
    std::uint32_t e = t.mono.exponent(v);
    if (e == 0) continue;
    acc.add(t.mono.with_exponent(v, e - 1), p.field().mul(t.coeff, Rational(e)));
  }
  return std::move(acc).finish();
}

namespace {

std::vector<bool> mask_of(const VariableLayout& layout, const std::vector<std::string>& names, const char* what) {
  std::vector<bool> mask(layout.size(), false);
  for (const auto& n : names) {
    auto i = layout.find(n);
    if (!i) throw InputError(std::string(what) + ": variable '" + n + "' not in layout");
    mask[*i] = true;
  }
  return mask;
}

}  // namespace

Polynomial homogenize_bipartite(const Polynomial& h, const std::vector<std::string>& part_a,
                                const std::vector<std::string>& part_b, const std::string& hvar_a,
                                const std::string& hvar_b) {
  const auto& layout = h.vars();
  auto mask_a = mask_of(layout, part_a, "homogenize_bipartite");
  auto mask_b = mask_of(layout, part_b, "homogenize_bipartite");
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (mask_a[i] && mask_b[i]) throw InputError("homogenize_bipartite: '" + layout.name(i) + "' in both parts");
  }
  for (std::size_t v : h.support()) {
    if (!mask_a[v] && !mask_b[v]) {
      throw InputError("homogenize_bipartite: '" + layout.name(v) + "' is in neither part");
    }
  }
  if (hvar_a == hvar_b) throw InputError("homogenize_bipartite: homogenizing variables must differ");
  for (const auto& hv : {hvar_a, hvar_b}) {
    if (auto i = layout.find(hv); i && (mask_a[*i] || mask_b[*i])) {
      throw InputError("homogenize_bipartite: '" + hv + "' already belongs to a part");
    }
  }

  std::vector<std::string> names = layout.names();
  if (!layout.contains(hvar_a)) names.push_back(hvar_a);
  if (!layout.contains(hvar_b)) names.push_back(hvar_b);
  LayoutPtr target = make_layout(std::move(names));
  const auto ia = static_cast<std::uint32_t>(target->index(hvar_a));
  const auto ib = static_cast<std::uint32_t>(target->index(hvar_b));

  TermAccumulator acc(h.field(), target);
  for (const auto& t : h.terms()) {
    std::uint32_t da = t.mono.degree_in(mask_a);
    std::uint32_t db = t.mono.degree_in(mask_b);
    if (da > 2 || db > 2) {
      throw InputError("homogenize_bipartite: monomial exceeds degree 2 on one side (" + std::to_string(da) + "," +
                       std::to_string(db) + ")");
    }
    // Layout positions of h are preserved as a prefix of the target.
    Monomial m = t.mono * Monomial::of(ia, 2 - da) * Monomial::of(ib, 2 - db);
    acc.add(std::move(m), t.coeff);
  }
  return std::move(acc).finish();
}

namespace {

std::pair<std::vector<bool>, std::vector<bool>> partition_masks(const VariableLayout& layout,
                                                                const std::vector<std::string>& part_a,
                                                                const std::vector<std::string>& part_b,
                                                                const char* what) {
  auto mask_a = mask_of(layout, part_a, what);
  auto mask_b = mask_of(layout, part_b, what);
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (mask_a[i] == mask_b[i]) {
      throw InputError(std::string(what) + ": parts do not partition the layout at '" + layout.name(i) + "'");
    }
  }
  return {std::move(mask_a), std::move(mask_b)};
}

}  // namespace

bool is_biquadratic(const Polynomial& q, const std::vector<std::string>& part_a,
                    const std::vector<std::string>& part_b) {
  auto [mask_a, mask_b] = partition_masks(q.vars(), part_a, part_b, "is_biquadratic");
  return std::all_of(q.terms().begin(), q.terms().end(), [&](const Term& t) {
    return t.mono.degree() == 4 && t.mono.degree_in(mask_a) == 2 && t.mono.degree_in(mask_b) == 2;
  });
}

bool is_semi_biquadratic(const Polynomial& q, const std::vector<std::string>& part_a,
                         const std::vector<std::string>& part_b) {
  auto [mask_a, mask_b] = partition_masks(q.vars(), part_a, part_b, "is_semi_biquadratic");
  return std::all_of(q.terms().begin(), q.terms().end(), [&](const Term& t) {
    return t.mono.degree_in(mask_a) <= 2 && t.mono.degree_in(mask_b) <= 2;
  });
}

ComplexParts complex_split(const Polynomial& p, const std::vector<std::string>& real_vars,
                           const std::vector<std::string>& imag_vars) {
  if (real_vars.size() != imag_vars.size()) {
    throw InputError("complex_split: " + std::to_string(real_vars.size()) + " real vs " +
                     std::to_string(imag_vars.size()) + " imaginary variables");
  }
  const auto& layout = p.vars();
  std::vector<std::string> names = layout.names();
  for (const auto& y : imag_vars) {
    if (layout.contains(y)) throw InputError("complex_split: imaginary variable '" + y + "' already in layout");
    names.push_back(y);
  }
  LayoutPtr target = make_layout(std::move(names));
  const Field& field = p.field();

  // imag_of[v] = position of the imaginary partner of source variable v.
  std::vector<std::optional<std::uint32_t>> imag_of(layout.size());
  for (std::size_t k = 0; k < real_vars.size(); ++k) {
    auto v = layout.index(real_vars[k]);
    if (imag_of[v]) throw InputError("complex_split: '" + real_vars[k] + "' listed twice");
    imag_of[v] = static_cast<std::uint32_t>(target->index(imag_vars[k]));
  }

  auto cmul = [](const ComplexParts& a, const ComplexParts& b) {
    return ComplexParts{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  };

  TermAccumulator re(field, target);
  TermAccumulator im(field, target);
  for (const auto& t : p.terms()) {
    ComplexParts prod{Polynomial::constant(field, target, t.coeff), Polynomial(field, target)};
    for (const auto& f : t.mono.factors()) {
      Polynomial x = Polynomial::variable(field, target, f.var);
      ComplexParts base{x, Polynomial(field, target)};
      if (imag_of[f.var]) base.im = Polynomial::variable(field, target, *imag_of[f.var]);
      for (std::uint32_t e = 0; e < f.exp; ++e) prod = cmul(prod, base);
    }
    re.add(prod.re);
    im.add(prod.im);
  }
  return {std::move(re).finish(), std::move(im).finish()};
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> exps(nvars, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t v, unsigned remaining) {
    if (v == nvars) {
      out.push_back(Monomial::from_dense(exps));
      return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
      exps[v] = e;
      rec(v + 1, remaining - e);
    }
    exps[v] = 0;
  };
  rec(0, degree);
  std::sort(out.begin(), out.end(), grlex_less);
  return out;
}

std::vector<Rational> to_dense(const Polynomial& p, unsigned degree) {
  if (p.total_degree() > static_cast<int>(degree)) {
    throw InputError("to_dense: polynomial degree exceeds " + std::to_string(degree));
  }
  auto monos = monomials_up_to(p.vars().size(), degree);
  std::vector<Rational> out;
  out.reserve(monos.size());
  for (const auto& m : monos) out.push_back(p.coefficient(m));
  return out;
}

Polynomial from_dense(const Field& field, const LayoutPtr& layout, unsigned degree, std::span<const Rational> coeffs) {
  auto monos = monomials_up_to(layout->size(), degree);
  if (coeffs.size() != monos.size()) {
    throw InputError("from_dense: expected " + std::to_string(monos.size()) + " coefficients, got " +
                     std::to_string(coeffs.size()));
  }
  std::vector<Term> terms;
  for (std::size_t i = 0; i < monos.size(); ++i) terms.push_back({monos[i], coeffs[i]});
  return Polynomial::from_terms(field, layout, std::move(terms));
}

}  // namespace redux
