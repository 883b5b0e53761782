#include "redux/normalizer.hpp"

#include <algorithm>
#include <map>

#include "redux/errors.hpp"

namespace redux {

namespace {

std::string fresh_name(const std::vector<std::string>& names, int& counter) {
  while (true) {
    std::string candidate = var("u", {++counter}).str();
    if (std::find(names.begin(), names.end(), candidate) == names.end()) return candidate;
  }
}

// The quadratic sub-product taken from a monomial of degree >= 3: its two
// lowest-position variable occurrences.
std::pair<std::uint32_t, std::uint32_t> leading_pair(const Monomial& m) {
  const auto& f = m.factors();
  if (f.front().exp >= 2) return {f.front().var, f.front().var};
  return {f[0].var, f[1].var};
}

}  // namespace

NormalizedSystem normalize_degree2(const PolySystem& system) {
  const Field& field = system.field;
  std::vector<std::string> names = system.layout->names();

  // Work on raw term lists; the layout grows as definitions are added.
  std::vector<std::vector<Term>> polys;
  for (const auto& p : system.polys) polys.push_back(p.terms());
  std::vector<std::vector<Term>> defs;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> def_of;
  NormalizationTrace trace;
  int counter = 0;

  while (true) {
    const Monomial* high = nullptr;
    for (const auto& p : polys) {
      for (const auto& t : p) {
        if (t.mono.degree() >= 3) {
          high = &t.mono;
          break;
        }
      }
      if (high) break;
    }
    if (!high) break;

    auto pair = leading_pair(*high);
    std::uint32_t u;
    if (auto it = def_of.find(pair); it != def_of.end()) {
      u = it->second;
    } else {
      u = static_cast<std::uint32_t>(names.size());
      std::string name = fresh_name(names, counter);
      names.push_back(name);
      def_of.emplace(pair, u);
      trace.new_var_defs.push_back({name, names[pair.first], names[pair.second]});
      Monomial product = Monomial::of(pair.first) * Monomial::of(pair.second);
      defs.push_back({{Monomial::of(u), Rational(1)}, {product, field.neg(1)}});
    }

    const Monomial product = Monomial::of(pair.first) * Monomial::of(pair.second);
    for (auto& p : polys) {
      for (auto& t : p) {
        if (t.mono.degree() < 3) continue;
        if (auto q = t.mono.divide(product)) t.mono = *q * Monomial::of(u);
      }
    }
  }

  LayoutPtr layout = make_layout(names);
  std::vector<Polynomial> out;
  for (auto& d : defs) out.push_back(Polynomial::from_terms(field, layout, std::move(d)));
  for (auto& p : polys) out.push_back(Polynomial::from_terms(field, layout, std::move(p)));
  if (trace.new_var_defs.empty()) {
    // Unchanged input keeps its layout object.
    return {system, std::move(trace)};
  }
  return {PolySystem(field, layout, std::move(out)), std::move(trace)};
}

FoldResult fold_constants(const PolySystem& system) {
  std::optional<std::size_t> pivot;
  for (std::size_t i = 0; i < system.polys.size(); ++i) {
    if (sgn(system.polys[i].constant_term()) != 0) {
      pivot = i;
      break;
    }
  }
  if (!pivot) return {system, std::nullopt};

  const Polynomial& g1 = system.polys[*pivot];
  const Rational c1 = g1.constant_term();
  std::vector<Polynomial> out;
  out.reserve(system.polys.size());
  for (std::size_t j = 0; j < system.polys.size(); ++j) {
    const Polynomial& gj = system.polys[j];
    const Rational cj = gj.constant_term();
    if (j == *pivot || sgn(cj) == 0) {
      out.push_back(gj);
    } else {
      out.push_back(gj.scaled(c1) - g1.scaled(cj));
    }
  }
  return {PolySystem(system.field, system.layout, std::move(out)), FoldPivot{*pivot, c1}};
}

NormalizedSystem normalize(const PolySystem& system) {
  auto reduced = normalize_degree2(system);
  auto folded = fold_constants(reduced.system);
  reduced.trace.fold_pivot = folded.pivot;
  return {std::move(folded.system), std::move(reduced.trace)};
}

PolySystem add_subfield_constraints(const PolySystem& system, const Integer& q) {
  if (!system.field.is_prime_field()) throw InputError("subfield constraints need a prime field");
  if (q != system.field.modulus()) {
    throw InputError("subfield constraints: only q = p is supported (got q = " + q.get_str() + ")");
  }
  std::vector<Polynomial> polys = system.polys;
  const auto qe = static_cast<unsigned>(q.get_ui());
  for (std::size_t i = 0; i < system.layout->size(); ++i) {
    Polynomial x = Polynomial::variable(system.field, system.layout, i);
    polys.push_back(x.pow(qe) - x);
  }
  return PolySystem(system.field, system.layout, std::move(polys));
}

std::vector<Rational> extend_solution(const NormalizationTrace& trace, const PolySystem& original,
                                      const PolySystem& normalized, std::span<const Rational> solution) {
  if (solution.size() != original.num_vars()) throw InputError("extend_solution: arity mismatch");
  const Field& field = original.field;
  std::vector<Rational> point(normalized.num_vars(), 0);
  for (std::size_t i = 0; i < solution.size(); ++i) {
    point[normalized.layout->index(original.layout->name(i))] = field.reduce(solution[i]);
  }
  for (const auto& d : trace.new_var_defs) {
    const auto& l = point[normalized.layout->index(d.left)];
    const auto& r = point[normalized.layout->index(d.right)];
    point[normalized.layout->index(d.name)] = field.mul(l, r);
  }
  return point;
}

std::vector<Rational> restrict_solution(const PolySystem& original, const PolySystem& normalized,
                                        std::span<const Rational> solution) {
  if (solution.size() != normalized.num_vars()) throw InputError("restrict_solution: arity mismatch");
  std::vector<Rational> out;
  out.reserve(original.num_vars());
  for (const auto& name : original.layout->names()) out.push_back(solution[normalized.layout->index(name)]);
  return out;
}

std::size_t constant_bearing_count(const PolySystem& system) {
  return static_cast<std::size_t>(std::count_if(system.polys.begin(), system.polys.end(),
                                                [](const Polynomial& p) { return sgn(p.constant_term()) != 0; }));
}

}  // namespace redux
