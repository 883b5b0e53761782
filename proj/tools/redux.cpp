// redux: command-line front end for the reductions and verifiers.
//
// Reports go to stdout as JSON, a one-line summary goes to stderr.
// Exit codes: 0 success / verdict true, 1 verdict false, 2 usage or input
// error, 3 enumeration guard exceeded.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "redux/acceptance.hpp"
#include "redux/biquadratic.hpp"
#include "redux/errors.hpp"
#include "redux/hyperbolic.hpp"
#include "redux/normalizer.hpp"
#include "redux/poly_json.hpp"
#include "redux/polyproj.hpp"
#include "redux/sparseshift.hpp"
#include "redux/verifiers.hpp"

using namespace redux;

namespace {

constexpr const char* kVersion = "redux 0.1.0";

struct Args {
  std::string in, out, artifact, shift, A, b, witness, solution, format = "json";
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  long bound = 10;
  unsigned m = 6;
  int threads = 0;
  bool serial = false;
};

struct Report {
  json body = json::object();
  json inputs = json::object();
  std::string summary;
  int exit_code = 0;
};

std::string fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

json load(Report& rep, const std::string& path, const char* flag) {
  if (path.empty()) throw InputError(std::string("missing required ") + flag);
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open " + path);
  std::string bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  rep.inputs[path] = fnv1a(bytes);
  try {
    return json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": malformed JSON: " + e.what());
  }
}

// Writes `artifact` to --out when given, otherwise embeds it in the report.
void emit_artifact(Report& rep, const Args& a, const json& artifact) {
  if (a.out.empty()) {
    rep.body["artifact"] = artifact;
  } else {
    write_json_file(a.out, artifact);
    rep.body["out"] = a.out;
  }
}

Exec exec_of(const Args& a) { return a.serial ? Exec::serial : Exec::parallel; }

SampleConfig sample_cfg(const Args& a) { return SampleConfig{a.samples, a.seed, a.bound, false}; }

std::string count_str(std::size_t v) { return std::to_string(v); }

void set_verdict(Report& rep, const Verdict& v, const std::string& what) {
  rep.body["verdict"] = v.to_json();
  rep.exit_code = v.violation ? 1 : 0;
  rep.summary = what + ": " + (v.violation ? "counterexample" : "noViolation") + " after " + count_str(v.checked) +
                " samples";
}

// Polynomial or {"p": poly, "e": [...]} or a hyperbolicity artifact.
std::pair<Polynomial, std::vector<Rational>> polynomial_with_direction(const json& j) {
  if (j.value("kind", "") == "biquadratic-to-hyperbolic") {
    auto art = hyperbolic::hyperbolicity_from_json(j);
    return {art.p, art.e};
  }
  if (j.contains("p")) {
    Polynomial p = polynomial_from_json(j.at("p"));
    std::vector<Rational> e = j.contains("e") ? rationals_from_json(j.at("e"), p.field())
                                              : std::vector<Rational>{};
    if (e.empty()) {
      e.assign(p.layout()->size(), 0);
      e[0] = 1;
    }
    if (e.size() != p.layout()->size()) throw InputError("direction e does not match the layout");
    return {p, e};
  }
  Polynomial p = polynomial_from_json(j);
  std::vector<Rational> e(p.layout()->size(), 0);
  if (!e.empty()) e[0] = 1;
  return {p, e};
}

hyperbolic::HyperbolicityArtifact hyperbolic_source(const json& j) {
  if (j.value("kind", "") == "hyperbolic-to-stable") return hyperbolic::hyperbolicity_from_json(j.at("hyperbolic"));
  if (j.value("kind", "") == "biquadratic-to-hyperbolic") return hyperbolic::hyperbolicity_from_json(j);
  return hyperbolic::build_hyperbolicity(polynomial_from_json(j));
}

hyperbolic::ConvexityArtifact convexity_source(const json& j) {
  if (j.value("kind", "") == "biquadratic-to-convexity") return hyperbolic::convexity_from_json(j);
  Polynomial b = polynomial_from_json(j.contains("b") ? j.at("b") : j);
  std::vector<std::string> xs, ys;
  if (j.contains("partition")) {
    xs = j.at("partition").at(0).get<std::vector<std::string>>();
    ys = j.at("partition").at(1).get<std::vector<std::string>>();
  } else {
    // Default partition: first half of the layout against the second half.
    auto names = b.layout()->names();
    const std::size_t half = names.size() / 2;
    xs.assign(names.begin(), names.begin() + half);
    ys.assign(names.begin() + half, names.end());
  }
  return hyperbolic::build_convexity(b, xs, ys);
}

// normalize

void cmd_normalize(const Args& a, Report& rep) {
  PolySystem S = system_from_json(load(rep, a.in, "--in"));
  auto N = normalize(S);
  json defs = json::array();
  for (const auto& d : N.trace.new_var_defs) defs.push_back({{"var", d.name}, {"left", d.left}, {"right", d.right}});
  rep.body["summary"] = {{"vars_in", S.num_vars()},
                         {"vars_out", N.system.num_vars()},
                         {"polys_out", N.system.polys.size()},
                         {"degree_out", N.system.max_degree()},
                         {"constant_bearing", constant_bearing_count(N.system)},
                         {"definitions", defs},
                         {"pivot", N.trace.fold_pivot ? json(N.trace.fold_pivot->index) : json(nullptr)}};
  emit_artifact(rep, a, system_to_json(N.system));
  rep.summary = "normalized to " + count_str(N.system.num_vars()) + " vars, " + count_str(N.system.polys.size()) +
                " polys, degree " + std::to_string(N.system.max_degree());
}

// reduce

void cmd_reduce(const std::string& target, const Args& a, Report& rep) {
  json in = load(rep, a.in, "--in");
  json summary;
  json artifact;
  if (target == "hn-to-sparseshift") {
    PolySystem raw = system_from_json(in);
    auto N = normalize(raw);
    auto art = sparseshift::build(N.system);
    if (!a.solution.empty()) {
      auto sol = rationals_from_json(load(rep, a.solution, "--solution"), raw.field);
      if (!raw.is_satisfied_by(sol)) throw InputError("--solution is not a root of the input system");
      auto shift = sparseshift::forward_witness(art, extend_solution(N.trace, raw, N.system, sol));
      rep.body["witness"] = {{"shift", rationals_to_json(shift)}};
    }
    const auto& p = art.params;
    summary = {{"vars", art.layout->size()}, {"n", p.n}, {"t", p.t}, {"N", p.N}, {"M", p.M}, {"r", p.r},
               {"s", p.s}, {"PS_monomials", art.ps.monomial_count()}, {"QS_monomials", art.qs.monomial_count()},
               {"QS_degree", art.qs.total_degree()}};
    artifact = sparseshift::artifact_to_json(art);
    rep.summary = "Q_S with " + count_str(art.qs.monomial_count()) + " monomials over " +
                  count_str(art.layout->size()) + " vars";
  } else if (target == "hn-to-polyproj") {
    PolySystem raw = system_from_json(in);
    auto N = raw.max_degree() > 2 ? normalize_degree2(raw) : NormalizedSystem{raw, {}};
    auto art = polyproj::build(N.system);
    if (!a.solution.empty()) {
      auto sol = rationals_from_json(load(rep, a.solution, "--solution"), raw.field);
      if (!raw.is_satisfied_by(sol)) throw InputError("--solution is not a root of the input system");
      auto w = polyproj::forward_witness(art, extend_solution(N.trace, raw, N.system, sol));
      rep.body["witness"] = {{"A", polyproj::matrix_to_json(w.A)}, {"b", rationals_to_json(w.b)}};
    }
    summary = {{"vars", art.layout->size()}, {"n", art.n}, {"t", art.t}, {"d", art.d}, {"D", art.D},
               {"f_monomials", art.f.monomial_count()}, {"g_monomials", art.g.monomial_count()},
               {"f_degree", art.f.total_degree()}};
    artifact = polyproj::artifact_to_json(art);
    rep.summary = "f, g over " + count_str(art.layout->size()) + " vars, degree " +
                  std::to_string(art.f.total_degree());
  } else if (target == "quad-to-biquadratic") {
    auto art = biquadratic::build(system_from_json(in), a.m);
    summary = {{"vars", art.Q.layout()->size()}, {"n", art.n}, {"m", art.chain.m},
               {"Q_monomials", art.Q.monomial_count()}, {"Q_degree", art.Q.total_degree()}};
    artifact = biquadratic::artifact_to_json(art);
    rep.summary = "biquadratic Q with " + count_str(art.Q.monomial_count()) + " monomials, m = " + std::to_string(a.m);
  } else if (target == "biquadratic-to-hyperbolic") {
    auto art = hyperbolic::build_hyperbolicity(polynomial_from_json(in));
    summary = {{"vars", art.p.layout()->size()}, {"n", art.n}, {"beta", art.beta.get_str()}, {"C", art.C.get_str()},
               {"p_monomials", art.p.monomial_count()}};
    artifact = hyperbolic::hyperbolicity_to_json(art);
    rep.summary = "p with beta = " + art.beta.get_str();
  } else if (target == "hyperbolic-to-stable") {
    auto art = hyperbolic_source(in);
    auto st = hyperbolic::build_stability(art);
    summary = {{"vars", st.ptilde.layout()->size()}, {"n", art.n}, {"beta", art.beta.get_str()},
               {"eps", st.eps.get_str()}, {"ptilde_monomials", st.ptilde.monomial_count()}};
    artifact = hyperbolic::stability_to_json(art, st);
    rep.summary = "p~ over " + count_str(st.ptilde.layout()->size()) + " vars, eps = " + st.eps.get_str();
  } else if (target == "biquadratic-to-convexity") {
    auto art = convexity_source(in);
    summary = {{"vars", art.f.layout()->size()}, {"n", art.n}, {"gamma", art.gamma.get_str()},
               {"f_monomials", art.f.monomial_count()}};
    artifact = hyperbolic::convexity_to_json(art);
    rep.summary = "f with gamma = " + art.gamma.get_str();
  } else {
    throw InputError("unknown reduction '" + target + "'");
  }
  rep.body["summary"] = summary;
  emit_artifact(rep, a, artifact);
}

// verify

void cmd_verify(const std::string& target, const Args& a, Report& rep) {
  if (target == "chain") {
    std::vector<Rational> ys, zs;
    if (!a.in.empty()) {
      json j = load(rep, a.in, "--in");
      ys = rationals_from_json(j.at("y"), Field::rationals());
      zs = rationals_from_json(j.at("z"), Field::rationals());
    } else if (a.witness == "canonical") {
      ys = zs = biquadratic::canonical_chain(a.m);
    } else {
      throw InputError("verify chain needs --witness canonical or --in");
    }
    auto r = biquadratic::check_chain(ys, zs);
    const unsigned L = static_cast<unsigned>(ys.size() - 1);
    rep.body["summary"] = {{"m", L}, {"gap_bound_log2", biquadratic::gap_bound_log2(L).get_str()}};
    rep.body["verdict"] = {{"hypothesis", r.hypothesis}, {"side_conditions", r.side_conditions},
                           {"bound", r.bound}, {"lhs", r.lhs.get_str()}};
    // The lemma is an implication; it fails only if the hypothesis holds and the bound does not.
    const bool ok = r.side_conditions && (!r.hypothesis || r.bound);
    rep.exit_code = ok ? 0 : 1;
    rep.summary = std::string("chain m = ") + std::to_string(L) + ": hypothesis " + (r.hypothesis ? "holds" : "fails") +
                  ", bound " + (r.bound ? "holds" : "fails");
    return;
  }
  json art_json = load(rep, a.artifact, "--artifact");
  if (target == "sparseshift") {
    auto art = sparseshift::artifact_from_json(art_json);
    auto shift = sparseshift::shift_from_json(art, load(rep, a.shift, "--shift"));
    auto ex = sparseshift::extract_solution(art, shift);
    rep.body["verdict"] = {{"before", ex.before}, {"after", ex.after}, {"sparsifying", ex.after < ex.before},
                           {"solution", ex.solution ? rationals_to_json(*ex.solution) : json(nullptr)},
                           {"violated_constraint", ex.violated_constraint ? json(*ex.violated_constraint) : json(nullptr)},
                           {"diagnostic", ex.diagnostic}};
    rep.exit_code = ex.solution ? 0 : 1;
    rep.summary = "Q_S monomials " + count_str(ex.before) + " -> " + count_str(ex.after);
  } else if (target == "polyproj") {
    auto art = polyproj::artifact_from_json(art_json);
    auto A = polyproj::matrix_from_json(load(rep, a.A, "--A"), art.field);
    auto b = rationals_from_json(load(rep, a.b, "--b"), art.field);
    const std::size_t k = art.layout->size();
    if (A.size() != k || b.size() != k) throw InputError("A and b must match the artifact layout size " + count_str(k));
    for (const auto& row : A) {
      if (row.size() != k) throw InputError("A must be square of size " + count_str(k));
    }
    const bool ok = polyproj::verify_projection(art, A, b);
    json v = {{"projection", ok}};
    if (ok) {
      auto ex = polyproj::extract_solution(art, A, b);
      auto claims = polyproj::check_claims(art, A, b);
      v["solution"] = ex.solution ? rationals_to_json(*ex.solution) : json(nullptr);
      v["claims"] = {{"constant_rows", claims.constant_rows}, {"product_powers", claims.product_powers},
                     {"literal_products", claims.literal_products}};
    }
    rep.body["verdict"] = v;
    rep.exit_code = ok ? 0 : 1;
    rep.summary = ok ? "f(Ay + b) = g" : "f(Ay + b) != g";
  } else if (target == "hyperbolicity") {
    auto art = hyperbolic_source(art_json);
    set_verdict(rep, sample_hyperbolicity(art.p, art.e, sample_cfg(a), exec_of(a)), "hyperbolicity");
  } else if (target == "stability") {
    auto art = hyperbolic_source(art_json);
    auto st = hyperbolic::build_stability(art);
    rep.body["summary"] = {{"eps", st.eps.get_str()}};
    set_verdict(rep, sample_real_stability(st.ptilde, sample_cfg(a), exec_of(a)), "real stability");
  } else if (target == "convexity") {
    auto art = convexity_source(art_json);
    set_verdict(rep, sample_convexity(art.f, sample_cfg(a), exec_of(a)), "convexity");
  } else {
    throw InputError("unknown verify target '" + target + "'");
  }
}

// oracle

void cmd_oracle(const std::string& target, const Args& a, Report& rep) {
  json in = load(rep, a.in, "--in");
  if (target == "hn") {
    PolySystem S = system_from_json(in);
    auto sol = brute_force_hn(S, exec_of(a));
    rep.body["verdict"] = {{"solution", sol ? rationals_to_json(*sol) : json("none")}};
    rep.exit_code = sol ? 0 : 1;
    rep.summary = sol ? "common root found" : "none";
  } else if (target == "sparseshift") {
    Polynomial f = polynomial_from_json(in);
    auto shift = brute_force_sparseshift(f, exec_of(a));
    rep.body["verdict"] = {{"before", f.monomial_count()},
                           {"shift", shift ? rationals_to_json(*shift) : json("none")}};
    if (shift) rep.body["verdict"]["after"] = shift_substitute(f, *shift).monomial_count();
    rep.exit_code = shift ? 0 : 1;
    rep.summary = shift ? "sparsifying shift found" : "none";
  } else if (target == "sturm") {
    Polynomial u = polynomial_from_json(in);
    auto coeffs = univariate_coefficients(u);
    const bool rooted = sturm_real_rooted(coeffs);
    rep.body["verdict"] = {{"degree", u.total_degree()}, {"distinct_real_roots", count_distinct_real_roots(coeffs)},
                           {"real_rooted", rooted}};
    rep.exit_code = rooted ? 0 : 1;
    rep.summary = rooted ? "real-rooted" : "not real-rooted";
  } else if (target == "stability") {
    set_verdict(rep, sample_real_stability(polynomial_from_json(in), sample_cfg(a), exec_of(a)), "real stability");
  } else if (target == "hyperbolicity") {
    auto [p, e] = polynomial_with_direction(in);
    set_verdict(rep, sample_hyperbolicity(p, e, sample_cfg(a), exec_of(a)), "hyperbolicity");
  } else if (target == "convexity") {
    set_verdict(rep, sample_convexity(polynomial_from_json(in), sample_cfg(a), exec_of(a)), "convexity");
  } else if (target == "nonneg") {
    set_verdict(rep, sample_nonneg(polynomial_from_json(in), sample_cfg(a), exec_of(a)), "nonnegativity");
  } else {
    throw InputError("unknown oracle '" + target + "'");
  }
}

// selftest

void cmd_selftest(const Args& a, Report& rep) {
  acceptance::Options opt;
  opt.exec = exec_of(a);
  json rows = json::array();
  std::size_t failed = 0;
  acceptance::run(opt, [&](const acceptance::CriterionResult& r) {
    std::cerr << acceptance::format_line(r) << "\n";
    rows.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail},
                    {"seconds", r.seconds}, {"limit_seconds", r.limit}});
    if (!r.pass) ++failed;
  });
  rep.body["verdict"] = {{"criteria", rows}, {"failed", failed}};
  rep.exit_code = failed ? 1 : 0;
  rep.summary = count_str(rows.size() - failed) + "/" + count_str(rows.size()) + " criteria pass";
}

void add_common(CLI::App* app, Args& a) {
  app->add_option("--in", a.in, "input JSON file");
  app->add_option("--out", a.out, "output artifact file");
  app->add_option("--artifact", a.artifact, "artifact JSON file");
  app->add_option("--seed", a.seed, "sampling seed")->capture_default_str();
  app->add_option("--samples", a.samples, "random samples")->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--bound", a.bound, "rational sample bound")->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--m", a.m, "chain length")->capture_default_str()->check(CLI::Range(1u, biquadratic::kMaxChainLength));
  app->add_option("--threads", a.threads, "worker thread cap")->check(CLI::NonNegativeNumber);
  app->add_option("--format", a.format, "report format")->check(CLI::IsMember({"json", "pretty"}))->capture_default_str();
  app->add_flag("--serial", a.serial, "use the serial reference kernels");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact reductions between polynomial feasibility problems, with verifiers"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Args a;
  std::string target;

  auto* normalize_cmd = app.add_subcommand("normalize", "degree-2 normalization with constant folding");
  auto* reduce_cmd = app.add_subcommand("reduce", "build a reduction artifact");
  auto* verify_cmd = app.add_subcommand("verify", "check a witness or sample an artifact");
  auto* oracle_cmd = app.add_subcommand("oracle", "independent brute-force and sampling oracles");
  auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance suite");
  for (auto* c : {normalize_cmd, reduce_cmd, verify_cmd, oracle_cmd, selftest_cmd}) add_common(c, a);

  reduce_cmd->add_option("target", target)->required()->check(CLI::IsMember(
      {"hn-to-sparseshift", "hn-to-polyproj", "quad-to-biquadratic", "biquadratic-to-hyperbolic",
       "hyperbolic-to-stable", "biquadratic-to-convexity"}));
  verify_cmd->add_option("target", target)->required()->check(
      CLI::IsMember({"sparseshift", "polyproj", "hyperbolicity", "stability", "convexity", "chain"}));
  reduce_cmd->add_option("--solution", a.solution, "root of the input system; adds the forward witness to the report");
  verify_cmd->add_option("--shift", a.shift, "shift JSON for verify sparseshift");
  verify_cmd->add_option("--A", a.A, "matrix JSON for verify polyproj");
  verify_cmd->add_option("--b", a.b, "vector JSON for verify polyproj");
  verify_cmd->add_option("--witness", a.witness, "built-in chain witness")->check(CLI::IsMember({"canonical"}));
  oracle_cmd->add_option("target", target)->required()->check(CLI::IsMember(
      {"hn", "sparseshift", "sturm", "stability", "hyperbolicity", "convexity", "nonneg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  set_thread_count(a.threads);

  Report rep;
  json command = json::array();
  for (int i = 0; i < argc; ++i) command.push_back(argv[i]);
  const auto start = std::chrono::steady_clock::now();
  try {
    if (*normalize_cmd) cmd_normalize(a, rep);
    if (*reduce_cmd) cmd_reduce(target, a, rep);
    if (*verify_cmd) cmd_verify(target, a, rep);
    if (*oracle_cmd) cmd_oracle(target, a, rep);
    if (*selftest_cmd) cmd_selftest(a, rep);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return 3;
  } catch (const InvariantViolation& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  json out = {{"version", kVersion}, {"command", command}, {"inputs", rep.inputs}, {"seed", a.seed}};
  for (auto& [k, v] : rep.body.items()) out[k] = v;
  out["exit"] = rep.exit_code;
  out["elapsed_seconds"] = elapsed;
  std::cout << (a.format == "pretty" ? out.dump(2) : out.dump()) << "\n";
  std::cerr << rep.summary << "\n";
  return rep.exit_code;
}
