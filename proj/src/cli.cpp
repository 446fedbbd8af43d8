#include "sunit/cli.hpp"

#include <chrono>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "sunit/error.hpp"
#include "sunit/expr.hpp"
#include "sunit/factor.hpp"
#include "sunit/hasse.hpp"
#include "sunit/instance.hpp"
#include "sunit/local_probe.hpp"
#include "sunit/report.hpp"

namespace sunit {

namespace {

// Flag values; anything set here overrides the instance file.
struct Flags {
  std::string instance;
  std::optional<std::uint32_t> p, s;
  std::optional<std::string> modulus, gens, b;
  std::optional<int> rhs;
  std::optional<unsigned> m, m_max;
  std::optional<std::int64_t> word_bound;
  std::optional<int> deg_bound;
  std::optional<unsigned> e_bound;
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
  bool verbose = false;
  bool timing = false;
  std::size_t tuple_limit = SolverOptions{}.tuple_limit;
  std::size_t repset_limit = kDefaultRepSetLimit;
  // Subcommand-specific.
  std::string poly, x, g = "T", place;
  std::size_t order = 3;
  unsigned e = 1;
  std::size_t n_max = 6;
};

InstanceSpec merged(const Flags& f) {
  InstanceSpec spec = f.instance.empty() ? InstanceSpec{} : load_instance(f.instance);
  auto over = [](auto& dst, const auto& src) {
    if (src) dst = src;
  };
  over(spec.p, f.p);
  over(spec.s, f.s);
  over(spec.modulus, f.modulus);
  over(spec.gens, f.gens);
  over(spec.b, f.b);
  over(spec.rhs, f.rhs);
  over(spec.m, f.m);
  over(spec.m_max, f.m_max);
  over(spec.word_bound, f.word_bound);
  over(spec.deg_bound, f.deg_bound);
  over(spec.e_bound, f.e_bound);
  over(spec.seed, f.seed);
  return spec;
}

template <class T>
const T& require(const std::optional<T>& v, const char* key) {
  if (!v) fail(ErrorKind::InvalidArgument, std::string("missing '") + key + "' (instance key or flag)");
  return *v;
}

Equation equation_of(const InstanceSpec& spec, const Field& f) {
  Equation eq{parse_value_list(require(spec.b, "b"), f), spec.rhs.value_or(0)};
  if (eq.rhs != 0 && eq.rhs != 1) fail(ErrorKind::InvalidArgument, "rhs must be 0 or 1");
  return eq;
}

SubgroupPresentation subgroup_of(const InstanceSpec& spec, const Field& f) {
  return build_presentation(parse_value_list(require(spec.gens, "gens"), f));
}

Json header(const char* command, const InstanceSpec& spec, const Field& f) {
  Json j;
  j["command"] = command;
  j["field"] = to_json(f);
  j["seed"] = spec.seed.value_or(kDefaultSeed);
  return j;
}

Modulus place_modulus(const std::string& text, unsigned e, const Field& f) {
  const RatFunc base = parse_value(text, f);
  if (!base.den().is_one()) fail(ErrorKind::InvalidArgument, "--place must be a polynomial");
  return Modulus(base.num(), e);
}

using Handler = std::function<int(const Flags&, Json&)>;

int cmd_factor(const Flags& flags, Json& out) {
  const InstanceSpec spec = merged(flags);
  const Field& f = instance_field(spec);
  const RatFunc x = parse_value(flags.poly, f);
  if (!x.den().is_one()) fail(ErrorKind::InvalidArgument, "factor needs a polynomial");
  if (x.is_zero()) fail(ErrorKind::ZeroInput, "cannot factor zero");
  out = header("factor", spec, f);
  out["input"] = x.to_string();
  out["factorization"] = to_json(factor(x.num(), spec.seed.value_or(kDefaultSeed)), f);
  return kExitOk;
}

int cmd_hasse(const Flags& flags, Json& out) {
  const InstanceSpec spec = merged(flags);
  const Field& f = instance_field(spec);
  const RatFunc x = parse_value(flags.x, f);
  out = header("hasse", spec, f);
  out["x"] = x.to_string();
  Json d = Json::array();
  for (std::size_t i = 0; i <= flags.order; ++i)
    d.push_back(Json{{"order", i}, {"value", hasse_derivative(x, i).to_string()}});
  out["derivatives"] = d;
  if (spec.m) out["in_power_subfield"] = Json{{"m", *spec.m}, {"value", in_power_subfield(x, {*spec.m})}};
  return kExitOk;
}

int cmd_indep(const Flags& flags, Json& out) {
  const InstanceSpec spec = merged(flags);
  const Field& f = instance_field(spec);
  const RfVector b = parse_value_list(require(spec.b, "b"), f);
  const unsigned m = spec.m.value_or(1);
  out = header("indep", spec, f);
  out["b"] = to_json(b);
  const IndependenceCertificate c = independence_test(b, m);
  out["certificate"] = to_json(c);
  out["verified"] = verify_certificate(c, b);
  return kExitOk;
}

int cmd_repset(const Flags& flags, Json& out) {
  const InstanceSpec spec = merged(flags);
  const Field& f = instance_field(spec);
  const SubgroupPresentation g = subgroup_of(spec, f);
  out = header("repset", spec, f);
  out["subgroup"] = to_json(g);
  out["repset"] = to_json(representatives(g, spec.m.value_or(1), flags.repset_limit));
  return kExitOk;
}

int cmd_solve(const Flags& flags, Json& out) {
  const InstanceSpec spec = merged(flags);
  const Field& f = instance_field(spec);
  const SubgroupPresentation g = subgroup_of(spec, f);
  const Equation eq = equation_of(spec, f);
  SolverOptions opts;
  opts.jobs = flags.jobs;
  opts.verbose = flags.verbose;
  opts.tuple_limit = flags.tuple_limit;
  opts.repset_limit = flags.repset_limit;
  const auto start = std::chrono::steady_clock::now();
  const CertifiedReport r = spec.m ? decide(eq, g, *spec.m, opts) : auto_m(eq, g, spec.m_max.value_or(3), opts);
  const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  out = header("solve", spec, f);
  out.update(solve_report(eq, g, r, flags.timing ? std::optional<double>(elapsed.count()) : std::nullopt));
  return r.outcome == Outcome::Inapplicable ? kExitNoAnswer : kExitOk;
}

int cmd_skolem(const Flags& flags, Json& out) {
  const InstanceSpec spec = merged(flags);
  const Field& f = instance_field(spec);
  const SubgroupPresentation g = subgroup_of(spec, f);
  const Equation eq = equation_of(spec, f);
  const int deg_bound = spec.deg_bound.value_or(2);
  const unsigned e_bound = spec.e_bound.value_or(2);
  const auto start = std::chrono::steady_clock::now();
  const ObstructionSearch s = find_local_obstruction(eq, g, deg_bound, e_bound);
  out = header("skolem", spec, f);
  out["equation"] = Json{{"b", to_json(eq.b)}, {"rhs", eq.rhs}};
  Json support = Json::array();
  for (const auto& p : s_support(eq, g)) support.push_back(p.to_string());
  out["s_support"] = support;
  out["omega"] = "all places outside S";
  out["bounds"] = Json{{"deg_bound", deg_bound}, {"e_bound", e_bound}};
  out["moduli_tested"] = s.moduli_tested;
  if (s.witness)
    out["witness"] = Json{{"modulus", s.witness->modulus.to_string()}, {"group_size", s.witness->group_size}};
  else
    out["witness"] = nullptr;
  if (spec.word_bound) {
    out["global_search"] = Json{{"word_bound", *spec.word_bound},
                                {"solutions", to_json(sg_search(eq, g, *spec.word_bound))}};
  }
  const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  out["timing_ms"] = flags.timing ? Json(elapsed.count()) : Json(nullptr);
  return s.witness ? kExitOk : kExitNoAnswer;
}

int cmd_probe(const Flags& flags, Json& out) {
  const InstanceSpec spec = merged(flags);
  const Field& f = instance_field(spec);
  if (flags.place.empty()) fail(ErrorKind::InvalidArgument, "probe needs --place");
  const Modulus m = place_modulus(flags.place, flags.e, f);
  out = header("probe", spec, f);
  out["base"] = parse_value(flags.g, f).to_string();
  out["probe"] = to_json(closure_probe(parse_value(flags.g, f), m, flags.n_max));
  if (spec.gens) out["residue_group"] = to_json(residue_group(subgroup_of(spec, f), m));
  return kExitOk;
}

void add_field_options(CLI::App* sub, Flags& f) {
  sub->add_option("--instance", f.instance, "instance file (key = value lines)");
  sub->add_option("--p", f.p, "characteristic");
  sub->add_option("--s", f.s, "degree of F_q over F_p");
  sub->add_option("--modulus", f.modulus, "defining polynomial of F_q over F_p, in T");
  sub->add_option("--seed", f.seed, "factorization seed");
}

void add_problem_options(CLI::App* sub, Flags& f) {
  sub->add_option("--gens", f.gens, "subgroup generators, comma separated");
  sub->add_option("--b", f.b, "coefficients, comma separated");
  sub->add_option("--rhs", f.rhs, "0 or 1");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags flags;
  CLI::App app("S-unit equations over F_q(T) with certificates", "sunit");
  app.require_subcommand(1);
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto* factor_cmd = app.add_subcommand("factor", "factor a polynomial over F_q");
  add_field_options(factor_cmd, flags);
  factor_cmd->add_option("--poly", flags.poly, "polynomial in T")->required();
  commands.emplace_back(factor_cmd, cmd_factor);

  auto* hasse_cmd = app.add_subcommand("hasse", "Hasse derivatives of a rational function");
  add_field_options(hasse_cmd, flags);
  hasse_cmd->add_option("--x", flags.x, "rational function in T")->required();
  hasse_cmd->add_option("--order", flags.order, "highest derivative order");
  hasse_cmd->add_option("--m", flags.m, "also test membership in F_q(T^{p^m})");
  commands.emplace_back(hasse_cmd, cmd_hasse);

  auto* indep_cmd = app.add_subcommand("indep", "linear independence over F_q(T^{p^m})");
  add_field_options(indep_cmd, flags);
  indep_cmd->add_option("--b", flags.b, "vector, comma separated");
  indep_cmd->add_option("--m", flags.m, "subfield exponent m");
  commands.emplace_back(indep_cmd, cmd_indep);

  auto* repset_cmd = app.add_subcommand("repset", "representatives of G / G ∩ F_q(T^{p^m})^*");
  add_field_options(repset_cmd, flags);
  repset_cmd->add_option("--gens", flags.gens, "subgroup generators, comma separated");
  repset_cmd->add_option("--m", flags.m, "subfield exponent m");
  repset_cmd->add_option("--limit", flags.repset_limit, "maximum number of representatives");
  commands.emplace_back(repset_cmd, cmd_repset);

  auto* solve_cmd = app.add_subcommand("solve", "certified decision for b.x = rhs over G");
  add_field_options(solve_cmd, flags);
  add_problem_options(solve_cmd, flags);
  solve_cmd->add_option("--m", flags.m, "fixed subfield exponent");
  solve_cmd->add_option("--m-max", flags.m_max, "scan m = 1..m_max (default 3)");
  solve_cmd->add_option("--jobs", flags.jobs, "worker threads for the tuple loop");
  solve_cmd->add_option("--tuple-limit", flags.tuple_limit, "maximum number of representative tuples");
  solve_cmd->add_flag("--verbose", flags.verbose, "evaluate every tuple");
  solve_cmd->add_flag("--timing", flags.timing, "record wall time in the report");
  commands.emplace_back(solve_cmd, cmd_solve);

  auto* skolem_cmd = app.add_subcommand("skolem", "search for a local obstruction modulo f^e");
  add_field_options(skolem_cmd, flags);
  add_problem_options(skolem_cmd, flags);
  skolem_cmd->add_option("--deg-bound", flags.deg_bound, "largest deg f (default 2)");
  skolem_cmd->add_option("--e-bound", flags.e_bound, "largest exponent e (default 2)");
  skolem_cmd->add_option("--word-bound", flags.word_bound, "also search exact solutions with words in [-B, B]");
  skolem_cmd->add_flag("--timing", flags.timing, "record wall time in the report");
  commands.emplace_back(skolem_cmd, cmd_skolem);

  auto* probe_cmd = app.add_subcommand("probe", "stabilization of g^{p^{n!}} modulo f^e");
  add_field_options(probe_cmd, flags);
  probe_cmd->add_option("--g", flags.g, "base element (default T)");
  probe_cmd->add_option("--place", flags.place, "monic irreducible f")->required();
  probe_cmd->add_option("--e", flags.e, "precision exponent (default 1)");
  probe_cmd->add_option("--n-max", flags.n_max, "sequence length (default 6)");
  probe_cmd->add_option("--gens", flags.gens, "also list the residue group of these generators");
  commands.emplace_back(probe_cmd, cmd_probe);

  std::vector<const char*> argv{"sunit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    for (auto& [sub, handler] : commands) {
      if (!sub->parsed()) continue;
      Json report;
      const int code = handler(flags, report);
      out << report.dump(2) << '\n';
      return code;
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    if (e.kind() == ErrorKind::ResourceLimit) return kExitResource;
    if (e.kind() == ErrorKind::InternalInconsistency) return kExitInternal;
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInput;
}

}  // namespace sunit
