#include "higgsnum/cli.hpp"

#include <algorithm>
#include <charconv>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "higgsnum/hitchin_criterion.hpp"
#include "higgsnum/hn_branches.hpp"
#include "higgsnum/json_out.hpp"
#include "higgsnum/proj_bundle.hpp"
#include "higgsnum/spectral.hpp"
#include "higgsnum/surface_io.hpp"
#include "higgsnum/verify.hpp"

namespace higgsnum::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string surface = "hypersurface:5";
  std::string format = "json";
  std::int64_t r = 2;
  std::string c1;
  std::int64_t c2 = 0;
  std::string delta;
  std::int64_t points = 0;
  bool rank2 = false;
  std::string suite = "all";
  std::optional<std::uint64_t> seed;
  bool serial = false;
};

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const std::string_view tok(text.data() + start, end - start);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw InputError(what + ": '" + text + "' is not a comma-separated integer list");
    }
    out.push_back(v);
    start = end + 1;
  }
  return out;
}

NSVector parse_class(const std::string& text, const SurfaceGeometry& X, const std::string& what) {
  if (text.empty()) throw InputError(what + " is required");
  NSVector v(parse_int_list(text, what));
  if (v.size() != X.rank()) {
    throw InputError(what + " has " + std::to_string(v.size()) + " coordinates, lattice rank is " +
                     std::to_string(X.rank()));
  }
  return v;
}

json envelope(const std::string& command, json input, json payload) {
  return {{"command", command}, {"input", std::move(input)}, {"payload", std::move(payload)}, {"exact", true}};
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
    }
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

void emit(const json& doc, const Options& opt, std::ostream& out) {
  if (opt.format == "table") {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(doc, "", rows);
    std::size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    for (const auto& [k, v] : rows) out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  } else {
    out << doc.dump(2) << '\n';
  }
}

// ------------------------------------------------------------------ commands

json cmd_surface(const SurfaceGeometry& X) {
  const auto& lat = X.lattice();
  const auto [pos, neg] = signature(lat);
  return {{"surface", surface_to_json(X)},
          {"signature", {pos, neg}},
          {"chi_structure", to_json(X.chi_structure())},
          {"K_squared", to_json(pair(lat, X.canonical(), X.canonical()))},
          {"L_squared", to_json(pair(lat, X.polarization(), X.polarization()))},
          {"K_dot_L", to_json(pair(lat, X.canonical(), X.polarization()))},
          {"todd", to_json(todd_surface(X))}};
}

json cmd_ybundle(const std::shared_ptr<const SurfaceGeometry>& X, std::int64_t r) {
  const YClass eta = y_eta(X);
  const YClass spectral = spectral_divisor_class(X, r);
  const YClass adjoint = canonical_y(X) + spectral;
  const YClass eta_dinf = y_mul(eta, dinfty_class(X));
  const YClass zero(X, ChowClass::zero(X->rank()), ChowClass::zero(X->rank()));
  return {{"r", r},
          {"eta", to_json(eta)},
          {"dinfty", to_json(dinfty_class(X))},
          {"spectral_divisor", to_json(spectral)},
          {"canonical_y", to_json(canonical_y(X))},
          {"eta_cubed_degree", to_json(y_pushforward(y_pow(eta, 3)).deg2)},
          {"eta_dot_dinfty_zero", eta_dinf == zero},
          {"adjunction_restriction", to_json(restrict_to_spectral(adjoint, r))},
          {"spectral_canonical_expected", to_json(X->canonical() + (r - 1) * X->polarization())}};
}

json cmd_spectral(const std::shared_ptr<const SurfaceGeometry>& X, std::int64_t r) {
  const SpectralCover S(X, r);
  const auto chi3 = spectral_structure_chi(S);
  return {{"r", r},
          {"canonical", to_json(spectral_canonical(S))},
          {"c2_tangent", to_json(spectral_c2_tangent(S))},
          {"euler_characteristic", to_json(chi3.euler)},
          {"K_squared", to_json(chi3.k_squared)},
          {"todd", to_json(spectral_todd(S))},
          {"cotangent_ch", to_json(spectral_cotangent_ch(S))},
          {"pushforward_structure_ch", to_json(pushforward_structure_ch(S))},
          {"chi_structure",
           {{"via_todd", to_json(chi3.via_todd)},
            {"via_noether", to_json(chi3.via_noether)},
            {"via_decomposition", to_json(chi3.via_decomposition)}}}};
}

json cmd_grr(const std::shared_ptr<const SurfaceGeometry>& X, std::int64_t r, const NSVector& delta,
             std::int64_t points) {
  const SpectralCover S(X, r);
  const ChowClass ch = grr_pushforward(S, delta, points);
  const auto [up, down] = chi_two_ways(S, delta, points);
  // c₂ = c₁²/2 − ch₂
  const Rational c2 = pair(X->lattice(), ch.deg1, ch.deg1) / 2 - ch.deg2;
  return {{"ch", to_json(ch)},
          {"c1", to_json(ch.deg1)},
          {"c2", to_json(c2)},
          {"chi_spectral", to_json(up)},
          {"chi_base", to_json(down)},
          {"chi_equal", up == down}};
}

json cmd_criterion(const SurfaceGeometry& X, const HiggsNumerics& h) {
  json out = to_json(classify(X, h));
  out["discriminant"] = to_json(discriminant(h, X));
  out["n_points_formula"] = to_json(n_points(X, h));
  return out;
}

json cmd_branches(const SurfaceGeometry& X, const HiggsNumerics& h) {
  try {
    const MonopoleBranches b = monopole_components(X, h);
    json comps = json::array();
    for (const auto& c : b.components) comps.push_back(to_json(c));
    return {{"regime", to_json(b.regime)},
            {"total_points", b.total_points},
            {"components", comps},
            {"count", b.components.size()},
            {"label", "numerical component candidates"}};
  } catch (const RegimeError& e) {
    return {{"regime", to_json(classify(X, h))},
            {"total_points", nullptr},
            {"components", json::array()},
            {"count", 0},
            {"label", e.what()}};
  }
}

json cmd_rank2(const SurfaceGeometry& X, std::int64_t c2) {
  const Rank2Fixed f = rank2_fixed_components(X, c2);
  json comps = json::array();
  for (const auto& [n1, n2] : f.type11) comps.push_back({n1, n2});
  json out{{"regime", to_json(f.regime)},
           {"instanton_branch", f.instanton_branch},
           {"type11", comps},
           {"count", f.count}};
  if (f.regime.regime == Regime::Boundary || f.regime.regime == Regime::Generic) {
    out["monopole_count"] = monopole_components(X, HiggsNumerics(2, X.polarization(), c2)).components.size();
  }
  return out;
}

json cmd_verify(const Options& opt, bool& all_passed) {
  std::vector<std::string> names;
  if (opt.suite == "all") {
    names = suite_names();
  } else {
    std::size_t start = 0;
    while (start <= opt.suite.size()) {
      const std::size_t end = std::min(opt.suite.find(',', start), opt.suite.size());
      names.push_back(opt.suite.substr(start, end - start));
      start = end + 1;
    }
    for (const auto& n : names) {
      if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end()) {
        throw InputError("unknown verification suite '" + n + "'");
      }
    }
  }
  const std::uint64_t seed = resolve_seed(opt.seed);
  const Execution exec = opt.serial ? Execution::Serial : Execution::Parallel;
  json suites = json::array();
  all_passed = true;
  for (const auto& n : names) {
    const SuiteResult r = run_suite(n, seed, exec);
    all_passed = all_passed && r.passed();
    suites.push_back({{"name", r.name},
                      {"seed", r.seed},
                      {"cases", r.cases},
                      {"passed", r.cases - r.failures},
                      {"failures", r.failures},
                      {"ok", r.passed()},
                      {"first_failure", r.first_failure}});
  }
  return {{"seed", seed}, {"suites", suites}, {"all_passed", all_passed}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact numerics for spectral surfaces and moduli of L-valued Higgs sheaves", "higgsnum"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--surface", opt.surface, "preset (p2, hypersurface:d, p1xp1, bl1p2) or JSON file");
    sub->add_option("--format", opt.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  };

  auto* surface = app.add_subcommand("surface", "validate a surface and print its invariants");
  add_common(surface);

  auto* ybundle = app.add_subcommand("ybundle", "classes on Y = P(L^v + O)");
  add_common(ybundle);
  ybundle->add_option("-r,--rank", opt.r, "spectral cover degree")->check(CLI::PositiveNumber);

  auto* spectral = app.add_subcommand("spectral", "invariants of a degree-r spectral surface");
  add_common(spectral);
  spectral->add_option("-r,--rank", opt.r, "spectral cover degree")->check(CLI::PositiveNumber);

  auto* grr = app.add_subcommand("grr", "push O(delta) (x) I_D forward along the spectral cover");
  add_common(grr);
  grr->add_option("-r,--rank", opt.r, "spectral cover degree")->check(CLI::PositiveNumber);
  grr->add_option("--delta", opt.delta, "lattice coordinates a,b,...")->required();
  grr->add_option("--points", opt.points, "length of the zero-cycle")->check(CLI::NonNegativeNumber);

  auto* criterion = app.add_subcommand("criterion", "decide non-emptiness of generic Hitchin fibers");
  add_common(criterion);
  criterion->add_option("-r,--rank", opt.r, "Higgs rank")->check(CLI::PositiveNumber);
  criterion->add_option("--c1", opt.c1, "lattice coordinates a,b,...")->required();
  criterion->add_option("--c2", opt.c2, "second Chern class")->required();

  auto* branches = app.add_subcommand("branches", "enumerate monopole-branch components");
  add_common(branches);
  branches->add_option("-r,--rank", opt.r, "Higgs rank")->check(CLI::PositiveNumber);
  branches->add_option("--c1", opt.c1, "lattice coordinates a,b,...");
  branches->add_option("--c2", opt.c2, "second Chern class")->required();
  branches->add_flag("--rank2", opt.rank2, "rank-2 fixed loci with c1 = L");

  auto* verify = app.add_subcommand("verify", "run the oracle verification suites");
  verify->add_option("--format", opt.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  verify->add_option("--suite", opt.suite, "all or a comma list of suites");
  verify->add_option("--seed", opt.seed, "RNG seed (default: HIGGS_SEED or built-in)");
  verify->add_flag("--serial", opt.serial, "use the serial reference runner");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInputError;
  }

  try {
    const auto sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    if (command == "verify") {
      bool all_passed = false;
      const json payload = cmd_verify(opt, all_passed);
      emit(envelope(command, {{"suite", opt.suite}, {"serial", opt.serial}}, payload), opt, out);
      return all_passed ? kExitOk : kExitCheckFailed;
    }

    auto X = std::make_shared<const SurfaceGeometry>(load_surface(opt.surface));
    json input{{"surface", surface_to_json(*X)}};
    json payload;
    if (command == "surface") {
      payload = cmd_surface(*X);
    } else if (command == "ybundle") {
      input["r"] = opt.r;
      payload = cmd_ybundle(X, opt.r);
    } else if (command == "spectral") {
      input["r"] = opt.r;
      payload = cmd_spectral(X, opt.r);
    } else if (command == "grr") {
      const NSVector delta = parse_class(opt.delta, *X, "--delta");
      input["r"] = opt.r;
      input["delta"] = to_json(delta);
      input["points"] = opt.points;
      payload = cmd_grr(X, opt.r, delta, opt.points);
    } else if (command == "criterion") {
      const HiggsNumerics h(opt.r, parse_class(opt.c1, *X, "--c1"), opt.c2);
      input["r"] = h.r;
      input["c1"] = to_json(h.c1);
      input["c2"] = h.c2;
      payload = cmd_criterion(*X, h);
    } else if (command == "branches") {
      input["c2"] = opt.c2;
      if (opt.rank2) {
        input["rank2"] = true;
        payload = cmd_rank2(*X, opt.c2);
      } else {
        const HiggsNumerics h(opt.r, parse_class(opt.c1, *X, "--c1"), opt.c2);
        input["r"] = h.r;
        input["c1"] = to_json(h.c1);
        payload = cmd_branches(*X, h);
      }
    }
    emit(envelope(command, std::move(input), std::move(payload)), opt, out);
    return kExitOk;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace higgsnum::cli
