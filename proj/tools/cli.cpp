#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ellgen/errors.hpp"
#include "ellgen/kummer_genus.hpp"

namespace ellgen::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Header {
  std::string kind;
  std::optional<int> n;
  int qmax = 0;
  int weight = 0;
  int index2 = 0;
};

// Emits the header and one record per stored term, sorted by (m, l2).
std::string render(const Header& h, const QYSeries& s, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    Json head;
    head["kind"] = h.kind;
    head["n"] = h.n ? Json(*h.n) : Json(nullptr);
    head["qmax"] = h.qmax;
    head["weight"] = h.weight;
    head["index2"] = h.index2;
    os << head.dump() << '\n';
    for (const auto& t : s.terms()) {
      Json rec;
      rec["m"] = t.m;
      rec["l2"] = t.l2;
      rec["c"] = to_string(t.c);
      os << rec.dump() << '\n';
    }
  } else {
    os << "# kind=" << h.kind << ",n=" << (h.n ? std::to_string(*h.n) : "")
       << ",qmax=" << h.qmax << ",weight=" << h.weight << ",index2=" << h.index2 << '\n';
    os << "m,l2,c\n";
    for (const auto& t : s.terms()) os << t.m << ',' << t.l2 << ',' << to_string(t.c) << '\n';
  }
  return os.str();
}

struct SurfaceArgs {
  std::string name;
  std::optional<long> c1sq;
  std::optional<long> c2;
};

void add_surface_options(CLI::App* cmd, SurfaceArgs& a, const std::string& default_name) {
  a.name = default_name;
  cmd->add_option("--name,--surface", a.name, "Preset surface: P2, P1xP1, K3, Abelian");
  cmd->add_option("--c1sq", a.c1sq, "Chern number c1^2 (with --c2)");
  cmd->add_option("--c2", a.c2, "Chern number c2 (with --c1sq)");
}

// Returns nullopt and writes a diagnostic when the surface is not resolvable.
std::optional<SurfaceSpec> resolve_surface(const SurfaceArgs& a, std::ostream& err) {
  if (a.c1sq || a.c2) {
    if (!a.c1sq || !a.c2) {
      err << "error: --c1sq and --c2 must be given together\n";
      return std::nullopt;
    }
    return SurfaceSpec{"custom", *a.c1sq, *a.c2};
  }
  auto spec = surface_preset(a.name);
  if (!spec) err << "error: unknown surface '" << a.name << "'\n";
  return spec;
}

Report psi_cross_check(int q_max) {
  Report r{"psi cross-construction (M<=" + std::to_string(q_max) + ")", {}};
  for (int m = 0; m <= q_max; ++m)
    if (theta_quotient_jet(m)[0] != psi_series(m))
      r.fail("M=" + std::to_string(m) + ": theta quotient x^0 coefficient differs from psi");
  return r;
}

Report k3_check(int q_max, int weight) {
  Report r{"Kummer n=2 equals K3 (qmax=" + std::to_string(q_max) + ")", {}};
  try {
    if (kummer_hecke(2, q_max, weight).genus != ell_surface(surfaces::k3(), q_max))
      r.fail("Hecke route for n=2 differs from the K3 surface genus");
  } catch (const Error& e) {
    r.fail(e.what());
  }
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Fourier expansions of elliptic genera of surfaces, Hilbert schemes "
               "and generalised Kummer varieties"};
  app.name("ellgen");
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  int q_max = 3;

  auto* surface = app.add_subcommand("surface", "Elliptic genus of a surface");
  SurfaceArgs surface_args;
  add_surface_options(surface, surface_args, "");
  surface->add_option("--qmax", q_max, "Highest q-exponent")->check(CLI::NonNegativeNumber);
  surface->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* kummer = app.add_subcommand("kummer", "Elliptic genus of A^[[n]]");
  int n = 1;
  std::string route = "hecke";
  SurfaceArgs kummer_surface;
  kummer->add_option("--n", n, "Kummer index n (dimension 2(n-1))")
      ->required()
      ->check(CLI::PositiveNumber);
  kummer->add_option("--route", route, "hecke, hilbert or chi")
      ->check(CLI::IsMember({"hecke", "hilbert", "chi"}));
  kummer->add_option("--qmax", q_max, "Highest q-exponent")->check(CLI::NonNegativeNumber);
  add_surface_options(kummer, kummer_surface, "P2");
  kummer->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* psi = app.add_subcommand("psi", "Expansion of psi (or psi^2)");
  bool squared = false;
  psi->add_option("--qmax", q_max, "Highest q-exponent")->check(CLI::NonNegativeNumber);
  psi->add_flag("--squared", squared, "Emit psi^2 instead of psi");
  psi->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "Run the cross-validation suite");
  int p_max = 4;
  int hecke_weight = -2;
  verify->add_option("--N,--pmax", p_max, "Highest Kummer index / p-degree")
      ->check(CLI::PositiveNumber);
  verify->add_option("--qmax", q_max, "Highest q-exponent")->check(CLI::NonNegativeNumber);
  // Negative control: run the suite with a deliberately wrong Hecke weight.
  verify->add_option("--hecke-weight", hecke_weight)->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (surface->parsed()) {
      if (surface_args.name.empty() && !surface_args.c1sq && !surface_args.c2) {
        err << "error: surface needs --name or --c1sq/--c2\n";
        return kUsage;
      }
      const auto spec = resolve_surface(surface_args, err);
      if (!spec) return kUsage;
      out << render({"surface", std::nullopt, q_max, 0, 2}, ell_surface(*spec, q_max), format);
      return kOk;
    }

    if (kummer->parsed()) {
      const Header header{"kummer-" + route, n, route == "chi" ? 0 : q_max, 0, 2 * (n - 1)};
      if (route == "chi") {
        out << render(header, kummer_chi_closed(n), format);
      } else if (route == "hecke") {
        out << render(header, kummer_hecke(n, q_max).genus, format);
      } else {
        const auto spec = resolve_surface(kummer_surface, err);
        if (!spec) return kUsage;
        if (spec->c1sq == 0) {
          err << "error: the hilbert route needs a surface with c1^2 != 0\n";
          return kUsage;
        }
        const auto results = kummer_via_hilbert(*spec, n, q_max);
        out << render(header, results.back().genus, format);
      }
      return kOk;
    }

    if (psi->parsed()) {
      const JacobiMeta meta = squared ? kPsiSquaredMeta : kPsiMeta;
      const QYSeries s = squared ? psi_squared(q_max) : psi_series(q_max);
      out << render({squared ? "psi2" : "psi", std::nullopt, q_max, meta.weight, meta.index2}, s,
                    format);
      return kOk;
    }

    if (verify->parsed()) {
      const std::vector<SurfaceSpec> pair{surfaces::p2(), surfaces::p1xp1()};
      std::vector<Report> reports;
      reports.push_back(psi_cross_check(q_max));
      {
        Report r = jacobi_property_check(psi_squared(q_max), kPsiSquaredMeta);
        r.name = "psi^2 Jacobi laws (qmax=" + std::to_string(q_max) + ")";
        reports.push_back(std::move(r));
      }
      reports.push_back(routes_compare(p_max, q_max, pair, {hecke_weight}));
      if (p_max >= 2) reports.push_back(k3_check(q_max, hecke_weight));
      for (const auto& spec : {surfaces::k3(), surfaces::p2()}) {
        const SurfaceOracle oracle(spec);
        reports.push_back(quadraticity_check(oracle, p_max, q_max));
      }
      bool all = true;
      for (const auto& r : reports) {
        out << r << '\n';
        all = all && r.passed();
      }
      out << (all ? "all checks passed" : "some checks FAILED") << '\n';
      return all ? kOk : kCheckFailed;
    }
  } catch (const NonExactDivision& e) {
    err << "error: " << e.what() << '\n';
    return kNonExact;
  } catch (const ZeroC1Sq& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace ellgen::cli
