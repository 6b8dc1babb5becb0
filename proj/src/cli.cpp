#include "cqs/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>

#include "CLI11.hpp"

#include "cqs/checks.hpp"
#include "cqs/json_io.hpp"
#include "cqs/render.hpp"

namespace cqs::cli {
namespace {

Int parse_int(const std::string& s) {
  std::string t = s;
  t.erase(0, t.find_first_not_of(" \t"));
  t.erase(t.find_last_not_of(" \t") + 1);
  if (t.empty()) throw InvalidParameters("empty integer in divisor coefficients");
  try {
    return Int(t, 10);
  } catch (const std::exception&) {
    throw InvalidParameters("not an integer: '" + s + "'");
  }
}

// "a0,a1" -> divisor coefficients.
WeilDivisor parse_divisor(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
    throw InvalidParameters("divisor must be given as 'a0,a1', got '" + s + "'");
  return WeilDivisor{parse_int(s.substr(0, comma)), parse_int(s.substr(comma + 1))};
}

// Writes to the --out path when given, to `out` otherwise; exit code 3 when
// the path cannot be written.
int emit(const std::string& text, const std::string& out_path, std::ostream& out,
         std::ostream& err) {
  if (out_path.empty()) {
    out << text;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
  if (!f) {
    err << "error: cannot open output path '" << out_path << "'\n";
    return 3;
  }
  f << text;
  f.flush();
  if (!f) {
    err << "error: failed while writing '" << out_path << "'\n";
    return 3;
  }
  return 0;
}

std::string divisor_str(const WeilDivisor& d) {
  return "(" + d.a0.get_str() + "," + d.a1.get_str() + ")";
}

int do_info(std::int64_t n, std::int64_t q, bool as_json, const std::string& out_path,
            std::ostream& out, std::ostream& err) {
  const Cqs c = compute_hilbert_basis(n, q);
  if (as_json) return emit(dump_json(info_json(c)), out_path, out, err);
  std::ostringstream os;
  os << "cyclic quotient singularity (n, q) = (" << c.n << ", " << c.q << ")\n";
  os << "rays: rho0 = " << c.rho0 << ", rho1 = " << c.rho1 << "\n";
  os << "hilbert basis:";
  for (const auto& h : c.hilbert_basis) os << " " << h;
  os << "\n";
  os << "vertex(K) = " << polyhedron_vertex(c, canonical_divisor()) << "\n";
  for (std::int64_t i = 0; i < c.n; ++i) {
    const WeilDivisor d = class_rep(i);
    os << "E" << i << ": divisor " << divisor_str(d) << ", vertex "
       << polyhedron_vertex(c, d) << ", mingens";
    for (const auto& g : mingens(c, d)) os << " " << g;
    os << "\n";
  }
  return emit(os.str(), out_path, out, err);
}

int do_quiver(std::int64_t n, std::int64_t q, bool as_dot, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
  const Cqs c = compute_hilbert_basis(n, q);
  const SyzygyQuiver qv = build_quiver(c);
  const std::string text = as_dot ? quiver_dot(c, qv) : dump_json(quiver_json(c, qv));
  return emit(text, out_path, out, err);
}

struct DivisorArgs {
  std::string coeffs;       // --D / --Dp
  std::int64_t cls = -1;    // --class-D / --class-Dp
  bool cls_given = false;
};

WeilDivisor resolve_divisor(const DivisorArgs& a, const Cqs& c, const char* which) {
  const bool coeff_given = !a.coeffs.empty();
  if (coeff_given == a.cls_given)
    throw InvalidParameters(std::string("give exactly one of --") + which + " or --class-" +
                            which);
  if (coeff_given) return parse_divisor(a.coeffs);
  if (a.cls < 0 || a.cls >= c.n)
    throw InvalidParameters(std::string("--class-") + which + " must lie in [0, n)");
  return class_rep(a.cls);
}

int do_ext_tor(bool is_ext, std::int64_t n, std::int64_t q, const DivisorArgs& da,
               const DivisorArgs& dpa, std::int64_t i, const std::string& out_path,
               std::ostream& out, std::ostream& err) {
  const Cqs c = compute_hilbert_basis(n, q);
  const WeilDivisor d = resolve_divisor(da, c, "D");
  const WeilDivisor dp = resolve_divisor(dpa, c, "Dp");
  const SyzygyQuiver qv = build_quiver(c);
  const GradedSupport s = is_ext ? ext_i(c, qv, d, dp, i) : tor_i(c, qv, d, dp, i);
  return emit(dump_json(support_json(s)), out_path, out, err);
}

int do_check(std::int64_t n, std::int64_t q, const std::string& suite_arg, std::int64_t max_i,
             std::uint64_t seed, const std::string& out_path, std::ostream& out,
             std::ostream& err) {
  const auto suite = suite_from_name(suite_arg);
  if (!suite)
    throw InvalidParameters("unknown suite '" + suite_arg +
                            "' (expected symmetry|duality|vanishing|oracle|link|all)");
  if (max_i < 1) throw InvalidParameters("--max-i must be at least 1");
  CheckOptions opts;
  opts.max_i = max_i;
  opts.seed = seed;
  if (const char* scale = std::getenv("CQS_CHECK_SCALE")) {
    const std::string s(scale);
    if (s == "quick")
      opts.quick = true;
    else if (!s.empty() && s != "full")
      throw InvalidParameters("CQS_CHECK_SCALE must be 'quick' or 'full', got '" + s + "'");
  }
  const Cqs c = compute_hilbert_basis(n, q);
  const SyzygyQuiver qv = build_quiver(c);
  const auto results = run_checks(c, qv, *suite, opts);
  for (const auto& r : results) {
    err << (r.informational ? "[informational] " : "") << r.name << ": "
        << (r.pass ? "PASS" : "FAIL") << " (" << (r.cases.size() - r.failed()) << "/"
        << r.cases.size() << " cases)\n";
  }
  const int rc = emit(dump_json(checks_json(c, *suite, opts, results)), out_path, out, err);
  if (rc != 0) return rc;
  return all_passed(results) ? 0 : 1;
}

int do_render(std::int64_t n, std::int64_t q, RegionKind kind, const std::string& divisor,
              bool tikz, const std::string& out_path, std::ostream& out, std::ostream& err) {
  const Cqs c = compute_hilbert_basis(n, q);
  const WeilDivisor d = parse_divisor(divisor);
  const std::string text = tikz ? render_tikz(c, kind, d) : render_svg(c, kind, d);
  return emit(text, out_path, out, err);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact multigraded Ext/Tor on two-dimensional cyclic quotient singularities"};
  app.require_subcommand(1);

  std::int64_t n = 0, q = 0;
  std::string out_path;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("n", n, "order of the cyclic group")->required();
    cmd->add_option("q", q, "twist parameter, coprime to n, 0 < q < n")->required();
    cmd->add_option("--out", out_path, "write the output to this file instead of stdout");
  };

  bool info_json_flag = false;
  CLI::App* cmd_info = app.add_subcommand("info", "singularity datum, classes, generators");
  add_common(cmd_info);
  cmd_info->add_flag("--json", info_json_flag, "emit JSON instead of text");

  bool quiver_json_flag = false, quiver_dot_flag = false;
  CLI::App* cmd_quiver = app.add_subcommand("quiver", "the labelled first-syzygy quiver");
  add_common(cmd_quiver);
  auto* qj = cmd_quiver->add_flag("--json", quiver_json_flag, "emit JSON (default)");
  cmd_quiver->add_flag("--dot", quiver_dot_flag, "emit Graphviz DOT")->excludes(qj);

  DivisorArgs ext_d, ext_dp;
  std::int64_t ext_i_arg = 1;
  CLI::App* cmd_ext = app.add_subcommand("ext", "graded support of Ext^i(D, D')");
  add_common(cmd_ext);
  cmd_ext->add_option("--D", ext_d.coeffs, "first divisor as 'a0,a1'");
  cmd_ext->add_option("--class-D", ext_d.cls, "first divisor as the class index i of E^i")
      ->check(CLI::NonNegativeNumber);
  cmd_ext->add_option("--Dp", ext_dp.coeffs, "second divisor as 'a0,a1'");
  cmd_ext->add_option("--class-Dp", ext_dp.cls, "second divisor as a class index")
      ->check(CLI::NonNegativeNumber);
  cmd_ext->add_option("--i", ext_i_arg, "homological index, i >= 1");

  DivisorArgs tor_d, tor_dp;
  std::int64_t tor_i_arg = 1;
  CLI::App* cmd_tor = app.add_subcommand("tor", "graded support of Tor_i(D, D')");
  add_common(cmd_tor);
  cmd_tor->add_option("--D", tor_d.coeffs, "first divisor as 'a0,a1'");
  cmd_tor->add_option("--class-D", tor_d.cls, "first divisor as the class index i of E^i")
      ->check(CLI::NonNegativeNumber);
  cmd_tor->add_option("--Dp", tor_dp.coeffs, "second divisor as 'a0,a1'");
  cmd_tor->add_option("--class-Dp", tor_dp.cls, "second divisor as a class index")
      ->check(CLI::NonNegativeNumber);
  cmd_tor->add_option("--i", tor_i_arg, "homological index, i >= 1");

  std::string suite_arg = "all";
  std::int64_t max_i = 3;
  std::uint64_t seed = 0;
  CLI::App* cmd_check = app.add_subcommand("check", "run the verification suites");
  add_common(cmd_check);
  cmd_check->add_option("--suite", suite_arg, "symmetry|duality|vanishing|oracle|link|all");
  cmd_check->add_option("--max-i", max_i, "highest homological index (duality sweep)");
  cmd_check->add_option("--seed", seed, "seed for the randomized cases");

  std::string r_poly, r_below, r_abelow, r_link;
  bool svg_flag = false, tikz_flag = false;
  CLI::App* cmd_render = app.add_subcommand("render", "draw a region as SVG or TikZ");
  add_common(cmd_render);
  cmd_render->add_option("--polyhedron", r_poly, "section polyhedron of 'a0,a1'");
  cmd_render->add_option("--below", r_below, "strict staircase strip of 'a0,a1'");
  cmd_render->add_option("--abelow", r_abelow, "closed staircase strip of 'a0,a1'");
  cmd_render->add_option("--link", r_link, "link region of 'a0,a1'");
  auto* sv = cmd_render->add_flag("--svg", svg_flag, "emit SVG (default)");
  cmd_render->add_flag("--tikz", tikz_flag, "emit TikZ")->excludes(sv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (cmd_info->parsed())
      return do_info(n, q, info_json_flag, out_path, out, err);
    if (cmd_quiver->parsed())
      return do_quiver(n, q, quiver_dot_flag, out_path, out, err);
    if (cmd_ext->parsed())
      return do_ext_tor(true, n, q, {ext_d.coeffs, ext_d.cls,
                                     cmd_ext->count("--class-D") > 0},
                        {ext_dp.coeffs, ext_dp.cls, cmd_ext->count("--class-Dp") > 0},
                        ext_i_arg, out_path, out, err);
    if (cmd_tor->parsed())
      return do_ext_tor(false, n, q, {tor_d.coeffs, tor_d.cls,
                                      cmd_tor->count("--class-D") > 0},
                        {tor_dp.coeffs, tor_dp.cls, cmd_tor->count("--class-Dp") > 0},
                        tor_i_arg, out_path, out, err);
    if (cmd_check->parsed())
      return do_check(n, q, suite_arg, max_i, seed, out_path, out, err);
    if (cmd_render->parsed()) {
      int given = 0;
      given += r_poly.empty() ? 0 : 1;
      given += r_below.empty() ? 0 : 1;
      given += r_abelow.empty() ? 0 : 1;
      given += r_link.empty() ? 0 : 1;
      if (given != 1)
        throw InvalidParameters(
            "give exactly one of --polyhedron/--below/--abelow/--link with 'a0,a1'");
      RegionKind kind = RegionKind::polyhedron;
      std::string divisor = r_poly;
      if (!r_below.empty()) kind = RegionKind::below, divisor = r_below;
      if (!r_abelow.empty()) kind = RegionKind::abelow, divisor = r_abelow;
      if (!r_link.empty()) kind = RegionKind::link, divisor = r_link;
      return do_render(n, q, kind, divisor, tikz_flag, out_path, out, err);
    }
    err << "error: no command given\n";
    return 2;
  } catch (const InvalidIndex& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidParameters& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace cqs::cli
