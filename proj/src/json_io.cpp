#include "cqs/json_io.hpp"

#include <algorithm>
#include <tuple>

#include "cqs/divisor.hpp"

namespace cqs {

Json json_int(const Int& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

Json json_rat(const Rat& x) {
  Json j;
  j["num"] = json_int(x.get_num());
  j["den"] = json_int(x.get_den());
  return j;
}

Json json_vec(const LatticeVector& v) { return Json::array({json_int(v.x), json_int(v.y)}); }

Json json_rvec(const RationalVector& v) {
  Json j;
  j["x"] = json_rat(v.x);
  j["y"] = json_rat(v.y);
  return j;
}

Json info_json(const Cqs& c) {
  Json j;
  j["n"] = c.n;
  j["q"] = c.q;
  j["rays"] = Json::array({json_vec(c.rho0), json_vec(c.rho1)});
  Json basis = Json::array();
  for (const auto& h : c.hilbert_basis) basis.push_back(json_vec(h));
  j["hilbert_basis"] = std::move(basis);
  j["canonical_vertex"] = json_rvec(polyhedron_vertex(c, canonical_divisor()));
  Json classes = Json::array();
  for (std::int64_t i = 0; i < c.n; ++i) {
    const WeilDivisor d = class_rep(i);
    Json cls;
    cls["index"] = i;
    cls["divisor"] = Json::array({json_int(d.a0), json_int(d.a1)});
    cls["vertex"] = json_rvec(polyhedron_vertex(c, d));
    Json gens = Json::array();
    for (const auto& g : mingens(c, d)) gens.push_back(json_vec(g));
    cls["mingens"] = std::move(gens);
    classes.push_back(std::move(cls));
  }
  j["classes"] = std::move(classes);
  return j;
}

namespace {

std::vector<LabelledArrow> sorted_arrows(const SyzygyQuiver& qv) {
  std::vector<LabelledArrow> arrows = qv.arrows;
  std::sort(arrows.begin(), arrows.end(), [](const LabelledArrow& a, const LabelledArrow& b) {
    return std::tie(a.target, a.source, a.label) < std::tie(b.target, b.source, b.label);
  });
  return arrows;
}

}  // namespace

Json quiver_json(const Cqs& c, const SyzygyQuiver& qv) {
  Json j;
  j["n"] = c.n;
  j["q"] = c.q;
  Json arrows = Json::array();
  for (const auto& a : sorted_arrows(qv)) {
    Json ja;
    ja["source"] = a.source;
    ja["target"] = a.target;
    ja["label"] = json_vec(a.label);
    arrows.push_back(std::move(ja));
  }
  j["arrows"] = std::move(arrows);
  return j;
}

std::string quiver_dot(const Cqs& c, const SyzygyQuiver& qv) {
  std::string out = "digraph quiver {\n";
  for (std::int64_t i = 0; i < c.n; ++i) out += "  E" + std::to_string(i) + ";\n";
  for (const auto& a : sorted_arrows(qv)) {
    out += "  E" + std::to_string(a.source) + " -> E" + std::to_string(a.target) +
           " [label=\"[" + a.label.x.get_str() + "," + a.label.y.get_str() + "]\"];\n";
  }
  out += "}\n";
  return out;
}

Json support_json(const GradedSupport& s) {
  Json j;
  j["dim"] = static_cast<std::int64_t>(s.dim());
  Json degrees = Json::array();
  const auto& entries = s.entries();  // sorted by (degree, label)
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t k = i;
    Json labels = Json::array();
    while (k < entries.size() && entries[k].degree == entries[i].degree) {
      labels.push_back(entries[k].label);
      ++k;
    }
    Json deg;
    deg["u"] = json_vec(entries[i].degree);
    deg["mult"] = static_cast<std::int64_t>(k - i);
    deg["labels"] = std::move(labels);
    degrees.push_back(std::move(deg));
    i = k;
  }
  j["degrees"] = std::move(degrees);
  return j;
}

Json checks_json(const Cqs& c, Suite suite, const CheckOptions& opts,
                 const std::vector<CheckResult>& results) {
  Json j;
  j["n"] = c.n;
  j["q"] = c.q;
  j["suite"] = suite_name(suite);
  j["seed"] = opts.seed;
  j["max_i"] = opts.max_i;
  j["scale"] = opts.quick ? "quick" : "full";
  auto result_json = [](const CheckResult& r) {
    Json jr;
    jr["name"] = r.name;
    jr["pass"] = r.pass;
    jr["cases_total"] = static_cast<std::int64_t>(r.cases.size());
    jr["cases_failed"] = static_cast<std::int64_t>(r.failed());
    Json cases = Json::array();
    for (const auto& cc : r.cases) {
      Json jc;
      jc["description"] = cc.description;
      jc["pass"] = cc.pass;
      if (!cc.detail.empty()) jc["detail"] = cc.detail;
      cases.push_back(std::move(jc));
    }
    jr["cases"] = std::move(cases);
    return jr;
  };
  Json checks = Json::array();
  Json informational = Json::array();
  for (const auto& r : results) {
    if (r.informational)
      informational.push_back(result_json(r));
    else
      checks.push_back(result_json(r));
  }
  j["checks"] = std::move(checks);
  j["informational"] = std::move(informational);
  j["pass"] = all_passed(results);
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cqs
