#include "ehalg/reports.hpp"

#include <sstream>

#include "ehalg/fixtures.hpp"
#include "json.hpp"

namespace ehalg {

using Json = nlohmann::ordered_json;

namespace {

Json scalar_json(const Field& f, const Scalar& a) {
  if (f.is_prime()) return a.residue();
  return f.format(a, true);
}

Json vec_json(const Field& f, const Vec& v) {
  Json out = Json::array();
  for (const auto& a : v) out.push_back(scalar_json(f, a));
  return out;
}

Json subspace_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& v : s.basis_vectors()) basis.push_back(vec_json(s.field(), v));
  return Json{{"dim", s.dim()}, {"basis", basis}};
}

void subspace_text(std::ostringstream& out, const Subspace& s, const std::vector<std::string>& labels,
                   const std::string& indent) {
  for (const auto& v : s.basis_vectors()) out << indent << format_combination(s.field(), labels, v) << "\n";
}

const Field& require_field(const SystemFile& file) {
  require(file.field.has_value(), ErrorKind::InvalidArgument, "no field given; add a 'field:' line or pass --field");
  return *file.field;
}

AmpleSystem guarded_system(const SystemFile& file, const Limits& limits) {
  AmpleSystem sys(file.spec);
  std::size_t germs = sys.germs().size();
  require(germs <= limits.guard_dim, ErrorKind::Guard,
          "crossed product dimension " + std::to_string(germs) + " exceeds the guard " +
              std::to_string(limits.guard_dim));
  return sys;
}

std::vector<std::string> cp_labels(const CrossedProduct& cp) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < cp.dim(); ++i) out.push_back(cp.label_text(i));
  return out;
}

Report finish(bool ok, const Json& json, const std::ostringstream& text) { return Report{ok, json.dump(2) + "\n", text.str()}; }

Json validation_json(const ValidationReport& r, const std::vector<std::string>& witness) {
  return Json{{"axiom", r.axiom}, {"witness", witness}, {"detail", r.detail}};
}

}  // namespace

std::string format_combination(const Field& f, const std::vector<std::string>& labels, const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (f.is_zero(v[i])) continue;
    Scalar c = v[i];
    bool negative = !f.is_prime() && sgn(c.rational()) < 0;
    if (negative) c = f.neg(c);
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    if (!f.is_one(c)) out += f.format(c) + "\xC2\xB7";
    out += labels.at(i);
  }
  return out.empty() ? "0" : out;
}

Report cmd_validate(const SystemFile& file) {
  const SystemSpec& spec = file.spec;
  const InverseSemigroup& s = spec.semigroup;
  Json json{{"command", "validate"}, {"kind", "system"}, {"elements", s.names()}, {"points", spec.points}};
  std::ostringstream text;
  ValidationReport sg = s.validate();
  if (!sg.ok) {
    std::vector<std::string> witness;
    for (auto a : sg.witness) witness.push_back(s.name(a));
    json["ok"] = false;
    json["failure"] = validation_json(sg, witness);
    json["failure"]["stage"] = "semigroup";
    text << "invalid semigroup: " << sg.axiom << " fails at (";
    for (std::size_t i = 0; i < witness.size(); ++i) text << (i ? ", " : "") << witness[i];
    text << "): " << sg.detail << "\n";
    return finish(false, json, text);
  }
  ValidationReport sys = validate_system(spec);
  if (!sys.ok) {
    std::vector<std::string> witness;
    for (std::size_t i = 0; i < sys.witness.size(); ++i) {
      // composition: (s, t, x); inverse: (s, x); covering: (x); shape: (s)
      bool is_point = (sys.axiom == "composition" && i == 2) || (sys.axiom == "inverse" && i == 1) ||
                      sys.axiom == "covering";
      witness.push_back(is_point ? spec.points.at(sys.witness[i]) : s.name(sys.witness[i]));
    }
    json["ok"] = false;
    json["failure"] = validation_json(sys, witness);
    json["failure"]["stage"] = "action";
    text << "invalid action: " << sys.axiom << " fails at (";
    for (std::size_t i = 0; i < witness.size(); ++i) text << (i ? ", " : "") << witness[i];
    text << "): " << sys.detail << "\n";
    return finish(false, json, text);
  }
  std::vector<std::string> idem;
  for (auto e : s.idempotents()) idem.push_back(s.name(e));
  json["ok"] = true;
  json["idempotents"] = idem;
  text << "valid: inverse semigroup of " << s.size() << " elements acting on " << spec.points.size() << " points\n";
  text << "idempotents:";
  for (const auto& e : idem) text << " " << e;
  text << "\n";
  return finish(true, json, text);
}

Report cmd_validate_groupoid(const GroupoidFile& file) {
  const FiniteGroupoid& g = file.groupoid;
  Json json{{"command", "validate"}, {"kind", "groupoid"}, {"elements", g.labels()}};
  std::ostringstream text;
  ValidationReport r = g.validate();
  if (!r.ok) {
    std::vector<std::string> witness;
    for (auto a : r.witness) witness.push_back(g.label(a));
    json["ok"] = false;
    json["failure"] = validation_json(r, witness);
    text << "invalid groupoid: " << r.axiom << ": " << r.detail << "\n";
    return finish(false, json, text);
  }
  json["ok"] = true;
  text << "valid: groupoid with " << g.size() << " elements and " << g.units().size() << " units\n";
  return finish(true, json, text);
}

Report cmd_build(const SystemFile& file, const Limits& limits) {
  const Field& f = require_field(file);
  auto cp = CrossedProduct::build(guarded_system(file, limits), f);
  auto labels = cp_labels(*cp);
  const FiniteAlgebra& a = *cp->algebra();
  Json rows = Json::array();
  std::ostringstream text;
  text << "crossed product over " << f.name() << ": dim " << cp->dim() << "\n";
  text << "basis:";
  for (const auto& l : labels) text << " " << l;
  text << "\n";
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec p = a.basis_product_dense(i, j);
      Json product = Json::object();
      for (std::size_t k = 0; k < p.size(); ++k)
        if (!f.is_zero(p[k])) product[labels[k]] = scalar_json(f, p[k]);
      rows.push_back(Json{{"left", labels[i]}, {"right", labels[j]}, {"product", product}});
      text << labels[i] << " * " << labels[j] << " = " << format_combination(f, labels, p) << "\n";
    }
  Json json{{"command", "build"},
            {"ok", true},
            {"field", f.name()},
            {"dim", cp->dim()},
            {"ell_dim", cp->ell_dim()},
            {"redundancy_dim", cp->csa().redundancy.dim()},
            {"basis", labels},
            {"structure_constants", rows}};
  return finish(true, json, text);
}

Report cmd_germs(const SystemFile& file, const Limits& limits) {
  AmpleSystem sys = guarded_system(file, limits);
  GermGroupoid gg = germ_groupoid(sys);
  const FiniteGroupoid& g = gg.groupoid;
  std::ostringstream text;
  Json germs = Json::array();
  text << g.size() << " germs\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    germs.push_back(Json{{"germ", g.label(i)},
                         {"d", sys.point_name(gg.germs[i].point)},
                         {"r", sys.point_name(sys.target(gg.germs[i]))},
                         {"inverse", g.label(g.inverse(i))}});
    text << "  " << g.label(i) << ": " << sys.point_name(gg.germs[i].point) << " -> "
         << sys.point_name(sys.target(gg.germs[i])) << "\n";
  }
  Json compose = Json::array();
  for (std::size_t a = 0; a < g.size(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < g.size(); ++b)
      row.push_back(g.compose(a, b) == npos ? Json(nullptr) : Json(g.label(g.compose(a, b))));
    compose.push_back(row);
  }
  Json orbits = Json::array();
  for (auto x : sys.orbit_representatives()) {
    std::vector<std::string> orbit, isotropy;
    for (auto y : sys.orbit(x)) orbit.push_back(sys.point_name(y));
    for (const auto& h : sys.G(x).elements) isotropy.push_back(germ_label(sys, h));
    orbits.push_back(Json{{"representative", sys.point_name(x)}, {"orbit", orbit}, {"isotropy", isotropy}});
    text << "orbit of " << sys.point_name(x) << ":";
    for (const auto& y : orbit) text << " " << y;
    text << "; isotropy:";
    for (const auto& h : isotropy) text << " " << h;
    text << "\n";
  }
  Json json{{"command", "germs"}, {"ok", true}, {"germs", germs}, {"compose", compose}, {"orbits", orbits}};
  return finish(true, json, text);
}

Report cmd_decompose(const SystemFile& file, const std::vector<std::string>& generators, const Limits& limits) {
  const Field& f = require_field(file);
  auto cp = CrossedProduct::build(guarded_system(file, limits), f);
  const AmpleSystem& sys = cp->system();
  auto labels = cp_labels(*cp);
  std::vector<Vec> gens;
  for (const auto& g : generators) gens.push_back(parse_element(*cp, g));
  Subspace j = ideal_generate(*cp->algebra(), gens);
  EffrosHahnCertificate cert = effros_hahn_decompose(cp, j);
  std::ostringstream text;
  text << "ideal J of dim " << j.dim() << " in a crossed product of dim " << cp->dim() << " over " << f.name() << "\n";
  subspace_text(text, j, labels, "  ");
  Json points = Json::array();
  for (const auto& e : cert.entries) {
    IsotropyGroup gx = sys.G(e.point);
    std::vector<std::string> iso;
    for (const auto& h : gx.elements) iso.push_back(germ_label(sys, h));
    points.push_back(Json{{"point", sys.point_name(e.point)},
                          {"isotropy", iso},
                          {"gamma_ideal", subspace_json(e.gamma_ideal)},
                          {"admissible", e.admissible},
                          {"induced", subspace_json(e.induced)}});
    text << "at " << sys.point_name(e.point) << ": Gamma(J) has dim " << e.gamma_ideal.dim()
         << (e.admissible ? " (admissible)" : " (not admissible)") << ", induced ideal has dim " << e.induced.dim()
         << "\n";
    subspace_text(text, e.gamma_ideal, iso, "  gamma: ");
  }
  text << "intersection of induced ideals equals J: verified\n";
  Json json{{"command", "decompose"},
            {"ok", true},
            {"field", f.name()},
            {"basis", labels},
            {"generators", generators},
            {"ideal", subspace_json(j)},
            {"points", points},
            {"intersection", subspace_json(cert.intersection)},
            {"verified", true}};
  return finish(true, json, text);
}

Report cmd_isocheck(const SystemFile& file, const Limits& limits) {
  const Field& f = require_field(file);
  auto cp = CrossedProduct::build(guarded_system(file, limits), f);
  PhiIso phi = phi_iso(cp);
  std::ostringstream text;
  Json map = Json::array();
  text << "Phi: crossed product (dim " << cp->dim() << ") -> Steinberg algebra of the germ groupoid ("
       << phi.gg.germs.size() << " germs)\n";
  for (std::size_t i = 0; i < cp->dim(); ++i) {
    std::size_t target = 0;
    for (std::size_t k = 0; k < phi.map.rows(); ++k)
      if (!f.is_zero(phi.map.at(k, i))) target = k;
    map.push_back(Json{{"from", cp->label_text(i)}, {"to", phi.gg.groupoid.label(target)}});
    text << "  " << cp->label_text(i) << " -> " << phi.gg.groupoid.label(target) << "\n";
  }
  text << "bijective, multiplicative on all basis pairs, Gamma triangle holds at every point\n";
  Json json{{"command", "isocheck"}, {"ok", true},          {"field", f.name()},
            {"dim", cp->dim()},      {"germs", phi.gg.germs.size()}, {"map", map},
            {"multiplicative", true}, {"triangle", true}};
  return finish(true, json, text);
}

Report cmd_bisect(const GroupoidFile& file, const Limits& limits) {
  require(file.field.has_value(), ErrorKind::InvalidArgument, "no field given; add a 'field:' line or pass --field");
  const Field& f = *file.field;
  ValidationReport r = file.groupoid.validate();
  require(r.ok, ErrorKind::Validation, "invalid groupoid (" + r.axiom + "): " + r.detail);
  const FiniteGroupoid& g = file.groupoid;
  SteinbergCrossedIso iso = steinberg_as_crossed_product(g, f, limits.bisect_guard);
  std::ostringstream text;
  std::vector<std::string> names;
  for (auto m : iso.sa.masks) names.push_back(bisection_name(g, m));
  text << names.size() << " bisections:";
  for (const auto& n : names) text << " " << n;
  text << "\n";
  Json gmap = Json::array();
  for (std::size_t i = 0; i < iso.groupoid_map.size(); ++i) {
    gmap.push_back(Json{{"germ", iso.gg.groupoid.label(i)}, {"element", g.label(iso.groupoid_map[i])}});
    text << "  " << iso.gg.groupoid.label(i) << " -> " << g.label(iso.groupoid_map[i]) << "\n";
  }
  text << "groupoid isomorphism and algebra isomorphism of dim " << iso.cp->dim() << " over " << f.name()
       << " verified\n";
  Json json{{"command", "bisect"},       {"ok", true},          {"field", f.name()},
            {"bisections", names},       {"groupoid_map", gmap}, {"dim", iso.cp->dim()},
            {"verified", true}};
  return finish(true, json, text);
}

Report cmd_oracle(const SystemFile& file, const Limits& limits) {
  const Field& f = require_field(file);
  require(f.is_prime(), ErrorKind::InvalidArgument, "the ideal oracle needs a prime field");
  Limits l = limits;
  l.guard_dim = std::min(limits.guard_dim, limits.oracle_guard);
  auto cp = CrossedProduct::build(guarded_system(file, l), f);
  auto ideals = enumerate_ideals(*cp->algebra(), limits.oracle_guard);
  auto labels = cp_labels(*cp);
  std::ostringstream text;
  text << ideals.size() << " ideals in a crossed product of dim " << cp->dim() << " over " << f.name() << "\n";
  Json list = Json::array();
  for (const auto& j : ideals) {
    effros_hahn_decompose(cp, j);
    Representation reg = left_regular_mod(cp->algebra(), j);
    require(kernel(reg) == j, ErrorKind::Verification, "kernel of the regular representation mod J differs from J");
    DiscretizationData dd = discretize(cp, reg);
    require(kernel(dd.discretized) == j, ErrorKind::Verification, "kernel of the discretized representation differs");
    for (auto x : cp->system().orbit_representatives()) tau_iso(dd, x);
    list.push_back(Json{{"ideal", subspace_json(j)}, {"decomposition", true}, {"kernels", true}, {"tau", true}});
    text << "  dim " << j.dim() << ": decomposition, kernels and tau verified\n";
  }
  Json json{{"command", "oracle"}, {"ok", true}, {"field", f.name()}, {"basis", labels},
            {"ideal_count", ideals.size()}, {"ideals", list}};
  return finish(true, json, text);
}

Report cmd_fixtures(const Limits& limits) {
  Field f2 = Field::prime(2);
  std::ostringstream text;
  Json checks = Json::array();
  bool all_ok = true;
  auto run = [&](const std::string& name, const auto& body) {
    std::string detail;
    bool ok = false;
    try {
      ok = body();
    } catch (const std::exception& e) {
      detail = e.what();
    }
    all_ok = all_ok && ok;
    checks.push_back(Json{{"check", name}, {"ok", ok}, {"detail", detail}});
    text << (ok ? "PASS " : "FAIL ") << name << (detail.empty() ? "" : ": " + detail) << "\n";
  };
  for (const auto& fx : all_fixtures()) {
    SystemFile file{f2, fx.system.spec()};
    run(fx.name + " validate", [&] { return cmd_validate(file).ok; });
    run(fx.name + " build", [&] { return cmd_build(file, limits).ok; });
    run(fx.name + " isocheck", [&] { return cmd_isocheck(file, limits).ok; });
    run(fx.name + " oracle", [&] { return cmd_oracle(file, limits).ok; });
  }
  for (const auto& gx : standard_groupoids()) {
    GroupoidFile file{f2, gx.groupoid};
    run(gx.name + " bisect", [&] { return cmd_bisect(file, limits).ok; });
  }
  run("FIX-NILP rejected", [&] {
    SemidirectResult r = semidirect_bundle(fix_nilp(f2));
    return !r.bundle && r.witness == std::optional<std::size_t>(0) && r.product_span && r.product_span->dim() == 0;
  });
  Json json{{"command", "fixtures"}, {"ok", all_ok}, {"checks", checks}};
  return finish(all_ok, json, text);
}

}  // namespace ehalg
