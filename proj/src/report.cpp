#include "qgwa/report.hpp"

#include <functional>
#include <sstream>

#include "json.hpp"

namespace qgwa {

using nlohmann::json;

namespace {

bool hypothesis_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::CrossCheckMismatch:
    case ErrorCode::VerificationFailed:
    case ErrorCode::ParseError:
    case ErrorCode::SemanticError:
      return false;
    default:
      return true;
  }
}

}  // namespace

int AnalysisReport::exit_code() const {
  int code = 0;
  for (const StageError& e : errors) {
    if (e.code == ErrorCode::CrossCheckMismatch || e.code == ErrorCode::VerificationFailed) return 4;
    if (hypothesis_code(e.code)) code = 2;
  }
  return code;
}

AnalysisReport run_analysis(const AnalysisRequest& req) {
  AnalysisReport rep;
  rep.request = req;
  auto stage = [&](const std::string& name, const std::function<void()>& body) {
    try {
      body();
      return true;
    } catch (const Error& e) {
      rep.errors.push_back({name, e.code(), e.what()});
      return false;
    }
  };

  const bool built = stage("algebra", [&] {
    rep.normalization = normalize(req.a, req.base);
    rep.algebra = QuantumGwa::create(req.base, req.q, rep.normalization->poly);
  });
  if (!built) return rep;
  const GwaPtr R = rep.algebra;
  if (!rep.normalization->unit_removed.is_one()) {
    rep.warnings.push_back("a(h) divided by its unit " + rep.normalization->unit_removed.to_string());
  }
  if (rep.normalization->h_shift_removed != 0) {
    rep.warnings.push_back("h^" + std::to_string(rep.normalization->h_shift_removed) +
                           " removed from a(h); D(sigma, h^k a) and D(sigma, a) are isomorphic over k[h^{+-1}]");
  }

  stage("symmetric", [&] {
    rep.symmetric = detect_symmetric(R->a_factored(), R->kind());
    if (rep.symmetric) {
      rep.warnings.push_back("a(h) is symmetric: Aut(R) has further automorphisms; results are conjectural");
    }
  });

  const bool have_phi = stage("automorphism", [&] {
    Automorphism phi = Automorphism::eta(req.gamma, req.mu, 0, req.mu_hpower);
    phi.omega = req.omega;
    phi.i0 = req.i0 ? *req.i0 - rep.normalization->h_shift_removed : default_i0(*R);
    rep.phi = validate(phi, *R);
  });
  if (have_phi) {
    try {
      rep.group = classify_subgroup(*R, {*rep.phi});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SymmetricDefiningPolynomial) {
        rep.errors.push_back({"group", e.code(), e.what()});
      } else {
        rep.warnings.push_back("subgroup classification skipped: it requires a non-symmetric a(h)");
      }
    }
  }

  const GwaData data = GwaData::of(*R);
  const long kb = req.options.k_bound;
  stage("gldim", [&] {
    rep.gldim_algebra = gldim(data, kb);
    rep.complete = rep.complete && rep.gldim_algebra->complete;
  });
  stage("simplicity", [&] {
    rep.simple_algebra = is_simple(data, kb);
    rep.complete = rep.complete && rep.simple_algebra->complete;
  });
  if (R->kind() == BaseKind::Poly) stage("calabi_yau", [&] { rep.calabi_yau = twisted_calabi_yau(R); });
  if (!have_phi) return rep;
  const Automorphism& phi = *rep.phi;

  const bool have_fixed = stage("fixed_ring", [&] {
    rep.fixed_ring = fixed_ring(R, phi);
    for (const auto& w : rep.fixed_ring->warnings) {
      if (rep.symmetric && w.rfind("a(h) is symmetric", 0) == 0) continue;  // already reported
      rep.warnings.push_back(w);
    }
  });

  if (have_fixed && rep.fixed_ring->kind == PresentationKind::DiagonalGwa) {
    const FixedRingPresentation& pres = *rep.fixed_ring;
    stage("roots", [&] {
      rep.roots = analyze_roots(data, pres.n, pres.m, kb);
      rep.congruences = congruent_pairs(*rep.roots, RootSet::A_roots);
      rep.multiplicity = classify_A_multiplicity(*rep.roots);
      rep.complete = rep.complete && rep.congruences->complete && rep.multiplicity->complete;
    });
    stage("gldim_fixed", [&] {
      rep.gldim_fixed = gldim_fixed(R, phi, kb);
      rep.complete = rep.complete && rep.gldim_fixed->via_theorem.complete && rep.gldim_fixed->direct.complete;
    });
    stage("simplicity_fixed", [&] {
      const SimplicityTransfer t = simplicity_transfer(R, phi, kb);
      rep.simple_fixed = t.fixed_ring;
      rep.complete = rep.complete && t.fixed_ring.complete;
    });
    stage("rigidity", [&] { rep.rigidity = rigidity(R, phi); });
    if (R->kind() == BaseKind::Poly) {
      stage("calabi_yau_fixed", [&] { rep.calabi_yau_fixed = twisted_calabi_yau(*pres.fixed_algebra); });
    }
  }

  if (req.options.verify && have_fixed) {
    stage("verify", [&] {
      rep.verification = check_fixed_ring(R, phi, *rep.fixed_ring, req.options.bounds);
      if (!rep.verification->passed()) {
        throw Error(ErrorCode::VerificationFailed, rep.verification->first_failure);
      }
    });
  }
  if (req.options.probe) {
    stage("probe", [&] {
      rep.probe = probe_gcd_failure(R, phi, req.options.bounds);
      rep.warnings.push_back("probe is experimental: generators are minimal only inside the truncation");
    });
  }
  return rep;
}

namespace {

json field_json(const FieldElement& x) {
  json coords = json::array();
  for (const Rational& c : x.coords()) coords.push_back(to_string(c));
  return {{"conductor", x.conductor()}, {"coords", coords}, {"display", x.to_string()}};
}

json laurent_json(const LaurentPoly& p, const std::string& var) {
  json terms = json::object();
  for (const auto& [e, c] : p.terms()) terms[std::to_string(e)] = field_json(c);
  return {{"terms", terms}, {"display", p.is_zero() ? "0" : p.to_string(var)}};
}

json factored_json(const FactoredPoly& f, const std::string& var) {
  json roots = json::array();
  for (const Root& r : f.roots) roots.push_back({{"value", field_json(r.value)}, {"multiplicity", r.multiplicity}});
  return {{"unit", field_json(f.unit)}, {"h_power", f.h_power}, {"roots", roots}, {"display", f.to_string(var)}};
}

json roots_json(const std::vector<Root>& roots) {
  json out = json::array();
  for (const Root& r : roots) out.push_back({{"value", field_json(r.value)}, {"multiplicity", r.multiplicity}});
  return out;
}

json automorphism_json(const Automorphism& phi) {
  return {{"omega", phi.omega},          {"gamma", field_json(phi.gamma)}, {"mu", field_json(phi.mu_scalar)},
          {"mu_hpower", phi.mu_hpower}, {"i0", phi.i0},                   {"display", phi.to_string()}};
}

json gldim_json(const GlDimResult& g) {
  return {{"value", to_string(g.value)}, {"reason", g.reason}, {"complete", g.complete}};
}

json simple_json(const SimplicityResult& s) {
  return {{"simple", s.simple}, {"reasons", s.reasons}, {"complete", s.complete}};
}

json opt(const auto& value, const auto& convert) {
  return value ? convert(*value) : json(nullptr);
}

json report_json(const AnalysisReport& r) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["request"] = {{"conductor", r.request.conductor},
                  {"base", to_string(r.request.base)},
                  {"q", field_json(r.request.q)},
                  {"a", factored_json(r.request.a, "h")}};
  j["algebra"] = r.algebra ? json{{"base", to_string(r.algebra->kind())},
                                  {"q", field_json(r.algebra->q())},
                                  {"a", factored_json(r.algebra->a_factored(), "h")},
                                  {"a_expanded", laurent_json(r.algebra->a(), "h")},
                                  {"display", r.algebra->to_string()}}
                           : json(nullptr);
  j["automorphism"] = opt(r.phi, automorphism_json);
  j["group"] = opt(r.group, [](const SubgroupClassification& g) {
    json gens = json::array();
    for (const auto& a : g.generators) gens.push_back(automorphism_json(a));
    return json{{"case", g.case_number}, {"order", g.order}, {"cyclic", g.cyclic}, {"generators", gens}};
  });
  j["symmetric"] = opt(r.symmetric, [](const SymmetryWitness& w) {
    return json{{"l", w.l}, {"delta", field_json(w.delta)}, {"lambda", field_json(w.lambda)}};
  });
  j["fixed_ring"] = opt(r.fixed_ring, [](const FixedRingPresentation& p) {
    json gens = json::object();
    for (const auto& [name, g] : p.generators) gens[name] = g.to_string();
    json rels = json::array();
    for (const Relation& rel : p.relations) {
      rels.push_back({{"name", rel.name}, {"lhs", rel.lhs.to_string()}, {"rhs", rel.rhs.to_string()}});
    }
    const bool diag = p.kind == PresentationKind::DiagonalGwa;
    const std::string var = diag ? "H" : "h";
    return json{{"kind", to_string(p.kind)},
                {"presentation", p.presentation},
                {"n", p.n},
                {"m", p.m},
                {"q_prime", diag ? field_json(p.fixed_algebra->q) : json(nullptr)},
                {"A", laurent_json(p.A, var)},
                {"A_factored", p.A_factored ? factored_json(*p.A_factored, "H") : json(nullptr)},
                {"B", diag ? json(nullptr) : laurent_json(p.B, var)},
                {"generators", gens},
                {"relations", rels}};
  });
  j["roots"] = opt(r.roots, [&](const RootAnalysis& a) {
    json pairs = json::array();
    if (r.congruences) {
      for (const auto& p : r.congruences->pairs) {
        pairs.push_back({{"root_i", field_json(p.root_i)}, {"root_j", field_json(p.root_j)}, {"k", p.k}});
      }
    }
    return json{{"roots_a", roots_json(a.roots_a)},
                {"zero_multiplicity", a.zero_mult},
                {"roots_b", roots_json(a.roots_b)},
                {"roots_A", roots_json(a.roots_A)},
                {"zero_multiplicity_A", a.zero_mult_A},
                {"ord_q", a.ord_q ? json(*a.ord_q) : json(nullptr)},
                {"N_a", a.n_a()},
                {"congruent_pairs", pairs}};
  });
  j["A_multiplicity"] = opt(r.multiplicity, [](const MultiplicityClass& m) {
    return json{{"multiple", m.multiple}, {"causes", m.causes}, {"lemma", m.lemma}, {"complete", m.complete}};
  });
  j["gldim"] = {{"algebra", opt(r.gldim_algebra, gldim_json)},
                {"fixed_ring", opt(r.gldim_fixed, [](const GlDimFixedResult& g) {
                   return json{{"value", to_string(g.via_theorem.value)},
                               {"theorem_case", g.theorem_case},
                               {"via_theorem", gldim_json(g.via_theorem)},
                               {"direct", gldim_json(g.direct)}};
                 })}};
  j["calabi_yau"] = {{"algebra", opt(r.calabi_yau, [](const CalabiYauResult& c) {
                        return json{{"twisted_calabi_yau", c.twisted_cy},
                                    {"nakayama", c.nakayama ? automorphism_json(*c.nakayama) : json(nullptr)},
                                    {"nakayama_verified", c.nakayama_verified}};
                      })},
                     {"fixed_ring", opt(r.calabi_yau_fixed, [](bool b) { return json(b); })}};
  j["simplicity"] = {{"algebra", opt(r.simple_algebra, simple_json)}, {"fixed_ring", opt(r.simple_fixed, simple_json)}};
  j["rigidity"] = opt(r.rigidity, [](const RigidityResult& g) {
    return json{{"non_isomorphic", g.non_isomorphic},
                {"N_a", g.n_a},
                {"predicted_deg_A", to_string(g.predicted_deg_A)},
                {"deg_A", g.deg_A}};
  });
  j["verification"] = opt(r.verification, [](const VerificationReport& v) {
    json rels = json::array();
    for (const auto& c : v.relations) rels.push_back({{"name", c.name}, {"holds", c.holds}});
    json blocks = json::array();
    for (const auto& [k, d] : v.block_dims) blocks.push_back({{"block", k}, {"fixed_dim", d.first}, {"presented_dim", d.second}});
    return json{{"passed", v.passed()},
                {"relations_ok", v.relations_ok},
                {"span_ok", v.span_ok},
                {"relations", rels},
                {"blocks", blocks},
                {"grade_bound", v.bounds.grade_bound},
                {"h_degree_bound", v.bounds.h_degree_bound},
                {"first_failure", v.first_failure}};
  });
  j["probe"] = opt(r.probe, [](const ProbeReport& p) {
    return json{{"experimental", true},
                {"generators", p.generator_names},
                {"generator_count", p.generator_count},
                {"exceeds_three", p.exceeds_three},
                {"grade_bound", p.bounds.grade_bound},
                {"h_degree_bound", p.bounds.h_degree_bound}};
  });
  json errs = json::array();
  for (const auto& e : r.errors) {
    errs.push_back({{"stage", e.stage}, {"code", std::string(to_string(e.code))}, {"message", e.message}});
  }
  j["errors"] = errs;
  j["warnings"] = r.warnings;
  j["complete"] = r.complete;
  j["exit_code"] = r.exit_code();
  return j;
}

std::string list_text(const std::vector<std::string>& items) {
  std::string s = "[";
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
  return s + "]";
}

std::string report_text(const AnalysisReport& r) {
  std::ostringstream out;
  if (r.algebra) out << "algebra: " << r.algebra->to_string() << "\n";
  if (r.phi) out << "automorphism: " << r.phi->to_string() << " (i0 = " << r.phi->i0 << ")\n";
  if (r.group) {
    out << "group: case " << r.group->case_number << ", order " << r.group->order
        << (r.group->cyclic ? ", cyclic" : ", not cyclic") << "\n";
  }
  out << "symmetric: " << (r.symmetric ? "yes, lambda = " + r.symmetric->lambda.to_string() : std::string("no"))
      << "\n";
  if (r.fixed_ring) {
    const FixedRingPresentation& p = *r.fixed_ring;
    out << "fixed ring: " << to_string(p.kind) << ", " << p.presentation << "\n";
    if (p.kind == PresentationKind::DiagonalGwa) out << "n = " << p.n << ", m = " << p.m << "\n";
    if (p.fixed_algebra) out << "q' = " << p.fixed_algebra->q.to_string() << "\n";
    if (p.A_factored) {
      out << "A(H) = " << p.A_factored->to_string("H") << "\n";
      out << "A(H) expanded = " << (p.A.is_zero() ? "0" : p.A.to_string("H")) << "\n";
    } else {
      out << "A(H) = " << (p.A.is_zero() ? "0" : p.A.to_string("h")) << "\n";
      out << "B(H) = " << (p.B.is_zero() ? "0" : p.B.to_string("h")) << "\n";
    }
    for (const auto& [name, g] : p.generators) out << "  " << name << " = " << g.to_string() << "\n";
    for (const Relation& rel : p.relations) out << "  relation: " << rel.name << "\n";
  }
  if (r.congruences) {
    std::vector<std::string> pairs;
    for (const auto& c : r.congruences->pairs) {
      pairs.push_back("(" + c.root_i.to_string() + ", " + c.root_j.to_string() + ", k=" + std::to_string(c.k) + ")");
    }
    out << "congruent pairs: " << list_text(pairs) << "\n";
  }
  if (r.multiplicity) {
    out << "A(H) multiple roots: " << (r.multiplicity->multiple ? "yes " : "no ") << list_text(r.multiplicity->causes)
        << "\n";
  }
  if (r.gldim_algebra) out << "gldim R = " << to_string(r.gldim_algebra->value) << "\n";
  if (r.gldim_fixed) {
    out << "gldim R^phi = " << to_string(r.gldim_fixed->via_theorem.value) << " (theorem case "
        << r.gldim_fixed->theorem_case << ", direct " << to_string(r.gldim_fixed->direct.value) << ")\n";
  }
  if (r.calabi_yau) {
    out << "twisted Calabi-Yau R: " << (r.calabi_yau->twisted_cy ? "yes" : "no");
    if (r.calabi_yau->nakayama) out << ", nu = " << r.calabi_yau->nakayama->to_string();
    out << "\n";
  }
  if (r.calabi_yau_fixed) out << "twisted Calabi-Yau R^phi: " << (*r.calabi_yau_fixed ? "yes" : "no") << "\n";
  if (r.simple_algebra) out << "simple R: " << (r.simple_algebra->simple ? "yes" : "no") << "\n";
  if (r.simple_fixed) out << "simple R^phi: " << (r.simple_fixed->simple ? "yes" : "no") << "\n";
  if (r.rigidity) {
    out << "rigidity: " << (r.rigidity->non_isomorphic ? "not isomorphic" : "isomorphic") << " (N_a = " << r.rigidity->n_a
        << ", deg A = " << r.rigidity->deg_A << ")\n";
  }
  if (r.verification) {
    out << "verification: " << (r.verification->passed() ? "passed" : "FAILED: " + r.verification->first_failure)
        << " (grade bound " << r.verification->bounds.grade_bound << ", h bound "
        << r.verification->bounds.h_degree_bound << ")\n";
  }
  if (r.probe) {
    out << "probe (experimental): " << r.probe->generator_count << " generators " << list_text(r.probe->generator_names)
        << "\n";
  }
  std::vector<std::string> errs;
  for (const auto& e : r.errors) errs.push_back(e.stage + ": " + e.message);
  out << "errors: " << list_text(errs) << "\n";
  out << "warnings: " << list_text(r.warnings) << "\n";
  out << "complete: " << (r.complete ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace

std::string emit_report(const AnalysisReport& report, ReportFormat format) {
  if (format == ReportFormat::Json) return report_json(report).dump(2) + "\n";
  return report_text(report);
}

}  // namespace qgwa
