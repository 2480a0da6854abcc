#include "qfcert/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "qfcert/serialize.hpp"

namespace qfcert::cli {

namespace {

using io::Json;
using io::to_json;

struct Options {
  std::string bound;
  std::string format = "json";
  std::uint64_t seed = 1;
  bool trace = false;
  SearchBound search;
};

struct Outcome {
  Json body;
  int code = kOk;
};

struct HypothesisFailure {
  Json body;
};

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw io::ParseError(std::string("payload is missing \"") + key + "\"");
  return j.at(key);
}

// A form given either as the whole payload or under `key`.
QForm form_arg(const Json& j, const char* key = "form") {
  if (j.is_object() && j.contains(key)) return io::parse_form(j.at(key));
  return io::parse_form(j);
}

Json evidence_json(const std::vector<LocalEvidence>& ev) {
  Json a = Json::array();
  for (const auto& e : ev) a.push_back(to_json(e, true));
  return a;
}

Outcome certificate_outcome(const QForm& phi, const CertificateResult& res, const Options& o) {
  if (const auto* nf = std::get_if<NotFound>(&res)) return {to_json(*nf)};
  const auto& cert = std::get<HypCertificate>(res);
  return {Json{{"result", "certificate"},
               {"form", to_json(phi)},
               {"certificate", to_json(cert, o.trace)},
               {"verified", verify_certificate(phi, cert)}}};
}

Outcome precondition(const PreconditionError& e) {
  return {Json{{"result", "hypothesis-failed"}, {"check", e.what()}}, kHypothesisFailed};
}

Outcome cmd_invariants(const Json& p, const Options&) {
  const QForm phi = form_arg(p);
  Json hasse = Json::object();
  for (const auto& v : relevant_places(phi)) hasse[v.to_string()] = hasse_invariant(phi, v);
  return {Json{{"dim", phi.dim()},
               {"disc", to_json(disc(phi))},
               {"signature", signature(phi)},
               {"hasse", hasse},
               {"witt_class", to_json(witt_class(phi))},
               {"form", phi.to_string()}}};
}

Outcome cmd_isotropic(const Json& p, const Options& o) {
  const QForm phi = form_arg(p);
  Json j{{"isotropic", is_isotropic(phi)}};
  if (!j["isotropic"].get<bool>())
    if (auto v = isotropy_obstruction(phi)) j["obstruction"] = to_json(*v);
  if (o.trace) j["trace"] = evidence_json(analyze_over(phi, ExtensionTower()).evidence);
  return {j};
}

Outcome cmd_witt(const Json& p, const Options& o) {
  const QForm phi = form_arg(p);
  ExtensionTower M;
  if (p.is_object() && p.contains("tower")) M = io::parse_tower(p.at("tower")).tower;
  const TowerAnalysis a = analyze_over(phi, M);
  Json j{{"witt_index", (phi.dim() - a.aniso_dim) / 2},
         {"aniso_dim", a.aniso_dim},
         {"hyperbolic", phi.dim() % 2 == 0 && a.aniso_dim == 0}};
  if (M.degree() == 1) j["aniso_class"] = to_json(witt_class(phi));
  else j["tower"] = to_json(M);
  if (o.trace) j["trace"] = evidence_json(a.evidence);
  return {j};
}

Outcome cmd_isometric(const Json& p, const Options&) {
  QForm a, b;
  if (p.is_array() && p.size() == 2) {
    a = io::parse_form(p[0]);
    b = io::parse_form(p[1]);
  } else {
    a = io::parse_form(field(p, "a"));
    b = io::parse_form(field(p, "b"));
  }
  return {Json{{"isometric", is_isometric(a, b)}, {"witt_equivalent", witt_equivalent(a, b)}}};
}

Outcome cmd_pfister_expand(const Json& p, const Options&) {
  const QForm phi = p.is_array() ? io::parse_form(Json{{"pfister", p}}) : form_arg(p);
  return {Json{{"form", to_json(phi)}, {"text", phi.to_string()}, {"dim", phi.dim()}}};
}

Outcome cmd_in_g(const Json& p, const Options&) {
  const QForm phi = form_arg(p);
  const Rat c = io::parse_rational(field(p, "c"));
  return {Json{{"in_G", in_G(phi, c)}, {"by_isometry", in_G_by_isometry(phi, c)}}};
}

Outcome cmd_in_in(const Json& p, const Options&) {
  const QForm phi = form_arg(p);
  const Json& n = field(p, "n");
  if (!n.is_number_integer()) throw io::ParseError("n must be an integer");
  return {Json{{"n", n}, {"in_In", in_In(phi, n.get<int>())}}};
}

Outcome cmd_quaternion(const Json& p, const Options&) {
  const QuaternionAlg Q = io::parse_quaternion(p);
  return {Json{{"quaternion", {to_json(Q.a), to_json(Q.b)}},
               {"norm_form", to_json(norm_form(Q))},
               {"split", is_split(Q)}}};
}

Outcome cmd_delta(const Json& p, const Options&) {
  const InvolutionAlgebra A = io::parse_inv_algebra(p);
  const DegreeIndex di = degree_index(A);
  const Discriminant d = involution_discriminant(A);
  return {Json{{"degree", di.degree},
               {"index", di.index},
               {"delta", {{"pfister", {to_json(A.q.a), to_json(A.q.b), to_json(disc(A.phi))}}}},
               {"delta_form", to_json(d.pfister3)},
               {"trivial", d.trivial}}};
}

Outcome cmd_reduce(const Json& p, const Options&) {
  const InvolutionAlgebra A = io::parse_inv_algebra(p);
  const QForm psi = reduce_to_form(A);
  return {Json{{"psi", to_json(psi)}, {"dim", psi.dim()}}};
}

Outcome cmd_lemma_beta(const Json& p, const Options& o) {
  const QForm phi = form_arg(p);
  const Rat a = io::parse_rational(field(p, "a"));
  try {
    const auto d = lemma_beta_search(phi, a, o.search);
    if (!d) return {to_json(NotFound{o.search, "quadratic"})};
    const SquareClass gen[] = {*d};
    const ExtensionTower L = make_tower(gen).tower;
    return {Json{{"result", "found"},
                 {"d", to_json(*d)},
                 {"tower", to_json(L)},
                 {"witt_index", witt_decompose(phi).witt_index},
                 {"witt_index_over", witt_index_over(phi, L)}}};
  } catch (const PreconditionError& e) {
    return precondition(e);
  }
}

Outcome cmd_lemma24(const Json& p, const Options& o) {
  const QForm pi = io::parse_form(field(p, "pi"));
  const QForm psi = io::parse_form(field(p, "psi"));
  const Rat c = io::parse_rational(field(p, "c"));
  try {
    return certificate_outcome(tensor(pi, psi), lemma24_certificate(pi, psi, c, o.search), o);
  } catch (const PreconditionError& e) {
    return precondition(e);
  }
}

Outcome cmd_thm4(const Json& p, const Options&) {
  const QForm phi = io::parse_form(field(p, "phi"));
  const QuaternionAlg Q = io::parse_quaternion(field(p, "q"));
  Json j = to_json(thm4_decompose(phi, Q));
  j["psi"] = to_json(tensor(phi, norm_form(Q)));
  return {j};
}

Outcome cmd_thm6(const Json& p, const Options& o) {
  const QForm phi = io::parse_form(field(p, "phi"));
  const QuaternionAlg Q = io::parse_quaternion(field(p, "q"));
  std::vector<Rat> cs;
  if (p.contains("multipliers")) {
    for (const auto& c : field(p, "multipliers")) cs.push_back(io::parse_rational(c));
  } else {
    cs = sample_multipliers(reduce_to_form({phi, Q}), 10, o.seed);
  }
  const PipelineReport r = thm6_pipeline(phi, Q, cs, o.search);
  return {to_json(r, o.trace), r.halted ? kHypothesisFailed : kOk};
}

Outcome cmd_verify_cert(const Json& p, const Options&) {
  auto check = [](const QForm& phi, const Json& cj) {
    const io::ParsedCertificate pc = io::parse_certificate(cj);
    return !pc.degenerate_tower && verify_certificate(phi, pc.cert);
  };
  if (p.is_object() && p.contains("results")) {
    const QForm psi = io::parse_form(field(p, "psi"));
    int checked = 0;
    bool all = true;
    for (const auto& r : p.at("results")) {
      if (!r.contains("certificate")) continue;
      ++checked;
      all = check(psi, r.at("certificate")) && all;
    }
    return {Json{{"valid", all}, {"checked", checked}}};
  }
  const QForm phi = io::parse_form(field(p, "form"));
  return {Json{{"valid", check(phi, field(p, "certificate"))}, {"checked", 1}}};
}

Outcome cmd_norm_member(const Json& p, const Options&) {
  const Rat c = io::parse_rational(field(p, "c"));
  if (p.contains("tower")) {
    const TowerBuild tb = io::parse_tower(p.at("tower"));
    Json j{{"norm_member", norm_member_tower(c, tb.tower)}, {"tower", to_json(tb.tower)}};
    if (tb.downgraded) j["downgraded"] = true;
    return {j};
  }
  return {Json{{"norm_member", norm_member(c, io::parse_square_class(field(p, "d")))}}};
}

using Handler = std::function<Outcome(const Json&, const Options&)>;

struct Verb {
  std::string name;
  Handler handler;
  const char* help;
};

const std::vector<Verb>& verbs() {
  static const std::vector<Verb> table = {
      {"invariants", cmd_invariants, "dim, disc, signature, Hasse invariants, Witt class"},
      {"isotropic", cmd_isotropic, "Hasse-Minkowski isotropy with a local obstruction"},
      {"witt", cmd_witt, "Witt index and anisotropic dimension, over Q or a tower"},
      {"isometric", cmd_isometric, "isometry and Witt equivalence of two forms"},
      {"pfister-expand", cmd_pfister_expand, "diagonal entries of a Pfister form"},
      {"in-g", cmd_in_g, "similarity factor test c in G(phi)"},
      {"in-in", cmd_in_in, "membership in I^n for n = 1..4"},
      {"quaternion", cmd_quaternion, "norm form and splitting of (a,b)"},
      {"delta", cmd_delta, "degree, index and discriminant of (A, sigma)"},
      {"reduce", cmd_reduce, "the form phi (x) n_Q attached to (A, sigma)"},
      {"lemma-beta", cmd_lemma_beta, "quadratic field raising the Witt index"},
      {"lemma24", cmd_lemma24, "hyperbolizing tower certificate for pi (x) psi and c"},
      {"thm4", cmd_thm4, "4-fold plus 3-fold Pfister decomposition"},
      {"thm6", cmd_thm6, "degree 12 index 2 pipeline with certificates"},
      {"verify-cert", cmd_verify_cert, "check a certificate or a thm6 report"},
      {"norm-member", cmd_norm_member, "norm membership for Q(sqrt d) or a tower"},
  };
  return table;
}

std::string read_payload(const std::string& arg) {
  if (arg == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw io::ParseError("cannot read payload file " + arg.substr(1));
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  return arg;
}

void emit_error(std::ostream& err, const std::string& kind, const std::string& msg) {
  err << Json{{"error", kind}, {"message", msg}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact quadratic form computations over Q and multiquadratic towers"};
  app.name("qfcert");
  Options o;
  app.add_option("--bound", o.bound, "Largest |d| tried by tower searches (default 10^6, or "
                                     "QFCERT_SEARCH_BOUND)");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "pretty"}));
  app.add_option("--seed", o.seed, "Seed for sampled multipliers");
  app.add_flag("--trace", o.trace, "Include per-place local evidence");
  app.require_subcommand(1);

  std::map<std::string, std::string> payloads;
  for (const auto& v : verbs()) {
    auto* sub = app.add_subcommand(v.name, v.help);
    sub->add_option("payload", payloads[v.name], "JSON payload, '-' for stdin, '@file'")->required();
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "usage", e.what());
    return kMalformed;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  const auto it = std::find_if(verbs().begin(), verbs().end(),
                               [&](const Verb& v) { return v.name == verb; });
  try {
    o.search = SearchBound::from_env();
    if (!o.bound.empty()) {
      Integer b;
      if (b.set_str(o.bound, 10) != 0 || b <= 0) throw io::ParseError("--bound must be positive");
      o.search.max_abs = b;
    }
    const Json payload = Json::parse(read_payload(payloads[verb]));
    const Outcome res = it->handler(payload, o);
    out << (o.format == "pretty" ? res.body.dump(2) : res.body.dump()) << "\n";
    return res.code;
  } catch (const Json::parse_error& e) {
    emit_error(err, "parse", e.what());
  } catch (const io::ParseError& e) {
    emit_error(err, "parse", e.what());
  } catch (const PreconditionError& e) {
    out << precondition(e).body.dump() << "\n";
    return kHypothesisFailed;
  } catch (const DomainError& e) {
    emit_error(err, "domain", e.what());
  } catch (const Json::exception& e) {
    emit_error(err, "parse", e.what());
  }
  return kMalformed;
}

}  // namespace qfcert::cli
