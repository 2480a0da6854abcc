#include "qfcert/serialize.hpp"

#include <algorithm>
#include <cctype>

namespace qfcert::io {

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  return out;
}

SquareClass nonzero_class(const Rat& r) {
  if (r == 0) throw ParseError("zero entry where a nonzero value is required");
  return squarefree_rep(r);
}

std::vector<SquareClass> parse_class_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
  std::vector<SquareClass> out;
  for (const auto& x : j) out.push_back(parse_square_class(x));
  return out;
}

std::vector<SquareClass> split_classes(const std::string& body) {
  std::vector<SquareClass> out;
  if (body.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = body.find(',', start);
    out.push_back(nonzero_class(parse_rational(body.substr(start, comma - start))));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Json class_array(const std::vector<SquareClass>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(to_json(s));
  return a;
}

}  // namespace

Json to_json(const Rat& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return Json(r.get_num().get_si());
  return Json(r.get_str());
}

Json to_json(const SquareClass& s) { return to_json(Rat(s.value())); }

Rat parse_rational(const std::string& text) {
  const std::string t = strip_spaces(text);
  if (t.empty()) throw ParseError("empty rational");
  const std::size_t first = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  const std::size_t slash = t.find('/');
  auto digits = [&](std::size_t from, std::size_t to) {
    return from < to && std::all_of(t.begin() + from, t.begin() + to,
                                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  const bool ok = slash == std::string::npos
                      ? digits(first, t.size())
                      : digits(first, slash) && digits(slash + 1, t.size());
  if (!ok) throw ParseError("malformed rational '" + text + "'");
  Rat r;
  r.set_str(t[0] == '+' ? t.substr(1) : t, 10);
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

Rat parse_rational(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return parse_rational(std::to_string(j.get<std::uint64_t>()));
    return Rat(j.get<long>());
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected an exact rational (integer or \"p/q\" string), got " + j.dump());
}

SquareClass parse_square_class(const Json& j) { return nonzero_class(parse_rational(j)); }

QForm parse_form_text(const std::string& text) {
  const std::string t = strip_spaces(text);
  if (t.size() >= 4 && t.rfind("<<", 0) == 0 && t.substr(t.size() - 2) == ">>") {
    const auto slots = split_classes(t.substr(2, t.size() - 4));
    if (slots.size() > 4) throw ParseError("Pfister forms take at most 4 slots");
    return pfister(slots);
  }
  if (t.size() >= 2 && t.front() == '<' && t.back() == '>')
    return QForm(split_classes(t.substr(1, t.size() - 2)));
  throw ParseError("malformed form text '" + text + "'");
}

QForm parse_form(const Json& j) {
  if (j.is_string()) return parse_form_text(j.get<std::string>());
  if (!j.is_object() || j.size() != 1) throw ParseError("form descriptor must have exactly one key");
  const auto& [key, val] = *j.items().begin();
  if (key == "diag") return QForm(parse_class_list(val, "diag"));
  if (key == "pfister") {
    const auto slots = parse_class_list(val, "pfister");
    if (slots.size() > 4) throw ParseError("Pfister forms take at most 4 slots");
    return pfister(slots);
  }
  if (key == "tensor" || key == "sum") {
    if (!val.is_array() || val.empty()) throw ParseError(key + ": expected a nonempty array");
    QForm acc = parse_form(val[0]);
    for (std::size_t i = 1; i < val.size(); ++i)
      acc = key == "tensor" ? tensor(acc, parse_form(val[i])) : orth_sum(acc, parse_form(val[i]));
    return acc;
  }
  if (key == "scale") {
    if (!val.is_array() || val.size() != 2) throw ParseError("scale: expected [c, form]");
    return scale(parse_square_class(val[0]), parse_form(val[1]));
  }
  throw ParseError("unknown form descriptor '" + key + "'");
}

Json to_json(const QForm& phi) { return Json{{"diag", class_array(phi.entries())}}; }

TowerBuild parse_tower_text(const std::string& text) {
  const std::string t = strip_spaces(text);
  if (t == "Q") return make_tower(std::span<const SquareClass>());
  if (t.size() < 3 || t.rfind("Q(", 0) != 0 || t.back() != ')')
    throw ParseError("malformed tower text '" + text + "'");
  std::vector<SquareClass> gens;
  const std::string body = t.substr(2, t.size() - 3);
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = body.find(',', start);
    const std::string item = body.substr(start, comma - start);
    if (item.rfind("sqrt", 0) != 0) throw ParseError("malformed tower generator '" + item + "'");
    gens.push_back(nonzero_class(parse_rational(item.substr(4))));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return make_tower(gens);
}

TowerBuild parse_tower(const Json& j) {
  if (j.is_string()) return parse_tower_text(j.get<std::string>());
  if (j.is_object() && j.contains("tower")) return parse_tower(j.at("tower"));
  return make_tower(parse_class_list(j, "tower"));
}

Json to_json(const ExtensionTower& M) { return Json{{"tower", class_array(M.generators())}}; }

QuaternionAlg parse_quaternion(const Json& j) {
  if (j.is_object() && j.contains("quaternion")) return parse_quaternion(j.at("quaternion"));
  if (!j.is_array() || j.size() != 2) throw ParseError("quaternion: expected [a, b]");
  return {parse_square_class(j[0]), parse_square_class(j[1])};
}

Json to_json(const QuaternionAlg& Q) { return Json{{"quaternion", {to_json(Q.a), to_json(Q.b)}}}; }

InvolutionAlgebra parse_inv_algebra(const Json& j) {
  if (j.is_object() && j.contains("inv_algebra")) return parse_inv_algebra(j.at("inv_algebra"));
  if (!j.is_object() || !j.contains("phi") || !j.contains("q"))
    throw ParseError("inv_algebra: expected {\"phi\": form, \"q\": [a, b]}");
  return {parse_form(j.at("phi")), parse_quaternion(j.at("q"))};
}

Json to_json(const Place& v) { return Json(v.to_string()); }

Json to_json(const LocalEvidence& ev, bool trace) {
  Json j{{"place", to_json(ev.place)},
         {"completion", ev.completion.to_string()},
         {"multiplicity", ev.multiplicity},
         {"local_verdict", ev.aniso_dim == 0 ? "hyperbolic" : "not-hyperbolic"},
         {"aniso_dim", ev.aniso_dim}};
  if (trace) {
    j["e"] = ev.completion.e();
    j["f"] = ev.completion.f();
    j["dim"] = ev.cls.dim;
    j["disc_class"] = to_json(Rat(ev.cls.disc.rep));
    j["hasse"] = ev.cls.hasse;
    if (ev.cls.signature) j["signature"] = *ev.cls.signature;
  }
  return j;
}

Json to_json(const WittClassQ& w) {
  Json places = Json::array();
  for (const auto& v : w.hasse_minus_places) places.push_back(to_json(v));
  return Json{{"dim_parity", w.dim_parity},
              {"disc", to_json(w.disc)},
              {"signature", w.signature},
              {"hasse_minus_places", places}};
}

Json to_json(const HypCertificate& cert, bool trace) {
  Json ev = Json::array();
  for (const auto& e : cert.evidence) ev.push_back(to_json(e, trace));
  return Json{{"schema", kCertificateSchema},
              {"multiplier", to_json(cert.multiplier)},
              {"tower", to_json(cert.tower)},
              {"degree", cert.tower.degree()},
              {"square_adjustment", to_json(cert.square_adjustment)},
              {"evidence", ev}};
}

ParsedCertificate parse_certificate(const Json& j) {
  if (!j.is_object()) throw ParseError("certificate: expected an object");
  if (j.value("schema", std::string()) != kCertificateSchema)
    throw ParseError(std::string("certificate: schema must be ") + kCertificateSchema);
  for (const char* key : {"multiplier", "tower", "square_adjustment"})
    if (!j.contains(key)) throw ParseError(std::string("certificate: missing ") + key);
  const TowerBuild tb = parse_tower(j.at("tower"));
  ParsedCertificate out;
  out.cert.multiplier = parse_square_class(j.at("multiplier"));
  out.cert.tower = tb.tower;
  out.cert.square_adjustment = parse_rational(j.at("square_adjustment"));
  out.degenerate_tower = tb.downgraded;
  return out;
}

Json to_json(const SearchBound& b) {
  return Json{{"max_abs", to_json(Rat(b.max_abs))}, {"max_prime_factors", b.max_prime_factors}};
}

Json to_json(const NotFound& nf) {
  return Json{{"result", "not-found-within-bounds"}, {"step", nf.step}, {"bound", to_json(nf.bound)}};
}

Json to_json(const PfisterDecomposition& d) {
  return Json{{"scale4", to_json(d.scale4)},
              {"slots4", class_array(d.slots4)},
              {"scale3", to_json(d.scale3)},
              {"slots3", class_array(d.slots3)},
              {"reassembled", to_json(d.reassemble())},
              {"witt_equivalent", d.verified}};
}

Json to_json(const PipelineReport& r, bool trace) {
  Json results = Json::array();
  for (const auto& m : r.results) {
    Json e{{"c", to_json(m.c)}, {"status", m.status}};
    if (m.certificate) {
      e["certificate"] = to_json(*m.certificate, trace);
      e["verified"] = m.verified;
    }
    if (m.not_found) e["bound"] = to_json(m.not_found->bound);
    results.push_back(std::move(e));
  }
  Json checks{{"degree", r.degree},
              {"index", r.index},
              {"delta", {{"pfister", class_array({r.q.a, r.q.b, disc(r.phi)})},
                         {"trivial", r.delta.trivial}}},
              {"psi_in_I4", r.psi_in_I4}};
  Json j{{"input", {{"phi", to_json(r.phi)}, {"q", {to_json(r.q.a), to_json(r.q.b)}}}},
         {"checks", checks},
         {"result", r.halted ? "halted" : "ok"}};
  if (r.halted) j["failed_check"] = *r.halted;
  j["psi"] = to_json(r.psi);
  j["results"] = results;
  return j;
}

}  // namespace qfcert::io
