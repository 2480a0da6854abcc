#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qfcert/similitude.hpp"

namespace qfcert::io {

using Json = nlohmann::ordered_json;

/// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integers as JSON numbers when they fit in 64 bits, else "p/q" strings.
Json to_json(const Rat& r);
Json to_json(const SquareClass& s);
/// JSON integer, or a string "p", "p/q".
Rat parse_rational(const Json& j);
Rat parse_rational(const std::string& text);
SquareClass parse_square_class(const Json& j);

/// Form descriptors: {"diag":[..]}, {"pfister":[..]}, {"tensor":[f,..]},
/// {"sum":[f,..]}, {"scale":[c,f]}, or text "<a,b,..>" / "<<a,..>>".
QForm parse_form(const Json& j);
QForm parse_form_text(const std::string& text);
Json to_json(const QForm& phi);

/// {"tower":[d1,d2]}, a bare array, or text "Q(sqrt d1, sqrt d2)".
TowerBuild parse_tower(const Json& j);
TowerBuild parse_tower_text(const std::string& text);
Json to_json(const ExtensionTower& M);

/// [a,b] or {"quaternion":[a,b]}.
QuaternionAlg parse_quaternion(const Json& j);
Json to_json(const QuaternionAlg& Q);
/// {"inv_algebra":{"phi":F,"q":[a,b]}} or {"phi":F,"q":[a,b]}.
InvolutionAlgebra parse_inv_algebra(const Json& j);

Json to_json(const Place& v);
Json to_json(const LocalEvidence& ev, bool trace);
Json to_json(const WittClassQ& w);

inline constexpr const char* kCertificateSchema = "qfcert.hypcert/1";
Json to_json(const HypCertificate& cert, bool trace = false);
/// The tower is returned with its downgrade flag so callers can reject
/// degenerate towers instead of silently shrinking them.
struct ParsedCertificate {
  HypCertificate cert;
  bool degenerate_tower = false;
};
ParsedCertificate parse_certificate(const Json& j);

Json to_json(const SearchBound& b);
Json to_json(const NotFound& nf);
Json to_json(const PfisterDecomposition& d);
Json to_json(const PipelineReport& r, bool trace = false);

}  // namespace qfcert::io
