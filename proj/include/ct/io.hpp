#pragma once

#include <string>
#include <variant>

#include "json.hpp"

#include "ct/instance.hpp"
#include "ct/kkm.hpp"
#include "ct/oracle.hpp"
#include "ct/piercing.hpp"
#include "ct/transversal.hpp"

namespace ct {

using Json = nlohmann::ordered_json;

inline constexpr const char* kInstanceVersion = "ct-instance/1";
inline constexpr const char* kCertificateVersion = "ct-certificate/1";

/// Throws ParseError (syntax or missing/mistyped field, with its location)
/// or ValidationError (geometry invariants, such as CCW vertex order).
ColoredInstance parse_instance(const std::string& text);
ColoredInstance instance_from_json(const Json& doc);
Json instance_to_json(const ColoredInstance& inst);

Json body_to_json(const Body& k);
Body body_from_json(const Json& j, const std::string& where = "body");

Json point_json(Point p);
Json line_json(const Line& l);

using AnyCertificate = std::variant<PiercingCertificate, KkmCertificate, SweepOutcome>;

Json certificate_json(const PiercingCertificate& c);
Json certificate_json(const KkmCertificate& c);
Json certificate_json(const SweepOutcome& c);
AnyCertificate parse_certificate(const Json& doc);

/// Re-checks a certificate of any kind against the instance.
Verification verify_any(const AnyCertificate& c, const ColoredInstance& inst, const Tolerance& tol = {});
/// True when the certificate claims a result (not Unresolved).
bool is_certified(const AnyCertificate& c);

Json fuzz_report_json(const FuzzReport& r);

}  // namespace ct
