#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "cyclocert/bezout.hpp"
#include "cyclocert/decompose.hpp"
#include "cyclocert/report.hpp"

namespace cyclocert {

/// Contents of a certificate file. The JSON "kind" field selects the member:
///
///   {"kind": "decompose", "n": 6, "primes": [2, 3],
///    "phi": ["1", "-1", "1"], "cofactors": [["0", "-1"], ["1"]]}
///   {"kind": "bezout", "a": 3, "b": 2, "d": 1, "A": ["1"], "B": ["0", "-1"]}
///
/// Polynomials are arrays of decimal-string coefficients in ascending degree.
using Certificate = std::variant<DecomposeCertificate, BezoutCertificate>;

std::string serialize_certificate(const Certificate& cert);

/// Throws MalformedCertificate on invalid JSON, an unknown kind, missing or
/// mistyped fields, or non-decimal coefficients.
Certificate parse_certificate(std::string_view text);

void write_certificate(const std::filesystem::path& path, const Certificate& cert);
/// Throws MalformedCertificate when the file cannot be read or parsed.
Certificate read_certificate(const std::filesystem::path& path);

/// Dispatches to verify_certificate or verify_bezout.
CheckReport verify_any(const Certificate& cert);

} // namespace cyclocert
