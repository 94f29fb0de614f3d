#include "cyclocert/certificate_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cyclocert/errors.hpp"

namespace cyclocert {

namespace {

using nlohmann::json;

json poly_to_json(const IntPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) {
    arr.push_back(c.get_str());
  }
  return arr;
}

const json& field(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) {
    throw MalformedCertificate(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

std::uint64_t positive_field(const json& doc, const char* key) {
  const json& v = field(doc, key);
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0) {
    throw MalformedCertificate(std::string("field \"") + key + "\" must be a positive integer");
  }
  return v.get<std::uint64_t>();
}

IntPoly poly_from_json(const json& v, const std::string& where) {
  if (!v.is_array()) {
    throw MalformedCertificate(where + " must be an array of decimal strings");
  }
  std::vector<Integer> coeffs;
  coeffs.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) {
      throw MalformedCertificate(where + "[" + std::to_string(i) + "] is not a string");
    }
    const auto& s = v[i].get_ref<const std::string&>();
    try {
      auto one = detail::parse_integer_list(s, 0);
      if (one.size() != 1) {
        throw ParseError("expected one integer", 0);
      }
      coeffs.push_back(std::move(one.front()));
    } catch (const ParseError& e) {
      throw MalformedCertificate(where + "[" + std::to_string(i) + "]: " + e.what());
    }
  }
  return IntPoly(std::move(coeffs));
}

DecomposeCertificate decompose_from_json(const json& doc) {
  DecomposeCertificate c;
  c.n = positive_field(doc, "n");
  const json& primes = field(doc, "primes");
  if (!primes.is_array()) {
    throw MalformedCertificate("\"primes\" must be an array");
  }
  for (const auto& p : primes) {
    if (!p.is_number_unsigned()) {
      throw MalformedCertificate("\"primes\" entries must be positive integers");
    }
    c.primes.push_back(p.get<std::uint64_t>());
  }
  c.phi = poly_from_json(field(doc, "phi"), "phi");
  const json& cof = field(doc, "cofactors");
  if (!cof.is_array()) {
    throw MalformedCertificate("\"cofactors\" must be an array");
  }
  for (std::size_t i = 0; i < cof.size(); ++i) {
    c.cofactors.push_back(poly_from_json(cof[i], "cofactors[" + std::to_string(i) + "]"));
  }
  return c;
}

BezoutCertificate bezout_from_json(const json& doc) {
  BezoutCertificate c;
  c.a = positive_field(doc, "a");
  c.b = positive_field(doc, "b");
  c.d = positive_field(doc, "d");
  c.A = poly_from_json(field(doc, "A"), "A");
  c.B = poly_from_json(field(doc, "B"), "B");
  return c;
}

} // namespace

std::string serialize_certificate(const Certificate& cert) {
  json doc;
  if (const auto* dc = std::get_if<DecomposeCertificate>(&cert)) {
    doc["kind"] = "decompose";
    doc["n"] = dc->n;
    doc["primes"] = dc->primes;
    doc["phi"] = poly_to_json(dc->phi);
    json cof = json::array();
    for (const auto& h : dc->cofactors) {
      cof.push_back(poly_to_json(h));
    }
    doc["cofactors"] = std::move(cof);
  } else {
    const auto& bc = std::get<BezoutCertificate>(cert);
    doc["kind"] = "bezout";
    doc["a"] = bc.a;
    doc["b"] = bc.b;
    doc["d"] = bc.d;
    doc["A"] = poly_to_json(bc.A);
    doc["B"] = poly_to_json(bc.B);
  }
  return doc.dump(2) + "\n";
}

Certificate parse_certificate(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw MalformedCertificate(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw MalformedCertificate("certificate must be a JSON object");
  }
  const json& kind = field(doc, "kind");
  if (!kind.is_string()) {
    throw MalformedCertificate("\"kind\" must be a string");
  }
  const auto& k = kind.get_ref<const std::string&>();
  if (k == "decompose") {
    return decompose_from_json(doc);
  }
  if (k == "bezout") {
    return bezout_from_json(doc);
  }
  throw MalformedCertificate("unknown certificate kind \"" + k + "\"");
}

void write_certificate(const std::filesystem::path& path, const Certificate& cert) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot open " + path.string() + " for writing");
  }
  out << serialize_certificate(cert);
  if (!out) {
    throw Error("failed writing " + path.string());
  }
}

Certificate read_certificate(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw MalformedCertificate("cannot read " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_certificate(buf.str());
}

CheckReport verify_any(const Certificate& cert) {
  if (const auto* dc = std::get_if<DecomposeCertificate>(&cert)) {
    return verify_certificate(*dc);
  }
  return verify_bezout(std::get<BezoutCertificate>(cert));
}

} // namespace cyclocert
