#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "hball/complex.hpp"
#include "hball/obstruction.hpp"

namespace hball {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "h:1,4,5", "f:1,3,3,1" or "g:1,2,-1"; d is inferred from the length.
CountVector parse_vector(const std::string& text);
/// "m:1,3,4", a degree sequence.
std::vector<Count> parse_degree_sequence(const std::string& text);
std::string format_vector(const CountVector& v);

struct ComplexFile {
  SimplicialComplex complex;
  std::optional<ShellingCertificate> certificate;
};

/// {"dim": d-1, "facets": [[...], ...], "certificate": {"order": ..., "restrictions": ...}}
nlohmann::ordered_json complex_to_json(const SimplicialComplex& c, const ShellingCertificate* cert = nullptr);
ComplexFile complex_from_json(const nlohmann::json& j);

ComplexFile read_complex_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

nlohmann::ordered_json report_to_json(const ObstructionReport& r);

}  // namespace hball
