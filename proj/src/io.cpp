#include "hball/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace hball {

using ojson = nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::pair<char, std::vector<Count>> parse_tagged(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.size() < 2 || text[1] != ':') throw ParseError("expected a prefix like 'h:' in '" + raw + "'");
  const char tag = text[0];
  std::vector<Count> out;
  std::stringstream ss(text.substr(2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string t = trim(item);
    Count v = 0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    if (!t.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (t.empty() || ec != std::errc() || ptr != last) throw ParseError("bad entry '" + t + "' in '" + raw + "'");
    out.push_back(v);
  }
  if (out.empty() || text.back() == ',') throw ParseError("missing entries in '" + raw + "'");
  return {tag, out};
}

}  // namespace

CountVector parse_vector(const std::string& text) {
  auto [tag, entries] = parse_tagged(text);
  const int d = static_cast<int>(entries.size()) - 1;
  switch (tag) {
    case 'h': return CountVector{Role::h, d, std::move(entries)};
    case 'g': return CountVector{Role::g, d, std::move(entries)};
    case 'f':
      if (entries[0] != 1) throw ParseError("an f-vector starts with f_{-1} = 1");
      return CountVector{Role::f, d, std::move(entries)};
    default: throw ParseError(std::string("unknown vector prefix '") + tag + "'");
  }
}

std::vector<Count> parse_degree_sequence(const std::string& text) {
  auto [tag, entries] = parse_tagged(text);
  if (tag != 'm') throw ParseError("a degree sequence uses the prefix 'm:'");
  return entries;
}

std::string format_vector(const CountVector& v) {
  std::string s(1, v.role == Role::h ? 'h' : v.role == Role::f ? 'f' : 'g');
  s += ':';
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

namespace {

ojson faces_json(const std::vector<Face>& fs) {
  ojson a = ojson::array();
  for (const Face& f : fs) a.push_back(f.vertices());
  return a;
}

std::vector<Face> faces_from(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be a list of integer lists");
  std::vector<Face> out;
  for (const auto& f : j) {
    if (!f.is_array()) throw ParseError(std::string(what) + " must be a list of integer lists");
    std::vector<int> v;
    for (const auto& x : f) {
      if (!x.is_number_integer() || x.get<long long>() < 0) throw ParseError("vertex labels are nonnegative integers");
      v.push_back(x.get<int>());
    }
    std::vector<int> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError("repeated vertex in a face");
    out.emplace_back(std::move(sorted));
  }
  return out;
}

}  // namespace

ojson complex_to_json(const SimplicialComplex& c, const ShellingCertificate* cert) {
  ojson j;
  j["dim"] = c.dim();
  j["facets"] = faces_json(c.facets());
  if (cert) j["certificate"] = ojson{{"order", faces_json(cert->order)}, {"restrictions", faces_json(cert->restrictions)}};
  return j;
}

ComplexFile complex_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("facets")) throw ParseError("complex document needs a 'facets' field");
  ComplexFile out;
  out.complex = SimplicialComplex(faces_from(j["facets"], "facets"));
  if (j.contains("dim") && (!j["dim"].is_number_integer() || j["dim"].get<int>() != out.complex.dim()))
    throw ParseError("'dim' does not match the facets");
  if (j.contains("certificate")) {
    const auto& c = j["certificate"];
    if (!c.is_object() || !c.contains("order") || !c.contains("restrictions"))
      throw ParseError("certificate needs 'order' and 'restrictions'");
    ShellingCertificate cert{faces_from(c["order"], "order"), faces_from(c["restrictions"], "restrictions")};
    if (cert.order.size() != cert.restrictions.size()) throw ParseError("certificate lists differ in length");
    out.certificate = std::move(cert);
  }
  return out;
}

ComplexFile read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return complex_from_json(j);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

ojson report_to_json(const ObstructionReport& r) {
  ojson j;
  j["verdict"] = to_string(r.verdict);
  j["stage"] = r.stage;
  j["certificate"] = r.certificate;
  return j;
}

}  // namespace hball
