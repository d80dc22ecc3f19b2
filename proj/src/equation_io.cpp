#include "quatsolve/equation_io.hpp"

#include <fstream>
#include <sstream>

namespace quatsolve {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::vector<Term> terms_from_json(const json& arr, const std::string& key) {
  if (!arr.is_array()) throw SchemaError("\"" + key + "\" must be an array");
  std::vector<Term> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = key + "[" + std::to_string(i) + "]";
    const json& t = arr[i];
    if (!t.is_object()) throw SchemaError(where + " must be an object");
    if (!t.contains("c") || !t.contains("b")) throw SchemaError(where + " needs fields \"c\" and \"b\"");
    out.push_back({quaternion_from_json(t.at("c"), where + ".c"), quaternion_from_json(t.at("b"), where + ".b")});
  }
  return out;
}

ordered_json terms_to_json(const std::vector<Term>& terms) {
  ordered_json arr = ordered_json::array();
  for (const auto& t : terms) {
    ordered_json o;
    o["c"] = quaternion_to_json(t.c);
    o["b"] = quaternion_to_json(t.b);
    arr.push_back(std::move(o));
  }
  return arr;
}

}  // namespace

// Adding +0.0 turns -0.0 into 0.0 so printed solutions read [1, 0, 0, 0].
ordered_json quaternion_to_json(const Quaternion& q) {
  return ordered_json::array({q.w + 0.0, q.x + 0.0, q.y + 0.0, q.z + 0.0});
}

Quaternion quaternion_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 4) throw SchemaError(where + " must be an array of 4 numbers");
  double v[4];
  for (std::size_t l = 0; l < 4; ++l) {
    if (!j[l].is_number()) throw SchemaError(where + " must be an array of 4 numbers");
    v[l] = j[l].get<double>();
  }
  return {v[0], v[1], v[2], v[3]};
}

ordered_json multivector_to_json(const Multivector& m) {
  ordered_json arr = ordered_json::array();
  for (double c : m.coeff) arr.push_back(c);
  return arr;
}

ordered_json to_json(const EquationFile& f) {
  ordered_json j;
  j["terms"] = terms_to_json(f.eq.plain_terms);
  if (f.eq.has_conjugate()) j["conj_terms"] = terms_to_json(f.eq.conj_terms);
  j["rhs"] = quaternion_to_json(f.eq.rhs);
  if (f.truth) j["truth"] = quaternion_to_json(*f.truth);
  return j;
}

EquationFile equation_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("equation must be a JSON object");
  EquationFile f;
  if (j.contains("terms")) f.eq.plain_terms = terms_from_json(j.at("terms"), "terms");
  if (j.contains("conj_terms")) f.eq.conj_terms = terms_from_json(j.at("conj_terms"), "conj_terms");
  if (f.eq.empty()) throw SchemaError("equation has no terms: \"terms\" and \"conj_terms\" are both empty or absent");
  if (!j.contains("rhs")) throw SchemaError("missing field \"rhs\"");
  f.eq.rhs = quaternion_from_json(j.at("rhs"), "rhs");
  if (j.contains("truth")) f.truth = quaternion_from_json(j.at("truth"), "truth");
  return f;
}

EquationFile read_equation_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw IoError(path.string() + ": not valid JSON: " + e.what());
  }
  return equation_from_json(j);
}

std::string dump_equation(const EquationFile& f) { return to_json(f).dump(2) + "\n"; }

}  // namespace quatsolve
