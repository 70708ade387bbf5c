#include "nlie/format.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json_io.hpp"

namespace nlie {

namespace detail {

json field_json(Field f) {
  if (f.is_rational()) return "Q";
  return json{{"p", f.modulus()}};
}

Field field_from_json(const json& j) {
  if (j.is_string()) {
    require(j.get<std::string>() == "Q", ErrorCode::parse,
            "field must be \"Q\" or {\"p\": prime}");
    return Field::rationals();
  }
  require(j.is_object() && j.size() == 1 && j.contains("p") &&
              j["p"].is_number_integer(),
          ErrorCode::parse, "field must be \"Q\" or {\"p\": prime}");
  auto p = j["p"].get<long long>();
  require(p > 1 && p < (1 << 16) && is_prime(static_cast<std::uint32_t>(p)),
          ErrorCode::parse, "field modulus " + std::to_string(p) + " is not a prime below 65536");
  return Field::prime(static_cast<std::uint32_t>(p));
}

json vector_json(std::span<const Scalar> v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

json subspace_json(const Subspace& s) {
  json rows = json::array();
  for (std::size_t r = 0; r < s.dim(); ++r) rows.push_back(vector_json(s.basis().row(r)));
  return json{{"dim", s.dim()}, {"ambient_dim", s.ambient_dim()}, {"basis", rows}};
}

json tuple_json(const IndexTuple& t) {
  json out = json::array();
  for (int i : t) out.push_back(i + 1);
  return out;
}

json algebra_json(const NLieAlgebra& l) {
  json doc;
  doc["format"] = "nlie-v1";
  doc["arity"] = l.arity();
  doc["dim"] = l.dim();
  doc["field"] = field_json(l.field());
  if (!l.labels().empty()) doc["labels"] = l.labels();
  json brackets = json::array();
  for (const auto& e : l.constants().entries()) {
    json val = json::object();
    for (int t = 0; t < l.dim(); ++t)
      if (!e.value[t].is_zero()) val[std::to_string(t + 1)] = e.value[t].to_string();
    brackets.push_back(json{{"on", tuple_json(e.on)}, {"val", val}});
  }
  doc["brackets"] = brackets;
  return doc;
}

}  // namespace detail

using detail::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse, std::string("invalid JSON: ") + e.what());
  }
}

Scalar scalar_from_json(const json& j, Field f) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>(), f);
  require(j.is_number_integer(), ErrorCode::parse, "scalar must be a text such as \"-3/2\"");
  return Scalar::from_int(f, j.get<long>());
}

int positive_int(const json& doc, const char* key) {
  require(doc.contains(key) && doc[key].is_number_integer(), ErrorCode::parse,
          std::string("missing integer field \"") + key + "\"");
  long long v = doc[key].get<long long>();
  require(v >= 1 && v <= 4096, ErrorCode::parse,
          std::string("field \"") + key + "\" out of range");
  return static_cast<int>(v);
}

}  // namespace

NLieAlgebra parse_algebra(std::string_view text) {
  json doc = parse_json(text);
  require(doc.is_object(), ErrorCode::parse, "algebra document must be a JSON object");
  require(doc.contains("format") && doc["format"] == "nlie-v1", ErrorCode::parse,
          "expected \"format\": \"nlie-v1\"");
  static const std::set<std::string> known = {"format", "arity", "dim", "field", "labels",
                                              "brackets"};
  for (auto it = doc.begin(); it != doc.end(); ++it)
    require(known.count(it.key()) > 0, ErrorCode::parse, "unknown field \"" + it.key() + "\"");

  int arity = positive_int(doc, "arity");
  int dim = positive_int(doc, "dim");
  require(arity >= 2, ErrorCode::parse, "arity must be at least 2");
  require(doc.contains("field"), ErrorCode::parse, "missing \"field\"");
  Field f = detail::field_from_json(doc["field"]);
  NLieAlgebra l(f, arity, dim);

  if (doc.contains("labels")) {
    const auto& labels = doc["labels"];
    require(labels.is_array() && static_cast<int>(labels.size()) == dim, ErrorCode::parse,
            "\"labels\" must be an array of " + std::to_string(dim) + " texts");
    std::vector<std::string> out;
    for (const auto& s : labels) {
      require(s.is_string(), ErrorCode::parse, "labels must be texts");
      out.push_back(s.get<std::string>());
    }
    l.set_labels(std::move(out));
  }

  require(doc.contains("brackets") && doc["brackets"].is_array(), ErrorCode::parse,
          "missing \"brackets\" array");
  std::set<IndexTuple> seen;
  for (const auto& b : doc["brackets"]) {
    require(b.is_object() && b.contains("on") && b["on"].is_array(), ErrorCode::parse,
            "each bracket needs an \"on\" array");
    for (auto it = b.begin(); it != b.end(); ++it)
      require(it.key() == "on" || it.key() == "val", ErrorCode::parse,
              "unknown bracket field \"" + it.key() + "\"");
    IndexTuple on;
    for (const auto& i : b["on"]) {
      require(i.is_number_integer(), ErrorCode::parse, "\"on\" entries must be integers");
      long long v = i.get<long long>();
      require(v >= 1 && v <= dim, ErrorCode::parse,
              "index " + std::to_string(v) + " out of range 1.." + std::to_string(dim));
      on.push_back(static_cast<int>(v - 1));
    }
    require(static_cast<int>(on.size()) == arity, ErrorCode::parse,
            "\"on\" tuple " + tuple_to_string(on) + " must have " + std::to_string(arity) +
                " indices");
    for (std::size_t i = 1; i < on.size(); ++i)
      require(on[i - 1] < on[i], ErrorCode::parse,
              "\"on\" tuple " + tuple_to_string(on) + " is not strictly increasing");
    require(seen.insert(on).second, ErrorCode::parse,
            "duplicate bracket " + tuple_to_string(on));

    Vector value = zero_vector(f, dim);
    if (b.contains("val")) {
      const auto& val = b["val"];
      require(val.is_object(), ErrorCode::parse, "\"val\" must be an object");
      for (auto it = val.begin(); it != val.end(); ++it) {
        const std::string& key = it.key();
        require(!key.empty() && key.size() <= 5 &&
                    std::all_of(key.begin(), key.end(), [](char c) { return c >= '0' && c <= '9'; }),
                ErrorCode::parse, "bad coordinate key \"" + key + "\"");
        int t = std::stoi(key);
        require(t >= 1 && t <= dim, ErrorCode::parse,
                "coordinate " + key + " out of range 1.." + std::to_string(dim));
        value[t - 1] = scalar_from_json(it.value(), f);
      }
    }
    l.set_entry(on, std::move(value));
  }
  return l;
}

std::string serialize_algebra(const NLieAlgebra& l) {
  return detail::algebra_json(l).dump(2) + "\n";
}

Subspace parse_subspace(std::string_view text, Field f) {
  json doc = parse_json(text);
  require(doc.is_object() && doc.contains("format") && doc["format"] == "nlie-subspace-v1",
          ErrorCode::parse, "expected \"format\": \"nlie-subspace-v1\"");
  int dim = positive_int(doc, "dim");
  require(doc.contains("rows") && doc["rows"].is_array(), ErrorCode::parse,
          "missing \"rows\" array");
  std::vector<Vector> rows;
  for (const auto& r : doc["rows"]) {
    require(r.is_array() && static_cast<int>(r.size()) == dim, ErrorCode::parse,
            "each row needs " + std::to_string(dim) + " entries");
    Vector v;
    for (const auto& x : r) v.push_back(scalar_from_json(x, f));
    rows.push_back(std::move(v));
  }
  return Subspace::span(f, dim, rows);
}

std::string serialize_subspace(const Subspace& s) {
  json rows = json::array();
  for (std::size_t r = 0; r < s.dim(); ++r) rows.push_back(detail::vector_json(s.basis().row(r)));
  json doc{{"format", "nlie-subspace-v1"}, {"dim", s.ambient_dim()}, {"rows", rows}};
  return doc.dump(2) + "\n";
}

Vector parse_vector(std::string_view text, Field f, std::size_t length) {
  Vector v;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    v.push_back(Scalar::parse(piece, f));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  require(v.size() == length, ErrorCode::parse,
          "vector has " + std::to_string(v.size()) + " coordinates, expected " +
              std::to_string(length));
  return v;
}

std::string field_to_text(Field f) { return f.to_string(); }

}  // namespace nlie
