#include "catmag/io.hpp"

#include <fstream>
#include <sstream>

#include "catmag/errors.hpp"

namespace catmag::io {

namespace {

constexpr std::size_t kUnknown = std::string::npos;

[[noreturn]] void schema_error(const std::string& pointer, const std::string& what) {
  throw ParseError(pointer.empty() ? what : pointer + ": " + what, kUnknown);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string string_at(const Json& j, const std::string& where) {
  if (!j.is_string()) schema_error(where, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> string_array(const Json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(string_at(j[i], where + "/" + std::to_string(i)));
  return out;
}

Rational rational_at(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational(Integer(std::to_string(j.get<std::uint64_t>())))
                                  : Rational(j.get<std::int64_t>());
  }
  if (j.is_number()) schema_error(where, "decimal numbers are not allowed; use a \"p/q\" string");
  if (!j.is_string()) schema_error(where, "expected a rational string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    schema_error(where, e.what());
  }
}

std::string kind_of(const Json& j) {
  if (!j.is_object()) schema_error("", "expected a JSON object");
  return string_at(member(j, "kind", ""), "/kind");
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

}  // namespace

Matrix matrix_from_json(const Json& j) {
  const Json& entries = member(j, "entries", "");
  if (!entries.is_array()) schema_error("/entries", "expected an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string where = "/entries/" + std::to_string(i);
    const Json& row = entries[i];
    if (!row.is_array()) schema_error(where, "expected a row array");
    if (i > 0 && row.size() != rows.front().size()) {
      schema_error(where, "row has " + std::to_string(row.size()) + " entries, expected " +
                              std::to_string(rows.front().size()));
    }
    std::vector<Rational> values;
    for (std::size_t k = 0; k < row.size(); ++k) values.push_back(rational_at(row[k], where + "/" + std::to_string(k)));
    rows.push_back(std::move(values));
  }
  if (rows.empty()) {
    std::size_t cols = 0;
    if (auto it = j.find("cols"); it != j.end()) {
      if (!it->is_number_unsigned()) schema_error("/cols", "expected a non-negative integer");
      cols = it->get<std::size_t>();
    }
    return Matrix(0, cols);
  }
  return Matrix::from_rows(rows);
}

Poset poset_from_json(const Json& j) {
  std::vector<std::string> objects = string_array(member(j, "objects", ""), "/objects");
  std::vector<std::pair<std::string, std::string>> pairs;
  const Json& rel = member(j, "relations", "");
  if (!rel.is_array()) schema_error("/relations", "expected an array of pairs");
  for (std::size_t i = 0; i < rel.size(); ++i) {
    const std::string where = "/relations/" + std::to_string(i);
    if (!rel[i].is_array() || rel[i].size() != 2) schema_error(where, "expected a pair [a, b]");
    pairs.emplace_back(string_at(rel[i][0], where + "/0"), string_at(rel[i][1], where + "/1"));
  }
  try {
    return Poset::close(std::move(objects), pairs);
  } catch (const CategoryError& e) {
    schema_error("", e.what());
  }
}

CategorySpec category_spec_from_json(const Json& j) {
  CategorySpec s;
  s.objects = string_array(member(j, "objects", ""), "/objects");

  const Json& morphisms = member(j, "morphisms", "");
  if (!morphisms.is_array()) schema_error("/morphisms", "expected an array");
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    const std::string where = "/morphisms/" + std::to_string(i);
    const Json& m = morphisms[i];
    s.morphisms.push_back({string_at(member(m, "name", where), where + "/name"),
                           string_at(member(m, "src", where), where + "/src"),
                           string_at(member(m, "tgt", where), where + "/tgt")});
  }

  const Json& ids = member(j, "identities", "");
  if (!ids.is_object()) schema_error("/identities", "expected an object mapping objects to morphisms");
  for (auto it = ids.begin(); it != ids.end(); ++it) {
    s.identities.emplace_back(it.key(), string_at(it.value(), "/identities/" + it.key()));
  }

  const Json& comp = member(j, "composition", "");
  if (!comp.is_array()) schema_error("/composition", "expected an array of [g, f, h] triples");
  for (std::size_t i = 0; i < comp.size(); ++i) {
    const std::string where = "/composition/" + std::to_string(i);
    if (!comp[i].is_array() || comp[i].size() != 3) schema_error(where, "expected a triple [g, f, h]");
    s.composition.push_back({string_at(comp[i][0], where + "/0"), string_at(comp[i][1], where + "/1"),
                             string_at(comp[i][2], where + "/2")});
  }
  return s;
}

Document document_from_json(const Json& j) {
  const std::string kind = kind_of(j);
  if (kind == "matrix") return matrix_from_json(j);
  if (kind == "poset") return poset_from_json(j);
  if (kind == "category") {
    CategorySpec spec = category_spec_from_json(j);
    try {
      return FinCategory::validate(spec);
    } catch (const CategoryError& e) {
      schema_error("", e.what());
    }
  }
  schema_error("/kind", "unknown kind \"" + kind + "\" (expected matrix, poset or category)");
}

Document parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError("JSON syntax error at " + line_column(text, byte) + " (byte " +
                         std::to_string(byte) + ")",
                     byte);
  }
  return document_from_json(j);
}

Document load_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open file", kUnknown);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_document(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.position());
  }
}

Json to_json(const Matrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (const auto& x : m.row(i)) row.push_back(x.to_string());
    entries.push_back(std::move(row));
  }
  Json j{{"kind", "matrix"}, {"entries", std::move(entries)}};
  if (m.rows() == 0 && m.cols() > 0) j["cols"] = m.cols();
  return j;
}

Json to_json(const Poset& p) {
  Json relations = Json::array();
  for (const auto& [a, b] : p.covers()) relations.push_back(Json::array({p.objects()[a], p.objects()[b]}));
  return Json{{"kind", "poset"}, {"objects", p.objects()}, {"relations", std::move(relations)}};
}

Json to_json(const FinCategory& c) {
  const CategorySpec s = c.spec();
  Json morphisms = Json::array();
  for (const auto& m : s.morphisms) morphisms.push_back(Json{{"name", m.name}, {"src", m.src}, {"tgt", m.tgt}});
  Json ids = Json::object();
  for (const auto& [o, m] : s.identities) ids[o] = m;
  Json comp = Json::array();
  for (const auto& e : s.composition) comp.push_back(Json::array({e.g, e.f, e.h}));
  return Json{{"kind", "category"},
              {"objects", s.objects},
              {"morphisms", std::move(morphisms)},
              {"identities", std::move(ids)},
              {"composition", std::move(comp)}};
}

Json to_json(const std::vector<std::string>& names, const std::vector<Rational>& values) {
  Json j = Json::object();
  for (std::size_t i = 0; i < values.size(); ++i) j[names.at(i)] = values[i].to_string();
  return j;
}

Json to_json(const MagnitudeReport& r) {
  auto vector_or_null = [&](const std::optional<std::vector<Rational>>& v) -> Json {
    return v ? to_json(r.objects, *v) : Json(nullptr);
  };
  return Json{{"kind", "magnitude_report"},
              {"n", r.n},
              {"objects", r.objects},
              {"rank", r.rank},
              {"has_weighting", r.has_weighting},
              {"has_coweighting", r.has_coweighting},
              {"has_magnitude", r.has_magnitude},
              {"magnitude", r.magnitude ? Json(r.magnitude->to_string()) : Json(nullptr)},
              {"generalized_magnitude", r.generalized_magnitude.to_string()},
              {"weighting", vector_or_null(r.weighting)},
              {"coweighting", vector_or_null(r.coweighting)},
              {"pseudo_mobius", to_json(r.pseudo_mobius)},
              {"mobius", r.mobius ? to_json(*r.mobius) : Json(nullptr)}};
}

Json to_json(const Document& d) {
  return std::visit([](const auto& value) { return to_json(value); }, d);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace catmag::io
