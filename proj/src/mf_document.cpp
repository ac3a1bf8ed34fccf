#include "cubicmcm/mf_document.hpp"

#include <set>

#include <json.hpp>

#include "cubicmcm/error.hpp"

namespace cubicmcm {

using nlohmann::json;

namespace {

json encode_poly(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{"coefficient", c.to_document_string()}, {"exponents", e}});
  }
  return terms;
}

json encode_matrix(const PolyMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(encode_poly(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

[[noreturn]] void bad(const std::string& path, const std::string& msg) { throw ParseError(path + ": " + msg); }

void require_keys(const json& obj, const std::string& path, const std::set<std::string>& required,
                  const std::set<std::string>& optional) {
  if (!obj.is_object()) bad(path, "expected an object");
  for (const auto& key : required) {
    if (!obj.contains(key)) bad(path, "missing key '" + key + "'");
  }
  for (const auto& [key, value] : obj.items()) {
    if (required.count(key) == 0 && optional.count(key) == 0) bad(path, "unknown key '" + key + "'");
  }
}

const std::string& as_string(const json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get_ref<const std::string&>();
}

Scalar decode_scalar(const Field& field, const json& j, const std::string& path) {
  const std::string& text = as_string(j, path);
  try {
    return Scalar::parse(field, text);
  } catch (const ParseError& e) {
    bad(path, e.what());
  }
}

MultiPoly decode_poly(const Field& field, std::size_t nvars, const json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected a list of terms");
  MultiPoly p(field, nvars);
  std::set<Exponent> seen;
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string tpath = path + "/" + std::to_string(t);
    const json& term = j[t];
    require_keys(term, tpath, {"coefficient", "exponents"}, {});
    const Scalar c = decode_scalar(field, term["coefficient"], tpath + "/coefficient");
    if (c.is_zero()) bad(tpath, "zero coefficient");
    const json& ex = term["exponents"];
    if (!ex.is_array() || ex.size() != nvars) bad(tpath + "/exponents", "expected " + std::to_string(nvars) + " exponents");
    Exponent e(nvars);
    for (std::size_t v = 0; v < nvars; ++v) {
      if (!ex[v].is_number_unsigned() || ex[v].get<std::uint64_t>() > 1000000) {
        bad(tpath + "/exponents/" + std::to_string(v), "expected a nonnegative integer");
      }
      e[v] = ex[v].get<std::uint32_t>();
    }
    if (!seen.insert(e).second) bad(tpath, "repeated monomial");
    p.add_term(e, c);
  }
  return p;
}

PolyMatrix decode_matrix(const Field& field, std::size_t nvars, const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) bad(path, "expected a nonempty list of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) bad(path + "/0", "expected a nonempty row");
  PolyMatrix m(field, nvars, j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string rpath = path + "/" + std::to_string(r);
    if (!j[r].is_array() || j[r].size() != cols) bad(rpath, "rows must all have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = decode_poly(field, nvars, j[r][c], rpath + "/" + std::to_string(c));
  }
  return m;
}

std::vector<std::int64_t> decode_ints(const json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected a list of integers");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) bad(path + "/" + std::to_string(i), "expected an integer");
    out.push_back(j[i].get<std::int64_t>());
  }
  return out;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

MfDocument make_document(const MatrixFactorization& mf, std::optional<Scalar> psi, std::optional<std::string> note) {
  return MfDocument{mf.f.field(), default_variable_names(mf.f.nvars()), std::move(psi), mf, std::move(note)};
}

std::string encode_mf(const MfDocument& doc) {
  json j;
  j["format"] = std::string(kMfFormat);
  j["field"] = doc.field.descriptor();
  j["variables"] = doc.variables;
  if (doc.psi) j["psi"] = doc.psi->to_document_string();
  j["f"] = encode_poly(doc.mf.f);
  j["A"] = encode_matrix(doc.mf.A);
  j["B"] = encode_matrix(doc.mf.B);
  if (doc.mf.A.grading()) {
    j["grading"] = {{"rows", doc.mf.A.grading()->row_degrees}, {"cols", doc.mf.A.grading()->col_degrees}};
  }
  if (doc.note) j["note"] = *doc.note;
  return j.dump(2) + "\n";
}

MfDocument decode_mf(std::string_view text, bool verify) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    std::string msg = e.what();
    const auto colon = msg.find(": ", msg.find("parse error"));
    if (colon != std::string::npos) msg = msg.substr(colon + 2);
    throw ParseError(msg, line, col);
  }
  require_keys(j, "", {"format", "field", "variables", "f", "A", "B"}, {"psi", "grading", "note"});
  if (as_string(j["format"], "/format") != kMfFormat) {
    bad("/format", "unsupported format '" + j["format"].get<std::string>() + "'");
  }
  Field field = Field::rational();
  try {
    field = Field::parse(as_string(j["field"], "/field"));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    bad("/field", e.what());
  }
  const json& vars = j["variables"];
  if (!vars.is_array() || vars.empty()) bad("/variables", "expected a nonempty list of names");
  std::vector<std::string> variables;
  std::set<std::string> names;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const std::string& name = as_string(vars[i], "/variables/" + std::to_string(i));
    if (name.empty() || !names.insert(name).second) bad("/variables/" + std::to_string(i), "empty or repeated name");
    variables.push_back(name);
  }
  const std::size_t nvars = variables.size();
  std::optional<Scalar> psi;
  std::optional<std::string> note;
  if (j.contains("psi")) psi = decode_scalar(field, j["psi"], "/psi");
  if (j.contains("note")) note = as_string(j["note"], "/note");

  MultiPoly f = decode_poly(field, nvars, j["f"], "/f");
  PolyMatrix a = decode_matrix(field, nvars, j["A"], "/A");
  PolyMatrix b = decode_matrix(field, nvars, j["B"], "/B");
  if (j.contains("grading")) {
    const json& g = j["grading"];
    require_keys(g, "/grading", {"rows", "cols"}, {});
    Grading grading{decode_ints(g["rows"], "/grading/rows"), decode_ints(g["cols"], "/grading/cols")};
    if (grading.row_degrees.size() != a.rows() || grading.col_degrees.size() != a.cols()) {
      bad("/grading", "degree vectors do not match the shape of A");
    }
    if (!a.grading_consistent(grading)) {
      fail(ErrorKind::VerificationFailed, "grading does not fit the entries of A");
    }
    a.set_grading(grading);
  }
  MfDocument doc{field, std::move(variables), std::move(psi), MatrixFactorization{std::move(f), std::move(a), std::move(b)},
                 std::move(note)};

  if (verify) {
    const MfReport rep = verify_mf(doc.mf);
    if (!rep.ok()) {
      std::string msg;
      for (const auto& s : rep.failures) msg += (msg.empty() ? "" : "; ") + s;
      fail(ErrorKind::VerificationFailed, msg);
    }
    if (doc.psi) {
      if (nvars != 3 || !(hesse(*doc.psi).f == doc.mf.f)) {
        fail(ErrorKind::VerificationFailed, "f is not the Hesse cubic for psi = " + doc.psi->to_string());
      }
    }
  }
  return doc;
}

}  // namespace cubicmcm
