#include "isoconj/io.hpp"

#include "isoconj/error.hpp"
#include "isoconj/tower.hpp"

namespace isoconj {

Json to_json(Level level) {
  Json j;
  j["p"] = level->characteristic();
  j["degree"] = level->degree();
  if (!level->is_prime_field()) {
    Json poly = Json::array();
    for (const auto& c : level->defining_polynomial()) poly.push_back(to_json(c));
    j["defining_poly"] = std::move(poly);
    j["parent"] = to_json(level->parent());
  }
  return j;
}

Json to_json(const FieldElement& x) {
  if (x.level()->is_prime_field()) return x.coefficients()[0];
  Json a = Json::array();
  for (auto c : x.coefficients()) a.push_back(c);
  return a;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Polynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_json(c));
  return a;
}

Json to_json(const Subspace& w) {
  // basis vectors as rows, one per spanning vector
  return to_json(w.basis.transpose());
}

Json to_json(const BilinearSpace& v) {
  return {{"kind", std::string(to_string(v.kind()))}, {"gram", to_json(v.gram())}, {"field", to_json(v.level())}};
}

Json to_json(const ElementaryDivisorSet& d) {
  Json a = Json::array();
  for (const auto& e : d.entries) a.push_back({{"eigenvalue", to_json(e.eigenvalue)}, {"size", e.size}});
  return a;
}

Json to_json(const JordanPair& jp) {
  return {{"semisimple", to_json(jp.semisimple)},
          {"unipotent", to_json(jp.unipotent)},
          {"semisimple_poly", to_json(jp.semisimple_poly)},
          {"unipotent_poly", to_json(jp.unipotent_poly)}};
}

Json to_json(const PrimaryDecomposition& pd) {
  Json standard = Json::array();
  for (const auto& s : pd.standard) {
    standard.push_back({{"lambda", to_json(s.lambda)},
                        {"lambda_inv", to_json(s.lambda_inv)},
                        {"v_lambda", to_json(s.v_lambda)},
                        {"v_lambda_inv", to_json(s.v_lambda_inv)},
                        {"gram", to_json(s.gram)}});
  }
  return {{"plus", {{"basis", to_json(pd.plus.space)}, {"gram", to_json(pd.plus.gram)}}},
          {"minus", {{"basis", to_json(pd.minus.space)}, {"gram", to_json(pd.minus.gram)}}},
          {"standard", std::move(standard)}};
}

Json to_json(const Sl2Triple& t) { return {{"e", to_json(t.e)}, {"h", to_json(t.h)}, {"f", to_json(t.f)}}; }

Json to_json(const IrreducibleSummand& s) {
  return {{"basis", to_json(s.space)}, {"weight", s.highest_weight}, {"class", std::string(to_string(s.restriction))}};
}

Json to_json(const UnipotentOrthogonalDecomposition& d) {
  Json ind = Json::array();
  for (const auto& u : d.indecomposables) ind.push_back(to_json(u));
  Json pairs = Json::array();
  for (const auto& p : d.standard_pairs) pairs.push_back(Json::array({to_json(p.first), to_json(p.second)}));
  return {{"indecomposables", std::move(ind)}, {"standard_pairs", std::move(pairs)}};
}

Json to_json(const ConjugacyVerdict& v) {
  Json trace = Json::array();
  for (const auto& e : v.case_trace) trace.push_back({{"component", e.component}, {"case", std::string(to_string(e.tag))}});
  Json j;
  j["conjugate"] = v.conjugate;
  if (v.witness) j["witness"] = to_json(*v.witness);
  j["level"] = to_json(v.level);
  j["divisors_S"] = to_json(v.divisors_s);
  j["divisors_T"] = to_json(v.divisors_t);
  j["case_trace"] = std::move(trace);
  return j;
}

const Matrix& ProblemFile::op(std::string_view name) const {
  for (const auto& [n, m] : operators)
    if (n == name) return m;
  throw Error(ErrorCode::ParseError, "operators." + std::string(name) + ": no such operator");
}

namespace {

[[noreturn]] void parse_fail(const std::string& path, const std::string& reason) {
  throw Error(ErrorCode::ParseError, path + ": " + reason);
}

std::int64_t as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) parse_fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

FieldElement parse_element(Level l, const Json& j, const std::string& path) {
  if (j.is_number_integer()) return l->from_int(j.get<std::int64_t>());
  if (!j.is_array()) parse_fail(path, "expected an integer or coefficient array");
  if (j.size() > l->degree()) parse_fail(path, "more coefficients than the field degree");
  std::vector<std::int64_t> cs;
  for (std::size_t i = 0; i < j.size(); ++i) cs.push_back(as_int(j[i], path + "[" + std::to_string(i) + "]"));
  return l->from_coefficients(cs);
}

Matrix parse_matrix(Level l, const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) parse_fail(path, "expected a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) parse_fail(path + "[0]", "expected a non-empty row");
  const std::size_t cols = j[0].size();
  Matrix m(l, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rp = path + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != cols) parse_fail(rp, "ragged row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_element(l, j[r][c], rp + "[" + std::to_string(c) + "]");
  }
  return m;
}

Level parse_level(const Json& doc) {
  if (!doc.contains("p")) parse_fail("p", "missing");
  const std::int64_t p = as_int(doc["p"], "p");
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) parse_fail("p", "not a prime");
  Level l;
  try {
    l = make_prime_field(static_cast<std::uint64_t>(p));
  } catch (const Error& e) {
    parse_fail("p", e.what());
  }
  if (!doc.contains("extension")) return l;
  const Json& ext = doc["extension"];
  if (!ext.is_object()) parse_fail("extension", "expected an object");
  try {
    if (ext.contains("degree")) {
      const std::int64_t d = as_int(ext["degree"], "extension.degree");
      if (d < 1 || d > 64) parse_fail("extension.degree", "degree out of range");
      return extend(l, static_cast<std::size_t>(d));
    }
    if (ext.contains("defining_poly")) {
      const Json& dp = ext["defining_poly"];
      if (!dp.is_array() || dp.size() < 2) parse_fail("extension.defining_poly", "expected a coefficient array");
      std::vector<FieldElement> cs;
      for (std::size_t i = 0; i < dp.size(); ++i)
        cs.push_back(l->from_int(as_int(dp[i], "extension.defining_poly[" + std::to_string(i) + "]")));
      const Polynomial poly(l, std::move(cs));
      if (!poly.is_monic()) parse_fail("extension.defining_poly", "not monic");
      return extend_with(poly);
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    parse_fail("extension", e.what());
  }
  parse_fail("extension", "expected degree or defining_poly");
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail("$", e.what());
  }
  return problem_from_json(doc);
}

ProblemFile problem_from_json(const Json& doc) {
  if (!doc.is_object()) parse_fail("$", "expected an object");
  const Level l = parse_level(doc);
  if (!doc.contains("form") || !doc["form"].is_object()) parse_fail("form", "missing or not an object");
  const Json& form = doc["form"];
  if (!form.contains("kind") || !form["kind"].is_string()) parse_fail("form.kind", "missing or not a string");
  const std::string kind = form["kind"].get<std::string>();
  FormKind fk;
  if (kind == "symmetric") {
    fk = FormKind::Symmetric;
  } else if (kind == "symplectic") {
    fk = FormKind::Symplectic;
  } else {
    parse_fail("form.kind", "expected \"symmetric\" or \"symplectic\"");
  }
  if (!form.contains("gram")) parse_fail("form.gram", "missing");
  const Matrix gram = parse_matrix(l, form["gram"], "form.gram");
  if (!gram.is_square()) parse_fail("form.gram", "not square");
  const auto cls = classify_form(gram);
  if (!cls.valid()) parse_fail("form.gram", std::string(to_string(*cls.defect)));
  if (*cls.kind != fk) parse_fail("form.gram", "Gram matrix is " + std::string(to_string(*cls.kind)) + ", not " + kind);
  const std::uint64_t p = l->characteristic();
  if (p == 2 || p <= gram.rows()) {
    throw Error(ErrorCode::GateError,
                "characteristic " + std::to_string(p) + " must be odd and exceed the dimension " +
                    std::to_string(gram.rows()));
  }
  ProblemFile out{l, BilinearSpace(gram, fk), {}};
  if (doc.contains("operators")) {
    if (!doc["operators"].is_object()) parse_fail("operators", "expected an object");
    for (const auto& [name, value] : doc["operators"].items()) {
      const std::string path = "operators." + name;
      Matrix m = parse_matrix(l, value, path);
      if (m.rows() != gram.rows() || m.cols() != gram.rows()) parse_fail(path, "dimension does not match the form");
      out.operators.emplace_back(name, std::move(m));
    }
  }
  return out;
}

Json serialize_problem(const ProblemFile& problem) {
  Json j;
  const Level l = problem.level;
  j["p"] = l->characteristic();
  if (!l->is_prime_field()) {
    Json poly = Json::array();
    for (const auto& c : l->defining_polynomial()) poly.push_back(to_json(c));
    j["extension"] = {{"defining_poly", std::move(poly)}};
  }
  j["form"] = {{"kind", std::string(to_string(problem.space.kind()))}, {"gram", to_json(problem.space.gram())}};
  Json ops = Json::object();
  for (const auto& [name, m] : problem.operators) ops[name] = to_json(m);
  j["operators"] = std::move(ops);
  return j;
}

}  // namespace isoconj
