#pragma once

// JSON encoding of engine values and problem files. Prime-field elements are
// integers in [0, p); extension elements are flat coefficient arrays over
// GF(p), least significant first.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "isoconj/conjugacy.hpp"

namespace isoconj {

using Json = nlohmann::ordered_json;

Json to_json(Level level);
Json to_json(const FieldElement& x);
Json to_json(const Matrix& m);
Json to_json(const Polynomial& p);
Json to_json(const Subspace& w);
Json to_json(const BilinearSpace& v);
Json to_json(const ElementaryDivisorSet& d);
Json to_json(const JordanPair& jp);
Json to_json(const PrimaryDecomposition& pd);
Json to_json(const Sl2Triple& t);
Json to_json(const IrreducibleSummand& s);
Json to_json(const UnipotentOrthogonalDecomposition& d);
Json to_json(const ConjugacyVerdict& v);

struct ProblemFile {
  Level level;
  BilinearSpace space;
  std::vector<std::pair<std::string, Matrix>> operators;  // in document order

  /// Throws ParseError naming the missing operator.
  const Matrix& op(std::string_view name) const;
};

/// Validates a problem document. Throws ParseError ("<path>: <reason>") and
/// GateError when p is even or p <= dim.
ProblemFile parse_problem(std::string_view text);
ProblemFile problem_from_json(const Json& doc);

/// Canonical document: {p, extension?, form, operators} with reduced entries.
Json serialize_problem(const ProblemFile& problem);

}  // namespace isoconj
