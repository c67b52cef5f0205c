#pragma once

// JSON encodings used by the command-line tool. Malformed input raises
// ParseError.

#include <string>
#include <string_view>

#include "json.hpp"

#include "quatla/baston.hpp"
#include "quatla/exterior.hpp"
#include "quatla/fields.hpp"
#include "quatla/moore.hpp"

namespace quatla::json_io {

using nlohmann::json;

json parse(std::string_view text);

Quaternion quaternion_from(const json& j);
json to_json(const Quaternion& q);

/// {"rows": p, "cols": m, "data": [[w,x,y,z], ...]} row-major.
QMatrix qmatrix_from(const json& j);
json to_json(const QMatrix& m);

/// {"rows": .., "cols": .., "re": [...], "im": [...]}.
CMatrix cmatrix_from(const json& j);
json to_json(const CMatrix& m);

/// {"n": n, "grade": k, "terms": [{"idx": [...], "re": .., "im": ..}]}.
Form form_from(const json& j);
json to_json(const Form& f);

/// {"vars": 4n, "terms": [{"exp": [...], "re": .., "im": ..}]}.
Polynomial polynomial_from(const json& j);
json to_json(const Polynomial& p);

/// Nested tree: {"const": c}, {"coord": j}, {"add"|"sub"|"mul"|"div": [a, b]},
/// {"pow": [base, k]}. A Polynomial document is accepted as well.
FieldExpr field_from(const json& j);
json to_json(const FieldExpr& e);

/// {"E": <qmatrix>, "nu": [...]}.
json to_json(const SpectralData& sd);

/// 15 significant digits, lowercase e, bare exponent: 1.00000000000000e0.
std::string format_number(double v);

} // namespace quatla::json_io
