#include "quatla/json_io.hpp"

#include <cmath>
#include <cstdio>

namespace quatla::json_io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

double number(const json& j, const char* what) {
    if (!j.is_number()) fail(std::string(what) + " must be a number");
    return j.get<double>();
}

int integer(const json& j, const char* what) {
    if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::size_t size_field(const json& j, const char* key) {
    const int v = integer(member(j, key), key);
    if (v < 0) fail(std::string(key) + " must be nonnegative");
    return static_cast<std::size_t>(v);
}

std::vector<double> number_array(const json& j, const char* what) {
    if (!j.is_array()) fail(std::string(what) + " must be an array");
    std::vector<double> out;
    for (const auto& v : j) out.push_back(number(v, what));
    return out;
}

Complex complex_of(const json& t) {
    const double re = t.contains("re") ? number(t.at("re"), "re") : 0.0;
    const double im = t.contains("im") ? number(t.at("im"), "im") : 0.0;
    return {re, im};
}

json complex_term(json head, Complex c) {
    head["re"] = c.real();
    head["im"] = c.imag();
    return head;
}

} // namespace

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        fail(std::string("malformed JSON: ") + e.what());
    }
}

Quaternion quaternion_from(const json& j) {
    const auto v = number_array(j, "quaternion");
    if (v.size() != 4) fail("quaternion must be [w, x, y, z]");
    return {v[0], v[1], v[2], v[3]};
}

json to_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

QMatrix qmatrix_from(const json& j) {
    const std::size_t rows = size_field(j, "rows");
    const std::size_t cols = size_field(j, "cols");
    const json& data = member(j, "data");
    if (!data.is_array() || data.size() != rows * cols) fail("qmatrix: data must hold rows*cols quaternions");
    std::vector<Quaternion> entries;
    for (const auto& q : data) entries.push_back(quaternion_from(q));
    return QMatrix(rows, cols, std::move(entries));
}

json to_json(const QMatrix& m) {
    json data = json::array();
    for (const auto& q : m.data()) data.push_back(to_json(q));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

CMatrix cmatrix_from(const json& j) {
    const std::size_t rows = size_field(j, "rows");
    const std::size_t cols = size_field(j, "cols");
    const auto re = number_array(member(j, "re"), "re");
    const auto im = j.contains("im") ? number_array(j.at("im"), "im") : std::vector<double>(re.size(), 0.0);
    if (re.size() != rows * cols || im.size() != rows * cols) fail("cmatrix: re/im must hold rows*cols numbers");
    std::vector<Complex> entries(rows * cols);
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = {re[i], im[i]};
    return CMatrix(rows, cols, std::move(entries));
}

json to_json(const CMatrix& m) {
    json re = json::array(), im = json::array();
    for (const auto& c : m.data()) {
        re.push_back(c.real());
        im.push_back(c.imag());
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

Form form_from(const json& j) {
    const int n = integer(member(j, "n"), "n");
    const int k = integer(member(j, "grade"), "grade");
    if (n < 1 || n > kMaxHalfDim) fail("form: n out of range");
    if (k < 0 || k > 2 * n) fail("form: grade out of range");
    const json& terms = member(j, "terms");
    if (!terms.is_array()) fail("form: terms must be an array");
    Form f(n, k);
    for (const auto& t : terms) {
        const json& idx = member(t, "idx");
        if (!idx.is_array() || static_cast<int>(idx.size()) != k) fail("form: idx length must equal the grade");
        std::vector<int> ind;
        for (const auto& v : idx) {
            const int a = integer(v, "idx");
            if (a < 0 || a >= 2 * n) fail("form: index out of range");
            if (!ind.empty() && a <= ind.back()) fail("form: idx must be strictly increasing");
            ind.push_back(a);
        }
        f.add(mask_of(ind), complex_of(t));
    }
    return f;
}

json to_json(const Form& f) {
    json terms = json::array();
    for (const auto& [key, c] : f.terms()) terms.push_back(complex_term({{"idx", indices_of(key)}}, c));
    return {{"n", f.half_dim()}, {"grade", f.grade()}, {"terms", terms}};
}

Polynomial polynomial_from(const json& j) {
    const int vars = integer(member(j, "vars"), "vars");
    if (vars < 0) fail("polynomial: vars must be nonnegative");
    const json& terms = member(j, "terms");
    if (!terms.is_array()) fail("polynomial: terms must be an array");
    Polynomial p(vars);
    for (const auto& t : terms) {
        const json& exp = member(t, "exp");
        if (!exp.is_array() || static_cast<int>(exp.size()) != vars) fail("polynomial: exp length must equal vars");
        Exponent e;
        for (const auto& v : exp) {
            const int d = integer(v, "exp");
            if (d < 0 || d > 255) fail("polynomial: exponent out of range");
            e.push_back(static_cast<std::uint8_t>(d));
        }
        p.add(e, complex_of(t));
    }
    return p;
}

json to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json exp = json::array();
        for (auto d : e) exp.push_back(static_cast<int>(d));
        terms.push_back(complex_term({{"exp", exp}}, c));
    }
    return {{"vars", p.num_vars()}, {"terms", terms}};
}

FieldExpr field_from(const json& j) {
    if (j.is_object() && j.contains("vars")) {
        try {
            return to_expr(polynomial_from(j));
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }
    if (!j.is_object() || j.size() != 1) fail("field: expected a single-key expression node");
    const auto node = j.begin();
    const std::string tag = node.key();
    const json& arg = node.value();
    if (tag == "const") return FieldExpr::constant(number(arg, "const"));
    if (tag == "coord") {
        const int v = integer(arg, "coord");
        if (v < 0) fail("field: coordinate index must be nonnegative");
        return FieldExpr::coord(v);
    }
    if (!arg.is_array() || arg.size() != 2) fail("field: node \"" + tag + "\" takes two arguments");
    if (tag == "pow") return FieldExpr::pow(field_from(arg[0]), integer(arg[1], "pow exponent"));
    const FieldExpr a = field_from(arg[0]);
    const FieldExpr b = field_from(arg[1]);
    if (tag == "add") return a + b;
    if (tag == "sub") return a - b;
    if (tag == "mul") return a * b;
    if (tag == "div") return a / b;
    fail("field: unknown node tag \"" + tag + "\"");
}

json to_json(const FieldExpr& e) {
    using K = FieldExpr::Kind;
    switch (e.kind()) {
    case K::constant: return {{"const", e.value()}};
    case K::coord: return {{"coord", e.var()}};
    case K::pow: return {{"pow", json::array({to_json(e.lhs()), e.exponent()})}};
    case K::add: return {{"add", json::array({to_json(e.lhs()), to_json(e.rhs())})}};
    case K::sub: return {{"sub", json::array({to_json(e.lhs()), to_json(e.rhs())})}};
    case K::mul: return {{"mul", json::array({to_json(e.lhs()), to_json(e.rhs())})}};
    case K::div: return {{"div", json::array({to_json(e.lhs()), to_json(e.rhs())})}};
    }
    return nullptr;
}

json to_json(const SpectralData& sd) { return {{"E", to_json(sd.E)}, {"nu", sd.nu}}; }

std::string format_number(double v) {
    if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.14e", v);
    std::string s(buf);
    const auto e = s.find('e');
    std::string mant = s.substr(0, e);
    std::string exp = s.substr(e + 1);
    const bool neg = exp[0] == '-';
    exp = exp.substr(1);
    exp.erase(0, std::min(exp.find_first_not_of('0'), exp.size() - 1));
    return mant + "e" + (neg ? "-" : "") + exp;
}

} // namespace quatla::json_io
