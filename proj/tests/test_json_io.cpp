#include "doctest.h"

#include "quatla/json_io.hpp"
#include "quatla/random.hpp"

using namespace quatla;
namespace io = quatla::json_io;

TEST_CASE("number format") {
    CHECK(io::format_number(1.0) == "1.00000000000000e0");
    CHECK(io::format_number(2.0) == "2.00000000000000e0");
    CHECK(io::format_number(0.001) == "1.00000000000000e-3");
    CHECK(io::format_number(0.0) == "0.00000000000000e0");
    CHECK(io::format_number(-2.5e10) == "-2.50000000000000e10");
    CHECK(io::format_number(1.5e-300) == "1.50000000000000e-300");
}

TEST_CASE("matrix round trips") {
    SplitMix64 rng(1);
    const QMatrix q = random_qmatrix(rng, 2, 3);
    CHECK(io::qmatrix_from(io::to_json(q)) == q);
    const CMatrix c = random_cmatrix(rng, 3, 2);
    CHECK(io::cmatrix_from(io::to_json(c)) == c);
    CHECK(io::quaternion_from(io::parse("[1, 2, 3, 4]")) == Quaternion{1, 2, 3, 4});
}

TEST_CASE("form and polynomial round trips") {
    SplitMix64 rng(2);
    const Form f = random_form(rng, 3, 2, 4);
    CHECK(io::form_from(io::to_json(f)) == f);
    const Polynomial p = random_real_polynomial(rng, 4, 3, 5, false);
    CHECK(io::polynomial_from(io::to_json(p)) == p);
    const FieldExpr e = fundamental_expr(1, 0.5);
    const std::vector<double> pt{0.1, 0.2, 0.3, 0.4};
    CHECK(io::field_from(io::to_json(e)).evaluate(pt) == e.evaluate(pt));
    CHECK(io::field_from(io::to_json(p)).evaluate(pt) == doctest::Approx(p.evaluate(pt).real()));
}

TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(io::parse("{"), ParseError);
    CHECK_THROWS_AS(io::quaternion_from(io::parse("[1, 2]")), ParseError);
    CHECK_THROWS_AS(io::qmatrix_from(io::parse(R"({"rows": 2, "cols": 2, "data": []})")), ParseError);
    CHECK_THROWS_AS(io::form_from(io::parse(R"({"n": 1, "grade": 2, "terms": [{"idx": [1, 0], "re": 1}]})")),
                    ParseError);
    CHECK_THROWS_AS(io::field_from(io::parse(R"({"exp": [[{"coord": 0}, 2]]})")), ParseError);
    CHECK_THROWS_AS(io::polynomial_from(io::parse(R"({"vars": 2, "terms": [{"exp": [1], "re": 1}]})")), ParseError);
}
