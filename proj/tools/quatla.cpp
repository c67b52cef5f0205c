// Command-line front end. Exit codes: 0 ok, 1 check failed, 2 parse error,
// 3 precondition violated, 4 usage.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "quatla/baston.hpp"
#include "quatla/json_io.hpp"
#include "quatla/verify.hpp"

namespace {

using quatla::json_io::json;

constexpr int kFail = 1;
constexpr int kParse = 2;
constexpr int kPrecondition = 3;
constexpr int kUsage = 4;

struct Options {
    std::string json_path = "-";
    std::string out_path;
    double tol = quatla::kDefaultTol;
    std::uint64_t seed = 1;
    int cases = 0;
    int n = 1;
    double eps = 1.0;
    std::vector<double> point;
    std::string suite;
};

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in) throw quatla::ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const Options& o, const std::string& text) {
    if (o.out_path.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(o.out_path);
    if (!out) throw std::runtime_error("cannot write " + o.out_path);
    out << text << '\n';
}

int cmd_det(const Options& o) {
    const quatla::QMatrix m = quatla::json_io::qmatrix_from(quatla::json_io::parse(read_input(o.json_path)));
    if (!m.is_square()) throw quatla::ShapeError("det: matrix must be square");
    emit(o, quatla::json_io::format_number(quatla::moore_det(m, o.tol)));
    return 0;
}

int cmd_normalize(const Options& o) {
    const quatla::Form f = quatla::json_io::form_from(quatla::json_io::parse(read_input(o.json_path)));
    const quatla::SpectralData sd = quatla::normalize_real_2form(f, o.tol);
    const double residual = quatla::normalization_residual(f, sd);
    json out = quatla::json_io::to_json(sd);
    out["residual"] = residual;
    emit(o, out.dump());
    return residual <= o.tol ? 0 : kFail;
}

int cmd_ma(const Options& o) {
    const json doc = quatla::json_io::parse(read_input(o.json_path));
    if (!doc.is_object() || !doc.contains("fields") || !doc.contains("point") || !doc["fields"].is_array() ||
        !doc["point"].is_array())
        throw quatla::ParseError("ma: expected {\"fields\": [...], \"point\": [...]}");
    std::vector<quatla::FieldExpr> fields;
    for (const auto& f : doc["fields"]) fields.push_back(quatla::json_io::field_from(f));
    std::vector<double> point;
    for (const auto& v : doc["point"]) {
        if (!v.is_number()) throw quatla::ParseError("ma: point entries must be numbers");
        point.push_back(v.get<double>());
    }
    for (const auto& f : fields)
        if (f.max_var() >= static_cast<int>(point.size()))
            throw quatla::ShapeError("ma: field uses a coordinate beyond the point dimension");
    emit(o, quatla::json_io::format_number(quatla::ma_mixed(fields, point, o.tol)));
    return 0;
}

int cmd_fundsol(const Options& o) {
    std::vector<double> q = o.point;
    if (q.empty()) q.assign(static_cast<std::size_t>(4 * o.n), 0.0);
    if (o.n < 1 || q.size() != static_cast<std::size_t>(4 * o.n))
        throw quatla::ShapeError("fundsol: point must have 4n coordinates");
    if (!(o.eps > 0.0)) throw quatla::ShapeError("fundsol: eps must be positive");
    const auto [lhs, rhs] = quatla::fundamental_check(o.n, o.eps, q);
    const bool pass = std::abs(lhs - rhs) <= 1e-8 * std::max(1.0, std::abs(rhs));
    emit(o, "lhs " + quatla::json_io::format_number(lhs) + "\nrhs " + quatla::json_io::format_number(rhs));
    return pass ? 0 : kFail;
}

int cmd_verify(const Options& o) {
    if (!quatla::verify::is_suite(o.suite)) {
        std::cerr << "unknown suite: " << o.suite << '\n';
        return kUsage;
    }
    const auto report = quatla::verify::run_suite(o.suite, {o.seed, o.cases});
    emit(o, quatla::verify::to_json(report).dump(2));
    return report.pass ? 0 : kFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quaternionic linear algebra: Moore determinants, real 2-forms and the Baston operator"};
    app.require_subcommand(1);
    Options o;

    auto input_opts = [&](CLI::App* sub) {
        sub->add_option("--json", o.json_path, "input document (- for stdin)");
        sub->add_option("--out", o.out_path, "write the result here instead of stdout");
        sub->add_option("--tol", o.tol, "structural tolerance");
    };

    auto* det = app.add_subcommand("det", "Moore determinant of a hyperhermitian matrix");
    input_opts(det);
    auto* normalize = app.add_subcommand("normalize", "normal form of a real 2-form");
    input_opts(normalize);
    auto* ma = app.add_subcommand("ma", "mixed quaternionic Monge-Ampere operator at a point");
    input_opts(ma);

    auto* fundsol = app.add_subcommand("fundsol", "pointwise check of the fundamental solution identity");
    fundsol->add_option("--n", o.n, "quaternionic dimension");
    fundsol->add_option("--eps", o.eps, "regularization");
    fundsol->add_option("--point", o.point, "4n real coordinates (default 0)");
    fundsol->add_option("--out", o.out_path, "write the result here instead of stdout");

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", o.suite, "tau, moore, thm12, forms, dops, thm13, fundsol, invariance or all")->required();
    verify->add_option("--seed", o.seed, "random seed");
    verify->add_option("--cases", o.cases, "cases per check (0 keeps the defaults)");
    verify->add_option("--out", o.out_path, "write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (det->parsed()) return cmd_det(o);
        if (normalize->parsed()) return cmd_normalize(o);
        if (ma->parsed()) return cmd_ma(o);
        if (fundsol->parsed()) return cmd_fundsol(o);
        if (verify->parsed()) return cmd_verify(o);
    } catch (const quatla::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const quatla::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}
