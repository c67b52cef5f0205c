#include "quatla/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "quatla/baston.hpp"
#include "quatla/random.hpp"
#include "quatla/transforms.hpp"

namespace quatla::verify {

namespace {

using CaseFn = std::function<double(SplitMix64&, int)>;

struct Runner {
    const SuiteOptions& opts;
    SuiteReport& report;

    void check(const std::string& name, double tol, int default_cases, const CaseFn& fn) {
        const int cases = opts.cases > 0 ? opts.cases : default_cases;
        CheckResult c{name, 0.0, tol, cases, true};
        for (int k = 0; k < cases; ++k) {
            SplitMix64 rng = case_rng(opts.seed, name, static_cast<std::uint64_t>(k));
            double r;
            try {
                r = fn(rng, k);
            } catch (const Error&) {
                r = std::numeric_limits<double>::infinity();
            }
            if (std::isnan(r)) r = std::numeric_limits<double>::infinity();
            c.max_residual = std::max(c.max_residual, r);
        }
        c.pass = c.max_residual <= tol;
        report.checks.push_back(c);
    }
};

double rel1(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

CMatrix times_j(const QMatrix& m) { return tau(m) * j_matrix(m.rows()); }

// -J conj(S) J: the antilinear involution whose fixed skew matrices are real.
CMatrix real_part_skew(const CMatrix& s) {
    const CMatrix j = j_matrix(s.rows() / 2);
    const CMatrix p = -1.0 * (j * conj(s) * j);
    return 0.5 * (s + p);
}

// Cauchy-Fueter expansion sum_{b,c} e_b conj(e_c) d^2u/dx_{4l+b} dx_{4k+c}.
QMatrix hessian_oracle(const RMatrix& h, std::size_t n) {
    const Quaternion e[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    QMatrix out(n, n);
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t b = 0; b < 4; ++b)
                for (std::size_t c = 0; c < 4; ++c) out(l, k) += h(4 * l + b, 4 * k + c) * (e[b] * conj(e[c]));
    return out;
}

RMatrix symbolic_hessian(const Polynomial& p, std::span<const double> x) {
    const std::size_t d = x.size();
    RMatrix h(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        const Polynomial di = p.derivative(static_cast<int>(i));
        for (std::size_t j = 0; j < d; ++j) h(i, j) = di.derivative(static_cast<int>(j)).evaluate(x).real();
    }
    return h;
}

FormField random_form_field(SplitMix64& rng, int n, int grade, bool integer) {
    FormField f(n, grade);
    std::vector<int> idx(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i) idx[static_cast<std::size_t>(i)] = i;
    const int terms = uniform_int(rng, 1, 3);
    for (int t = 0; t < terms; ++t) {
        std::shuffle(idx.begin(), idx.end(), rng);
        std::vector<int> pick(idx.begin(), idx.begin() + grade);
        std::sort(pick.begin(), pick.end());
        f.add(mask_of(pick), random_real_polynomial(rng, 4 * n, 4, 4, integer));
    }
    return f;
}

double sign_pow(int p) { return p % 2 == 0 ? 1.0 : -1.0; }

FormField scaled(double s, const FormField& f) {
    FormField out(f.half_dim(), f.grade());
    for (const auto& [key, p] : f.terms()) out.add(key, s * p);
    return out;
}

// Largest |coefficient| of the field, relative to a floor of 1.
double field_residual(const FormField& diff, const FormField& ref, bool exact) {
    const double r = max_abs_coeff(diff);
    return exact ? r : r / std::max(1.0, max_abs_coeff(ref));
}

double d_identities(SplitMix64& rng, bool exact) {
    const int n = uniform_int(rng, 1, 2);
    const int p = uniform_int(rng, 0, 2);
    const int q = uniform_int(rng, 0, 1);
    const FormField f = random_form_field(rng, n, p, exact);
    const FormField g = random_form_field(rng, n, q, exact);
    double r = 0.0;
    const FormField d0f = d_op(Prime::zero, f), d1f = d_op(Prime::one, f);
    const FormField d01 = d_op(Prime::zero, d1f), d10 = d_op(Prime::one, d0f);
    r = std::max(r, field_residual(d01 + d10, d01, exact));
    r = std::max(r, field_residual(d_op(Prime::zero, d0f), d0f, exact));
    r = std::max(r, field_residual(d_op(Prime::one, d1f), d1f, exact));
    const FormField fg = wedge(f, g);
    for (Prime a : {Prime::zero, Prime::one}) {
        const FormField lhs = d_op(a, fg);
        const FormField rhs = wedge(d_op(a, f), g) + scaled(sign_pow(p), wedge(f, d_op(a, g)));
        r = std::max(r, field_residual(lhs - rhs, lhs, exact));
    }
    return r;
}

std::vector<double> log_grid(double lo, double hi, int count) {
    std::vector<double> out;
    for (int k = 0; k < count; ++k) out.push_back(lo * std::pow(hi / lo, static_cast<double>(k) / (count - 1)));
    return out;
}

// ---------------------------------------------------------------- suites

void suite_tau(Runner& run) {
    run.check("tau_homomorphism", 1e-12, 100, [](SplitMix64& rng, int) {
        const auto p = static_cast<std::size_t>(uniform_int(rng, 1, 4));
        const auto m = static_cast<std::size_t>(uniform_int(rng, 1, 4));
        const auto l = static_cast<std::size_t>(uniform_int(rng, 1, 4));
        const QMatrix a = random_qmatrix(rng, p, m), b = random_qmatrix(rng, m, l);
        return max_abs(tau(a * b) - tau(a) * tau(b)) / std::max(1.0, max_abs(tau(a * b)));
    });
    run.check("tau_adjoint", 1e-12, 100, [](SplitMix64& rng, int) {
        const QMatrix a = random_qmatrix(rng, static_cast<std::size_t>(uniform_int(rng, 1, 4)),
                                         static_cast<std::size_t>(uniform_int(rng, 1, 4)));
        return max_abs(tau(adjoint(a)) - adjoint(tau(a)));
    });
    run.check("tau_range", 1e-12, 100, [](SplitMix64& rng, int k) {
        const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 4));
        const CMatrix m = k % 2 == 0 ? tau(random_qmatrix(rng, n, n)) : random_cmatrix(rng, 2 * n, 2 * n);
        const bool in_range = j_commutator_residual(m) <= kDefaultTol;
        try {
            const QMatrix q = tau_inverse(m);
            return in_range ? max_abs(tau(q) - m) : 1.0;
        } catch (const StructureError&) {
            return in_range ? 1.0 : 0.0;
        }
    });
    run.check("hyperhermitian_tau_hermitian", 1e-12, 100, [](SplitMix64& rng, int) {
        const CMatrix t = tau(random_hyperhermitian(rng, static_cast<std::size_t>(uniform_int(rng, 1, 5))));
        return max_abs(t - adjoint(t));
    });
    run.check("real_rep_vector", 1e-12, 200, [](SplitMix64& rng, int) {
        const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 4));
        const QMatrix u = random_qmatrix(rng, n, n), q = random_qmatrix(rng, n, 1);
        const RMatrix ur = real_rep(u);
        const std::vector<double> lhs = real_vec(u * q), qr = real_vec(q);
        double r = 0.0;
        for (std::size_t i = 0; i < 4 * n; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < 4 * n; ++j) s += ur(i, j) * qr[j];
            r = std::max(r, std::abs(lhs[i] - s));
        }
        return r;
    });
    run.check("real_rep_homomorphism", 1e-12, 100, [](SplitMix64& rng, int) {
        const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 4));
        const QMatrix u = random_qmatrix(rng, n, n), v = random_qmatrix(rng, n, n);
        return max_abs(real_rep(u * v) - real_rep(u) * real_rep(v)) / std::max(1.0, max_abs(real_rep(u * v)));
    });
}

void suite_moore(Runner& run) {
    run.check("diagonalization", 1e-8, 100, [](SplitMix64& rng, int k) {
        const auto n = static_cast<std::size_t>(1 + k % 5);
        const QMatrix m = random_hyperhermitian(rng, n);
        const SpectralData sd = diagonalize_hyperhermitian(m);
        QMatrix d(n, n);
        for (std::size_t l = 0; l < n; ++l) d(l, l) = Quaternion{sd.nu[l], 0.0, 0.0, 0.0};
        double r = max_abs(adjoint(sd.E) * m * sd.E - d);
        r = std::max(r, max_abs(adjoint(sd.E) * sd.E - QMatrix::identity(n)));
        for (std::size_t l = 1; l < n; ++l)
            if (sd.nu[l] > sd.nu[l - 1]) r = std::max(r, 1.0);
        return r;
    });
    run.check("eigenvalue_pairing", 1e-8, 100, [](SplitMix64& rng, int k) {
        const auto n = static_cast<std::size_t>(1 + k % 5);
        const QMatrix m = random_hyperhermitian(rng, n);
        const HermitianEigen eig = hermitian_eigen(tau(m));
        double scale = 0.0;
        for (double v : eig.values) scale = std::max(scale, std::abs(v));
        double r = 0.0;
        for (std::size_t i = 0; i < 2 * n; i += 2)
            r = std::max(r, std::abs(eig.values[i] - eig.values[i + 1]) / std::max(scale, 1e-300));
        return r;
    });
    run.check("tau_det_square", 1e-8, 100, [](SplitMix64& rng, int k) {
        const QMatrix m = random_hyperhermitian(rng, static_cast<std::size_t>(1 + k % 5));
        const double md = moore_det(m);
        return rel_error(tau_det(m), md * md);
    });
    run.check("complex_hermitian_agreement", 1e-9, 100, [](SplitMix64& rng, int k) {
        const auto n = static_cast<std::size_t>(1 + k % 5);
        const QMatrix m = random_complex_hermitian(rng, n);
        CMatrix c(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) c(i, j) = m(i, j).a();
        return rel_error(moore_det(m), det(c).real());
    });
    run.check("product_rule", 1e-7, 100, [](SplitMix64& rng, int k) {
        const auto n = static_cast<std::size_t>(1 + k % 5);
        const QMatrix m = random_hyperhermitian(rng, n);
        const QMatrix c = random_qmatrix(rng, n, n);
        const QMatrix lhs = adjoint(c) * m * c;
        const QMatrix cc = adjoint(c) * c;
        const double scale = std::max(1.0, max_abs(lhs));
        return rel_error(moore_det(lhs, kDefaultTol * scale), moore_det(m) * moore_det(cc, kDefaultTol * scale));
    });
    run.check("mixed_symmetry", 1e-10, 50, [](SplitMix64& rng, int k) {
        const auto n = static_cast<std::size_t>(1 + k % 4);
        std::vector<QMatrix> ms;
        for (std::size_t i = 0; i < n; ++i) ms.push_back(random_hyperhermitian(rng, n));
        const double base = mixed_discriminant(ms);
        std::vector<QMatrix> rev(ms.rbegin(), ms.rend());
        return rel1(base, mixed_discriminant(rev));
    });
    run.check("mixed_linearity", 1e-8, 50, [](SplitMix64& rng, int k) {
        const auto n = static_cast<std::size_t>(1 + k % 4);
        std::vector<QMatrix> ms;
        for (std::size_t i = 0; i < n; ++i) ms.push_back(random_hyperhermitian(rng, n));
        const QMatrix other = random_hyperhermitian(rng, n);
        const double t = uniform(rng, 0.0, 1.0);
        std::vector<QMatrix> mix = ms, alt = ms;
        mix[0] = t * ms[0] + (1.0 - t) * other;
        alt[0] = other;
        return rel1(mixed_discriminant(mix), t * mixed_discriminant(ms) + (1.0 - t) * mixed_discriminant(alt));
    });
    run.check("mixed_equal_arguments", 1e-8, 50, [](SplitMix64& rng, int k) {
        const auto n = static_cast<std::size_t>(1 + k % 4);
        const QMatrix m = random_hyperhermitian(rng, n);
        const std::vector<QMatrix> ms(n, m);
        return rel1(mixed_discriminant(ms), moore_det(m));
    });
}

void suite_thm12(Runner& run) {
    for (int n = 1; n <= 4; ++n) {
        run.check("thm12_n" + std::to_string(n), 1e-7, 50, [n](SplitMix64& rng, int) {
            const auto un = static_cast<std::size_t>(n);
            std::vector<QMatrix> ms;
            std::vector<CMatrix> cs;
            for (std::size_t i = 0; i < un; ++i) {
                ms.push_back(random_hyperhermitian(rng, un));
                cs.push_back(times_j(ms.back()));
            }
            const Complex d = delta_n(cs);
            const double expected = std::pow(2.0, n) * factorial(n) * mixed_discriminant(ms);
            return std::max(rel1(d.real(), expected), std::abs(d.imag()) / std::max(1.0, std::abs(expected)));
        });
    }
}

void suite_forms(Runner& run) {
    run.check("reality_criterion", 0.0, 200, [](SplitMix64& rng, int k) {
        const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 4));
        CMatrix m = random_skew(rng, 2 * n);
        if (k % 2 == 0) m = real_part_skew(m);
        const bool by_form = is_real_form(matrix_to_2form(m), 1e-9);
        const bool by_matrix = j_commutator_residual(m) <= 1e-9;
        return by_form == by_matrix ? 0.0 : 1.0;
    });
    run.check("normalization_residual", 1e-8, 100, [](SplitMix64& rng, int k) {
        const auto n = static_cast<std::size_t>(1 + k % 5);
        const Form f = hh_to_2form(random_hyperhermitian(rng, n));
        return normalization_residual(f, normalize_real_2form(f));
    });
    run.check("normalization_matches_diagonalization", 1e-8, 100, [](SplitMix64& rng, int k) {
        const auto n = static_cast<std::size_t>(1 + k % 5);
        const QMatrix m = random_hyperhermitian(rng, n);
        const SpectralData a = normalize_real_2form(hh_to_2form(m));
        const SpectralData b = diagonalize_hyperhermitian(m);
        double r = 0.0;
        for (std::size_t l = 0; l < n; ++l) r = std::max(r, std::abs(a.nu[l] - b.nu[l]));
        return r;
    });
    run.check("single_matrix_delta", 1e-7, 50, [](SplitMix64& rng, int k) {
        const int n = 1 + k % 4;
        const QMatrix m = random_hyperhermitian(rng, static_cast<std::size_t>(n));
        const std::vector<CMatrix> cs(static_cast<std::size_t>(n), times_j(m));
        return rel1(delta_n(cs).real(), std::pow(2.0, n) * factorial(n) * moore_det(m));
    });
    run.check("wedge_associative_graded", 1e-12, 100, [](SplitMix64& rng, int) {
        const int n = uniform_int(rng, 1, 4);
        const int p = uniform_int(rng, 0, 3), q = uniform_int(rng, 0, 3), s = uniform_int(rng, 0, 2);
        const Form a = random_form(rng, n, std::min(p, 2 * n), 3);
        const Form b = random_form(rng, n, std::min(q, 2 * n), 3);
        const Form c = random_form(rng, n, std::min(s, 2 * n), 2);
        double r = max_abs_diff(wedge(wedge(a, b), c), wedge(a, wedge(b, c)));
        const double sign = sign_pow(a.grade() * b.grade());
        r = std::max(r, max_abs_diff(wedge(a, b), sign * wedge(b, a)));
        return r;
    });
    run.check("rho_j_antilinear_involutive", 1e-12, 100, [](SplitMix64& rng, int) {
        const int n = uniform_int(rng, 1, 4);
        const int k = 2 * uniform_int(rng, 0, n);
        const Form f = random_form(rng, n, k, 4);
        const Complex c{normal(rng), normal(rng)};
        double r = max_abs_diff(rho_j(c * f), std::conj(c) * rho_j(f));
        r = std::max(r, max_abs_diff(rho_j(rho_j(f)), f));
        const Form g = random_form(rng, n, 1, 2);
        r = std::max(r, max_abs_diff(rho_j(rho_j(g)), -1.0 * g));
        return r;
    });
    run.check("beta_power", 1e-12, 6, [](SplitMix64&, int k) {
        const int n = 1 + k;
        return max_abs_diff(wedge_power(beta_n(n), n), factorial(n) * omega_2n(n)) / factorial(n);
    });
    run.check("elementary_strongly_positive", 1e-9, 50, [](SplitMix64& rng, int k) {
        const int n = 1 + k % 4;
        const auto un = static_cast<std::size_t>(n);
        std::vector<QMatrix> eta{random_qmatrix(rng, 1, un)};
        const Form f = elementary_strongly_positive(eta, n);
        double r = is_strongly_positive_2form(f) ? 0.0 : 1.0;
        const double lam = uniform(rng, 0.5, 2.0);
        std::vector<QMatrix> scaled_eta{lam * eta[0]};
        r = std::max(r, max_abs_diff(elementary_strongly_positive(scaled_eta, n), lam * lam * f) /
                            std::max(1.0, max_abs(f)));
        std::vector<QMatrix> proj;
        for (std::size_t i = 0; i < un; ++i) {
            QMatrix e(1, un);
            e(0, i) = Quaternion{1.0, 0.0, 0.0, 0.0};
            proj.push_back(e);
        }
        r = std::max(r, max_abs_diff(elementary_strongly_positive(proj, n), omega_2n(n)));
        return r;
    });
}

void suite_dops(Runner& run) {
    run.check("d_identities_exact", 0.0, 50, [](SplitMix64& rng, int) { return d_identities(rng, true); });
    run.check("d_identities_float", 1e-10, 50, [](SplitMix64& rng, int) { return d_identities(rng, false); });
    run.check("nabla_z_table", 0.0, 4, [](SplitMix64&, int k) {
        const int n = 1 + k;
        const int vars = 4 * n;
        const auto z = z_coords(n);
        double bad = 0.0;
        for (int a = 0; a < 2 * n; ++a)
            for (Prime alpha : {Prime::zero, Prime::one})
                for (int b = 0; b < 2 * n; ++b)
                    for (int beta = 0; beta < 2; ++beta) {
                        const Polynomial v = nabla(n, a, alpha, z[static_cast<std::size_t>(b)][static_cast<std::size_t>(beta)]);
                        const bool hit = a == b && static_cast<int>(alpha) == beta;
                        const Polynomial expected = hit ? Polynomial::constant(vars, 2.0) : Polynomial(vars);
                        if (!(v == expected)) bad += 1.0;
                    }
        const Polynomial r2 = norm_sq(n);
        for (int a = 0; a < 2 * n; ++a)
            for (int alpha = 0; alpha < 2; ++alpha) {
                const Polynomial v = nabla(n, a, static_cast<Prime>(alpha), r2);
                if (!(v == 2.0 * conj(z[static_cast<std::size_t>(a)][static_cast<std::size_t>(alpha)]))) bad += 1.0;
            }
        Polynomial s(vars);
        for (int l = 0; l < n; ++l) {
            const auto& lo = z[static_cast<std::size_t>(l)];
            const auto& hi = z[static_cast<std::size_t>(n + l)];
            s += lo[0] * hi[1] - hi[0] * lo[1];
        }
        if (!(s == r2)) bad += 1.0;
        return bad;
    });
    run.check("nabla_conjugation", 1e-12, 50, [](SplitMix64& rng, int) {
        const int n = uniform_int(rng, 1, 3);
        const Polynomial p = random_real_polynomial(rng, 4 * n, 4, 6, false);
        double r = 0.0;
        for (int l = 0; l < n; ++l) {
            r = std::max(r, max_abs_coeff(conj(nabla(n, l, Prime::zero, p)) - nabla(n, n + l, Prime::one, conj(p))));
            r = std::max(r, max_abs_coeff(conj(nabla(n, n + l, Prime::zero, p)) + nabla(n, l, Prime::one, conj(p))));
        }
        return r;
    });
    run.check("jet_vs_symbolic", 1e-10, 100, [](SplitMix64& rng, int) {
        const int n = uniform_int(rng, 1, 2);
        const Polynomial p = random_real_polynomial(rng, 4 * n, 4, 8, false);
        const auto x = random_point(rng, static_cast<std::size_t>(4 * n));
        const RMatrix hs = symbolic_hessian(p, x);
        const RMatrix hj = to_expr(p).jet(x).hessian_matrix();
        return max_abs(hs - hj) / std::max(1.0, max_abs(hs));
    });
    run.check("baston_symbolic_vs_point", 1e-10, 50, [](SplitMix64& rng, int) {
        const int n = uniform_int(rng, 1, 2);
        const Polynomial p = random_real_polynomial(rng, 4 * n, 4, 8, false);
        const auto x = random_point(rng, static_cast<std::size_t>(4 * n));
        const Form sym = baston_poly(p).evaluate(x);
        const Form pt = baston_point(to_expr(p), x);
        return max_abs_diff(sym, pt) / std::max(1.0, max_abs(sym));
    });
    run.check("baston_norm_sq", 0.0, 4, [](SplitMix64&, int k) {
        const int n = 1 + k;
        const FormField d = baston_poly(norm_sq(n));
        double bad = 0.0;
        const Form b = beta_n(n);
        for (const auto& [key, c] : b.terms())
            if (!(d.coeff(key) == Polynomial::constant(4 * n, 8.0 * c))) bad += 1.0;
        if (d.terms().size() != b.terms().size()) bad += 1.0;
        return bad;
    });
}

void suite_thm13(Runner& run) {
    for (int n = 1; n <= 3; ++n) {
        run.check("thm13_n" + std::to_string(n), 1e-7, 30, [n](SplitMix64& rng, int) {
            const auto un = static_cast<std::size_t>(n);
            std::vector<FieldExpr> us;
            for (int i = 0; i < n; ++i) us.push_back(to_expr(random_real_polynomial(rng, 4 * n, 3, 3 * n + 3, false)));
            double r = 0.0;
            for (int pt = 0; pt < 5; ++pt) {
                const auto x = random_point(rng, 4 * un);
                std::vector<Form> forms;
                double scale = 1.0;
                for (const auto& u : us) {
                    forms.push_back(baston_point(u, x));
                    scale = std::max(scale, max_abs(forms.back()));
                }
                const Complex lhs = delta_n_forms(forms, kDefaultTol * scale);
                const double rhs = factorial(n) * ma_mixed(us, x);
                r = std::max(r, rel1(lhs.real(), rhs));
                r = std::max(r, std::abs(lhs.imag()) / std::max(1.0, std::abs(rhs)));
            }
            return r;
        });
    }
    run.check("hessian_cauchy_fueter", 1e-9, 50, [](SplitMix64& rng, int) {
        const int n = uniform_int(rng, 1, 3);
        const auto un = static_cast<std::size_t>(n);
        const FieldExpr u = to_expr(random_real_polynomial(rng, 4 * n, 4, 8, false));
        const auto x = random_point(rng, 4 * un);
        const RMatrix h = u.jet(x).hessian_matrix();
        const QMatrix hq = quaternionic_hessian(h, n);
        double r = max_abs(hq - hessian_oracle(h, un));
        r = std::max(r, max_abs(tau(hq) * j_matrix(un) - 2.0 * baston_matrix(h, n)));
        r = std::max(r, is_hyperhermitian(hq, 1e-9 * std::max(1.0, max_abs(hq))) ? 0.0 : 1.0);
        return r / std::max(1.0, max_abs(hq));
    });
    run.check("norm_sq_strongly_positive", 0.0, 50, [](SplitMix64& rng, int) {
        const int n = uniform_int(rng, 1, 4);
        const auto x = random_point(rng, static_cast<std::size_t>(4 * n), 3.0);
        return is_strongly_positive_2form(baston_point(norm_sq_expr(n), x)) ? 0.0 : 1.0;
    });
    run.check("ma_norm_sq", 1e-9, 20, [](SplitMix64& rng, int) {
        const int n = uniform_int(rng, 1, 4);
        const auto x = random_point(rng, static_cast<std::size_t>(4 * n));
        const std::vector<FieldExpr> us(static_cast<std::size_t>(n), norm_sq_expr(n));
        return rel_error(ma_mixed(us, x), std::pow(8.0, n));
    });
}

void suite_fundsol(Runner& run) {
    for (int n = 1; n <= 2; ++n) {
        run.check("fundsol_pointwise_n" + std::to_string(n), 1e-8, 100, [n](SplitMix64& rng, int) {
            const auto x = random_point(rng, static_cast<std::size_t>(4 * n));
            const double eps = std::pow(10.0, uniform(rng, -1.0, 1.0));
            const auto [lhs, rhs] = fundamental_check(n, eps, x);
            return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
        });
    }
    run.check("fundsol_integral_n1", 0.01, 1, [](SplitMix64&, int) {
        const IntegralResult ir = fundamental_integral();
        const double target = 4.0 * std::numbers::pi * std::numbers::pi;
        return (std::abs(ir.value - target) - ir.tail_bound) / target;
    });
    run.check("fundsol_small_eps_limit", 1e-4, 10, [](SplitMix64& rng, int k) {
        const int n = 1 + k % 2;
        auto x = random_point(rng, static_cast<std::size_t>(4 * n));
        double r2 = 0.0;
        for (double v : x) r2 += v * v;
        const double limit = std::pow(8.0, n) * factorial(n);
        double prev = std::numeric_limits<double>::infinity();
        double gap = 0.0;
        for (double eps : log_grid(1e-1, 1e-6, 6)) {
            const double ratio = fundamental_check(n, eps, x).lhs * std::pow(r2, 2 * n + 1) / eps;
            gap = std::abs(ratio - limit) / limit;
            if (gap > prev) return 1.0;
            prev = gap;
        }
        return gap;
    });
    run.check("fundsol_large_eps_decrease", 0.0, 10, [](SplitMix64& rng, int k) {
        const int n = 1 + k % 2;
        const auto x = random_point(rng, static_cast<std::size_t>(4 * n));
        double r2 = 0.0;
        for (double v : x) r2 += v * v;
        double prev = std::numeric_limits<double>::infinity();
        for (double eps : log_grid(r2 + 1.0, 1e3 * (r2 + 1.0), 12)) {
            const double lhs = fundamental_check(n, eps, x).lhs;
            if (!(lhs < prev) || lhs <= 0.0) return 1.0;
            prev = lhs;
        }
        return 0.0;
    });
}

void suite_invariance(Runner& run) {
    run.check("pullback_evaluation", 1e-12, 50, [](SplitMix64& rng, int) {
        const QMatrix u = random_gl(rng, 2);
        const Polynomial p = random_real_polynomial(rng, 8, 4, 8, false);
        const FieldExpr e = to_expr(p);
        const auto x = random_point(rng, 8, 0.5);
        const double expected = e.evaluate(apply_quaternionic(u, x));
        return rel1(pullback_field(u, e).evaluate(x), expected);
    });
    run.check("chain_rule", 1e-9, 50, [](SplitMix64& rng, int) {
        const QMatrix u = random_gl(rng, 2);
        const FieldExpr e = to_expr(random_real_polynomial(rng, 8, 4, 8, false));
        return chain_rule_check(u, e, random_point(rng, 8, 0.5));
    });
    const std::pair<const char*, InvariantOp> ops[] = {
        {"invariance_d0", InvariantOp::d0}, {"invariance_d1", InvariantOp::d1}, {"invariance_baston", InvariantOp::baston}};
    for (const auto& [name, op] : ops) {
        run.check(name, 1e-8, 50, [op = op](SplitMix64& rng, int) {
            const QMatrix u = random_gl(rng, 2);
            const FieldExpr e = to_expr(random_real_polynomial(rng, 8, 4, 8, false));
            return invariance_check(u, e, random_point(rng, 8, 0.5), op);
        });
    }
    run.check("unitary_beta_omega", 1e-10, 50, [](SplitMix64& rng, int) {
        const QMatrix e = random_unitary(rng, 3);
        const CMatrix t = tau(e);
        double r = max_abs_diff(act_matrix_on_form(t, beta_n(3)), beta_n(3));
        r = std::max(r, max_abs_diff(act_matrix_on_form(t, omega_2n(3)), omega_2n(3)));
        const CMatrix bc = basis_change(e);
        r = std::max(r, max_abs_diff(act_matrix_on_form(bc, beta_n(3)), beta_n(3)));
        r = std::max(r, max_abs_diff(act_matrix_on_form(bc, omega_2n(3)), omega_2n(3)));
        return r;
    });
    run.check("unitary_delta_n", 1e-7, 30, [](SplitMix64& rng, int) {
        const int n = 2;
        const QMatrix u = random_unitary(rng, n);
        const auto x = random_point(rng, 8);
        const auto ux = apply_quaternionic(u, x);
        std::vector<Form> here, there;
        for (int i = 0; i < n; ++i) {
            const FieldExpr e = to_expr(random_real_polynomial(rng, 8, 2, 8, false));
            here.push_back(baston_point(pullback_field(u, e), x));
            there.push_back(baston_point(e, ux));
        }
        return rel1(delta_n_forms(here, 1e-8).real(), delta_n_forms(there, 1e-8).real());
    });
    run.check("basis_change_composition", 1e-10, 50, [](SplitMix64& rng, int) {
        const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 3));
        const QMatrix u = random_gl(rng, n), v = random_gl(rng, n);
        const CMatrix lhs = basis_change(u * v);
        const Form f = random_form(rng, static_cast<int>(n), 2, 3);
        double r = max_abs(lhs - basis_change(u) * basis_change(v)) / std::max(1.0, max_abs(lhs));
        const Form composed = act_matrix_on_form(basis_change(v), act_matrix_on_form(basis_change(u), f));
        r = std::max(r, max_abs_diff(act_matrix_on_form(lhs, f), composed) / std::max(1.0, max_abs(composed)));
        return r;
    });
}

using SuiteFn = void (*)(Runner&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r = {
        {"tau", suite_tau},     {"moore", suite_moore},   {"thm12", suite_thm12},
        {"forms", suite_forms}, {"dops", suite_dops},     {"thm13", suite_thm13},
        {"fundsol", suite_fundsol}, {"invariance", suite_invariance},
    };
    return r;
}

// Legendre nodes and weights on [-1, 1] by Newton iteration.
void gauss_legendre(int m, std::vector<double>& x, std::vector<double>& w) {
    x.assign(static_cast<std::size_t>(m), 0.0);
    w.assign(static_cast<std::size_t>(m), 0.0);
    for (int i = 0; i < m; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = z;
            for (int k = 2; k <= m; ++k) {
                const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = m * (z * p1 - p0) / (z * z - 1.0);
            const double dz = p1 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[static_cast<std::size_t>(i)] = z;
        w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
}

} // namespace

double rel_error(double a, double b) {
    const double d = std::max(std::abs(a), std::abs(b));
    return d == 0.0 ? 0.0 : std::abs(a - b) / d;
}

IntegralResult fundamental_integral(double cutoff) {
    std::vector<double> gx, gw;
    gauss_legendre(20, gx, gw);
    std::vector<double> breaks{0.0};
    for (double b = 0.25; b < cutoff; b *= 2.0) breaks.push_back(b);
    breaks.push_back(cutoff);
    double sum = 0.0;
    std::vector<double> q(4, 0.0);
    for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
        const double a = breaks[p], b = breaks[p + 1];
        for (std::size_t i = 0; i < gx.size(); ++i) {
            const double r = 0.5 * (a + b) + 0.5 * (b - a) * gx[i];
            q[0] = r;
            sum += 0.5 * (b - a) * gw[i] * fundamental_check(1, 1.0, q).lhs * r * r * r;
        }
    }
    const double pi2 = std::numbers::pi * std::numbers::pi;
    return {2.0 * pi2 * sum, 8.0 * pi2 / (cutoff * cutoff)};
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : registry()) v.push_back(name);
        v.push_back("all");
        return v;
    }();
    return names;
}

bool is_suite(const std::string& name) {
    const auto& v = suite_names();
    return std::find(v.begin(), v.end(), name) != v.end();
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
    if (!is_suite(name)) throw std::invalid_argument("unknown suite: " + name);
    SuiteReport report;
    report.suite = name;
    Runner run{opts, report};
    for (const auto& [suite, fn] : registry())
        if (name == "all" || name == suite) fn(run);
    for (const auto& c : report.checks) {
        report.cases += c.cases;
        report.max_residual = std::max(report.max_residual, c.max_residual);
        report.pass = report.pass && c.pass;
    }
    return report;
}

json_io::json to_json(const SuiteReport& r) {
    json_io::json checks = json_io::json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"max_residual", c.max_residual}, {"tol", c.tol}, {"cases", c.cases}, {"pass", c.pass}});
    return {{"suite", r.suite}, {"cases", r.cases}, {"max_residual", r.max_residual}, {"pass", r.pass}, {"checks", checks}};
}

} // namespace quatla::verify
