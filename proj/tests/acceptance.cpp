// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "quatla/verify.hpp"

namespace {

using quatla::verify::SuiteReport;

struct Criterion {
    int id;
    std::string title;
    std::string suite;
    std::vector<std::string> checks;
    double time_limit; // seconds, 0 = none
};

const quatla::verify::CheckResult* find(const SuiteReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Delta_n(tau(M_i)J) = 2^n n! mixed discriminant, n=1..4, 50 tuples each", "thm12",
         {"thm12_n1", "thm12_n2", "thm12_n3", "thm12_n4"}, 30.0},
        {2, "real 2-forms: reality criterion (200) and normalization residual (100)", "forms",
         {"reality_criterion", "normalization_residual"}, 0.0},
        {3, "Delta u_1 ^ ... ^ Delta u_n = n! det(u_1..u_n) Omega, n=1..3", "thm13",
         {"thm13_n1", "thm13_n2", "thm13_n3"}, 0.0},
        {4, "d0 d1 = -d1 d0, d0^2 = d1^2 = 0, Leibniz rule", "dops", {"d_identities_exact", "d_identities_float"}, 0.0},
        {5, "nabla z table = 2 delta, nabla |q|^2 = 2 conj(z)", "dops", {"nabla_z_table"}, 0.0},
        {6, "fundamental solution pointwise (n=1,2) and integral 4 pi^2 at n=1", "fundsol",
         {"fundsol_pointwise_n1", "fundsol_pointwise_n2", "fundsol_integral_n1"}, 10.0},
        {7, "chain rule, d/Delta invariance under GL(2), beta/Omega under U(3)", "invariance",
         {"chain_rule", "invariance_d0", "invariance_d1", "invariance_baston", "unitary_beta_omega"}, 0.0},
        {8, "Moore determinant: complex agreement, product rule, pairing, tau det square", "moore",
         {"complex_hermitian_agreement", "product_rule", "eigenvalue_pairing", "tau_det_square"}, 0.0},
    };

    bool all = true;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        const SuiteReport r = quatla::verify::run_suite(c.suite, {20240601, 0});
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = c.time_limit == 0.0 || secs <= c.time_limit;
        std::string detail;
        for (const auto& name : c.checks) {
            const auto* res = find(r, name);
            if (res == nullptr) {
                pass = false;
                detail += " " + name + "=missing";
                continue;
            }
            pass = pass && res->pass;
            char buf[160];
            std::snprintf(buf, sizeof buf, " %s=%.2e/%.0e(%d)", name.c_str(), res->max_residual, res->tol, res->cases);
            detail += buf;
        }
        if (c.id == 6) {
            const auto ir = quatla::verify::fundamental_integral();
            char buf[120];
            std::snprintf(buf, sizeof buf, " integral=%.6f target=%.6f", ir.value, 4.0 * std::numbers::pi * std::numbers::pi);
            detail += buf;
        }
        char head[64];
        std::snprintf(head, sizeof head, " [%.2fs]", secs);
        std::printf("%s criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(), head, detail.c_str());
        all = all && pass;
    }
    return all ? 0 : 1;
}
