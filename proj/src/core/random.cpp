#include "quatla/random.hpp"

#include <algorithm>
#include <cmath>

#include "quatla/moore.hpp"

namespace quatla {

SplitMix64 case_rng(std::uint64_t seed, std::string_view tag, std::uint64_t k) {
    // FNV-1a of the tag keeps suites apart for the same seed.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : tag) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    SplitMix64 base(seed ^ h);
    SplitMix64 mixed(base() + k * 0xd1b54a32d192ed03ULL);
    return mixed.split();
}

double normal(SplitMix64& rng) { return std::normal_distribution<double>(0.0, 1.0)(rng); }

double uniform(SplitMix64& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

int uniform_int(SplitMix64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Quaternion random_quaternion(SplitMix64& rng) {
    Quaternion q;
    q.w = normal(rng);
    q.x = normal(rng);
    q.y = normal(rng);
    q.z = normal(rng);
    return q;
}

QMatrix random_qmatrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
    QMatrix m(rows, cols);
    for (auto& q : m.data()) q = random_quaternion(rng);
    return m;
}

QMatrix random_hyperhermitian(SplitMix64& rng, std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Quaternion{normal(rng), 0.0, 0.0, 0.0};
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = random_quaternion(rng);
            m(j, i) = conj(m(i, j));
        }
    }
    return m;
}

QMatrix random_complex_hermitian(SplitMix64& rng, std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Quaternion{normal(rng), 0.0, 0.0, 0.0};
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = Quaternion{normal(rng), normal(rng), 0.0, 0.0};
            m(j, i) = conj(m(i, j));
        }
    }
    return m;
}

CMatrix random_cmatrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
    CMatrix m(rows, cols);
    for (auto& c : m.data()) c = Complex{normal(rng), normal(rng)};
    return m;
}

CMatrix random_skew(SplitMix64& rng, std::size_t m) {
    CMatrix s(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            s(i, j) = Complex{normal(rng), normal(rng)};
            s(j, i) = -s(i, j);
        }
    return s;
}

QMatrix random_gl(SplitMix64& rng, std::size_t n) {
    for (;;) {
        QMatrix u = random_qmatrix(rng, n, n);
        const CMatrix t = tau(u);
        const HermitianEigen eig = hermitian_eigen(adjoint(t) * t);
        if (std::sqrt(std::max(0.0, eig.values.front())) >= 0.1) return u;
    }
}

QMatrix random_unitary(SplitMix64& rng, std::size_t n) {
    return diagonalize_hyperhermitian(random_hyperhermitian(rng, n)).E;
}

std::vector<double> random_point(SplitMix64& rng, std::size_t dim, double scale) {
    std::vector<double> x(dim);
    for (auto& v : x) v = scale * normal(rng);
    return x;
}

Polynomial random_real_polynomial(SplitMix64& rng, int vars, int max_degree, int terms, bool integer) {
    Polynomial p(vars);
    for (int t = 0; t < terms; ++t) {
        Exponent e(static_cast<std::size_t>(vars), 0);
        const int deg = uniform_int(rng, 0, max_degree);
        for (int d = 0; d < deg; ++d) ++e[static_cast<std::size_t>(uniform_int(rng, 0, vars - 1))];
        const double c = integer ? static_cast<double>(uniform_int(rng, -5, 5)) : normal(rng);
        p.add(e, c);
    }
    return p;
}

Form random_form(SplitMix64& rng, int n, int grade, int terms) {
    Form f(n, grade);
    std::vector<int> idx(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (int t = 0; t < terms; ++t) {
        std::shuffle(idx.begin(), idx.end(), rng);
        std::vector<int> pick(idx.begin(), idx.begin() + grade);
        std::sort(pick.begin(), pick.end());
        f.add(mask_of(pick), Complex{normal(rng), normal(rng)});
    }
    return f;
}

} // namespace quatla
