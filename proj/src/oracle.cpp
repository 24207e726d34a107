#include "ncres/oracle.hpp"

#include "ncres/sphere.hpp"

#include <cmath>

namespace ncres::oracle {

namespace {

double to_double(const Rat& r) { return r.convert_to<double>(); }

std::complex<double> to_complex(const GRat& c) { return {to_double(c.re), to_double(c.im)}; }

long factorial(int k) {
    long r = 1;
    for (int j = 2; j <= k; ++j) r *= j;
    return r;
}

// Adaptive Simpson, complex-valued.
std::complex<double> simpson(const std::function<std::complex<double>(double)>& f, double a,
                             double b, std::complex<double> fa, std::complex<double> fb,
                             std::complex<double> fm, double eps, int depth, bool& ok) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    std::complex<double> flm = f(lm), frm = f(rm);
    std::complex<double> whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    std::complex<double> left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    std::complex<double> right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    std::complex<double> delta = left + right - whole;
    if (depth <= 0) { ok = false; return left + right + delta / 15.0; }
    if (std::abs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
    return simpson(f, a, m, fa, fm, flm, eps / 2, depth - 1, ok) +
           simpson(f, m, b, fm, fb, frm, eps / 2, depth - 1, ok);
}

std::complex<double> adaptive(const std::function<std::complex<double>(double)>& f, double a,
                              double b, double eps, bool& ok) {
    std::complex<double> fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    return simpson(f, a, b, fa, fb, fm, eps, 48, ok);
}

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
void gauss_legendre(int m, std::vector<double>& x, std::vector<double>& w) {
    x.assign(m, 0.0);
    w.assign(m, 0.0);
    for (int i = 0; i < m; ++i) {
        double t = std::cos(M_PI * (i + 0.75) / (m + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < m; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * t * p1 - j * p2) / (j + 1.0);
            }
            double dp = m * (t * p0 - p1) / (t * t - 1.0);
            double dt = -p0 / dp;
            t += dt;
            if (std::abs(dt) < 1e-15) break;
        }
        x[i] = t;
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < m; ++j) {
            double p2 = p1;
            p1 = p0;
            p0 = ((2.0 * j + 1.0) * t * p1 - j * p2) / (j + 1.0);
        }
        double dp = m * (t * p0 - p1) / (t * t - 1.0);
        w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
}

// Numerator flattened to double coefficients once, so quadrature nodes do no
// arbitrary-precision work.
struct CompiledRatFunc {
    struct Term {
        std::complex<double> c;
        std::array<int, kMaxVars> e;
    };
    std::vector<Term> terms;
    int a, b, n;

    explicit CompiledRatFunc(const RatFunc& f)
        : a(f.pole_at_i()), b(f.pole_at_minus_i()), n(f.dim()) {
        for (const auto& [m, c] : f.num().terms()) {
            Term t{to_complex(c), {}};
            for (int v = 0; v < kMaxVars; ++v) t.e[v] = m[v];
            terms.push_back(t);
        }
    }

    std::complex<double> eval(const std::vector<double>& xi_prime, double xin, double h) const {
        std::complex<double> acc = 0.0;
        for (const auto& t : terms) {
            std::complex<double> v = t.c;
            for (int k = 0; k < n - 1; ++k)
                for (int p = 0; p < t.e[k]; ++p) v *= xi_prime[k];
            for (int p = 0; p < t.e[xin_var(n)]; ++p) v *= xin;
            for (int p = 0; p < t.e[h_var(n)]; ++p) v *= h;
            acc += v;
        }
        std::complex<double> I(0.0, 1.0);
        std::complex<double> den = 1.0;
        for (int p = 0; p < a; ++p) den *= std::complex<double>(xin) - I;
        for (int p = 0; p < b; ++p) den *= std::complex<double>(xin) + I;
        return acc / den;
    }
};

double rel_or_abs_err(std::complex<double> exact, std::complex<double> numeric) {
    double scale = std::abs(exact);
    if (scale < 1e-12) return std::abs(numeric - exact);
    return std::abs(numeric - exact) / scale;
}

}  // namespace

std::complex<double> eval_poly(const Poly& p, const std::vector<double>& xi_prime, double xin,
                               double h) {
    int n = int(xi_prime.size()) + 1;
    std::complex<double> acc = 0.0;
    for (const auto& [m, c] : p.terms()) {
        std::complex<double> term = to_complex(c);
        for (int v = 0; v < n - 1; ++v) term *= std::pow(xi_prime[v], int(m[v]));
        term *= std::pow(xin, int(m[xin_var(n)]));
        term *= std::pow(h, int(m[h_var(n)]));
        acc += term;
    }
    return acc;
}

std::complex<double> eval_ratfunc(const RatFunc& f, const std::vector<double>& xi_prime,
                                  double xin, double h) {
    std::complex<double> num = eval_poly(f.num(), xi_prime, xin, h);
    std::complex<double> I(0.0, 1.0);
    std::complex<double> den = std::pow(std::complex<double>(xin) - I, f.pole_at_i()) *
                               std::pow(std::complex<double>(xin) + I, f.pole_at_minus_i());
    return num / den;
}

std::complex<double> quad_line(const std::function<std::complex<double>(double)>& f,
                               bool* converged) {
    bool ok = true;
    // xi_n = tan t maps the line onto (-pi/2, pi/2); integrands of degree
    // <= -2 stay bounded after the substitution.
    auto g = [&](double t) {
        double c = std::cos(t);
        if (std::abs(c) < 1e-14) c = (c < 0 ? -1e-14 : 1e-14);
        double xin = std::sin(t) / c;
        return f(xin) / (c * c);
    };
    // Subdivide before going adaptive: a single Simpson panel over the whole
    // range can terminate on an accidental agreement for oscillatory
    // numerators.
    const int panels = 16;
    double lo = -M_PI / 2 + 1e-13, hi = M_PI / 2 - 1e-13;
    std::complex<double> acc = 0.0;
    for (int p = 0; p < panels; ++p) {
        double a = lo + (hi - lo) * p / panels;
        double b = lo + (hi - lo) * (p + 1) / panels;
        acc += adaptive(g, a, b, 1e-12, ok);
    }
    if (converged) *converged = ok;
    return acc;
}

std::complex<double> quad_sphere(
    const std::function<std::complex<double>(const std::vector<double>&)>& f, int n) {
    if (n == 3) {
        // S^1: trapezoid is spectrally accurate for trigonometric polynomials.
        int m = 64;
        std::complex<double> acc = 0.0;
        for (int k = 0; k < m; ++k) {
            double phi = 2.0 * M_PI * k / m;
            acc += f({std::cos(phi), std::sin(phi)});
        }
        return acc * (2.0 * M_PI / m);
    }
    if (n == 4) {
        // S^2: Gauss-Legendre in cos(theta), trapezoid in phi.
        int mphi = 32, mz = 16;
        std::vector<double> z, w;
        gauss_legendre(mz, z, w);
        std::complex<double> acc = 0.0;
        for (int iz = 0; iz < mz; ++iz) {
            double s = std::sqrt(std::max(0.0, 1.0 - z[iz] * z[iz]));
            std::complex<double> ring = 0.0;
            for (int k = 0; k < mphi; ++k) {
                double phi = 2.0 * M_PI * k / mphi;
                ring += f({s * std::cos(phi), s * std::sin(phi), z[iz]});
            }
            acc += w[iz] * ring * (2.0 * M_PI / mphi);
        }
        return acc;
    }
    throw std::invalid_argument("oracle: sphere quadrature only for n = 3, 4");
}

double monte_carlo_moment(const std::vector<int>& alpha, int n, std::size_t samples,
                          std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    int d = n - 1;
    double acc = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<double> x(d);
        double norm = 0.0;
        for (auto& v : x) { v = gauss(rng); norm += v * v; }
        norm = std::sqrt(norm);
        double term = 1.0;
        for (int v = 0; v < d; ++v) term *= std::pow(x[v] / norm, alpha[v]);
        acc += term;
    }
    double area = (n == 3) ? 2.0 * M_PI : 4.0 * M_PI;
    return acc / double(samples) * area;
}

Record check_line_integral(const std::string& id, const RatFunc& f,
                           const std::vector<double>& xi_prime, double h) {
    Record rec;
    rec.id = id;
    Poly pi_coeff = f.line_integral_pi_coefficient();
    rec.exact = M_PI * eval_poly(pi_coeff, xi_prime, 0.0, h);
    bool ok = true;
    CompiledRatFunc cf(f);
    rec.numeric = quad_line([&](double xin) { return cf.eval(xi_prime, xin, h); }, &ok);
    rec.converged = ok;
    rec.rel_err = rel_or_abs_err(rec.exact, rec.numeric);
    rec.pass = ok && rec.rel_err <= kTolerance;
    return rec;
}

Record check_case(const CaseIndex& idx, const SymbolSet& symbols, double h) {
    Record rec;
    rec.id = "case " + idx.label;
    int n = symbols.backend.n;
    CaseResult exact = evaluate_case(idx, symbols);
    double area = (n == 3) ? 2.0 * M_PI : 4.0 * M_PI;
    // All final contributions are real multiples of pi * Omega * H^p.
    rec.exact = exact.contribution.eval(area, h);
    if (idx.alpha > 0) {
        rec.numeric = 0.0;  // the d^alpha_{x'} factor vanishes identically
        rec.rel_err = 0.0;
        rec.pass = true;
        return rec;
    }
    CompiledRatFunc tr(case_trace(idx, symbols));
    bool all_ok = true;
    std::complex<double> integral = quad_sphere(
        [&](const std::vector<double>& xi_prime) {
            bool ok = true;
            auto v = quad_line(
                [&](double xin) { return tr.eval(xi_prime, xin, h); }, &ok);
            all_ok = all_ok && ok;
            return v;
        },
        n);
    std::complex<double> I(0.0, 1.0);
    std::complex<double> pref =
        std::pow(-I, idx.alpha + idx.j + idx.k + 1) / double(factorial(idx.j + idx.k + 1));
    rec.numeric = pref * integral;
    rec.converged = all_ok;
    rec.rel_err = rel_or_abs_err(rec.exact, rec.numeric);
    rec.pass = all_ok && rec.rel_err <= kTolerance;
    return rec;
}

RatFunc random_admissible(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> pole(1, 3);
    std::uniform_int_distribution<int> coeff(-4, 4);
    int a = pole(rng), b = pole(rng);
    int max_deg = a + b - 2;
    Poly num;
    for (int d = 0; d <= max_deg; ++d) {
        GRat c(Rat(coeff(rng)), Rat(coeff(rng)));
        if (c.is_zero()) continue;
        num += Poly::var(xin_var(n), d) * c;
    }
    if (num.is_zero()) num = Poly(1);
    RatFunc f(num, a, b, n);
    if (f.xin_degree() > -2) f = RatFunc(Poly(1), 1, 1, n);  // cancellation ate the margin
    return f;
}

}  // namespace ncres::oracle
