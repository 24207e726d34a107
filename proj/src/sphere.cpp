#include "ncres/sphere.hpp"

#include <stdexcept>

namespace ncres {

namespace {
long double_factorial(int k) {  // (-1)!! = 1
    long r = 1;
    for (int j = k; j >= 2; j -= 2) r *= j;
    return r;
}
}  // namespace

Rat sphere_moment(const std::vector<int>& alpha, int n) {
    int d = n - 1;
    int total = 0;
    for (int a : alpha) {
        if (a % 2 != 0) return Rat(0);
        total += a;
    }
    int m = total / 2;
    Rat num(1), den(1);
    for (int a : alpha) num *= double_factorial(a - 1);
    for (int j = 0; j < m; ++j) den *= (d + 2 * j);
    return num / den;
}

ScalarSum sphere_integrate(const Poly& p, int n) {
    ScalarSum out;
    for (const auto& [mono, c] : p.terms()) {
        if (mono[xin_var(n)] != 0)
            throw std::invalid_argument("sphere: integrand still depends on xi_n");
        std::vector<int> alpha;
        for (int v = 0; v <= n - 2; ++v) alpha.push_back(mono[v]);
        Rat w = sphere_moment(alpha, n);
        if (w == 0) continue;
        out.add(ScalarTerm{c * GRat(w), 0, 1, int(mono[h_var(n)])});
    }
    return out;
}

}  // namespace ncres
