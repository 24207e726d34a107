#include "ncres/algebra.hpp"

#include <bit>
#include <stdexcept>

namespace ncres {

AlgebraElement AlgebraElement::identity(int dim, int n) {
    AlgebraElement r(dim, n);
    for (int k = 0; k < dim; ++k) r.at(k, k) = RatFunc::constant(GRat(1), n);
    return r;
}

AlgebraElement AlgebraElement::scalar(const RatFunc& s, int dim) {
    AlgebraElement r(dim, s.dim());
    for (int k = 0; k < dim; ++k) r.at(k, k) = s;
    return r;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("algebra: dimension mismatch");
    AlgebraElement r = a;
    for (size_t k = 0; k < r.e_.size(); ++k) r.e_[k] += b.e_[k];
    return r;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) { return a + (-b); }

AlgebraElement operator-(const AlgebraElement& a) {
    AlgebraElement r = a;
    for (auto& f : r.e_) f = -f;
    return r;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("algebra: dimension mismatch");
    int d = a.dim_;
    AlgebraElement r(d, a.n_);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            const RatFunc& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < d; ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) += aik * b.at(k, j);
            }
        }
    return r;
}

AlgebraElement operator*(const AlgebraElement& a, const RatFunc& s) {
    AlgebraElement r = a;
    for (auto& f : r.e_) f *= s;
    return r;
}

AlgebraElement operator*(const AlgebraElement& a, const GRat& s) {
    AlgebraElement r = a;
    for (auto& f : r.e_) f = f * s;
    return r;
}

bool AlgebraElement::is_zero() const {
    for (const auto& f : e_)
        if (!f.is_zero()) return false;
    return true;
}

RatFunc AlgebraElement::trace() const {
    RatFunc t(Poly(), 0, 0, n_);
    for (int k = 0; k < dim_; ++k) t += at(k, k);
    return t;
}

AlgebraElement pi_plus_symbol(const AlgebraElement& e) {
    return e.map([](const RatFunc& f) { return f.principal_part_at_i(); });
}

namespace {

AlgebraElement from_entries(int dim, int n, const std::vector<std::vector<GRat>>& m) {
    AlgebraElement r(dim, n);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) r.at(i, j) = RatFunc::constant(m[i][j], n);
    return r;
}

// Pauli matrices times i: anticommuting, squaring to -Id, entries in {0,+-1,+-i}.
std::vector<AlgebraElement> spinor_generators(int n) {
    GRat I = GRat::i();
    auto s1 = std::vector<std::vector<GRat>>{{GRat(0), I}, {I, GRat(0)}};
    auto s2 = std::vector<std::vector<GRat>>{{GRat(0), GRat(1)}, {GRat(-1), GRat(0)}};
    auto s3 = std::vector<std::vector<GRat>>{{I, GRat(0)}, {GRat(0), -I}};
    if (n == 3)
        return {from_entries(2, 3, s1), from_entries(2, 3, s2), from_entries(2, 3, s3)};
    // n = 4: i*(sigma_1 x 1), i*(sigma_2 x 1), i*(sigma_3 x sigma_1), i*(sigma_3 x sigma_2)
    auto kron = [&](const std::vector<std::vector<GRat>>& A,
                    const std::vector<std::vector<GRat>>& B) {
        std::vector<std::vector<GRat>> M(4, std::vector<GRat>(4, GRat(0)));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l) M[2 * i + k][2 * j + l] = A[i][j] * B[k][l];
        return M;
    };
    auto p1 = std::vector<std::vector<GRat>>{{GRat(0), GRat(1)}, {GRat(1), GRat(0)}};
    auto p2 = std::vector<std::vector<GRat>>{{GRat(0), -I}, {I, GRat(0)}};
    auto p3 = std::vector<std::vector<GRat>>{{GRat(1), GRat(0)}, {GRat(0), GRat(-1)}};
    auto id = std::vector<std::vector<GRat>>{{GRat(1), GRat(0)}, {GRat(0), GRat(1)}};
    auto scale = [&](std::vector<std::vector<GRat>> M) {
        for (auto& row : M)
            for (auto& x : row) x = x * I;
        return M;
    };
    return {from_entries(4, 4, scale(kron(p1, id))), from_entries(4, 4, scale(kron(p2, id))),
            from_entries(4, 4, scale(kron(p3, p1))), from_entries(4, 4, scale(kron(p3, p2)))};
}

// Exterior and interior multiplication by e_j on the wedge-monomial basis
// indexed by bitmasks; sign = (-1)^{# indices below j in the monomial}.
AlgebraElement eps_matrix(int j, int n) {
    int dim = 1 << n;
    AlgebraElement r(dim, n);
    for (int S = 0; S < dim; ++S) {
        if (S & (1 << j)) continue;
        int below = std::popcount(unsigned(S & ((1 << j) - 1)));
        GRat sign = (below % 2 == 0) ? GRat(1) : GRat(-1);
        r.at(S | (1 << j), S) = RatFunc::constant(sign, n);
    }
    return r;
}

AlgebraElement iota_matrix(int j, int n) {
    int dim = 1 << n;
    AlgebraElement r(dim, n);
    for (int S = 0; S < dim; ++S) {
        if (!(S & (1 << j))) continue;
        int below = std::popcount(unsigned(S & ((1 << j) - 1)));
        GRat sign = (below % 2 == 0) ? GRat(1) : GRat(-1);
        r.at(S & ~(1 << j), S) = RatFunc::constant(sign, n);
    }
    return r;
}

}  // namespace

void verify_relations(const Backend& b) {
    AlgebraElement id = AlgebraElement::identity(b.dim, b.n);
    auto anti = [&](const AlgebraElement& x, const AlgebraElement& y) { return x * y + y * x; };
    for (int i = 0; i < b.n; ++i)
        for (int j = 0; j < b.n; ++j) {
            AlgebraElement expect = (i == j) ? id * GRat(-2) : AlgebraElement(b.dim, b.n);
            if (anti(b.c[i], b.c[j]) != expect)
                throw std::logic_error("backend: Clifford relation violated for c");
        }
    if (b.kind == BackendKind::Exterior) {
        for (int i = 0; i < b.n; ++i)
            for (int j = 0; j < b.n; ++j) {
                AlgebraElement expect = (i == j) ? id * GRat(2) : AlgebraElement(b.dim, b.n);
                if (anti(b.cbar[i], b.cbar[j]) != expect)
                    throw std::logic_error("backend: Clifford relation violated for cbar");
                if (!anti(b.c[i], b.cbar[j]).is_zero())
                    throw std::logic_error("backend: c/cbar anticommutation violated");
            }
    }
}

Backend make_backend(BackendKind kind, int n) {
    Backend b;
    b.kind = kind;
    b.n = n;
    if (kind == BackendKind::Spinor) {
        if (n != 3 && n != 4)
            throw std::invalid_argument("backend: spinor supported for n = 3, 4 only");
        b.dim = (n == 3) ? 2 : 4;
        b.c = spinor_generators(n);
    } else {
        if (n != 4) throw std::invalid_argument("backend: exterior supported for n = 4 only");
        b.dim = 1 << n;
        for (int j = 0; j < n; ++j) {
            AlgebraElement e = eps_matrix(j, n), io = iota_matrix(j, n);
            b.c.push_back(e - io);
            b.cbar.push_back(e + io);
        }
    }
    verify_relations(b);
    return b;
}

AlgebraElement clifford_of_covector(const Backend& b, std::span<const Poly> coeffs) {
    if (int(coeffs.size()) != b.n) throw std::invalid_argument("clifford: coefficient count != n");
    AlgebraElement r(b.dim, b.n);
    for (int i = 0; i < b.n; ++i) r += b.c[i] * RatFunc::from_poly(coeffs[i], b.n);
    return r;
}

AlgebraElement cbar_of_covector(const Backend& b, std::span<const Poly> coeffs) {
    if (b.kind != BackendKind::Exterior)
        throw std::invalid_argument("clifford: cbar needs the exterior backend");
    if (int(coeffs.size()) != b.n) throw std::invalid_argument("clifford: coefficient count != n");
    AlgebraElement r(b.dim, b.n);
    for (int i = 0; i < b.n; ++i) r += b.cbar[i] * RatFunc::from_poly(coeffs[i], b.n);
    return r;
}

AlgebraElement c_xi_prime(const Backend& b) {
    std::vector<Poly> coeffs(b.n);
    for (int i = 0; i < b.n - 1; ++i) coeffs[i] = Poly::var(i);
    return clifford_of_covector(b, coeffs);
}

long graded_mode_trace(int m) {
    if (m < 0 || m > 4) throw std::invalid_argument("graded trace: degree out of range");
    int n = 4, i = 0, nn = 3;  // i != n
    AlgebraElement Ei = eps_matrix(i, n), Ii = iota_matrix(i, n);
    AlgebraElement En = eps_matrix(nn, n), In = iota_matrix(nn, n);
    AlgebraElement prod = (Ei * Ii - Ii * Ei) * (En * In - In * En);
    GRat tr(0);
    for (int S = 0; S < (1 << n); ++S) {
        if (std::popcount(unsigned(S)) != m) continue;
        const RatFunc& d = prod.at(S, S);
        if (!d.is_zero()) tr += d.num().constant_value();
    }
    if (tr.im != 0 || denominator(tr.re) != 1)
        throw std::logic_error("graded trace: non-integer value");
    return long(numerator(tr.re));
}

}  // namespace ncres
