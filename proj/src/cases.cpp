#include "ncres/cases.hpp"

#include "ncres/sphere.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace ncres {

std::string to_string(OperatorKind op) {
    return op == OperatorKind::Dirac ? "dirac" : "signature";
}

std::vector<CaseIndex> enumerate_cases(int n, int min_order) {
    std::vector<CaseIndex> out;
    // r - k - |alpha| + l - j - 1 = -n, r, l <= -1; derivative counts bounded
    // by the order budget, so a small box search is exhaustive.
    int budget = n;
    for (int r = -1; r >= min_order; --r)
        for (int l = -1; l >= min_order; --l)
            for (int k = 0; k <= budget; ++k)
                for (int j = 0; j <= budget; ++j)
                    for (int alpha = 0; alpha <= budget; ++alpha)
                        if (r - k - alpha + l - j - 1 == -n)
                            out.push_back({r, l, k, j, alpha, ""});
    for (auto& c : out) {
        if (c.r == -1 && c.l == -1 && c.alpha == 1) c.label = "a I";
        else if (c.r == -1 && c.l == -1 && c.j == 1) c.label = "a II";
        else if (c.r == -1 && c.l == -1 && c.k == 1) c.label = "a III";
        else if (c.r == -2 && c.l == -1) c.label = "b";
        else if (c.r == -1 && c.l == -2) c.label = "c";
        else c.label = "(" + std::to_string(c.r) + "," + std::to_string(c.l) + "," +
                       std::to_string(c.k) + "," + std::to_string(c.j) + "," +
                       std::to_string(c.alpha) + ")";
    }
    auto rank = [](const CaseIndex& c) {
        // conventional presentation order: both-orders -1 first, then the
        // mixed (-2,-1) and (-1,-2) cases
        return std::tuple(c.r + c.l, c.l, c.alpha, c.j, c.k);
    };
    std::stable_sort(out.begin(), out.end(),
                     [&](const CaseIndex& x, const CaseIndex& y) { return rank(y) < rank(x); });
    return out;
}

namespace {

long factorial(int k) {
    long r = 1;
    for (int j = 2; j <= k; ++j) r *= j;
    return r;
}

const JetElem& symbol_of_order(const SymbolSet& s, int order) {
    if (order == -1) return s.q1;
    if (order == -2) return s.q2;
    throw SymbolError("case: symbol order below -2 requested");
}

}  // namespace

RatFunc case_trace(const CaseIndex& idx, const SymbolSet& symbols) {
    int n = symbols.backend.n;
    if (idx.alpha > 0)
        // The partner factor carries d^alpha_{x'}, identically zero at x_0.
        return RatFunc(Poly(), 0, 0, n);

    JetElem left = symbol_of_order(symbols, idx.r).pi_plus();
    for (int m = 0; m < idx.k; ++m) left = left.derive_xin();
    AlgebraElement f1 = (idx.j == 0) ? left.val : (idx.j == 1 ? left.derive_xn()
                        : throw SymbolError("case: jet depth exceeded (j > 1)"));

    JetElem right = symbol_of_order(symbols, idx.l);
    for (int m = 0; m < idx.j + 1; ++m) right = right.derive_xin();
    AlgebraElement f2 = (idx.k == 0) ? right.val : (idx.k == 1 ? right.derive_xn()
                        : throw SymbolError("case: jet depth exceeded (k > 1)"));

    return (f1 * f2).trace();
}

CaseResult evaluate_case(const CaseIndex& idx, const SymbolSet& symbols) {
    int n = symbols.backend.n;
    if (idx.alpha > 0) return {idx, ScalarSum{}};

    RatFunc tr = case_trace(idx, symbols);
    Poly pi_coeff = tr.line_integral_pi_coefficient();
    ScalarSum integral = sphere_integrate(pi_coeff, n).scaled(GRat(1), /*pi_pow=*/1);

    GRat pref = (-GRat::i()).pow(idx.alpha + idx.j + idx.k + 1)
              * (GRat(1) / GRat(factorial(idx.j + idx.k + 1)));
    // alpha! = 1 for every evaluated case (|alpha| = 0)
    return {idx, integral.scaled(pref)};
}

PhiReport assemble_phi(const SymbolSet& symbols, OperatorKind op) {
    PhiReport rep;
    rep.op = op;
    rep.n = symbols.backend.n;
    for (const auto& idx : enumerate_cases(rep.n)) {
        rep.cases.push_back(evaluate_case(idx, symbols));
        rep.total += rep.cases.back().contribution;
    }
    return rep;
}

PhiReport assemble_phi(OperatorKind op, int n) {
    if (op == OperatorKind::Signature && n != 4)
        throw std::invalid_argument("phi: signature operator supported for n = 4 only");
    if (n != 3 && n != 4) throw std::invalid_argument("phi: n must be 3 or 4");
    Backend backend = make_backend(
        op == OperatorKind::Dirac ? BackendKind::Spinor : BackendKind::Exterior, n);
    return assemble_phi(build_symbols(backend), op);
}

namespace {
ScalarSum named_case(const SymbolSet& symbols, const std::string& label) {
    for (const auto& idx : enumerate_cases(symbols.backend.n))
        if (idx.label == label) return evaluate_case(idx, symbols).contribution;
    throw std::invalid_argument("case label not present for this dimension");
}
}  // namespace

ScalarSum res_11(const SymbolSet& symbols) { return named_case(symbols, "a II"); }
ScalarSum res_21(const SymbolSet& symbols) { return named_case(symbols, "b"); }

KkwReport kkw_total(OperatorKind op, int n) {
    PhiReport phi = assemble_phi(op, n);
    KkwReport rep{op, n, phi.total, std::nullopt};
    if (n == 4)
        rep.interior = (op == OperatorKind::Dirac) ? "-Omega_4/3" : "8*Omega_4/3";
    return rep;
}

}  // namespace ncres
