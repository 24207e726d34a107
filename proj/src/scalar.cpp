#include "ncres/scalar.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ncres {

double ScalarSum::eval(double omega, double h) const {
    double acc = 0.0;
    for (const auto& t : terms()) {
        if (t.coeff.im != 0)
            throw std::logic_error("scalar: eval of a value with nonzero imaginary part");
        double c = static_cast<double>(t.coeff.re);
        acc += c * std::pow(M_PI, t.pi_pow) * std::pow(omega, t.omega_pow) * std::pow(h, t.h_pow);
    }
    return acc;
}

ScalarSum ScalarSum::substitute_omega(int n) const {
    GRat factor;
    if (n == 3) factor = GRat(2);        // Omega_2 = 2 pi
    else if (n == 4) factor = GRat(4);   // Omega_3 = 4 pi
    else throw std::invalid_argument("scalar: Omega substitution only for n = 3, 4");
    ScalarSum r;
    for (auto t : terms()) {
        t.coeff = t.coeff * factor.pow(t.omega_pow);
        t.pi_pow += t.omega_pow;
        t.omega_pow = 0;
        r.add(t);
    }
    return r;
}

std::string ScalarSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << t.coeff.str() << ")";
        for (int k = 0; k < t.pi_pow; ++k) os << "*pi";
        for (int k = 0; k < t.omega_pow; ++k) os << "*Omega";
        for (int k = 0; k < t.h_pow; ++k) os << "*H";
    }
    return os.str();
}

}  // namespace ncres
