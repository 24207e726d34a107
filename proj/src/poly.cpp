#include "ncres/poly.hpp"

#include <sstream>

namespace ncres {

std::string var_name(int v, int n) {
    if (v == xin_var(n)) return "xin";
    if (v == h_var(n)) return "H";
    return "xi" + std::to_string(v + 1);
}

std::string Poly::str(int n) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int v = 0; v < kMaxVars; ++v) {
            if (m[v] == 0) continue;
            os << "*" << var_name(v, n);
            if (m[v] > 1) os << "^" << int(m[v]);
        }
    }
    return os.str();
}

}  // namespace ncres
