#include "mcomb/invariants.hpp"

namespace mcomb {

std::string to_string(const Rational& q) {
    const auto num = boost::multiprecision::numerator(q);
    const auto den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::optional<Rational> harer_zagier_reference(int genus) {
    switch (genus) {
        case 1: return Rational(-1, 12);
        case 2: return Rational(1, 120);
        default: return std::nullopt;
    }
}

EulerReport euler(const Catalog& catalog) {
    EulerReport report;
    for (int dim : catalog.dims()) {
        const int sign = dim % 2 == 0 ? 1 : -1;
        for (const auto& cell : catalog.cells(dim)) {
            report.plain_chi += sign;
            report.orbifold_chi += Rational(sign, cell.aut.order);
        }
    }
    if (!catalog.empty()) report.hz_reference = harer_zagier_reference(catalog.genus());
    return report;
}

}  // namespace mcomb
