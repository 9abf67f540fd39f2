#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "mcomb/enumeration.hpp"

namespace mcomb {

using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& q);

struct EulerReport {
    std::int64_t plain_chi = 0;        // sum of (-1)^dim
    Rational orbifold_chi = 0;         // sum of (-1)^dim / |Aut|
    std::optional<Rational> hz_reference;
};

/// Harer-Zagier orbifold Euler characteristic of M_{g,1}; tabulated for
/// g = 1, 2 only.
std::optional<Rational> harer_zagier_reference(int genus);

EulerReport euler(const Catalog& catalog);

}  // namespace mcomb
