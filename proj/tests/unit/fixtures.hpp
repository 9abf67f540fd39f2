#pragma once

#include "mcomb/chain_complex.hpp"
#include "mcomb/enumeration.hpp"

// Catalogs are built once per test binary.
inline const mcomb::Catalog& genus2_catalog() {
    static const mcomb::Catalog catalog = mcomb::build_catalog(2, {.min_valence = 3, .jobs = 4});
    return catalog;
}

inline const mcomb::Catalog& genus1_catalog() {
    static const mcomb::Catalog catalog = mcomb::build_catalog(1);
    return catalog;
}

inline const mcomb::ChainComplexData& genus2_complex() {
    static const mcomb::ChainComplexData cc = mcomb::build_chain_complex(genus2_catalog(), {.jobs = 4});
    return cc;
}
