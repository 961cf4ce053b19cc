#pragma once

#include "dj/characters.hpp"
#include "dj/report.hpp"

#include <vector>

namespace dj {

// K = fixed field of H = <subgroup_gens> inside Q(zeta_N)
struct AbelianFieldSpec {
    long N = 1;
    std::vector<long> subgroup_gens;
};

std::vector<long> subgroup_elements(const AbelianFieldSpec& spec);
std::vector<DirichletCharacter> field_characters(const AbelianFieldSpec& spec);

// zeta_K(1 - k), k >= 1
BigRational zeta_special_value(const AbelianFieldSpec& spec, long k);

bool is_totally_real(const AbelianFieldSpec& spec);

// pi_{4t-1} J(K)[1/|H|] against the denominator of zeta_K(1 - 2t)
Report verify_JK(const AbelianFieldSpec& spec, long t);

}  // namespace dj
