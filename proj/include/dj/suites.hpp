#pragma once

#include "dj/dedekind.hpp"
#include "dj/report.hpp"

#include <string>
#include <vector>

namespace dj {

// Verification sweeps shared by the CLI and the acceptance binary.
// Defaults are the acceptance ranges.
Report suite_von_staudt(long k_max = 30);
Report suite_gbn_oracle(long max_modulus = 16, long k_max = 12);
Report suite_carlitz(const std::vector<long>& conductors = {3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27}, long k_max = 20);
// quotient of the denominator ideal of chi^{-1} against pi_{2k-1} of J(N)^{h chi}, both with l(chi) inverted;
// 2 is inverted as well for odd prime powers p^v, v >= 2
Report suite_gbn_theorem(const std::vector<long>& conductors = {3, 4, 5, 7, 11, 13, 9, 25, 27}, long max_weight = 12);
Report suite_e2_oracle();
Report suite_consistency(long max_conductor = 27, long i_lo = -8, long i_hi = 24);
Report suite_duality_dirichlet(long t_lo = -20, long t_hi = 20);
Report suite_duality_jn(long t_lo = -10, long t_hi = 10);
// weights k <= k_max for nontrivial chi, even weights <= 2 * k_max + 2 for conductor 1
Report suite_eisenstein(const std::vector<long>& conductors = {1, 3, 4, 5, 7}, long k_max = 9, long n_max = 200);
Report suite_dedekind_jk(const std::vector<AbelianFieldSpec>& fields = {{5, {4}}, {7, {6}}, {8, {7}}, {1, {}}},
                         const std::vector<long>& ts = {1, 2, 3});
Report suite_splitting(long n_max = 30, long p_max = 13);

const std::vector<std::string>& suite_names();
Report run_suite(const std::string& name);

}  // namespace dj
