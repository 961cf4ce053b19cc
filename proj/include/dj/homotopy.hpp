#pragma once

#include "dj/characters.hpp"
#include "dj/groups.hpp"
#include "dj/padic.hpp"
#include "dj/report.hpp"

#include <vector>

namespace dj {

AbelianGroupExpr pi_J(long i);
AbelianGroupExpr pi_JN(long N, long i);

// K(1)-local spheres
AbelianGroupExpr pi_K1(long p, long i);
AbelianGroupExpr pi_K1_pv(long p, int v, long i);
AbelianGroupExpr pi_exotic(long i);
// eigen-spectrum of S_K(1)(p^v) for the tame character omega^a alone, p odd
AbelianGroupExpr pi_K1_pv_tame(long p, int v, int a, long i);

AbelianGroupExpr pi_DK1(const PAdicCharacterData& d, long i);
AbelianGroupExpr pi_DK1_primed(const PAdicCharacterData& d, long i);

std::vector<PAdicCharacterData> decompose_p(const DirichletCharacter& chi, long p);

// The two computations of pi_i(J(N)^{h chi}); pi_JN_chi insists they agree.
AbelianGroupExpr pi_JN_chi_direct(const DirichletCharacter& chi, long i);
AbelianGroupExpr pi_JN_chi_assembled(const DirichletCharacter& chi, long i);
AbelianGroupExpr pi_JN_chi(const DirichletCharacter& chi, long i, const LocalizationSpec& loc = {});

// J(K) for K the fixed field of the subgroup of (Z/N)^x generated by gens, N a prime power or 1
AbelianGroupExpr pi_JK(long N, const std::vector<long>& gens, long i, bool invert_G);
long subgroup_order(long N, const std::vector<long>& gens);

Report check_duality_dirichlet(const DirichletCharacter& chi, long t_lo, long t_hi);
Report check_duality_JN(long N, long t_lo, long t_hi);

}  // namespace dj
