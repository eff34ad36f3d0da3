#pragma once

#include <cstdint>
#include <vector>

#include "maskmat/probes.hpp"

namespace maskmat {

// Share-level evaluation of the two multiplication gadgets. Library-only
// surface: used by the selftest and the correctness tests; not a hardened
// masked implementation (no uniformity claims about the randoms supplied).

// alg4 gadget. Inputs: a, b of size d+1; randoms r, s of size d. Output:
// 2d+1 shares c with
//   c_0     = (a_0 + sum_i (r_i + a_{1+i})) * (b_0 + sum_i (s_i + b_{1+i}))
//   c_{1+i} = r_i * (b_0 + sum_j (delta[j][i]*s_j + b_{1+j}))
//   c_{1+d+i} = s_i * (a_0 + sum_j (A[i][j]*r_j + a_{1+j}))
// where A = gamma rows 1..d and delta = J - A. The sum of outputs equals
// (sum a)(sum b) for every candidate; safety is what depends on gamma.
std::vector<Elem> eval_alg4_shares(const FieldCtx& f, const GammaCandidate& g,
                                   const std::vector<Elem>& a, const std::vector<Elem>& b,
                                   const std::vector<Elem>& r, const std::vector<Elem>& s);

// alg5 gadget, regrouped share form. Inputs: a, b of size d+1; randoms r of
// size d. Output: d+1 shares c_i = (sum_j a_j) * b_i + <gamma_i, r>. The
// zero column sums make the gamma terms cancel, so sum c = (sum a)(sum b).
std::vector<Elem> eval_alg5_shares(const FieldCtx& f, const GammaCandidate& g,
                                   const std::vector<Elem>& a, const std::vector<Elem>& b,
                                   const std::vector<Elem>& r);

// Randomized share-identity trials for both gadgets; returns the number of
// failures (0 expected). Drives the CLI selftest.
int gadget_selftest(const FieldCtx& f, int d, int trials, std::uint64_t seed);

// Exhaustive share-identity check for one candidate over every input and
// random tuple; returns the number of failing tuples. Cost q^(2d+2+|r|+|s|),
// so intended for d = 2 over tiny fields.
std::uint64_t gadget_exhaustive(const FieldCtx& f, const GammaCandidate& g);

}  // namespace maskmat
