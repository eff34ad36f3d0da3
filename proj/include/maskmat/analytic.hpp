#pragma once

#include <string>
#include <vector>

#include "maskmat/probes.hpp"

namespace maskmat {

// One monomial, as variable indices: 0..3 -> x1..x4, 4..6 -> y1..y3.
// Coefficients are 1; evaluation is over characteristic 2.
using PolyTerm = std::vector<int>;
using Poly = std::vector<PolyTerm>;

// The order-3 safety certificate system for one scheme: a fixed list of
// polynomials in the Cauchy parameters that must all evaluate to nonzero
// field elements for the constructed candidate to be safe.
struct PolySystem {
    Scheme scheme;
    int nx;  // number of x variables (3 or 4)
    int ny;  // number of y variables (3)
    std::vector<Poly> polys;
};

// alg4: 21 polynomials (9 of degree 2 with 6 terms, 9 of degree 3 with
// 6 terms, 3 of degree 3 with 12 terms) in x1..x3, y1..y3.
// alg5: 12 polynomials of degree 3 with 12 terms each in x1..x4, y1..y3.
// The shape is re-counted at construction; a transcription slip throws.
const PolySystem& analytic_system(Scheme scheme);

// Per-polynomial values at the assignment. Enforces the distinctness
// preconditions: all of xs and ys pairwise distinct, and nonzero for alg4.
std::vector<Elem> eval_poly_system_each(const FieldCtx& f, const PolySystem& sys,
                                        const std::vector<Elem>& xs,
                                        const std::vector<Elem>& ys);

// True iff every polynomial of the system is nonzero at the assignment.
bool eval_poly_system(const FieldCtx& f, const PolySystem& sys,
                      const std::vector<Elem>& xs, const std::vector<Elem>& ys);

// Fixed safe points pushed through the Cauchy constructors:
//   alg4: xs = (1, 3, 5), ys = (6, 4, a)
//   alg5: xs = (1, 2, 5, 6), ys = (4, 7, f)
// Safe for every field degree k >= 4; throws std::invalid_argument below.
GammaCandidate explicit_construct(const FieldCtx& f, Scheme scheme);

// "x1*x2 + y1*y2*y3 + ..." rendering for CLI output.
std::string poly_to_string(const Poly& p);

}  // namespace maskmat
