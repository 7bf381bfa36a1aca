#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qinv/transvection.hpp"

namespace qinv {

/// f = sum a_{i1..ik} x^{(1)}_{i1} ... x^{(k)}_{ik}.
Covariant ground_form(int k);

/// Multidegrees d in {0,2}^k with an even number of zeros, (2,...,2) first,
/// then by number of zeros, then lexicographically by zero positions.
std::vector<std::vector<int>> b_family_indices(int k);

/// B_d = (f,f)^{(2-d_1)/2, ..., (2-d_k)/2}; requires an even number of zeros
/// in d. B_{2..2} is f^2.
const Covariant& b_family(int k, std::span<const int> d);

/// "B_2200" style name of b_family(k, d).
std::string b_name(std::span<const int> d);

/// Three-qubit system: "f", "Hx", "Hy", "Hz" (determinants of second
/// partials), "T" (determinant in df/dx and dHx/dx) and "Delta" = (T,f)^{111}.
const Covariant& catalog_3(std::string_view name);

/// Four-qubit covariants built by the documented transvection chains:
/// f, B_0000, the six B_d with two zeros, C1_1111, C2_1111, C_3111, C_1311,
/// C_1131, C_1113, D_4000, D_0400, D_0040, D_0004, D_2200, E_3111.
/// Chains written with a ground-form operand use f.
const Covariant& catalog_4(std::string_view name);

/// Names accepted by catalog_3 / catalog_4.
std::vector<std::string> catalog_names(int k);

/// Dispatch by qubit count; for any k also accepts "f" and "B_<d>".
const Covariant& catalog(int k, std::string_view name);

/// Maximal linearly independent subset of {(f, B_d)^{d/2}} (exact rank, in
/// b_family_indices order). Throws ConsistencyError if its size differs from
/// the character-formula dimension of covariants of degree 3 and
/// multidegree (1,...,1).
std::vector<Covariant> degree3_multilinear_basis(int k);

/// The Cayley hyperdeterminant of a 2x2x2 tensor, entered term by term.
Polynomial cayley_hyperdeterminant();

}  // namespace qinv
