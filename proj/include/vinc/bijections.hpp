#pragma once

#include "vinc/permutation.hpp"

namespace vinc {

/// The involution on S_n(132) that swaps the blocks of the right
/// decomposition: alpha skew (beta + 1) maps to phi(beta) skew
/// (phi(alpha) + 1). Exchanges the joint distribution of
/// (2-13, 2-31, rlmin, rlmax) with (2-31, 2-13, rlmax, rlmin).
/// Throws PreconditionError when the input contains 132.
Permutation phi(const Permutation& p);

/// The bijection on S_n(132) defined by three cases on the position of
/// the maximum; it preserves des and carries the 2-31 count to the 2-13
/// count. Throws PreconditionError when the input is empty or contains
/// 132.
Permutation psi(const Permutation& p);

/// The bijection on S_n(132) built on psi: alpha skew (beta + 1) maps to
/// mu(alpha) skew (mu(psi(beta)) + 1). Preserves des and the last value,
/// and carries the 2-13 count to the 21-3 count. Throws PreconditionError
/// when the input contains 132.
Permutation mu(const Permutation& p);

/// Exhaustive check over S_n(132): the triple (23-1, 3-12, des) of the
/// inverse equals (3-12, 23-1, des) of the input for every avoider.
bool verify_inverse_prop(int n);

}  // namespace vinc
