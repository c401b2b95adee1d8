#pragma once

#include "kapdeg/bigint.hpp"
#include "kapdeg/composition.hpp"

namespace kapdeg {

// The multidegree deg_k(Phi_n), i.e. the asymmetric multinomial coefficient,
// computed by the string-equation recursion
//     deg_k = sum over j > rightmost_zero(k) of deg_{ktilde(k, j)}
// with deg_{empty} = 1.  Memoized; safe to call concurrently.
BigUint multidegree(const Composition& k);

// Sum of multidegree(k) over every weak composition of n; equals (2n-1)!!.
BigUint total_degree(int n);

// Whether multidegree(k) is positive, decided by the suffix-sum criterion:
// k_{n-i+1} + ... + k_n >= i for every i = 1..n.
bool is_support(const Composition& k);

// Cap on memo entries (0 means unbounded, the default); settable for tests
// or via the KAPDEG_MEMO_MAX environment variable.
void set_multidegree_memo_limit(std::size_t max_entries);

}  // namespace kapdeg
