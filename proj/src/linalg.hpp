#pragma once

#include <gmpxx.h>

#include <vector>

namespace semitutte {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Exact rank by fraction-free (Bareiss) elimination with column pivoting.
// Every intermediate value is a minor determinant, so the interleaved
// divisions are exact. Consumes its argument.
int matrix_rank(IntMatrix m);

}  // namespace semitutte
