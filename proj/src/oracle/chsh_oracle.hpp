#pragma once

// Stand-alone check of the (2,2,2) noncontextual fraction. Shares nothing
// with the simplex code: it builds its own 16 x 16 domination system and
// enumerates the vertices of the dual region
//     D = { y >= 0 : sum_{slots s of g} y_s >= 1 for each global g }
// with the double description method. By LP duality
//     ncf(v) = min over vertices y of D of <v, y>.

#include <gmpxx.h>

#include <vector>

namespace chsh_oracle {

// tables[x * 2 + y][a * 2 + b] = p(a, b | x, y).
using Tables = std::vector<std::vector<mpq_class>>;

// Vertices of D, each a 16-vector over slots (x, y, a, b) in the order above.
const std::vector<std::vector<mpq_class>>& dual_vertices();

// Throws std::invalid_argument on a malformed table.
mpq_class noncontextual_fraction(const Tables& tables);

} // namespace chsh_oracle
