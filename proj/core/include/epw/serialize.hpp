#pragma once

#include <string>
#include <vector>

#include "epw/exterior.hpp"
#include "epw/lattice.hpp"
#include "epw/strata.hpp"
#include "epw/subspace.hpp"

namespace epw {

// Exact values travel as strings "p/q" (integers as "p/1"); matrices are
// row-major arrays of rows. Parsers also accept plain integers "p".
std::string fraction_string(const Scalar& x);

std::string matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const std::string& text);

// {"ambient_dim": n, "basis": [[...], ...]}
std::string subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const std::string& text);

// 20 coordinates in lexicographic 3-subset order.
std::string trivector_to_json(const TriVector& t);
TriVector trivector_from_json(const std::string& text);

// {"seed", "lagrangian_id", "samples", "corank_histogram": {"c": n},
//  "special_points": [{"u": [[...]], "corank": c, "special": bool}]}
std::string stratum_sample_to_json(const StratumSample& s, int indent = 2);

// {"rank", "gram": [[int]], "labels": [string]}
std::string lattice_to_json(const IntegralLattice& l);
IntegralLattice lattice_from_json(const std::string& text);

// Header e,nonempty,div,square,class,witness. Squares are signed.
std::string heegner_table_csv(const std::vector<HeegnerEntry>& rows);

}  // namespace epw
