#ifndef SCHUR_FIXTURES_HPP
#define SCHUR_FIXTURES_HPP

#include "schur/altmap.hpp"

namespace schur::fixtures {

/// Six generators, four commutator generators: [g1,g2] = [g1,g6] = q1,
/// [g1,g3] = q2, [g3,g4] = q3, [g1,g5] = q4. Radical is spanned by
/// g2 - g6, so delta = 5 while d = 6.
AltMap group_d6k4(Residue p);

/// Five generators, three commutator generators, radical zero:
/// [g1,g2] = [g1,g5] = [g2,g5] = q1, [g2,g3] = q2, [g3,g4] = q3.
AltMap special_group_d5k3();

/// n = 5, m = 4 demonstration map for the greedy scan; its pair set is
/// {{1,2},{1,3},{2,4},{2,5}} and the value of {4,5} repeats {2,4}.
AltMap demo_map_n5m4(Residue p = 3);

/// n = 5, m = 5 map showing the scan order matters: a hand-picked basis
/// with pairs {{1,2},{1,3},{2,4},{3,5},{4,5}} has dependent image rows,
/// the greedy one ({{1,2},{1,3},{2,4},{2,5},{3,5}}) does not.
AltMap demo_map_n5m5(Residue p = 3);

} // namespace schur::fixtures

#endif
