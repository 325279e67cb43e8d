#include "schur/fixtures.hpp"

namespace schur::fixtures {

namespace {

FpVector unit(int m, int i) {
    FpVector v(m, 0);
    v[i - 1] = 1;
    return v;
}

} // namespace

AltMap group_d6k4(Residue p) {
    AltMap a(p, 6, 4);
    a.set(1, 2, unit(4, 1));
    a.set(1, 6, unit(4, 1));
    a.set(1, 3, unit(4, 2));
    a.set(3, 4, unit(4, 3));
    a.set(1, 5, unit(4, 4));
    return a;
}

AltMap special_group_d5k3() {
    AltMap a(3, 5, 3);
    a.set(1, 2, unit(3, 1));
    a.set(1, 5, unit(3, 1));
    a.set(2, 5, unit(3, 1));
    a.set(2, 3, unit(3, 2));
    a.set(3, 4, unit(3, 3));
    return a;
}

AltMap demo_map_n5m4(Residue p) {
    AltMap a(p, 5, 4);
    a.set(1, 2, unit(4, 1));
    a.set(1, 3, unit(4, 2));
    a.set(2, 4, unit(4, 3));
    a.set(1, 5, {fp_neg(1, p), fp_neg(1, p), 0, 0});
    a.set(2, 5, unit(4, 4));
    a.set(4, 5, unit(4, 3));
    return a;
}

AltMap demo_map_n5m5(Residue p) {
    AltMap a(p, 5, 5);
    a.set(1, 2, unit(5, 1));
    a.set(1, 3, unit(5, 2));
    a.set(1, 4, {1, 1, 0, 0, 0});
    a.set(2, 4, unit(5, 3));
    a.set(2, 5, {0, 0, 0, fp_neg(1, p), 1});
    a.set(3, 5, unit(5, 4));
    a.set(4, 5, unit(5, 5));
    return a;
}

} // namespace schur::fixtures
