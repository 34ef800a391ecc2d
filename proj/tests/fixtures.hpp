#pragma once

#include <array>

#include "tritsynth/exactmat.hpp"

namespace tritsynth::testing {

using Coeffs = std::array<long, 6>;

inline UMat mat_over_3(const std::array<Coeffs, 9>& rows) {
    UMat m;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            const Coeffs& cs = rows[static_cast<std::size_t>(3 * r + c)];
            std::array<Int, 6> v;
            for (int k = 0; k < 6; ++k) v[static_cast<std::size_t>(k)] = cs[static_cast<std::size_t>(k)];
            m.at(r, c) = RingElem(CycInt(std::move(v)), 1);
        }
    return m;
}

// Unitary with denominator exponent 5; decomposes as H2' T H1' T H2' T2.
inline UMat synth_member_matrix() {
    return mat_over_3({{{0, -1, 0, 0, 0, 1},
                        {1, -2, 0, 0, -1, -1},
                        {-1, -1, 0, 0, -1, 0},
                        {0, 1, -1, 0, 1, -1},
                        {-1, 0, 1, -1, 0, 1},
                        {-1, -1, -2, 0, -1, -1},
                        {-2, -1, 1, -1, 0, 0},
                        {0, 0, 1, 1, 0, 1},
                        {1, -1, 0, 1, -1, 0}}});
}

// synth_member_matrix with the first left syllable H2' removed.
inline UMat synth_member_reduced() {
    return mat_over_3({{{-1, -1, 1, 0, 0, 1},
                        {1, -1, 0, 1, 0, -1},
                        {1, -1, 1, 1, 0, 1},
                        {-1, -1, 0, 0, 0, -1},
                        {1, 0, 1, 1, -1, 1},
                        {0, 0, 0, -1, -1, -1},
                        {0, -1, 1, -1, 0, 1},
                        {0, -1, -1, -1, 0, 0},
                        {-1, 0, 0, 0, -1, -1}}});
}

// One sign away from synth_member_matrix; entries are in the ring but the
// matrix is outside the group (it is not even unitary), with denominator
// exponent 6 and no reducing left syllable.
inline UMat synth_nonmember_matrix() {
    return mat_over_3({{{0, 1, 0, 0, 0, 1},
                        {1, -2, 0, 0, -1, -1},
                        {-1, -1, 0, 0, -1, 0},
                        {0, 1, -1, 0, 1, -1},
                        {-1, 0, 1, -1, 0, 1},
                        {-1, -1, -2, 0, -1, -1},
                        {-2, -1, 1, -1, 0, 0},
                        {0, 0, 1, 1, 0, 1},
                        {1, -1, 0, 1, -1, 0}}});
}

inline ParityMat parity_rows(const std::array<int, 9>& v) {
    ParityMat m;
    for (int k = 0; k < 9; ++k) m.p[static_cast<std::size_t>(k)] = Parity(v[static_cast<std::size_t>(k)]);
    return m;
}

} // namespace tritsynth::testing
