#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "tritsynth/normalform.hpp"

namespace tritsynth {

// k = h + 2 for h >= 1 and k = 0 for h = 0; k in {1,2} never occurs for a
// group element, so those report empty.
std::optional<unsigned> hcount_from_k(unsigned k);

// Necessary residue condition on P_k: all-ones (k >= 3) or a permutation
// support (k = 0), up to column permutation and global scaling by 2. A
// fast advisory rejection; peeling is the authoritative test.
bool parity_prefilter(const UMat& m);

struct PeelStep {
    std::uint8_t t_pow = 0; // 0..2
    std::uint8_t h_idx = 0; // 0..2
    UMat reduced;           // (T^t_pow H'_h)^-1 * m
};

// Internal invariant violation: more than one of the nine candidates
// reduced the denominator exponent. Must never fire on unitary inputs.
struct AmbiguousPeel : std::logic_error {
    using std::logic_error::logic_error;
};

// Tries the nine left syllables (T^n H'_i)^-1 and returns the unique one
// that lowers the denominator exponent, or empty if none does. Requires
// denom_exp(m) >= 3.
std::optional<PeelStep> peel(const UMat& m);

// First four chi-adic digit constraints satisfied by every (H'T)-interior
// operator: digit 0 all-ones, digit 1 a column permutation of (0,1,2)
// columns, digit 2 row-shift structured, digit 3 with equal column sums.
bool satisfies_P1_P4(const UMat& m);

struct SynthResult {
    enum class Reason { NotUnitary, BadDenomExp, PeelFailed, LookupFailed, ParityFailed };

    bool member = false;
    NormalForm nf;    // valid when member
    PhaseUnit unit;   // input == unit * nf_matrix(nf), exactly
    Reason reason = Reason::NotUnitary;
    int failed_step = -1; // peel index for PeelFailed
    unsigned denom_exp = 0;

    static const char* reason_name(Reason r);
};

// Decides membership of a ring matrix in the Clifford+T group and, for
// members, produces the unique normal form by syllable peeling. Work is
// O(denom_exp) ring operations.
SynthResult exact_synthesize(const UMat& m);

} // namespace tritsynth
