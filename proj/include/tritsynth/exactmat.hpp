#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tritsynth/cyclotomic.hpp"

#include "json.hpp"

namespace tritsynth {

/**
 * Formal unit phase i^a * sign * xi^j with a in {0,1}; i^2 is folded into
 * the sign. There are 36 of these and they are exactly the phases that can
 * relate two projectively equal gate products.
 */
struct PhaseUnit {
    std::uint8_t i_pow = 0;
    std::int8_t sign = 1;
    std::uint8_t xi_pow = 0;

    static PhaseUnit one() { return {}; }
    static PhaseUnit i_unit() { return {1, 1, 0}; }
    static PhaseUnit minus_one() { return {0, -1, 0}; }
    static PhaseUnit xi_unit(int j = 1);
    static PhaseUnit omega_unit() { return xi_unit(3); }

    PhaseUnit operator*(const PhaseUnit& o) const;
    PhaseUnit inverse() const;
    bool operator==(const PhaseUnit&) const = default;

    // sign * xi^j as a ring element (the part of the phase inside the ring).
    RingElem ring_part() const;
    std::string str() const;
};

// All 36 formal phases, in a fixed order.
const std::array<PhaseUnit, 36>& all_phase_units();

/**
 * 3x3 matrix over Z[xi, 1/3].
 */
class UMat {
public:
    UMat() = default;

    static UMat identity();

    RingElem& at(int r, int c) { return e_[static_cast<std::size_t>(3 * r + c)]; }
    const RingElem& at(int r, int c) const { return e_[static_cast<std::size_t>(3 * r + c)]; }

    UMat operator*(const UMat& o) const;
    UMat operator-() const;
    bool operator==(const UMat& o) const { return e_ == o.e_; }

    UMat dagger() const;
    UMat scaled(const RingElem& s) const;

    bool is_unitary() const;

    // max over entries of the chi-adic denominator exponent
    unsigned denom_exp() const;

private:
    std::array<RingElem, 9> e_{};
};

/**
 * Ring matrix with a formal factor i^a, a in {0,1}. The bare Hadamard has
 * entries w^{jk}/sqrt(3), which is not in Z[xi,1/3]; since 1+2w = i*sqrt(3)
 * one formal factor of i per H makes every gate product exactly
 * representable. Products with an even H-count have i_pow 0.
 */
class PhasedOp {
public:
    PhasedOp() : m_(UMat::identity()) {}
    PhasedOp(UMat m, unsigned i_pow);

    static PhasedOp identity() { return PhasedOp(); }

    const UMat& mat() const { return m_; }
    std::uint8_t i_pow() const { return i_pow_; }

    PhasedOp operator*(const PhasedOp& o) const;
    bool operator==(const PhasedOp&) const = default;

    PhasedOp dagger() const;
    PhasedOp scaled(const PhaseUnit& u) const;

private:
    std::uint8_t i_pow_ = 0;
    UMat m_;
};

enum class Gate { H, S, T, X, Z, V, A, H0p, H1p, H2p };

// Exact constant matrix of a single gate token.
const PhasedOp& gate_matrix(Gate g);

// If a == u*b for one of the 36 formal phases u, returns u. Both inputs
// must be unitary.
std::optional<PhaseUnit> projective_eq(const PhasedOp& a, const PhasedOp& b);

// Lexicographically least serialization over all 36 phase multiples. Two
// unitary operators get the same key iff they are projectively equal.
std::string canonical_key(const PhasedOp& op);

/**
 * 3x3 matrix over Z_3.
 */
struct ParityMat {
    std::array<Parity, 9> p{};

    Parity& at(int r, int c) { return p[static_cast<std::size_t>(3 * r + c)]; }
    Parity at(int r, int c) const { return p[static_cast<std::size_t>(3 * r + c)]; }
    bool operator==(const ParityMat&) const = default;

    static ParityMat filled(int v);
    static ParityMat identity();
    ParityMat scaled(int v) const;
    bool is_permutation() const; // exactly one nonzero entry per row/column
    std::string str() const;
};

// P_k(M) = entrywise parity of chi^k * M. k must be >= denom_exp(M).
ParityMat parity_mat(const UMat& m, unsigned k);

// Lift of residue digits back into Z[xi]: either constants {0,1,2} or the
// balanced set {0,1,-1}.
enum class ResidueLift { Plain, Balanced };

// chi-adic digit matrices M_(0), M_(1), ... of M, starting at k = d(M).
std::vector<ParityMat> residues(const UMat& m, int depth,
                                ResidueLift lift = ResidueLift::Plain);

// Bit-exact JSON matrix format.
nlohmann::json to_json(const PhasedOp& op);
PhasedOp phased_op_from_json(const nlohmann::json& j); // throws std::invalid_argument

} // namespace tritsynth
