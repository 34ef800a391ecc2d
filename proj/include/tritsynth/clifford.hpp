#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tritsynth/exactmat.hpp"

namespace tritsynth {

/**
 * Element of SL(2, Z_3).
 */
struct SL2Z3 {
    std::uint8_t a = 1, b = 0, c = 0, d = 1;

    static SL2Z3 identity() { return {}; }
    static SL2Z3 s_hat() { return {1, 0, 1, 1}; }
    static SL2Z3 h_hat() { return {0, 2, 1, 0}; }
    static SL2Z3 minus_identity() { return {2, 0, 0, 2}; }

    SL2Z3 operator*(const SL2Z3& o) const;
    SL2Z3 inverse() const;
    int det() const { return (a * d + 3 * 3 - b * c) % 3; }
    bool operator==(const SL2Z3&) const = default;

    // All 24 group elements.
    static const std::vector<SL2Z3>& all();
};

enum class SL2Gen : std::uint8_t { S, H };

// Word in {S_hat, H_hat} multiplying out to f, via the closed-form
// S^m H S^n H S^q (b != 0) / H S^m H S^n H S^q (d != 0) decompositions.
std::vector<SL2Gen> sl2_word(const SL2Z3& f);

/**
 * Projective Clifford element in Appleby form D_(x,z) V_F.
 */
struct CliffordElem {
    std::uint8_t x = 0, z = 0;
    SL2Z3 f;

    static CliffordElem identity() { return {}; }
    // D_{x1,z1} V_{F1} D_{x2,z2} V_{F2} ~ D_{(x1,z1)+F1(x2,z2)} V_{F1 F2}
    CliffordElem compose(const CliffordElem& o) const;
    CliffordElem inverse() const;
    bool operator==(const CliffordElem&) const = default;

    static CliffordElem s_elem() { return {0, 2, SL2Z3::s_hat()}; }
    static CliffordElem h_elem() { return {0, 0, SL2Z3::h_hat()}; }
    static CliffordElem x_elem() { return {1, 0, SL2Z3::identity()}; }
    static CliffordElem z_elem() { return {0, 1, SL2Z3::identity()}; }
    static CliffordElem v_elem() { return {0, 0, SL2Z3::minus_identity()}; }

    // All 216 projective elements.
    static const std::vector<CliffordElem>& all();
};

// Exact unitary for D_(x,z) V_F from the piecewise Appleby formula. The
// 1/sqrt(3) prefactor of the b != 0 branch carries one formal i.
PhasedOp appleby_matrix(const CliffordElem& e);

/**
 * Element of the 54-element subgroup P = <S, X, V>, stored in the
 * canonical order V^v S^s X^x Z^z used by the normal form tail.
 */
struct PElem {
    std::uint8_t v = 0, s = 0, x = 0, z = 0;

    bool operator==(const PElem&) const = default;
    int index() const { return ((v * 3 + s) * 3 + x) * 3 + z; }
    static PElem from_index(int i);
    bool is_identity() const { return v == 0 && s == 0 && x == 0 && z == 0; }

    CliffordElem elem() const;
    std::string str() const; // e.g. "V S2 X Z2"; identity prints ""
};

// Exact matrix of a P element (always i_pow 0).
PhasedOp pelem_matrix(const PElem& p);

/**
 * Precomputed classification and rewrite tables for the 216-element
 * projective Clifford group. Built once from exact matrices; immutable
 * afterwards. h indices throughout: 0 = identity coset, 1..3 = H'_{0..2}.
 */
class CliffordTables {
public:
    static const CliffordTables& instance();

    struct HP {
        std::uint8_t h = 0;
        PElem p;
    };
    // Unique pair with e ~ h * p projectively.
    HP classify(const CliffordElem& e) const;

    struct ExactHP {
        std::uint8_t h = 0;
        PElem p;
        PhaseUnit u;
    };
    // Exact split of a Clifford matrix: op == u * rep(h) * mat(p).
    std::optional<ExactHP> lookup(const PhasedOp& op) const;

    struct PastT {
        std::uint8_t t_pow = 1;
        PElem p;
        PhaseUnit u;
    };
    // p * T^a == u * T^{t_pow} * p'   (a in {1,2})
    const PastT& p_past_t(const PElem& p, int a) const;

    struct PastH {
        std::uint8_t h_idx = 0;
        PElem p;
        PhaseUnit u;
    };
    // p * H'_h == u * H'_{h_idx} * p'   (h in {0..2})
    const PastH& p_past_hprime(const PElem& p, int h) const;

    // H'_i for i in 0..2
    const PhasedOp& hprime(int i) const { return hprime_[static_cast<std::size_t>(i)]; }
    // rep(h) * mat(p) for h in 0..3
    const PhasedOp& rep_matrix(int h, const PElem& p) const;

private:
    CliffordTables();

    std::array<PhasedOp, 3> hprime_;
    std::array<CliffordElem, 4> h_elem_;
    std::array<PhasedOp, 216> rep_; // indexed h*54 + p.index()
    std::vector<std::pair<std::string, std::uint16_t>> key_to_hp_; // sorted
    std::array<PastT, 108> past_t_;
    std::array<PastH, 162> past_h_;
    std::array<std::uint16_t, 216 * 9> classify_; // by elem key -> h*54+p
};

} // namespace tritsynth
