#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "tritsynth/exactmat.hpp"

using namespace tritsynth;
using tritsynth::testing::synth_member_matrix;
using tritsynth::testing::synth_nonmember_matrix;

namespace {

PhasedOp pow(const PhasedOp& m, int n) {
    PhasedOp r = PhasedOp::identity();
    for (int k = 0; k < n; ++k) r = r * m;
    return r;
}

const PhasedOp& G(Gate g) { return gate_matrix(g); }

} // namespace

TEST_CASE("gate constants") {
    const PhasedOp& t = G(Gate::T);
    CHECK(t.i_pow() == 0);
    CHECK(t.mat().at(0, 0) == RingElem::of(CycInt::xi()));
    CHECK(t.mat().at(1, 1) == RingElem::integer(1));
    // xi^-1 = -xi^2 - xi^5
    CHECK(t.mat().at(2, 2) == RingElem::of(CycInt({0, 0, -1, 0, 0, -1})));
    CHECK(t.mat().at(0, 1).is_zero());

    const PhasedOp& s = G(Gate::S);
    CHECK(s.mat().at(1, 1) == RingElem::of(CycInt::omega()));
    CHECK(s.mat().at(2, 2) == RingElem::integer(1));

    const PhasedOp& v = G(Gate::V);
    CHECK(v.mat().at(0, 0) == RingElem::integer(1));
    CHECK(v.mat().at(1, 2) == RingElem::integer(1));
    CHECK(v.mat().at(1, 1).is_zero());

    CHECK(G(Gate::H).i_pow() == 1);
    CHECK(G(Gate::A).i_pow() == 1);
    CHECK(G(Gate::H0p).i_pow() == 0);
}

TEST_CASE("all gates are exactly unitary") {
    for (int g = 0; g < 10; ++g) CHECK(G(static_cast<Gate>(g)).mat().is_unitary());
}

TEST_CASE("order relations") {
    CHECK(pow(G(Gate::H), 4) == PhasedOp::identity());
    CHECK(pow(G(Gate::S), 3) == PhasedOp::identity());
    CHECK(pow(G(Gate::H), 2) == G(Gate::V));
    CHECK(pow(G(Gate::T), 9) == PhasedOp::identity());
}

TEST_CASE("generator identities") {
    const PhasedOp h2 = pow(G(Gate::H), 2);
    const PhasedOp s_inv = pow(G(Gate::S), 2);
    CHECK(h2 * s_inv * h2 * G(Gate::S) == G(Gate::Z));
    CHECK(pow(G(Gate::H), 3) * G(Gate::Z) * G(Gate::H) == G(Gate::X));

    // T^3 = w Z^2
    CHECK(pow(G(Gate::T), 3) == pow(G(Gate::Z), 2).scaled(PhaseUnit::omega_unit()));

    // X T = xi T X Z S^2
    const PhasedOp rhs =
        (G(Gate::T) * G(Gate::X) * G(Gate::Z) * pow(G(Gate::S), 2)).scaled(PhaseUnit::xi_unit());
    CHECK(G(Gate::X) * G(Gate::T) == rhs);

    // A = H S^2 H S^2 H conjugates T to a Clifford multiple of T^2: exact
    // form T^2 = xi^2 Z S A T A^-1 (the unit really is xi^2, not xi).
    const PhasedOp conj =
        G(Gate::Z) * G(Gate::S) * G(Gate::A) * G(Gate::T) * G(Gate::A).dagger();
    CHECK(pow(G(Gate::T), 2) == conj.scaled(PhaseUnit::xi_unit(2)));
    const auto u = projective_eq(pow(G(Gate::T), 2), conj);
    REQUIRE(u.has_value());
    CHECK(*u == PhaseUnit::xi_unit(2));
}

TEST_CASE("projective equality") {
    const PhasedOp m = G(Gate::A) * G(Gate::T) * G(Gate::H);
    const auto self = projective_eq(m, m);
    REQUIRE(self.has_value());
    CHECK(*self == PhaseUnit::one());

    const auto t3 = projective_eq(pow(G(Gate::T), 3), pow(G(Gate::Z), 2));
    REQUIRE(t3.has_value());
    CHECK(*t3 == PhaseUnit::omega_unit());

    CHECK(projective_eq(G(Gate::H) * G(Gate::S) * G(Gate::H), G(Gate::H0p)) == PhaseUnit::one());
    CHECK(!projective_eq(G(Gate::S), pow(G(Gate::S), 2)).has_value());
}

TEST_CASE("canonical keys") {
    const PhasedOp m = G(Gate::H) * G(Gate::T) * G(Gate::S);
    const std::string key = canonical_key(m);
    CHECK(canonical_key(m.scaled(PhaseUnit::xi_unit())) == key);
    CHECK(canonical_key(m.scaled(PhaseUnit::minus_one())) == key);
    CHECK(canonical_key(m.scaled(PhaseUnit::i_unit())) == key);
    CHECK(canonical_key(m.scaled(PhaseUnit{1, -1, 7})) == key);
    CHECK(canonical_key(G(Gate::S)) != canonical_key(pow(G(Gate::S), 2)));
}

TEST_CASE("phase unit algebra") {
    CHECK(PhaseUnit::i_unit() * PhaseUnit::i_unit() == PhaseUnit::minus_one());
    CHECK(PhaseUnit::xi_unit(5) * PhaseUnit::xi_unit(6) == PhaseUnit::xi_unit(2));
    for (const auto& u : all_phase_units()) {
        CHECK(u * u.inverse() == PhaseUnit::one());
        // the i*i = -1 fold lands in the ring part
        CHECK(u.ring_part() * u.inverse().ring_part() ==
              RingElem::integer(u.i_pow ? -1 : 1));
    }
}

TEST_CASE("matrix denominator exponents") {
    CHECK(UMat::identity().denom_exp() == 0);
    CHECK(synth_member_matrix().denom_exp() == 5);
    CHECK(synth_nonmember_matrix().denom_exp() == 6);
    CHECK(G(Gate::H0p).mat().denom_exp() == 3);
    for (int g = 0; g < 10; ++g) {
        const UMat& m = G(static_cast<Gate>(g)).mat();
        CHECK(m.dagger().denom_exp() == m.denom_exp());
    }
}

TEST_CASE("residue digits of an elementary syllable") {
    const UMat syl = (G(Gate::H0p) * G(Gate::T)).mat();
    REQUIRE(syl.denom_exp() == 3);
    const auto digits = residues(syl, 6);
    using tritsynth::testing::parity_rows;
    CHECK(digits[0] == parity_rows({1, 1, 1, 1, 1, 1, 1, 1, 1}));
    CHECK(digits[1] == parity_rows({2, 0, 1, 2, 0, 1, 2, 0, 1}));
    CHECK(digits[2] == parity_rows({0, 0, 1, 0, 0, 1, 0, 0, 1}));
    CHECK(digits[3] == parity_rows({0, 1, 1, 1, 0, 1, 0, 0, 2}));
    CHECK(digits[4] == parity_rows({1, 1, 2, 0, 1, 2, 1, 1, 0}));
    CHECK(digits[5] == parity_rows({1, 2, 1, 1, 2, 1, 1, 2, 2}));
    // the two lifts agree on every digit below chi^6
    CHECK(residues(syl, 6, ResidueLift::Balanced) == digits);
}

TEST_CASE("residues at denominator exponent zero") {
    const auto id = residues(UMat::identity(), 1);
    REQUIRE(id.size() == 1);
    CHECK(id[0] == ParityMat::identity());
    const auto member = residues(synth_member_matrix(), 1);
    CHECK(member[0] == ParityMat::filled(1));
}

TEST_CASE("residue reconstruction") {
    const UMat m = synth_member_matrix();
    const unsigned k = m.denom_exp();
    const int depth = 7;
    const auto digits = residues(m, depth);
    // chi^k M - sum lift(digit_i) chi^i must be divisible by chi^depth
    CycInt chik = CycInt::integer(1);
    for (unsigned i = 0; i < k; ++i) chik = chik * CycInt::chi();
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            CycInt v = chik * m.at(r, c).num();
            for (unsigned t = 0; t < m.at(r, c).three_exp(); ++t) v = v.divided_by_3();
            CycInt chii = CycInt::integer(1);
            for (int i = 0; i < depth; ++i) {
                v = v - chii * CycInt::integer(digits[static_cast<std::size_t>(i)].at(r, c).value());
                chii = chii * CycInt::chi();
            }
            for (int i = 0; i < depth; ++i) {
                auto q = v.chi_divide();
                REQUIRE(q.has_value());
                v = *std::move(q);
            }
        }
}

TEST_CASE("parity matrices of unit multiples") {
    const UMat m = synth_member_matrix();
    const unsigned k = m.denom_exp();
    const ParityMat pk = parity_mat(m, k);
    CHECK(pk == ParityMat::filled(1));
    CHECK(parity_mat(m.scaled(RingElem::of(CycInt::xi())), k) == pk);
    CHECK(parity_mat(-m, k) == pk.scaled(2));
}

TEST_CASE("json round-trip is exact and deterministic") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, 9);
    for (int it = 0; it < 20; ++it) {
        PhasedOp m = PhasedOp::identity();
        for (int k = 0; k < 8; ++k) m = m * G(static_cast<Gate>(pick(rng)));
        const nlohmann::json j = to_json(m);
        const PhasedOp back = phased_op_from_json(nlohmann::json::parse(j.dump()));
        CHECK(back == m);
        CHECK(to_json(back).dump() == j.dump());
    }
}

TEST_CASE("malformed json is rejected") {
    CHECK_THROWS_AS(phased_op_from_json(nlohmann::json::parse("{}")), std::invalid_argument);
    CHECK_THROWS_AS(phased_op_from_json(nlohmann::json::parse(
                        R"({"ring":"Z[zeta9,1/3]","i_pow":0,"entries":[]})")),
                    std::invalid_argument);
    nlohmann::json j = to_json(PhasedOp::identity());
    j["entries"][0][0]["c"][0] = "not-a-number";
    CHECK_THROWS_AS(phased_op_from_json(j), std::invalid_argument);
}
