#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "tritsynth/synth.hpp"

using namespace tritsynth;
using namespace tritsynth::testing;

namespace {

PhasedOp pow(const PhasedOp& m, int n) {
    PhasedOp r = PhasedOp::identity();
    for (int k = 0; k < n; ++k) r = r * m;
    return r;
}

std::mt19937 rng(424243);

// random product in normal-form shape with at least one H' syllable
NormalForm random_nf(int max_pairs) {
    std::uniform_int_distribution<int> lead(0, 2), h(0, 2), tpow(1, 2), coin(0, 1),
        pairs(1, max_pairs), pidx(0, 53);
    NormalForm nf;
    nf.lead_t = static_cast<std::uint8_t>(lead(rng));
    const int n = pairs(rng);
    for (int k = 0; k < n; ++k)
        nf.body.push_back({static_cast<std::uint8_t>(h(rng)), static_cast<std::uint8_t>(tpow(rng))});
    if (coin(rng)) nf.tail_h = static_cast<std::uint8_t>(h(rng));
    nf.tail_p = PElem::from_index(pidx(rng));
    return nf;
}

// random (H' T^n)+ chain with a P tail; the shape the residue constraints
// P1-P4 quantify over (a leading T power or a bare trailing H' breaks P1)
NormalForm random_syllable_chain(int max_pairs) {
    std::uniform_int_distribution<int> h(0, 2), tpow(1, 2), pairs(1, max_pairs), pidx(0, 53);
    NormalForm nf;
    const int n = pairs(rng);
    for (int k = 0; k < n; ++k)
        nf.body.push_back({static_cast<std::uint8_t>(h(rng)), static_cast<std::uint8_t>(tpow(rng))});
    nf.tail_p = PElem::from_index(pidx(rng));
    return nf;
}

} // namespace

TEST_CASE("h-count from the denominator exponent") {
    CHECK(hcount_from_k(0) == 0u);
    CHECK(hcount_from_k(3) == 1u);
    CHECK(hcount_from_k(5) == 3u);
    CHECK(hcount_from_k(6) == 4u);
    CHECK(!hcount_from_k(1).has_value());
    CHECK(!hcount_from_k(2).has_value());
}

TEST_CASE("member fixture peels deterministically") {
    const UMat m = synth_member_matrix();
    REQUIRE(m.is_unitary());
    REQUIRE(m.denom_exp() == 5);
    CHECK(parity_prefilter(m));
    CHECK(parity_prefilter(-m)); // all-twos certificate, global scaling by 2

    const auto s1 = peel(m);
    REQUIRE(s1.has_value());
    CHECK(s1->t_pow == 0);
    CHECK(s1->h_idx == 2);
    CHECK(s1->reduced == synth_member_reduced());
    CHECK(s1->reduced.denom_exp() == 4);

    const auto s2 = peel(s1->reduced);
    REQUIRE(s2.has_value());
    CHECK(s2->t_pow == 1);
    CHECK(s2->h_idx == 1);
    CHECK(s2->reduced.denom_exp() == 3);

    const auto s3 = peel(s2->reduced);
    REQUIRE(s3.has_value());
    CHECK(s3->t_pow == 1);
    CHECK(s3->h_idx == 2);
    CHECK(s3->reduced.denom_exp() == 0);
    CHECK(s3->reduced == pow(gate_matrix(Gate::T), 2).mat());
}

TEST_CASE("member fixture synthesizes to its unique normal form") {
    const SynthResult res = exact_synthesize(synth_member_matrix());
    REQUIRE(res.member);
    CHECK(res.denom_exp == 5);
    CHECK(res.nf.t_count() == 3);
    CHECK(res.nf.h_count() == 3);
    CHECK(res.nf.str() == "H2' T H1' T H2' T2");
    CHECK(res.nf.str(true) == "S2HSH T SHSH T S2HSH T2");
    CHECK(res.unit == PhaseUnit::one());
    CHECK(nf_matrix(res.nf).scaled(res.unit).mat() == synth_member_matrix());
}

TEST_CASE("easy members") {
    const SynthResult id = exact_synthesize(UMat::identity());
    REQUIRE(id.member);
    CHECK(id.nf.t_count() == 0);
    CHECK(id.nf.str().empty());

    const SynthResult t = exact_synthesize(gate_matrix(Gate::T).mat());
    REQUIRE(t.member);
    CHECK(t.nf.lead_t == 1);
    CHECK(t.nf.body.empty());
    CHECK(t.nf.t_count() == 1);

    const SynthResult s = exact_synthesize(gate_matrix(Gate::S).mat());
    REQUIRE(s.member);
    CHECK(s.nf.t_count() == 0);

    const SynthResult hsh = exact_synthesize(gate_matrix(Gate::H0p).mat());
    REQUIRE(hsh.member);
    CHECK(hsh.nf.tail_h == 0);
    CHECK(hsh.nf.t_count() == 0);
    CHECK(hsh.nf.h_count() == 1);
}

TEST_CASE("nonmember fixture is rejected with full diagnostics") {
    const UMat m = synth_nonmember_matrix();
    CHECK(m.denom_exp() == 6);
    CHECK(!m.is_unitary());

    // no left syllable reduces the denominator exponent
    CHECK(!peel(m).has_value());

    // its top parity matrix is not the all-ones certificate
    CHECK(!parity_prefilter(m));
    const ParityMat p6 = parity_mat(m, 6);
    CHECK(p6 == parity_rows({1, 0, 0, 0, 0, 0, 0, 0, 0}));

    const SynthResult res = exact_synthesize(m);
    CHECK(!res.member);
    CHECK(res.reason == SynthResult::Reason::NotUnitary);
    CHECK(res.denom_exp == 6);
}

TEST_CASE("garbage inputs are rejected before peeling") {
    UMat scaled;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) scaled.at(r, c) = RingElem::integer(r == c ? 2 : 0);
    const SynthResult res = exact_synthesize(scaled);
    CHECK(!res.member);
    CHECK(res.reason == SynthResult::Reason::NotUnitary);
}

TEST_CASE("interior syllable residues satisfy P1-P4") {
    for (int i = 0; i < 3; ++i)
        for (int n = 1; n <= 2; ++n) {
            const UMat syl =
                (CliffordTables::instance().hprime(i) * pow(gate_matrix(Gate::T), n)).mat();
            CHECK(satisfies_P1_P4(syl));
        }
    CHECK(!satisfies_P1_P4(UMat::identity()));
}

TEST_CASE("P1-P4 are preserved by left syllables, with d rising by one") {
    const auto& tables = CliffordTables::instance();
    for (int it = 0; it < 40; ++it) {
        const NormalForm nf = random_syllable_chain(3);
        const UMat m = nf_matrix(nf).mat();
        CHECK(satisfies_P1_P4(m));
        const unsigned k = m.denom_exp();
        CHECK(k == nf.h_count() + 2);
        for (int i = 0; i < 3; ++i)
            for (int n = 1; n <= 2; ++n) {
                const UMat next = (tables.hprime(i) * pow(gate_matrix(Gate::T), n)).mat() * m;
                CHECK(next.denom_exp() == k + 1);
                CHECK(satisfies_P1_P4(next));
            }
    }
}

TEST_CASE("synthesis round-trips random normal forms") {
    for (int it = 0; it < 60; ++it) {
        const NormalForm nf = random_nf(4);
        const UMat m = nf_matrix(nf).mat();
        const SynthResult res = exact_synthesize(m);
        REQUIRE(res.member);
        CHECK(res.nf.same_structure(nf));
        CHECK(res.unit == PhaseUnit::one());
    }
}
