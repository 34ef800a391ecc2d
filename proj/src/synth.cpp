#include "tritsynth/synth.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace tritsynth {

std::optional<unsigned> hcount_from_k(unsigned k) {
    if (k == 0) return 0u;
    if (k <= 2) return std::nullopt;
    return k - 2;
}

namespace {

bool column_permuted(const ParityMat& m, const ParityMat& target) {
    std::array<int, 3> cols = {0, 1, 2};
    std::sort(cols.begin(), cols.end());
    do {
        bool ok = true;
        for (int r = 0; r < 3 && ok; ++r)
            for (int c = 0; c < 3 && ok; ++c)
                if (m.at(r, cols[static_cast<std::size_t>(c)]) != target.at(r, c)) ok = false;
        if (ok) return true;
    } while (std::next_permutation(cols.begin(), cols.end()));
    return false;
}

} // namespace

bool parity_prefilter(const UMat& m) {
    const unsigned k = m.denom_exp();
    const ParityMat pk = parity_mat(m, k);
    if (k == 0) {
        // permutation support, up to column permutation and scaling by 2
        if (!pk.is_permutation()) return false;
        const int first = [&] {
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c)
                    if (pk.at(r, c).value() != 0) return pk.at(r, c).value();
            return 0;
        }();
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                const int v = pk.at(r, c).value();
                if (v != 0 && v != first) return false;
            }
        return true;
    }
    return pk == ParityMat::filled(1) || pk == ParityMat::filled(2);
}

namespace {

// (T^n H'_i)^-1, indexed n*3 + i. All have i_pow 0.
const std::array<UMat, 9>& peel_inverses() {
    static const std::array<UMat, 9> inv = [] {
        const auto& tables = CliffordTables::instance();
        const PhasedOp& t = gate_matrix(Gate::T);
        std::array<UMat, 9> out;
        for (int n = 0; n < 3; ++n)
            for (int i = 0; i < 3; ++i) {
                PhasedOp syl = PhasedOp::identity();
                for (int k = 0; k < n; ++k) syl = syl * t;
                syl = syl * tables.hprime(i);
                const PhasedOp d = syl.dagger();
                if (d.i_pow() != 0) throw std::logic_error("peel inverse with odd H-count");
                out[static_cast<std::size_t>(n * 3 + i)] = d.mat();
            }
        return out;
    }();
    return inv;
}

struct RemainderTable {
    // canonical key of T^a * p -> (a, p index), plus the exact matrices
    std::vector<std::pair<std::string, std::uint16_t>> keys;
    std::array<PhasedOp, 162> mats;

    static const RemainderTable& instance() {
        static const RemainderTable table;
        return table;
    }

    RemainderTable() {
        const PhasedOp& t = gate_matrix(Gate::T);
        keys.reserve(162);
        for (int a = 0; a < 3; ++a)
            for (int pi = 0; pi < 54; ++pi) {
                PhasedOp m = PhasedOp::identity();
                for (int k = 0; k < a; ++k) m = m * t;
                m = m * pelem_matrix(PElem::from_index(pi));
                const int slot = a * 54 + pi;
                mats[static_cast<std::size_t>(slot)] = m;
                keys.emplace_back(canonical_key(m), static_cast<std::uint16_t>(slot));
            }
        std::sort(keys.begin(), keys.end());
    }

    struct Hit {
        std::uint8_t t_pow;
        PElem p;
        PhaseUnit u;
    };
    std::optional<Hit> find(const UMat& m) const {
        const PhasedOp op(m, 0);
        const std::string key = canonical_key(op);
        const auto it = std::lower_bound(keys.begin(), keys.end(), key,
                                         [](const auto& kv, const std::string& k) { return kv.first < k; });
        if (it == keys.end() || it->first != key) return std::nullopt;
        const auto u = projective_eq(op, mats[it->second]);
        if (!u) throw std::logic_error("remainder table: key hit without phase");
        return Hit{static_cast<std::uint8_t>(it->second / 54), PElem::from_index(it->second % 54), *u};
    }
};

} // namespace

std::optional<PeelStep> peel(const UMat& m) {
    const unsigned k = m.denom_exp();
    std::optional<PeelStep> found;
    for (int n = 0; n < 3; ++n)
        for (int i = 0; i < 3; ++i) {
            UMat reduced = peel_inverses()[static_cast<std::size_t>(n * 3 + i)] * m;
            if (reduced.denom_exp() >= k) continue;
            if (found)
                throw AmbiguousPeel("peel: two syllable candidates reduce the denominator exponent");
            found = PeelStep{static_cast<std::uint8_t>(n), static_cast<std::uint8_t>(i),
                             std::move(reduced)};
        }
    return found;
}

bool satisfies_P1_P4(const UMat& m) {
    const auto digits = residues(m, 4);
    if (!(digits[0] == ParityMat::filled(1))) return false;
    ParityMat p2_target;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) p2_target.at(r, c) = Parity(c);
    if (!column_permuted(digits[1], p2_target)) return false;
    const ParityMat& d2 = digits[2];
    const Parity shift = d2.at(1, 0) - d2.at(0, 0);
    for (int c = 0; c < 3; ++c) {
        if (!(d2.at(1, c) - d2.at(0, c) == shift)) return false;
        if (!(d2.at(2, c) - d2.at(0, c) == Parity(0) - shift)) return false;
    }
    const ParityMat& d3 = digits[3];
    const Parity colsum = d3.at(0, 0) + d3.at(1, 0) + d3.at(2, 0);
    for (int c = 1; c < 3; ++c)
        if (!(d3.at(0, c) + d3.at(1, c) + d3.at(2, c) == colsum)) return false;
    return true;
}

const char* SynthResult::reason_name(Reason r) {
    switch (r) {
    case Reason::NotUnitary: return "NotUnitary";
    case Reason::BadDenomExp: return "BadDenomExp";
    case Reason::PeelFailed: return "PeelFailed";
    case Reason::LookupFailed: return "LookupFailed";
    case Reason::ParityFailed: return "ParityFailed";
    }
    return "?";
}

SynthResult exact_synthesize(const UMat& m) {
    SynthResult res;
    res.denom_exp = m.denom_exp();
    if (!m.is_unitary()) {
        res.reason = SynthResult::Reason::NotUnitary;
        return res;
    }
    if (res.denom_exp == 1 || res.denom_exp == 2) {
        res.reason = SynthResult::Reason::BadDenomExp;
        return res;
    }
    if (!parity_prefilter(m)) {
        res.reason = SynthResult::Reason::ParityFailed;
        return res;
    }

    std::vector<PeelStep> steps;
    UMat cur = m;
    unsigned k = res.denom_exp;
    while (k >= 3) {
        auto step = peel(cur);
        if (!step) {
            res.reason = SynthResult::Reason::PeelFailed;
            res.failed_step = static_cast<int>(steps.size());
            return res;
        }
        cur = step->reduced;
        k = cur.denom_exp();
        steps.push_back(*std::move(step));
    }
    if (k != 0) {
        res.reason = SynthResult::Reason::LookupFailed;
        return res;
    }
    const auto hit = RemainderTable::instance().find(cur);
    if (!hit) {
        res.reason = SynthResult::Reason::LookupFailed;
        return res;
    }

    NormalForm nf;
    if (steps.empty()) {
        nf.lead_t = hit->t_pow;
    } else {
        nf.lead_t = steps.front().t_pow;
        for (std::size_t j = 1; j < steps.size(); ++j) {
            if (steps[j].t_pow == 0)
                throw std::logic_error("exact_synthesize: interior syllable without T power");
            nf.body.push_back({steps[j - 1].h_idx, steps[j].t_pow});
        }
        if (hit->t_pow > 0)
            nf.body.push_back({steps.back().h_idx, hit->t_pow});
        else
            nf.tail_h = steps.back().h_idx;
    }
    nf.tail_p = hit->p;
    nf.phase = hit->u;

    // reconstruction check before reporting membership
    const PhasedOp rebuilt = nf_matrix(nf).scaled(hit->u);
    if (!(rebuilt.i_pow() == 0 && rebuilt.mat() == m)) {
        res.reason = SynthResult::Reason::LookupFailed;
        return res;
    }
    res.member = true;
    res.nf = std::move(nf);
    res.unit = hit->u;
    return res;
}

} // namespace tritsynth
