#include "tritsynth/exactmat.hpp"

#include <cinttypes>
#include <limits>
#include <cstdio>
#include <stdexcept>

namespace tritsynth {

PhaseUnit PhaseUnit::xi_unit(int j) {
    PhaseUnit u;
    u.xi_pow = static_cast<std::uint8_t>(((j % 9) + 9) % 9);
    return u;
}

PhaseUnit PhaseUnit::operator*(const PhaseUnit& o) const {
    PhaseUnit r;
    int ip = i_pow + o.i_pow;
    r.sign = static_cast<std::int8_t>(sign * o.sign);
    if (ip >= 2) {
        ip -= 2;
        r.sign = static_cast<std::int8_t>(-r.sign);
    }
    r.i_pow = static_cast<std::uint8_t>(ip);
    r.xi_pow = static_cast<std::uint8_t>((xi_pow + o.xi_pow) % 9);
    return r;
}

PhaseUnit PhaseUnit::inverse() const {
    // (i^a s xi^j)^-1 = i^-a s^-1 xi^-j; i^-1 = -i.
    PhaseUnit r;
    r.xi_pow = static_cast<std::uint8_t>((9 - xi_pow) % 9);
    r.sign = sign;
    r.i_pow = i_pow;
    if (i_pow == 1) r.sign = static_cast<std::int8_t>(-r.sign);
    return r;
}

RingElem PhaseUnit::ring_part() const {
    CycInt c = CycInt::xi_pow(xi_pow);
    if (sign < 0) c = -c;
    return RingElem::of(std::move(c));
}

std::string PhaseUnit::str() const {
    std::string s;
    if (sign < 0) s += "-";
    if (i_pow) s += "i";
    if (xi_pow) {
        if (i_pow) s += "*";
        s += "xi^" + std::to_string(xi_pow);
    }
    if (s.empty() || s == "-") s += "1";
    return s;
}

const std::array<PhaseUnit, 36>& all_phase_units() {
    static const std::array<PhaseUnit, 36> units = [] {
        std::array<PhaseUnit, 36> u;
        std::size_t n = 0;
        for (int ip = 0; ip < 2; ++ip)
            for (int sg = 0; sg < 2; ++sg)
                for (int j = 0; j < 9; ++j)
                    u[n++] = PhaseUnit{static_cast<std::uint8_t>(ip),
                                       static_cast<std::int8_t>(sg ? -1 : 1),
                                       static_cast<std::uint8_t>(j)};
        return u;
    }();
    return units;
}

UMat UMat::identity() {
    UMat m;
    for (int k = 0; k < 3; ++k) m.at(k, k) = RingElem::integer(1);
    return m;
}

UMat UMat::operator*(const UMat& o) const {
    UMat r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            RingElem acc;
            for (int k = 0; k < 3; ++k) acc = acc + at(i, k) * o.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

UMat UMat::operator-() const {
    UMat r;
    for (int k = 0; k < 9; ++k) r.e_[k] = -e_[k];
    return r;
}

UMat UMat::dagger() const {
    UMat r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.at(i, j) = at(j, i).conj();
    return r;
}

UMat UMat::scaled(const RingElem& s) const {
    UMat r;
    for (int k = 0; k < 9; ++k) r.e_[k] = e_[k] * s;
    return r;
}

bool UMat::is_unitary() const { return (*this) * dagger() == identity(); }

unsigned UMat::denom_exp() const {
    unsigned d = 0;
    for (const auto& e : e_) d = std::max(d, e.denom_exp_chi());
    return d;
}

PhasedOp::PhasedOp(UMat m, unsigned i_pow) : m_(std::move(m)) {
    i_pow %= 4;
    if (i_pow >= 2) {
        i_pow -= 2;
        m_ = -m_;
    }
    i_pow_ = static_cast<std::uint8_t>(i_pow);
}

PhasedOp PhasedOp::operator*(const PhasedOp& o) const {
    return PhasedOp(m_ * o.m_, static_cast<unsigned>(i_pow_) + o.i_pow_);
}

PhasedOp PhasedOp::dagger() const {
    // (i^a M)^dag = i^{-a} M^dag = i^{3a} M^dag
    return PhasedOp(m_.dagger(), static_cast<unsigned>(3 * i_pow_));
}

PhasedOp PhasedOp::scaled(const PhaseUnit& u) const {
    return PhasedOp(m_.scaled(u.ring_part()), static_cast<unsigned>(i_pow_) + u.i_pow);
}

namespace {

RingElem omega_pow_elem(int k) { return RingElem::of(CycInt::xi_pow(3 * k)); }

UMat diag(const RingElem& a, const RingElem& b, const RingElem& c) {
    UMat m;
    m.at(0, 0) = a;
    m.at(1, 1) = b;
    m.at(2, 2) = c;
    return m;
}

PhasedOp build_gate(Gate g) {
    const RingElem one = RingElem::integer(1);
    switch (g) {
    case Gate::S: return PhasedOp(diag(one, omega_pow_elem(1), one), 0);
    case Gate::Z: return PhasedOp(diag(one, omega_pow_elem(1), omega_pow_elem(2)), 0);
    case Gate::T:
        return PhasedOp(diag(RingElem::of(CycInt::xi()), one,
                             RingElem::of(CycInt::xi().conj())),
                        0);
    case Gate::X: {
        UMat m;
        for (int c = 0; c < 3; ++c) m.at((c + 1) % 3, c) = one;
        return PhasedOp(std::move(m), 0);
    }
    case Gate::V: {
        UMat m;
        m.at(0, 0) = one;
        m.at(1, 2) = one;
        m.at(2, 1) = one;
        return PhasedOp(std::move(m), 0);
    }
    case Gate::H: {
        // H = i * F / (1+2w) with F_{jk} = w^{jk}; 1/(1+2w) = (-1-2w)/3.
        const RingElem scale =
            RingElem(-(CycInt::integer(1) + CycInt::omega() * Int(2)), 1);
        UMat m;
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) m.at(j, k) = omega_pow_elem(j * k) * scale;
        return PhasedOp(std::move(m), 1);
    }
    default: throw std::invalid_argument("not a primitive gate");
    }
}

} // namespace

const PhasedOp& gate_matrix(Gate g) {
    static const std::array<PhasedOp, 10> table = [] {
        std::array<PhasedOp, 10> t;
        for (const Gate prim : {Gate::H, Gate::S, Gate::T, Gate::X, Gate::Z, Gate::V})
            t[static_cast<std::size_t>(prim)] = build_gate(prim);
        const PhasedOp& h = t[static_cast<std::size_t>(Gate::H)];
        const PhasedOp& s = t[static_cast<std::size_t>(Gate::S)];
        const PhasedOp s2 = s * s;
        t[static_cast<std::size_t>(Gate::A)] = h * s2 * h * s2 * h;
        PhasedOp hp = h * s * h;
        for (int m = 0; m < 3; ++m) {
            t[static_cast<std::size_t>(Gate::H0p) + static_cast<std::size_t>(m)] = hp;
            hp = s * hp;
        }
        return t;
    }();
    return table[static_cast<std::size_t>(g)];
}

std::optional<PhaseUnit> projective_eq(const PhasedOp& a, const PhasedOp& b) {
    const PhasedOp q = a * b.dagger();
    const RingElem& s = q.mat().at(0, 0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j && !(q.mat().at(i, j) == s)) return std::nullopt;
            if (i != j && !q.mat().at(i, j).is_zero()) return std::nullopt;
        }
    for (const auto& u : all_phase_units()) {
        if (u.i_pow != q.i_pow()) continue;
        if (u.ring_part() == s) return u;
    }
    return std::nullopt;
}

namespace {

void append_int(std::string& out, const Int& v, bool negate) {
    if (v.is_small() && v.small() != std::numeric_limits<long>::min()) {
        char buf[24];
        const long x = v.small();
        const int n = std::snprintf(buf, sizeof buf, "%ld", negate ? -x : x);
        out.append(buf, static_cast<std::size_t>(n));
    } else {
        out += negate ? (-v).str() : v.str();
    }
}

void serialize_mat(std::string& out, const UMat& m, bool negate) {
    out.clear();
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            const RingElem& e = m.at(r, c);
            out += '|';
            out += static_cast<char>('0' + e.three_exp());
            for (int k = 0; k < 6; ++k) {
                out += ',';
                append_int(out, e.num().coeff(k), negate);
            }
        }
}

UMat times_xi(const UMat& m) {
    UMat r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r.at(i, j) = RingElem(m.at(i, j).num().times_xi(), m.at(i, j).three_exp());
    return r;
}

} // namespace

std::string canonical_key(const PhasedOp& op) {
    // The orbit under the 36 formal phases contains both values of i_pow,
    // so the minimum is decided by the matrix alone: minimize the
    // serialization over the 18 ring units +-xi^j.
    UMat m = op.mat();
    std::string best, cur;
    for (int j = 0; j < 9; ++j) {
        if (j) m = times_xi(m);
        for (const bool negate : {false, true}) {
            serialize_mat(cur, m, negate);
            if (best.empty() || cur < best) best.swap(cur);
        }
    }
    return best;
}

ParityMat ParityMat::filled(int v) {
    ParityMat m;
    for (auto& e : m.p) e = Parity(v);
    return m;
}

ParityMat ParityMat::identity() {
    ParityMat m;
    for (int k = 0; k < 3; ++k) m.at(k, k) = Parity(1);
    return m;
}

ParityMat ParityMat::scaled(int v) const {
    ParityMat m;
    for (int k = 0; k < 9; ++k) m.p[static_cast<std::size_t>(k)] = p[static_cast<std::size_t>(k)] * Parity(v);
    return m;
}

bool ParityMat::is_permutation() const {
    for (int r = 0; r < 3; ++r) {
        int nz = 0;
        for (int c = 0; c < 3; ++c)
            if (at(r, c).value() != 0) ++nz;
        if (nz != 1) return false;
    }
    for (int c = 0; c < 3; ++c) {
        int nz = 0;
        for (int r = 0; r < 3; ++r)
            if (at(r, c).value() != 0) ++nz;
        if (nz != 1) return false;
    }
    return true;
}

std::string ParityMat::str() const {
    std::string s;
    for (int r = 0; r < 3; ++r) {
        s += r ? "; " : "(";
        for (int c = 0; c < 3; ++c) {
            if (c) s += " ";
            s += static_cast<char>('0' + at(r, c).value());
        }
    }
    return s + ")";
}

namespace {

// chi^k * M as integral cyclotomic entries. Requires k >= denom_exp(M).
std::array<CycInt, 9> integral_lift(const UMat& m, unsigned k) {
    CycInt chik = CycInt::integer(1);
    for (unsigned i = 0; i < k; ++i) chik = chik * CycInt::chi();
    std::array<CycInt, 9> n;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            CycInt v = chik * m.at(r, c).num();
            for (unsigned t = 0; t < m.at(r, c).three_exp(); ++t) {
                if (!v.divisible_by_3())
                    throw std::invalid_argument("parity_mat: k below denominator exponent");
                v = v.divided_by_3();
            }
            n[static_cast<std::size_t>(3 * r + c)] = std::move(v);
        }
    return n;
}

} // namespace

ParityMat parity_mat(const UMat& m, unsigned k) {
    const auto n = integral_lift(m, k);
    ParityMat pm;
    for (int i = 0; i < 9; ++i) pm.p[static_cast<std::size_t>(i)] = n[static_cast<std::size_t>(i)].parity();
    return pm;
}

std::vector<ParityMat> residues(const UMat& m, int depth, ResidueLift lift) {
    auto n = integral_lift(m, m.denom_exp());
    std::vector<ParityMat> out;
    out.reserve(static_cast<std::size_t>(depth));
    for (int step = 0; step < depth; ++step) {
        ParityMat pm;
        for (int i = 0; i < 9; ++i) pm.p[static_cast<std::size_t>(i)] = n[static_cast<std::size_t>(i)].parity();
        out.push_back(pm);
        for (int i = 0; i < 9; ++i) {
            int digit = pm.p[static_cast<std::size_t>(i)].value();
            if (lift == ResidueLift::Balanced && digit == 2) digit = -1;
            auto q = (n[static_cast<std::size_t>(i)] - CycInt::integer(digit)).chi_divide();
            if (!q) throw std::logic_error("residues: digit subtraction not divisible");
            n[static_cast<std::size_t>(i)] = *std::move(q);
        }
    }
    return out;
}

nlohmann::json to_json(const PhasedOp& op) {
    nlohmann::json entries = nlohmann::json::array();
    for (int r = 0; r < 3; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < 3; ++c) {
            const RingElem& e = op.mat().at(r, c);
            nlohmann::json coeffs = nlohmann::json::array();
            for (int k = 0; k < 6; ++k) coeffs.push_back(e.num().coeff(k).str());
            row.push_back({{"c", coeffs}, {"p3", e.three_exp()}});
        }
        entries.push_back(row);
    }
    return {{"ring", "Z[zeta9,1/3]"}, {"i_pow", op.i_pow()}, {"entries", entries}};
}

PhasedOp phased_op_from_json(const nlohmann::json& j) {
    if (!j.is_object() || j.value("ring", "") != "Z[zeta9,1/3]")
        throw std::invalid_argument("matrix json: missing ring tag Z[zeta9,1/3]");
    const unsigned i_pow = j.at("i_pow").get<unsigned>();
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != 3)
        throw std::invalid_argument("matrix json: entries must be 3 rows");
    UMat m;
    for (int r = 0; r < 3; ++r) {
        const auto& row = entries.at(static_cast<std::size_t>(r));
        if (!row.is_array() || row.size() != 3)
            throw std::invalid_argument("matrix json: each row must have 3 entries");
        for (int c = 0; c < 3; ++c) {
            const auto& e = row.at(static_cast<std::size_t>(c));
            const auto& coeffs = e.at("c");
            if (!coeffs.is_array() || coeffs.size() != 6)
                throw std::invalid_argument("matrix json: entry needs 6 coefficients");
            std::array<Int, 6> cs;
            for (int k = 0; k < 6; ++k) {
                const auto& v = coeffs.at(static_cast<std::size_t>(k));
                if (!v.is_string())
                    throw std::invalid_argument("matrix json: coefficients are decimal strings");
                try {
                    cs[static_cast<std::size_t>(k)] = Int(v.get<std::string>());
                } catch (const std::invalid_argument&) {
                    throw std::invalid_argument("matrix json: bad integer literal");
                }
            }
            m.at(r, c) = RingElem(CycInt(std::move(cs)), e.at("p3").get<unsigned>());
        }
    }
    return PhasedOp(std::move(m), i_pow);
}

} // namespace tritsynth
