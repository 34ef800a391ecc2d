#include "tritsynth/clifford.hpp"

#include <algorithm>
#include <stdexcept>

namespace tritsynth {

namespace {
constexpr int kInv3[3] = {0, 1, 2}; // 1^-1 = 1, 2^-1 = 2 in Z_3
inline int m3(int v) { return ((v % 3) + 3) % 3; }
} // namespace

SL2Z3 SL2Z3::operator*(const SL2Z3& o) const {
    return {static_cast<std::uint8_t>(m3(a * o.a + b * o.c)),
            static_cast<std::uint8_t>(m3(a * o.b + b * o.d)),
            static_cast<std::uint8_t>(m3(c * o.a + d * o.c)),
            static_cast<std::uint8_t>(m3(c * o.b + d * o.d))};
}

SL2Z3 SL2Z3::inverse() const {
    // adjugate; det is 1
    return {d, static_cast<std::uint8_t>(m3(-b)), static_cast<std::uint8_t>(m3(-c)), a};
}

const std::vector<SL2Z3>& SL2Z3::all() {
    static const std::vector<SL2Z3> elems = [] {
        std::vector<SL2Z3> v;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c)
                    for (int d = 0; d < 3; ++d) {
                        SL2Z3 f{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                                static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)};
                        if (f.det() == 1) v.push_back(f);
                    }
        return v;
    }();
    return elems;
}

std::vector<SL2Gen> sl2_word(const SL2Z3& f) {
    std::vector<SL2Gen> w;
    auto push_s = [&w](int n) {
        for (int k = 0; k < m3(n); ++k) w.push_back(SL2Gen::S);
    };
    if (f.b != 0) {
        // S^m H S^n H S^q with n = b, q = (a+1) b^-1, m = (d+1) b^-1
        const int bi = kInv3[f.b];
        push_s((f.d + 1) * bi);
        w.push_back(SL2Gen::H);
        push_s(f.b);
        w.push_back(SL2Gen::H);
        push_s((f.a + 1) * bi);
    } else {
        // H S^m H S^n H S^q with n = d, m = d^-1 (1-b), q = (c+1) d^-1
        const int di = kInv3[f.d];
        w.push_back(SL2Gen::H);
        push_s(di * (1 - f.b + 3));
        w.push_back(SL2Gen::H);
        push_s(f.d);
        w.push_back(SL2Gen::H);
        push_s((f.c + 1) * di);
    }
    return w;
}

CliffordElem CliffordElem::compose(const CliffordElem& o) const {
    return {static_cast<std::uint8_t>(m3(x + f.a * o.x + f.b * o.z)),
            static_cast<std::uint8_t>(m3(z + f.c * o.x + f.d * o.z)), f * o.f};
}

CliffordElem CliffordElem::inverse() const {
    const SL2Z3 fi = f.inverse();
    return {static_cast<std::uint8_t>(m3(-(fi.a * x + fi.b * z))),
            static_cast<std::uint8_t>(m3(-(fi.c * x + fi.d * z))), fi};
}

const std::vector<CliffordElem>& CliffordElem::all() {
    static const std::vector<CliffordElem> elems = [] {
        std::vector<CliffordElem> v;
        v.reserve(216);
        for (int x = 0; x < 3; ++x)
            for (int z = 0; z < 3; ++z)
                for (const auto& f : SL2Z3::all())
                    v.push_back({static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(z), f});
        return v;
    }();
    return elems;
}

PhasedOp appleby_matrix(const CliffordElem& e) {
    const RingElem one = RingElem::integer(1);
    auto omega_pow = [](int k) { return RingElem::of(CycInt::xi_pow(3 * m3(k))); };

    PhasedOp vf;
    if (e.f.b != 0) {
        const int bi = kInv3[e.f.b];
        const RingElem scale =
            RingElem(-(CycInt::integer(1) + CycInt::omega() * Int(2)), 1); // 1/(1+2w)
        UMat m;
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                const int exp = 2 * bi * (e.f.a * k * k - 2 * j * k + e.f.d * j * j);
                m.at(j, k) = omega_pow(exp) * scale;
            }
        vf = PhasedOp(std::move(m), 1);
    } else {
        UMat m;
        for (int k = 0; k < 3; ++k) {
            const int exp = 2 * e.f.a * e.f.c * k * k;
            m.at(m3(e.f.a * k), k) = omega_pow(exp);
        }
        vf = PhasedOp(std::move(m), 0);
    }

    // D_(x,z) = w^{2^-1 x z} X^x Z^z, 2^-1 = 2
    UMat d;
    for (int c = 0; c < 3; ++c) d.at(m3(c + e.x), c) = omega_pow(2 * e.x * e.z + e.z * c);
    return PhasedOp(std::move(d), 0) * vf;
}

PElem PElem::from_index(int i) {
    PElem p;
    p.z = static_cast<std::uint8_t>(i % 3);
    i /= 3;
    p.x = static_cast<std::uint8_t>(i % 3);
    i /= 3;
    p.s = static_cast<std::uint8_t>(i % 3);
    i /= 3;
    p.v = static_cast<std::uint8_t>(i % 2);
    return p;
}

CliffordElem PElem::elem() const {
    CliffordElem e = CliffordElem::identity();
    for (int k = 0; k < v; ++k) e = e.compose(CliffordElem::v_elem());
    for (int k = 0; k < s; ++k) e = e.compose(CliffordElem::s_elem());
    for (int k = 0; k < x; ++k) e = e.compose(CliffordElem::x_elem());
    for (int k = 0; k < z; ++k) e = e.compose(CliffordElem::z_elem());
    return e;
}

std::string PElem::str() const {
    std::string out;
    auto add = [&out](const char* tok, int pow) {
        if (pow == 0) return;
        if (!out.empty()) out += ' ';
        out += tok;
        if (pow == 2) out += '2';
    };
    add("V", v);
    add("S", s);
    add("X", x);
    add("Z", z);
    return out;
}

PhasedOp pelem_matrix(const PElem& p) {
    PhasedOp m = PhasedOp::identity();
    for (int k = 0; k < p.v; ++k) m = m * gate_matrix(Gate::V);
    for (int k = 0; k < p.s; ++k) m = m * gate_matrix(Gate::S);
    for (int k = 0; k < p.x; ++k) m = m * gate_matrix(Gate::X);
    for (int k = 0; k < p.z; ++k) m = m * gate_matrix(Gate::Z);
    return m;
}

namespace {

int elem_slot(const CliffordElem& e) {
    const int fidx = ((e.f.a * 3 + e.f.b) * 3 + e.f.c) * 3 + e.f.d;
    return (e.x * 3 + e.z) * 81 + fidx;
}

bool in_p_subgroup(const SL2Z3& f) {
    // <S_hat, -1> = matrices (±1 0; n ±1)
    return f.b == 0 && f.a == f.d;
}

} // namespace

const CliffordTables& CliffordTables::instance() {
    static const CliffordTables tables;
    return tables;
}

CliffordTables::CliffordTables() {
    for (int i = 0; i < 3; ++i)
        hprime_[static_cast<std::size_t>(i)] = gate_matrix(static_cast<Gate>(static_cast<int>(Gate::H0p) + i));

    const CliffordElem s = CliffordElem::s_elem();
    const CliffordElem h = CliffordElem::h_elem();
    h_elem_[0] = CliffordElem::identity();
    h_elem_[1] = h.compose(s).compose(h);
    for (int i = 1; i < 3; ++i) h_elem_[static_cast<std::size_t>(i) + 1] = s.compose(h_elem_[static_cast<std::size_t>(i)]);

    // PElem lookup by Appleby label
    std::array<std::int16_t, 729> pelem_of_slot;
    pelem_of_slot.fill(-1);
    for (int i = 0; i < 54; ++i) {
        const PElem p = PElem::from_index(i);
        pelem_of_slot[static_cast<std::size_t>(elem_slot(p.elem()))] = static_cast<std::int16_t>(i);
    }

    // classification of every projective element
    for (const auto& e : CliffordElem::all()) {
        int found = -1;
        for (int hi = 0; hi < 4 && found < 0; ++hi) {
            const CliffordElem rest = h_elem_[static_cast<std::size_t>(hi)].inverse().compose(e);
            if (!in_p_subgroup(rest.f)) continue;
            const std::int16_t pi = pelem_of_slot[static_cast<std::size_t>(elem_slot(rest))];
            if (pi < 0) throw std::logic_error("clifford tables: P label missing");
            found = hi * 54 + pi;
        }
        if (found < 0) throw std::logic_error("clifford tables: element not in H*P");
        classify_[static_cast<std::size_t>(elem_slot(e))] = static_cast<std::uint16_t>(found);
    }

    // exact representative matrices and key index
    key_to_hp_.reserve(216);
    for (int hi = 0; hi < 4; ++hi) {
        const PhasedOp rep_h = hi == 0 ? PhasedOp::identity() : hprime_[static_cast<std::size_t>(hi - 1)];
        for (int pi = 0; pi < 54; ++pi) {
            const PhasedOp m = rep_h * pelem_matrix(PElem::from_index(pi));
            key_to_hp_.emplace_back(canonical_key(m), static_cast<std::uint16_t>(hi * 54 + pi));
            rep_[static_cast<std::size_t>(hi * 54 + pi)] = m;
        }
    }
    std::sort(key_to_hp_.begin(), key_to_hp_.end());

    const PhasedOp t = gate_matrix(Gate::T);
    const PhasedOp t_inv[3] = {PhasedOp::identity(), t.dagger(), (t * t).dagger()};

    // p * T^a = u * T^{a'} * p'
    for (int pi = 0; pi < 54; ++pi) {
        const PhasedOp pm = pelem_matrix(PElem::from_index(pi));
        for (int a = 1; a <= 2; ++a) {
            PhasedOp lhs = pm;
            for (int k = 0; k < a; ++k) lhs = lhs * t;
            bool done = false;
            for (int ap = 1; ap <= 2 && !done; ++ap) {
                const auto hit = lookup(t_inv[ap] * lhs);
                if (hit && hit->h == 0) {
                    past_t_[static_cast<std::size_t>(pi * 2 + a - 1)] =
                        {static_cast<std::uint8_t>(ap), hit->p, hit->u};
                    done = true;
                }
            }
            if (!done) throw std::logic_error("clifford tables: P T^a has no T P form");
        }
    }

    // p * H'_h = u * H'_{h'} * p'
    for (int pi = 0; pi < 54; ++pi) {
        const PhasedOp pm = pelem_matrix(PElem::from_index(pi));
        for (int hi = 0; hi < 3; ++hi) {
            const auto hit = lookup(pm * hprime_[static_cast<std::size_t>(hi)]);
            if (!hit || hit->h == 0) throw std::logic_error("clifford tables: P H' left H' P");
            past_h_[static_cast<std::size_t>(pi * 3 + hi)] =
                {static_cast<std::uint8_t>(hit->h - 1), hit->p, hit->u};
        }
    }
}

CliffordTables::HP CliffordTables::classify(const CliffordElem& e) const {
    const std::uint16_t v = classify_[static_cast<std::size_t>(elem_slot(e))];
    return {static_cast<std::uint8_t>(v / 54), PElem::from_index(v % 54)};
}

std::optional<CliffordTables::ExactHP> CliffordTables::lookup(const PhasedOp& op) const {
    const std::string key = canonical_key(op);
    const auto it = std::lower_bound(key_to_hp_.begin(), key_to_hp_.end(), key,
                                     [](const auto& kv, const std::string& k) { return kv.first < k; });
    if (it == key_to_hp_.end() || it->first != key) return std::nullopt;
    const std::uint16_t v = it->second;
    const auto u = projective_eq(op, rep_[static_cast<std::size_t>(v)]);
    if (!u) throw std::logic_error("clifford tables: key hit without phase");
    return ExactHP{static_cast<std::uint8_t>(v / 54), PElem::from_index(v % 54), *u};
}

const CliffordTables::PastT& CliffordTables::p_past_t(const PElem& p, int a) const {
    return past_t_[static_cast<std::size_t>(p.index() * 2 + (a - 1))];
}

const CliffordTables::PastH& CliffordTables::p_past_hprime(const PElem& p, int h) const {
    return past_h_[static_cast<std::size_t>(p.index() * 3 + h)];
}

const PhasedOp& CliffordTables::rep_matrix(int h, const PElem& p) const {
    return rep_[static_cast<std::size_t>(h * 54 + p.index())];
}

} // namespace tritsynth
