#include "tritsynth/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

namespace tritsynth {

CycInt CycInt::xi_pow(int j) {
    j = ((j % 9) + 9) % 9;
    CycInt r = integer(1);
    const CycInt x = xi();
    for (int k = 0; k < j; ++k) r = r * x;
    return r;
}

bool CycInt::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

CycInt CycInt::operator+(const CycInt& o) const {
    std::array<Int, 6> r;
    for (int k = 0; k < 6; ++k) r[k] = c_[k] + o.c_[k];
    return CycInt(std::move(r));
}

CycInt CycInt::operator-(const CycInt& o) const {
    std::array<Int, 6> r;
    for (int k = 0; k < 6; ++k) r[k] = c_[k] - o.c_[k];
    return CycInt(std::move(r));
}

CycInt CycInt::operator-() const {
    std::array<Int, 6> r;
    for (int k = 0; k < 6; ++k) r[k] = -c_[k];
    return CycInt(std::move(r));
}

namespace {

inline bool small_enough(const std::array<Int, 6>& c) {
    for (const auto& v : c) {
        if (!v.is_small()) return false;
        const long x = v.small();
        if (x >= (1L << 29) || x <= -(1L << 29)) return false;
    }
    return true;
}

} // namespace

CycInt CycInt::operator*(const CycInt& o) const {
    // Schoolbook product, then reduce powers >= 6 by
    // x^6 = -1 - x^3, x^7 = -x - x^4, x^8 = -x^2 - x^5, x^9 = 1, x^10 = x.
    if (small_enough(c_) && small_enough(o.c_)) {
        long a[6], b[6], p[11] = {};
        for (int i = 0; i < 6; ++i) {
            a[i] = c_[i].small();
            b[i] = o.c_[i].small();
        }
        for (int i = 0; i < 6; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < 6; ++j) p[i + j] += a[i] * b[j];
        }
        std::array<Int, 6> r = {p[0] - p[6] + p[9], p[1] - p[7] + p[10], p[2] - p[8],
                                p[3] - p[6],        p[4] - p[7],         p[5] - p[8]};
        return CycInt(std::move(r));
    }
    std::array<Int, 11> p{};
    for (int i = 0; i < 6; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < 6; ++j) p[i + j] += c_[i] * o.c_[j];
    }
    std::array<Int, 6> r;
    r[0] = p[0] - p[6] + p[9];
    r[1] = p[1] - p[7] + p[10];
    r[2] = p[2] - p[8];
    r[3] = p[3] - p[6];
    r[4] = p[4] - p[7];
    r[5] = p[5] - p[8];
    return CycInt(std::move(r));
}

CycInt CycInt::times_xi() const {
    // xi * (c0 + c1 x + ... + c5 x^5): the x^6 term folds to -1 - x^3.
    std::array<Int, 6> r;
    r[0] = -c_[5];
    r[1] = c_[0];
    r[2] = c_[1];
    r[3] = c_[2] - c_[5];
    r[4] = c_[3];
    r[5] = c_[4];
    return CycInt(std::move(r));
}

CycInt CycInt::operator*(const Int& k) const {
    std::array<Int, 6> r;
    for (int i = 0; i < 6; ++i) r[i] = c_[i] * k;
    return CycInt(std::move(r));
}

CycInt CycInt::conj() const {
    // xi -> xi^8 maps the basis as 1->1, xi->-x^2-x^5, xi^2->-x-x^4,
    // xi^3->-1-x^3, xi^4->x^5, xi^5->x^4.
    std::array<Int, 6> r;
    r[0] = c_[0] - c_[3];
    r[1] = -c_[2];
    r[2] = -c_[1];
    r[3] = -c_[3];
    r[4] = -c_[2] + c_[5];
    r[5] = -c_[1] + c_[4];
    return CycInt(std::move(r));
}

Parity CycInt::parity() const {
    Int s = 0;
    for (const auto& v : c_) s += v;
    return Parity(static_cast<int>(s.mod3()));
}

std::optional<CycInt> CycInt::chi_divide() const {
    // Solve q * (1 - xi) = this. The linear system has the closed form
    // below; integrality holds exactly when the coefficient sum is 0 mod 3.
    Int s = 0;
    for (const auto& v : c_) s += v;
    if (s.mod3() != 0) return std::nullopt;
    const Int s3 = s.divided_by_3();
    std::array<Int, 6> q;
    q[0] = c_[0] - s3;
    q[1] = c_[1] + q[0];
    q[2] = c_[2] + q[1];
    q[5] = s3;
    q[3] = c_[3] + q[2] - q[5];
    q[4] = c_[4] + q[3];
    return CycInt(std::move(q));
}

unsigned CycInt::chi_valuation() const {
    if (is_zero()) throw std::invalid_argument("chi_valuation of zero");
    unsigned n = 0;
    CycInt cur = *this;
    for (;;) {
        auto q = cur.chi_divide();
        if (!q) return n;
        cur = *std::move(q);
        ++n;
    }
}

bool CycInt::divisible_by_3() const {
    for (const auto& v : c_)
        if (!v.divisible_by_3()) return false;
    return true;
}

CycInt CycInt::divided_by_3() const {
    std::array<Int, 6> r;
    for (int i = 0; i < 6; ++i) r[i] = c_[i].divided_by_3();
    return CycInt(std::move(r));
}

std::string CycInt::str() const {
    std::ostringstream os;
    os << c_[0].str();
    for (int k = 1; k < 6; ++k) {
        os << " + " << c_[k].str() << "*x";
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::optional<CycInt> CycInt::parse(const std::string& text) {
    std::array<Int, 6> c;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_int = [&]() -> std::optional<Int> {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            return std::nullopt;
        return Int(text.substr(start, pos - start));
    };
    auto expect = [&](const std::string& tok) -> bool {
        skip_ws();
        if (text.compare(pos, tok.size(), tok) != 0) return false;
        pos += tok.size();
        return true;
    };
    for (int k = 0; k < 6; ++k) {
        if (k > 0 && !expect("+")) return std::nullopt;
        auto v = read_int();
        if (!v) return std::nullopt;
        c[k] = *std::move(v);
        if (k == 1 && !expect("*x")) return std::nullopt;
        if (k > 1) {
            if (!expect("*x^")) return std::nullopt;
            if (pos >= text.size() || text[pos] != static_cast<char>('0' + k)) return std::nullopt;
            ++pos;
        }
    }
    skip_ws();
    if (pos != text.size()) return std::nullopt;
    return CycInt(std::move(c));
}

RingElem::RingElem(CycInt num, unsigned three_exp)
    : num_(std::move(num)), three_exp_(three_exp) {
    while (three_exp_ > 0 && num_.divisible_by_3()) {
        num_ = num_.divided_by_3();
        --three_exp_;
    }
    if (num_.is_zero()) three_exp_ = 0;
}

RingElem RingElem::operator+(const RingElem& o) const {
    const unsigned e = std::max(three_exp_, o.three_exp_);
    if (three_exp_ == o.three_exp_) return RingElem(num_ + o.num_, e);
    return RingElem(num_ * Int::pow3(e - three_exp_) + o.num_ * Int::pow3(e - o.three_exp_), e);
}

RingElem RingElem::operator-(const RingElem& o) const { return *this + (-o); }

RingElem RingElem::operator-() const { return RingElem(-num_, three_exp_); }

RingElem RingElem::operator*(const RingElem& o) const {
    return RingElem(num_ * o.num_, three_exp_ + o.three_exp_);
}

bool RingElem::operator==(const RingElem& o) const {
    // Both sides are normalized.
    return three_exp_ == o.three_exp_ && num_ == o.num_;
}

unsigned RingElem::denom_exp_chi() const {
    if (num_.is_zero()) return 0;
    if (three_exp_ == 0) return 0;
    // 3 is a unit multiple of chi^6, so d = 6*three_exp - v_chi(num).
    // Normalization bounds v_chi(num) < 6.
    const unsigned v = num_.chi_valuation();
    return 6 * three_exp_ - v;
}

std::string RingElem::str() const {
    std::ostringstream os;
    os << "(" << num_.str() << ")/3^" << three_exp_;
    return os.str();
}

std::optional<RingElem> RingElem::parse(const std::string& text) {
    const auto open = text.find('(');
    const auto close = text.rfind(")/3^");
    if (open == std::string::npos || close == std::string::npos || close < open)
        return std::nullopt;
    auto num = CycInt::parse(text.substr(open + 1, close - open - 1));
    if (!num) return std::nullopt;
    const std::string exp = text.substr(close + 4);
    if (exp.empty()) return std::nullopt;
    for (char ch : exp)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
    return RingElem(*std::move(num), static_cast<unsigned>(std::stoul(exp)));
}

} // namespace tritsynth
