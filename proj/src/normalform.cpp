#include "tritsynth/normalform.hpp"

#include <cctype>

namespace tritsynth {

GateString parse_gate_string(const std::string& text) {
    GateString out;
    std::size_t pos = 0;
    const std::size_t n = text.size();
    while (pos < n) {
        const char raw = text[pos];
        if (std::isspace(static_cast<unsigned char>(raw))) {
            ++pos;
            continue;
        }
        const char ch = static_cast<char>(std::toupper(static_cast<unsigned char>(raw)));
        const std::size_t tok_pos = pos;
        Token base;
        switch (ch) {
        case 'H': base = Token::H; break;
        case 'S': base = Token::S; break;
        case 'T': base = Token::T; break;
        case 'X': base = Token::X; break;
        case 'Z': base = Token::Z; break;
        case 'V': base = Token::V; break;
        case 'A': base = Token::A; break;
        default: throw ParseError(pos, "unexpected character '" + std::string(1, raw) + "'");
        }
        ++pos;
        // H0' / H1' / H2'
        if (base == Token::H && pos + 1 < n && text[pos] >= '0' && text[pos] <= '2' &&
            text[pos + 1] == '\'') {
            out.push_back(static_cast<Token>(static_cast<int>(Token::H0p) + (text[pos] - '0')));
            pos += 2;
            continue;
        }
        int repeat = 1;
        if (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            const char d = text[pos];
            if (d == '2' || (d == '3' && base == Token::T)) {
                repeat = d - '0';
                ++pos;
            } else {
                throw ParseError(pos, "bad exponent digit after token at position " +
                                          std::to_string(tok_pos));
            }
        }
        for (int k = 0; k < repeat; ++k) out.push_back(base);
    }
    return out;
}

namespace {

const char* token_name(Token t) {
    switch (t) {
    case Token::H: return "H";
    case Token::S: return "S";
    case Token::T: return "T";
    case Token::X: return "X";
    case Token::Z: return "Z";
    case Token::V: return "V";
    case Token::A: return "A";
    case Token::H0p: return "H0'";
    case Token::H1p: return "H1'";
    case Token::H2p: return "H2'";
    }
    return "?";
}

Gate token_gate(Token t) { return static_cast<Gate>(static_cast<int>(t)); }

} // namespace

std::string unparse(const GateString& g) {
    std::string out;
    for (const Token t : g) {
        if (!out.empty()) out += ' ';
        out += token_name(t);
    }
    return out;
}

PhasedOp string_to_matrix(const GateString& g) {
    PhasedOp m = PhasedOp::identity();
    for (const Token t : g) m = m * gate_matrix(token_gate(t));
    return m;
}

std::string NormalForm::str(bool expand) const {
    static const char* kPrime[3] = {"H0'", "H1'", "H2'"};
    static const char* kPrimeExp[3] = {"HSH", "SHSH", "S2HSH"};
    std::vector<std::string> words;
    auto t_word = [](int t) { return t == 2 ? std::string("T2") : std::string("T"); };
    if (lead_t > 0) words.push_back(t_word(lead_t));
    for (const auto& pr : body) {
        words.push_back(expand ? kPrimeExp[pr.h] : kPrime[pr.h]);
        words.push_back(t_word(pr.t));
    }
    if (tail_h) words.push_back(expand ? kPrimeExp[*tail_h] : kPrime[*tail_h]);
    const std::string tail = tail_p.str();
    if (!tail.empty()) words.push_back(tail);
    std::string out;
    for (const auto& w : words) {
        if (!out.empty()) out += ' ';
        out += w;
    }
    return out;
}

namespace {

// Working state for the left-to-right rewrite: the consumed prefix equals
//   phase * T^lead * prod(body) * tail
// with tail an arbitrary exact Clifford matrix.
struct RewriteState {
    PhaseUnit phase;
    std::uint8_t lead_t = 0;
    std::vector<NormalForm::Pair> body;
    PhasedOp tail = PhasedOp::identity();
};

const PhasedOp& z_squared() {
    static const PhasedOp z2 = gate_matrix(Gate::Z) * gate_matrix(Gate::Z);
    return z2;
}

void push_t(RewriteState& st) {
    const auto& tables = CliffordTables::instance();
    const auto split = tables.lookup(st.tail);
    if (!split) throw std::logic_error("normalize: tail is not a Clifford element");
    const auto& past = tables.p_past_t(split->p, 1);
    st.phase = st.phase * split->u * past.u;
    const std::uint8_t a = past.t_pow;
    if (split->h != 0) {
        st.body.push_back({static_cast<std::uint8_t>(split->h - 1), a});
        st.tail = pelem_matrix(past.p);
        return;
    }
    // Merge T^a with the T-power to its left; T^3 = w Z^2 drops a syllable.
    const bool in_body = !st.body.empty();
    const int prev = in_body ? st.body.back().t : st.lead_t;
    const int sum = prev + a;
    if (sum < 3) {
        if (in_body)
            st.body.back().t = static_cast<std::uint8_t>(sum);
        else
            st.lead_t = static_cast<std::uint8_t>(sum);
        st.tail = pelem_matrix(past.p);
        return;
    }
    st.phase = st.phase * PhaseUnit::omega_unit();
    const std::uint8_t rest = static_cast<std::uint8_t>(sum - 3); // 0 or 1
    PhasedOp head = PhasedOp::identity();
    if (in_body) {
        if (rest == 0) {
            head = tables.hprime(st.body.back().h);
            st.body.pop_back();
        } else {
            st.body.back().t = rest;
        }
    } else {
        st.lead_t = rest;
    }
    st.tail = head * z_squared() * pelem_matrix(past.p);
}

} // namespace

NormalForm normalize(const GateString& g) {
    RewriteState st;
    for (const Token t : g) {
        if (t == Token::T)
            push_t(st);
        else
            st.tail = st.tail * gate_matrix(token_gate(t));
    }
    const auto split = CliffordTables::instance().lookup(st.tail);
    if (!split) throw std::logic_error("normalize: tail is not a Clifford element");
    NormalForm nf;
    nf.lead_t = st.lead_t;
    nf.body = std::move(st.body);
    if (split->h != 0) nf.tail_h = static_cast<std::uint8_t>(split->h - 1);
    nf.tail_p = split->p;
    nf.phase = st.phase * split->u;
    return nf;
}

PhasedOp nf_matrix(const NormalForm& nf) {
    const auto& tables = CliffordTables::instance();
    const PhasedOp& t = gate_matrix(Gate::T);
    PhasedOp m = PhasedOp::identity();
    for (int k = 0; k < nf.lead_t; ++k) m = m * t;
    for (const auto& pr : nf.body) {
        m = m * tables.hprime(pr.h);
        for (int k = 0; k < pr.t; ++k) m = m * t;
    }
    if (nf.tail_h) m = m * tables.hprime(*nf.tail_h);
    m = m * pelem_matrix(nf.tail_p);
    if (m.i_pow() != 0) throw std::logic_error("nf_matrix: odd H-count in normal form");
    return m;
}

} // namespace tritsynth
