#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tritsynth/clifford.hpp"

namespace tritsynth {

enum class Token : std::uint8_t { H, S, T, X, Z, V, A, H0p, H1p, H2p };

using GateString = std::vector<Token>;

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error(what), position(pos) {}
};

// Tokenizes a gate string. Whitespace-insensitive, case-insensitive;
// exponent digit 2 allowed on any token (3 on T); H0' H1' H2' and V are
// syllable tokens. Throws ParseError with the offending position.
GateString parse_gate_string(const std::string& text);

std::string unparse(const GateString& g);

// Product of the token matrices, leftmost token applied last.
PhasedOp string_to_matrix(const GateString& g);

/**
 * Structured (T|e)(H'T)* H P decomposition plus an explicit unit phase:
 *
 *   phase * T^lead_t * prod_i (H'_{body[i].h} T^{body[i].t}) * tail_h? * tail_p
 */
struct NormalForm {
    std::uint8_t lead_t = 0; // 0..2
    struct Pair {
        std::uint8_t h = 0; // H' index 0..2
        std::uint8_t t = 1; // 1..2
        bool operator==(const Pair&) const = default;
    };
    std::vector<Pair> body;
    std::optional<std::uint8_t> tail_h; // H' index, or absent
    PElem tail_p;
    PhaseUnit phase;

    unsigned t_count() const { return (lead_t > 0 ? 1u : 0u) + static_cast<unsigned>(body.size()); }
    unsigned h_count() const { return static_cast<unsigned>(body.size()) + (tail_h ? 1u : 0u); }

    bool same_structure(const NormalForm& o) const {
        return lead_t == o.lead_t && body == o.body && tail_h == o.tail_h && tail_p == o.tail_p;
    }
    bool operator==(const NormalForm&) const = default;

    // Syllable tokens ("H2' T H1' T H2' T2"), or the {H,S,T} expansion
    // ("S2HSH T SHSH T S2HSH T2") when expand is set. Identity prints "".
    std::string str(bool expand = false) const;
};

// Rewrites any gate string into its unique normal form. The result
// satisfies string_to_matrix(g) == phase * nf_matrix(nf) exactly.
NormalForm normalize(const GateString& g);

// Structural product of the normal form, without the phase. Always has
// i_pow 0 (every constant in it has an even H-count).
PhasedOp nf_matrix(const NormalForm& nf);

} // namespace tritsynth
