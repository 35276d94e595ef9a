#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sqcx/freegroup.hpp"
#include "sqcx/matdecomp.hpp"

namespace sqcx {

// Generators of the positive semigroup of Aut(F2), on F(a, b):
//   lambda: a -> ba, b -> b      abelianizes to L
//   rho:    a -> a,  b -> ab     abelianizes to R
//   sigma:  a -> b,  b -> a      abelianizes to F
//   iota:   a -> A,  b -> B      abelianizes to -I
Endomorphism lambda_aut();
Endomorphism rho_aut();
Endomorphism sigma_aut();
Endomorphism iota_aut();

enum class Eta { Lambda, Rho };
// psi1 = id, psi2 = iota, psi3 = sigma, psi4 = psi2 psi3.
enum class Tail { Psi1 = 1, Psi2, Psi3, Psi4 };

Endomorphism eta_aut(Eta e);
Endomorphism tail_aut(Tail t);
Mat2Z tail_matrix(Tail t);
std::string tail_name(Tail t);

// phi = eta_0 ... eta_{n-1} theta, applied right to left.
struct AutWord {
    std::vector<Eta> body;
    Tail tail = Tail::Psi1;

    // Accepts "λλρ·ψ₂", "LLR.psi2", "llr psi2" and similar.  An empty body
    // is rejected with InvalidInput.
    static AutWord parse(std::string_view text);
    static AutWord from_decomposition(const MatrixDecomposition& d);

    std::string str() const;        // unicode, e.g. λλρ·ψ₂
    std::string ascii() const;      // e.g. LLR.psi2
    Endomorphism realize() const;
    Mat2Z matrix() const;           // abelianization of realize()

    bool operator==(const AutWord&) const = default;
};

inline AutWord to_aut_word(const MatrixDecomposition& d) { return AutWord::from_decomposition(d); }

// Every word with body length in [1, max_len] and each tail, ordered by
// length, then body (lambda before rho), then tail.
std::vector<AutWord> all_aut_words(int max_len);

}  // namespace sqcx
