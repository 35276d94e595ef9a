#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sqcx {

// 2x2 integer matrix [[a, b], [c, d]].
struct Mat2Z {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    constexpr std::int64_t det() const { return a * d - b * c; }
    constexpr std::int64_t entry_sum() const { return a + b + c + d; }
    constexpr bool nonneg() const { return a >= 0 && b >= 0 && c >= 0 && d >= 0; }
    constexpr bool has_zero() const { return a == 0 || b == 0 || c == 0 || d == 0; }

    constexpr Mat2Z operator*(const Mat2Z& m) const
    {
        return {a * m.a + b * m.c, a * m.b + b * m.d, c * m.a + d * m.c, c * m.b + d * m.d};
    }
    constexpr Mat2Z operator-() const { return {-a, -b, -c, -d}; }
    constexpr bool operator==(const Mat2Z&) const = default;

    // Exact inverse; requires |det| = 1.
    Mat2Z inverse() const;
    std::string str() const;

    static constexpr Mat2Z I() { return {1, 0, 0, 1}; }
    static constexpr Mat2Z F() { return {0, 1, 1, 0}; }
    static constexpr Mat2Z L() { return {1, 0, 1, 1}; }
    static constexpr Mat2Z R() { return {1, 1, 0, 1}; }
    static constexpr Mat2Z D() { return {-1, 0, 0, 1}; }
};

Mat2Z mat_pow(const Mat2Z& g, int k);
// Throws InvalidInput unless |det| = 1.
void require_gl2(const Mat2Z& g);

// Order of g if g^12 = I, else nullopt.
std::optional<int> finite_order(const Mat2Z& g);
inline bool is_finite_order(const Mat2Z& g) { return finite_order(g).has_value(); }

enum class LR { L, R };
enum class Terminal { I, F };

char lr_char(LR x);
Mat2Z lr_matrix(LR x);
Mat2Z terminal_matrix(Terminal t);
const char* terminal_name(Terminal t);

// One move of the normalization, recorded so the conjugator can be replayed.
struct NormalizeMove {
    enum Kind { ConjF, ConjD, ConjRinv, LeftF, Negate } kind;
    std::string name() const;
};

struct Normalization {
    Mat2Z conjugator;  // C
    int epsilon = 1;   // +1 or -1
    int delta = 0;     // 0 or 1
    Mat2Z result;      // N = C (eps F^delta g) C^-1, all entries >= 0
    std::vector<NormalizeMove> moves;
};

// Follows the case analysis of the non-negative conjugation lemma.
// Throws FiniteOrder for finite order input.
Normalization normalize_to_nonneg(const Mat2Z& g);

struct RowStep {
    LR letter;
    Mat2Z rest;  // N = letter * rest
};

// The unique row subtraction keeping N non-negative.  Throws NoStep for
// diagonal or anti-diagonal N, or N with a negative entry.
RowStep row_subtraction_step(const Mat2Z& n);

struct MatrixDecomposition {
    Mat2Z input;
    int epsilon = 1;
    int delta = 0;
    Mat2Z conjugator;
    Mat2Z normalized;
    std::vector<LR> lr_word;
    Terminal terminal = Terminal::I;
    std::vector<NormalizeMove> moves;

    Mat2Z lr_product() const;
    // C (eps F^delta g) C^-1
    Mat2Z lhs() const;
    // (prod lr_word) terminal
    Mat2Z rhs() const;
    bool verify() const { return lhs() == rhs(); }
};

MatrixDecomposition decompose(const Mat2Z& g);

}  // namespace sqcx
