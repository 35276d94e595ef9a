#include "sqcx/matdecomp.hpp"

#include <cstdlib>

#include "sqcx/error.hpp"

namespace sqcx {

Mat2Z Mat2Z::inverse() const
{
    std::int64_t e = det();
    if (e != 1 && e != -1)
        throw InvalidInput("matrix " + str() + " is not invertible over Z");
    // e^-1 = e for e = +-1
    return {d * e, -b * e, -c * e, a * e};
}

std::string Mat2Z::str() const
{
    return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(c) + "," +
           std::to_string(d) + "]]";
}

Mat2Z mat_pow(const Mat2Z& g, int k)
{
    Mat2Z base = k < 0 ? g.inverse() : g;
    Mat2Z out = Mat2Z::I();
    for (int i = 0; i < std::abs(k); ++i)
        out = out * base;
    return out;
}

void require_gl2(const Mat2Z& g)
{
    std::int64_t e = g.det();
    if (e != 1 && e != -1)
        throw InvalidInput("matrix " + g.str() + " has determinant " + std::to_string(e) +
                           ", expected +-1");
}

std::optional<int> finite_order(const Mat2Z& g)
{
    require_gl2(g);
    Mat2Z p = Mat2Z::I();
    for (int k = 1; k <= 12; ++k) {
        p = p * g;
        if (p == Mat2Z::I())
            return k;
        // entries of an infinite order element grow; cap to avoid overflow
        if (std::llabs(p.a) > (1LL << 40) || std::llabs(p.b) > (1LL << 40) ||
            std::llabs(p.c) > (1LL << 40) || std::llabs(p.d) > (1LL << 40))
            return std::nullopt;
    }
    return std::nullopt;
}

char lr_char(LR x) { return x == LR::L ? 'L' : 'R'; }
Mat2Z lr_matrix(LR x) { return x == LR::L ? Mat2Z::L() : Mat2Z::R(); }
Mat2Z terminal_matrix(Terminal t) { return t == Terminal::I ? Mat2Z::I() : Mat2Z::F(); }
const char* terminal_name(Terminal t) { return t == Terminal::I ? "I" : "F"; }

std::string NormalizeMove::name() const
{
    switch (kind) {
    case ConjF: return "conj F";
    case ConjD: return "conj D";
    case ConjRinv: return "conj R^-1";
    case LeftF: return "mul F";
    case Negate: return "negate";
    }
    return "?";
}

namespace {

struct NormState {
    Mat2Z x;
    Normalization out;

    void conj(const Mat2Z& p, NormalizeMove::Kind k)
    {
        x = p * x * p.inverse();
        out.conjugator = p * out.conjugator;
        out.moves.push_back({k});
    }
    void conj_f() { conj(Mat2Z::F(), NormalizeMove::ConjF); }
    void conj_d() { conj(Mat2Z::D(), NormalizeMove::ConjD); }
    void conj_rinv() { conj(Mat2Z::R().inverse(), NormalizeMove::ConjRinv); }
    void left_f()
    {
        // F commutes with the conjugator only while it is I or F.
        const Mat2Z& c = out.conjugator;
        if (out.delta != 0 || !(c == Mat2Z::I() || c == Mat2Z::F()))
            throw InternalError("F multiplication after a non-central conjugation");
        x = Mat2Z::F() * x;
        out.delta = 1;
        out.moves.push_back({NormalizeMove::LeftF});
    }
    void negate()
    {
        x = -x;
        out.epsilon = -out.epsilon;
        out.moves.push_back({NormalizeMove::Negate});
    }

    // a, c >= 0 already arranged; the R^-1 conjugation clears the remaining
    // negative entries of the second column.
    void rinv_loop()
    {
        std::int64_t guard =
            64 * (std::llabs(x.a) + std::llabs(x.b) + std::llabs(x.c) + std::llabs(x.d));
        while (!x.nonneg()) {
            if (guard-- <= 0)
                throw InternalError("R^-1 conjugation loop did not terminate");
            if (x.a < 0 || x.c < 0)
                throw InternalError("unexpected sign pattern " + x.str());
            conj_rinv();
        }
    }
};

void nonzero_case(NormState& s)
{
    Mat2Z& x = s.x;
    std::int64_t aa = std::llabs(x.a), ab = std::llabs(x.b), ac = std::llabs(x.c),
                 ad = std::llabs(x.d);
    if (aa >= ab && aa >= ac && aa >= ad) {
    } else if (ad >= ab && ad >= ac) {
        s.conj_f();
    } else if (ac >= ab) {
        s.left_f();
    } else {
        s.conj_f();
        s.left_f();
    }
    if (x.a < 0)
        s.negate();
    if (x.c < 0)
        s.conj_d();
    s.rinv_loop();
}

// Returns false when the reduced triangular matrix has d = -1.
bool zero_case(NormState& s)
{
    Mat2Z& x = s.x;
    if (x.b != 0 && x.c != 0)
        s.left_f();
    if (x.c != 0)
        s.conj_f();
    if (x.a < 0)
        s.negate();
    if (x.d == -1)
        return false;
    if (x.b < 0)
        s.conj_d();
    return true;
}

// Infinite order matrices with a zero entry whose F-multiple has order 2,
// e.g. [[0,-1],[1,3]].  These are handled by conjugation alone.
void zero_fallback(NormState& s)
{
    Mat2Z& x = s.x;
    if (std::llabs(x.a) < std::llabs(x.d))
        s.conj_f();
    if (x.a < 0)
        s.negate();
    if (x.c < 0)
        s.conj_d();
    s.rinv_loop();
}

}  // namespace

Normalization normalize_to_nonneg(const Mat2Z& g)
{
    if (auto ord = finite_order(g))
        throw FiniteOrder("matrix " + g.str() + " has finite order " + std::to_string(*ord));

    NormState s{g, {}};
    s.out.conjugator = Mat2Z::I();
    if (!g.nonneg()) {
        if (!g.has_zero()) {
            nonzero_case(s);
        } else if (!zero_case(s)) {
            s = NormState{g, {}};
            s.out.conjugator = Mat2Z::I();
            zero_fallback(s);
        }
    }
    s.out.result = s.x;

    const Normalization& n = s.out;
    Mat2Z lhs = n.conjugator * (n.delta ? Mat2Z::F() * g : g) * n.conjugator.inverse();
    if (n.epsilon < 0)
        lhs = -lhs;
    if (!n.result.nonneg() || !(lhs == n.result))
        throw InternalError("normalization of " + g.str() + " failed its own identity");
    return s.out;
}

RowStep row_subtraction_step(const Mat2Z& n)
{
    if (!n.nonneg())
        throw NoStep("matrix " + n.str() + " has a negative entry");
    if ((n.b == 0 && n.c == 0) || (n.a == 0 && n.d == 0))
        throw NoStep("matrix " + n.str() + " is diagonal or anti-diagonal");
    // N = R * [[a-c, b-d], [c, d]]   or   N = L * [[a, b], [c-a, d-b]]
    if (n.a >= n.c && n.b >= n.d)
        return {LR::R, {n.a - n.c, n.b - n.d, n.c, n.d}};
    if (n.c >= n.a && n.d >= n.b)
        return {LR::L, {n.a, n.b, n.c - n.a, n.d - n.b}};
    throw InternalError("no non-negative row subtraction for " + n.str());
}

Mat2Z MatrixDecomposition::lr_product() const
{
    Mat2Z p = Mat2Z::I();
    for (LR x : lr_word)
        p = p * lr_matrix(x);
    return p;
}

Mat2Z MatrixDecomposition::lhs() const
{
    Mat2Z inner = delta ? Mat2Z::F() * input : input;
    if (epsilon < 0)
        inner = -inner;
    return conjugator * inner * conjugator.inverse();
}

Mat2Z MatrixDecomposition::rhs() const
{
    return lr_product() * terminal_matrix(terminal);
}

MatrixDecomposition decompose(const Mat2Z& g)
{
    Normalization nz = normalize_to_nonneg(g);
    MatrixDecomposition d;
    d.input = g;
    d.epsilon = nz.epsilon;
    d.delta = nz.delta;
    d.conjugator = nz.conjugator;
    d.normalized = nz.result;
    d.moves = nz.moves;

    Mat2Z n = nz.result;
    while (!(n == Mat2Z::I() || n == Mat2Z::F())) {
        RowStep st = row_subtraction_step(n);
        if (st.rest.entry_sum() >= n.entry_sum())
            throw InternalError("row subtraction did not reduce the entry sum");
        d.lr_word.push_back(st.letter);
        n = st.rest;
    }
    d.terminal = n == Mat2Z::I() ? Terminal::I : Terminal::F;
    if (d.lr_word.empty() || !d.verify())
        throw InternalError("decomposition of " + g.str() + " failed verification");
    return d;
}

}  // namespace sqcx
