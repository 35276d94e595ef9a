#include "sqcx/autword.hpp"

#include <cctype>

#include "sqcx/error.hpp"

namespace sqcx {

namespace {

const char* kLambda = "\xCE\xBB";  // λ
const char* kRho = "\xCF\x81";     // ρ
const char* kPsi = "\xCF\x88";     // ψ
const char* kDot = "\xC2\xB7";     // ·
const char* kSub[] = {"\xE2\x82\x81", "\xE2\x82\x82", "\xE2\x82\x83", "\xE2\x82\x84"};

bool eat(std::string_view& s, std::string_view tok)
{
    if (s.substr(0, tok.size()) == tok) {
        s.remove_prefix(tok.size());
        return true;
    }
    return false;
}

bool eat_ci(std::string_view& s, std::string_view tok)
{
    if (s.size() < tok.size())
        return false;
    for (std::size_t i = 0; i < tok.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(s[i])) != tok[i])
            return false;
    }
    s.remove_prefix(tok.size());
    return true;
}

bool eat_separator(std::string_view& s)
{
    if (s.empty())
        return false;
    if (s[0] == ' ' || s[0] == '.' || s[0] == '*' || s[0] == '\t' || s[0] == '\n') {
        s.remove_prefix(1);
        return true;
    }
    return eat(s, kDot);
}

Tail parse_tail_index(std::string_view& s)
{
    if (!s.empty() && s[0] >= '1' && s[0] <= '4') {
        Tail t = static_cast<Tail>(s[0] - '0');
        s.remove_prefix(1);
        return t;
    }
    for (int i = 0; i < 4; ++i) {
        if (eat(s, kSub[i]))
            return static_cast<Tail>(i + 1);
    }
    throw ParseError("expected tail index 1-4 after psi");
}

}  // namespace

Endomorphism lambda_aut() { return Endomorphism::parse({"ba", "b"}); }
Endomorphism rho_aut() { return Endomorphism::parse({"a", "ab"}); }
Endomorphism sigma_aut() { return Endomorphism::parse({"b", "a"}); }
Endomorphism iota_aut() { return Endomorphism::parse({"A", "B"}); }

Endomorphism eta_aut(Eta e) { return e == Eta::Lambda ? lambda_aut() : rho_aut(); }

Endomorphism tail_aut(Tail t)
{
    switch (t) {
    case Tail::Psi1: return Endomorphism::identity(2);
    case Tail::Psi2: return iota_aut();
    case Tail::Psi3: return sigma_aut();
    case Tail::Psi4: return compose(iota_aut(), sigma_aut());
    }
    throw InternalError("bad tail");
}

Mat2Z tail_matrix(Tail t)
{
    switch (t) {
    case Tail::Psi1: return Mat2Z::I();
    case Tail::Psi2: return -Mat2Z::I();
    case Tail::Psi3: return Mat2Z::F();
    case Tail::Psi4: return -Mat2Z::F();
    }
    throw InternalError("bad tail");
}

std::string tail_name(Tail t) { return "psi" + std::to_string(static_cast<int>(t)); }

AutWord AutWord::parse(std::string_view s)
{
    AutWord w;
    bool have_tail = false;
    while (!s.empty()) {
        if (eat_separator(s))
            continue;
        if (have_tail)
            throw ParseError("unexpected text after the tail: '" + std::string(s) + "'");
        if (eat_ci(s, "lambda") || eat(s, kLambda)) {
            w.body.push_back(Eta::Lambda);
        } else if (eat_ci(s, "rho") || eat(s, kRho)) {
            w.body.push_back(Eta::Rho);
        } else if (eat_ci(s, "psi") || eat(s, kPsi)) {
            w.tail = parse_tail_index(s);
            have_tail = true;
        } else if (s[0] == 'l' || s[0] == 'L') {
            w.body.push_back(Eta::Lambda);
            s.remove_prefix(1);
        } else if (s[0] == 'r' || s[0] == 'R') {
            w.body.push_back(Eta::Rho);
            s.remove_prefix(1);
        } else {
            throw ParseError("cannot parse automorphism word at '" + std::string(s) + "'");
        }
    }
    if (w.body.empty())
        throw InvalidInput(
            "automorphism word has no lambda/rho letters: a finite order automorphism (n = 0) "
            "is handled by the finite-order construction, whose mapping torus is finitely "
            "covered by Gamma x S^1, not by these square complexes");
    return w;
}

AutWord AutWord::from_decomposition(const MatrixDecomposition& d)
{
    AutWord w;
    for (LR x : d.lr_word)
        w.body.push_back(x == LR::L ? Eta::Lambda : Eta::Rho);
    bool plus = d.epsilon > 0;
    if (d.terminal == Terminal::I)
        w.tail = plus ? Tail::Psi1 : Tail::Psi2;
    else
        w.tail = plus ? Tail::Psi3 : Tail::Psi4;
    return w;
}

std::string AutWord::str() const
{
    std::string s;
    for (Eta e : body)
        s += e == Eta::Lambda ? kLambda : kRho;
    s += kDot;
    s += kPsi;
    s += kSub[static_cast<int>(tail) - 1];
    return s;
}

std::string AutWord::ascii() const
{
    std::string s;
    for (Eta e : body)
        s += e == Eta::Lambda ? 'L' : 'R';
    return s + "." + tail_name(tail);
}

Endomorphism AutWord::realize() const
{
    Endomorphism phi = tail_aut(tail);
    for (auto it = body.rbegin(); it != body.rend(); ++it)
        phi = compose(eta_aut(*it), phi);
    return phi;
}

Mat2Z AutWord::matrix() const
{
    Mat2Z m = Mat2Z::I();
    for (Eta e : body)
        m = m * (e == Eta::Lambda ? Mat2Z::L() : Mat2Z::R());
    return m * tail_matrix(tail);
}

std::vector<AutWord> all_aut_words(int max_len)
{
    std::vector<AutWord> out;
    for (int n = 1; n <= max_len; ++n) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            AutWord w;
            for (int i = 0; i < n; ++i)
                w.body.push_back((mask >> (n - 1 - i)) & 1u ? Eta::Rho : Eta::Lambda);
            for (int t = 1; t <= 4; ++t) {
                w.tail = static_cast<Tail>(t);
                out.push_back(w);
            }
        }
    }
    return out;
}

}  // namespace sqcx
