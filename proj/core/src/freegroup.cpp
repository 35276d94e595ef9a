#include "sqcx/freegroup.hpp"

#include <algorithm>
#include <cctype>

#include "sqcx/error.hpp"

namespace sqcx {

namespace {

void push_reduced(std::vector<Letter>& out, Letter x)
{
    if (!out.empty() && out.back() == -x)
        out.pop_back();
    else
        out.push_back(x);
}

void check_same_rank(const Word& u, const Word& v)
{
    if (u.rank() != v.rank())
        throw RankMismatch("words of rank " + std::to_string(u.rank()) + " and " +
                           std::to_string(v.rank()));
}

}  // namespace

Word::Word(int rank, const std::vector<Letter>& letters) : rank_(rank)
{
    if (rank < 1)
        throw InvalidInput("free group rank must be positive");
    letters_.reserve(letters.size());
    for (Letter x : letters) {
        if (x == 0 || gen_of(x) >= rank)
            throw RankMismatch("letter outside rank " + std::to_string(rank));
        push_reduced(letters_, x);
    }
}

Word Word::parse(std::string_view text, int rank)
{
    std::vector<Letter> letters;
    int used = 0;
    for (char ch : text) {
        if (ch == ' ' || ch == '.' || ch == '*')
            continue;
        unsigned char u = static_cast<unsigned char>(ch);
        if (!std::isalpha(u))
            throw ParseError(std::string("unexpected character '") + ch + "' in word");
        int gen = std::tolower(u) - 'a';
        int sign = std::islower(u) ? 1 : -1;
        used = std::max(used, gen + 1);
        letters.push_back(make_letter(gen, sign));
    }
    if (rank == 0)
        rank = std::max(used, 1);
    if (used > rank)
        throw RankMismatch("word '" + std::string(text) + "' exceeds rank " + std::to_string(rank));
    return Word(rank, letters);
}

std::string format_letter(Letter x)
{
    char base = x > 0 ? 'a' : 'A';
    return std::string(1, static_cast<char>(base + gen_of(x)));
}

std::string Word::str() const
{
    std::string s;
    s.reserve(letters_.size());
    for (Letter x : letters_)
        s += format_letter(x);
    return s;
}

std::strong_ordering Word::operator<=>(const Word& o) const
{
    if (auto c = letters_.size() <=> o.letters_.size(); c != 0)
        return c;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (auto c = letter_key(letters_[i]) <=> letter_key(o.letters_[i]); c != 0)
            return c;
    }
    return rank_ <=> o.rank_;
}

Word concat_reduce(const Word& u, const Word& v)
{
    check_same_rank(u, v);
    std::vector<Letter> out = u.letters();
    for (Letter x : v.letters())
        push_reduced(out, x);
    return Word(u.rank(), out);
}

Word inverse(const Word& w)
{
    std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
    for (Letter& x : out)
        x = -x;
    return Word(w.rank(), out);
}

Word power(const Word& w, int k)
{
    Word base = k < 0 ? inverse(w) : w;
    Word out(w.rank());
    for (int i = 0; i < (k < 0 ? -k : k); ++i)
        out = concat_reduce(out, base);
    return out;
}

bool is_cyclically_reduced(const Word& w)
{
    return w.size() < 2 || w.front() != -w.back();
}

CyclicReduction cyclically_reduce(const Word& w)
{
    const auto& xs = w.letters();
    std::size_t i = 0, j = xs.size();
    while (j - i >= 2 && xs[i] == -xs[j - 1]) {
        ++i;
        --j;
    }
    std::vector<Letter> core(xs.begin() + i, xs.begin() + j);
    std::vector<Letter> conj(xs.begin(), xs.begin() + i);
    return {Word(w.rank(), core), Word(w.rank(), conj)};
}

bool is_rotation(const Word& u, const Word& v)
{
    if (u.size() != v.size())
        return false;
    if (u.empty())
        return true;
    // v occurs in u.u
    std::vector<Letter> uu = u.letters();
    uu.insert(uu.end(), u.letters().begin(), u.letters().end());
    return std::search(uu.begin(), uu.end(), v.letters().begin(), v.letters().end()) != uu.end();
}

bool is_conjugate_cyclic(const Word& u, const Word& v)
{
    check_same_rank(u, v);
    if (!is_cyclically_reduced(u) || !is_cyclically_reduced(v))
        throw NotCyclicallyReduced("is_conjugate_cyclic needs cyclically reduced words");
    return is_rotation(u, v);
}

Word least_rotation(const Word& w)
{
    const auto& xs = w.letters();
    std::size_t n = xs.size();
    if (n < 2)
        return w;
    std::size_t best = 0;
    for (std::size_t r = 1; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            int a = letter_key(xs[(r + k) % n]);
            int b = letter_key(xs[(best + k) % n]);
            if (a != b) {
                if (a < b)
                    best = r;
                break;
            }
        }
    }
    std::vector<Letter> out(n);
    for (std::size_t k = 0; k < n; ++k)
        out[k] = xs[(best + k) % n];
    return Word(w.rank(), out);
}

std::vector<std::int64_t> exponent_vector(const Word& w)
{
    std::vector<std::int64_t> v(w.rank(), 0);
    for (Letter x : w.letters())
        v[gen_of(x)] += sign_of(x);
    return v;
}

std::vector<std::int64_t> letter_count_vector(const Word& w)
{
    std::vector<std::int64_t> v(w.rank(), 0);
    for (Letter x : w.letters())
        v[gen_of(x)] += 1;
    return v;
}

Endomorphism::Endomorphism(int rank, std::vector<Word> images) : rank_(rank), images_(std::move(images))
{
    if (rank < 1)
        throw InvalidInput("free group rank must be positive");
    if (static_cast<int>(images_.size()) != rank)
        throw RankMismatch("endomorphism of rank " + std::to_string(rank) + " needs " +
                           std::to_string(rank) + " images, got " + std::to_string(images_.size()));
    for (const Word& w : images_) {
        if (w.rank() != rank)
            throw RankMismatch("image word over the wrong rank");
    }
}

Endomorphism Endomorphism::identity(int rank)
{
    std::vector<Word> images;
    for (int i = 0; i < rank; ++i)
        images.emplace_back(rank, std::vector<Letter>{make_letter(i, 1)});
    return Endomorphism(rank, std::move(images));
}

Endomorphism Endomorphism::parse(const std::vector<std::string>& images, int rank)
{
    if (rank == 0)
        rank = static_cast<int>(images.size());
    std::vector<Word> ws;
    for (const auto& s : images)
        ws.push_back(Word::parse(s, rank));
    return Endomorphism(rank, std::move(ws));
}

std::string Endomorphism::str() const
{
    std::string s = "(";
    for (int i = 0; i < rank_; ++i) {
        if (i)
            s += ", ";
        s += format_letter(make_letter(i, 1)) + "->" + images_[i].str();
    }
    return s + ")";
}

Word apply_endo(const Endomorphism& theta, const Word& w)
{
    if (theta.rank() != w.rank())
        throw RankMismatch("endomorphism and word ranks differ");
    std::vector<Letter> out;
    for (Letter x : w.letters()) {
        const Word& img = theta.image(gen_of(x));
        if (x > 0) {
            for (Letter y : img.letters())
                push_reduced(out, y);
        } else {
            for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it)
                push_reduced(out, -*it);
        }
    }
    return Word(w.rank(), out);
}

Endomorphism compose(const Endomorphism& t1, const Endomorphism& t2)
{
    if (t1.rank() != t2.rank())
        throw RankMismatch("cannot compose endomorphisms of different rank");
    std::vector<Word> images;
    for (const Word& w : t2.images())
        images.push_back(apply_endo(t1, w));
    return Endomorphism(t1.rank(), std::move(images));
}

Endomorphism endo_power(const Endomorphism& theta, int k)
{
    Endomorphism out = Endomorphism::identity(theta.rank());
    for (int i = 0; i < k; ++i)
        out = compose(theta, out);
    return out;
}

IntMatrix abelianization(const Endomorphism& theta)
{
    int k = theta.rank();
    IntMatrix m(k, std::vector<std::int64_t>(k, 0));
    for (int j = 0; j < k; ++j) {
        auto v = exponent_vector(theta.image(j));
        for (int i = 0; i < k; ++i)
            m[i][j] = v[i];
    }
    return m;
}

}  // namespace sqcx
