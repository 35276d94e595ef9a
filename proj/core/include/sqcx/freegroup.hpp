#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sqcx {

// A letter is a nonzero int: +(i+1) is generator i, -(i+1) its inverse.
using Letter = int;

constexpr int gen_of(Letter x) { return (x > 0 ? x : -x) - 1; }
constexpr int sign_of(Letter x) { return x > 0 ? 1 : -1; }
constexpr Letter make_letter(int gen, int sign) { return sign > 0 ? gen + 1 : -(gen + 1); }

// Total order on letters used for canonical forms: a < A < b < B < ...
constexpr int letter_key(Letter x) { return 2 * gen_of(x) + (x < 0 ? 1 : 0); }

// Freely reduced word in the free group of the given rank.
class Word {
public:
    Word() = default;
    explicit Word(int rank) : rank_(rank) {}
    // Reduces `letters`; throws RankMismatch on an out of range generator.
    Word(int rank, const std::vector<Letter>& letters);

    // Lowercase letters are generators, uppercase their inverses.  With
    // rank 0 the rank is the largest generator used (at least 1).
    static Word parse(std::string_view text, int rank = 0);

    int rank() const { return rank_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    Letter front() const { return letters_.front(); }
    Letter back() const { return letters_.back(); }

    std::string str() const;

    bool operator==(const Word& o) const = default;

    // Length first, then lexicographic in letter_key order.
    std::strong_ordering operator<=>(const Word& o) const;

private:
    int rank_ = 1;
    std::vector<Letter> letters_;
};

std::string format_letter(Letter x);

Word concat_reduce(const Word& u, const Word& v);
Word inverse(const Word& w);
Word power(const Word& w, int k);

struct CyclicReduction {
    Word core;
    Word conjugator;
};

bool is_cyclically_reduced(const Word& w);
// w = conjugator * core * conjugator^-1.
CyclicReduction cyclically_reduce(const Word& w);
// Both inputs must be cyclically reduced (NotCyclicallyReduced otherwise).
bool is_conjugate_cyclic(const Word& u, const Word& v);
bool is_rotation(const Word& u, const Word& v);
// Least cyclic rotation in letter_key order.
Word least_rotation(const Word& w);

std::vector<std::int64_t> exponent_vector(const Word& w);
std::vector<std::int64_t> letter_count_vector(const Word& w);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Endomorphism of a free group, given by the images of the generators.
class Endomorphism {
public:
    Endomorphism() = default;
    Endomorphism(int rank, std::vector<Word> images);

    static Endomorphism identity(int rank);
    // Images in text form, e.g. {"ab", "ba"}.
    static Endomorphism parse(const std::vector<std::string>& images, int rank = 0);

    int rank() const { return rank_; }
    const std::vector<Word>& images() const { return images_; }
    const Word& image(int gen) const { return images_.at(gen); }

    std::string str() const;

    bool operator==(const Endomorphism& o) const = default;

private:
    int rank_ = 1;
    std::vector<Word> images_;
};

Word apply_endo(const Endomorphism& theta, const Word& w);
// compose(t1, t2)(x) = t1(t2(x)): t2 is applied first.
Endomorphism compose(const Endomorphism& t1, const Endomorphism& t2);
Endomorphism endo_power(const Endomorphism& theta, int k);
// Column j is the exponent vector of the image of generator j.
IntMatrix abelianization(const Endomorphism& theta);

}  // namespace sqcx
