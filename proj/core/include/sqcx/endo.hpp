#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqcx/freegroup.hpp"

namespace sqcx {

// No cancellation between theta(x) and theta(y) for any letters x, y with
// xy reduced.  Requires nonempty images (InvalidInput otherwise).
bool is_immersion(const Endomorphism& theta);

// True iff the folded graph of the image subgroup is the rank-k rose.
bool stallings_surjectivity(const Endomorphism& theta);

struct PeriodicWitness {
    Word w;
    int i = 0;
    int j = 0;
};

// Checks theta^i(w) conjugate to w^j by direct computation.
bool verify_witness(const Endomorphism& theta, const PeriodicWitness& pw);

// Canonical representatives (least rotation) of the cyclically reduced
// words of the given length, ascending.  first_letter restricts the first
// letter when nonzero.
std::vector<Word> cyclic_representatives(int rank, int length, Letter first_letter = 0);

// Least witness in (|w|, i, w) order with |w| <= maxlen and i <= maxpow,
// or nullopt.  Output is independent of jobs.
std::optional<PeriodicWitness> periodic_conjugacy_search(const Endomorphism& theta, int maxlen,
                                                         int maxpow, int jobs = 1);

struct AnalysisReport {
    bool is_immersion = false;
    std::vector<int> image_lengths;
    std::optional<int> uniform_length;
    bool balanced_letter_counts = false;
    bool is_surjective = false;
    std::string injectivity;  // "injective (immersion)", "injective (surjective ...)" or "unknown"
    std::optional<PeriodicWitness> periodic_witness;
    int search_maxlen = 0;
    int search_maxpow = 0;
};

AnalysisReport analyze_endomorphism(const Endomorphism& theta, int maxlen, int maxpow, int jobs = 1);

enum class CertVerdict { WordHyperbolicIrreducibleLinear, NotApplicable, PeriodicFound };
const char* cert_verdict_name(CertVerdict v);

struct CertificateStep {
    std::string id;
    std::string status;  // "verified", "argument", "assumed-theorem"
    std::string statement;
};

struct Certificate {
    CertVerdict verdict = CertVerdict::NotApplicable;
    std::vector<std::string> reasons;  // NotApplicable
    std::optional<PeriodicWitness> witness;
    std::vector<CertificateStep> steps;
    std::vector<std::string> notes;
    AnalysisReport report;
};

// Rank 2 only (RankNotTwo).  Order of checks: surjective maps are
// NotApplicable; a periodic witness gives PeriodicFound; then the
// structural conditions (immersion, images of length 2, one letter of
// each generator per image) must all hold.
Certificate sap_certificate(const Endomorphism& theta, int maxlen = 8, int maxpow = 3, int jobs = 1);

}  // namespace sqcx
