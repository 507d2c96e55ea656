#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semidp/semiring.hpp"

namespace semidp {

enum class Verdict { Holds, Fails, NotFalsified };

std::string_view to_string(Verdict v);

struct PropertyResult {
    std::string property;
    Verdict verdict = Verdict::Holds;
    // Elements violating the property, named by witness_names ("a", "b", "c").
    std::vector<Value> witness;
    std::vector<std::string> witness_names;
    // Offending instance for sample-based checkers.
    std::optional<std::size_t> sample;
    std::string note;

    bool passed() const noexcept { return verdict != Verdict::Fails; }
};

struct PropertyReport {
    std::vector<PropertyResult> results;
    std::uint64_t budget = 0;
    std::uint64_t evaluations = 0;
    bool exhaustive = false;

    // Fails if any result fails, NotFalsified if any was only sampled, else Holds.
    Verdict verdict() const;
    bool passed() const { return verdict() != Verdict::Fails; }
    const PropertyResult* find(std::string_view property) const;
    const PropertyResult* first_failure() const;
    void merge(const PropertyReport& other);
};

struct CheckOptions {
    std::uint64_t budget = 10000;
    std::uint64_t seed = 1;
};

// Finite carriers are scanned exhaustively in descending carrier order; symmetric
// witnesses are reported with the smaller element first. Infinite carriers scan
// the anchors exhaustively, then budget seeded random samples.
PropertyReport check_semiring_axioms(const Semiring& s, const CheckOptions& opt = {});
PropertyReport check_selective(const Semiring& s, const CheckOptions& opt = {});
PropertyReport check_idempotent(const Semiring& s, const CheckOptions& opt = {});
PropertyReport check_totally_ordered(const Semiring& s, const CheckOptions& opt = {});
PropertyReport check_square_mult_cancellative_on_image(const Semiring& s, const CheckOptions& opt = {});
PropertyReport check_square_ordered(const Semiring& s, const CheckOptions& opt = {});
PropertyReport check_weakly_mult_cancellative(const Semiring& s, const CheckOptions& opt = {});
PropertyReport check_strict_monotonic(const Semiring& s, const CheckOptions& opt = {});
PropertyReport check_mult_cancellative(const Semiring& s, const CheckOptions& opt = {});

enum class Soundness { Guaranteed, NotFalsified, NotGuaranteed, Inconclusive };

std::string_view to_string(Soundness s);

// Usable when the guarantee holds or could not be falsified by sampling.
inline bool trusted(Soundness s) { return s == Soundness::Guaranteed || s == Soundness::NotFalsified; }

struct SoundnessEntry {
    std::string algorithm;  // SETS, ETS, EGP
    std::string task;       // single, partial, complete
    Soundness verdict = Soundness::Guaranteed;
    std::string basis;
};

struct SoundnessMatrix {
    std::string semiring;
    std::vector<SoundnessEntry> entries;
    PropertyReport properties;

    const SoundnessEntry& at(std::string_view algorithm, std::string_view task) const;
};

// Throws RefusedError for non-selective semirings.
SoundnessMatrix classify(const Semiring& s, const CheckOptions& opt = {});

}  // namespace semidp
