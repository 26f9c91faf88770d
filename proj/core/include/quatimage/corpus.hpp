#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quatimage/classify.hpp"
#include "quatimage/homogeneous.hpp"

namespace quatimage {

/// How a corpus entry is checked by run_corpus.
enum class CorpusCheck {
    MULTILINEAR_CLASS,  // classify() against expected_class, sampler mapped
    SAMPLER,            // sample_image() against expected_sample
    RATIO_PROPERTY,     // ratio_avoiding_eval avoidance on random draws
};

/// A named golden polynomial with its expected verdicts and a note citing
/// the mathematical fact behind the expectation.
struct CorpusEntry {
    std::string name;
    std::string text;
    CorpusCheck check = CorpusCheck::SAMPLER;
    std::optional<MLVerdict> expected_class;
    std::optional<SampleVerdict> expected_sample;
    bool expect_nonpositive_re = false;
    RatioSet ratio_set;
    std::string note;
};

/// The builtin golden corpus, in a fixed order.
const std::vector<CorpusEntry>& corpus();

/// Case-sensitive lookup by entry name.
const CorpusEntry* find_corpus_entry(const std::string& name);

struct CorpusRunResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs every entry's check with the given sampling parameters.
std::vector<CorpusRunResult> run_corpus(long long n = 1000,
                                        std::uint64_t seed = 42,
                                        long long bound = 100);

}  // namespace quatimage
