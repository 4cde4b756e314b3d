#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blamelab/common/rng.hpp"
#include "blamelab/lang/token.hpp"

namespace blamelab::corpus {

struct MutationRecord {
    std::string op;
    size_t span_start = 0;  // byte span inside the buggy source
    size_t span_end = 0;
};

struct ProgramPair {
    std::string id;
    std::string buggy;
    std::optional<std::string> fixed;
    std::vector<std::string> tokens;  // texts of tokenize(buggy)
    LabelVector labels;
    std::string split;    // "train" | "test"
    std::string family;
    std::optional<MutationRecord> mutation;
};

struct CorpusManifest {
    uint64_t seed = 0;
    int programs = 0;
    std::string split_mode = "random";  // "random" | "cross-family"
    double test_fraction = 0.2;
    int mutations_min = 1;  // --multi raises the max to 4
    int mutations_max = 1;
    std::vector<std::string> families;  // defaults to all_families() when empty
    int generator_version = 1;
};

const std::vector<std::string>& all_families();

// Emits a well-typed program from the named template family. Deterministic in
// (family, rng_seed); a type-check failure of its own output is a generator
// bug and aborts.
std::string generate_seed_program(const std::string& family, uint64_t rng_seed);

struct NoViableMutation : std::runtime_error {
    NoViableMutation() : std::runtime_error("no mutation operator produced an ill-typed program") {}
};

struct Mutant {
    std::string source;
    LabelVector labels;          // over the mutant's tokens
    MutationRecord record;
    // Tokens textually introduced or replaced by the edit; empty for pure
    // deletions. diff_labels is cross-checked against these.
    LabelVector introduced;
};

// Applies one randomly chosen mutation operator so that the result no longer
// type-checks. `source` must type-check. Throws NoViableMutation when the
// retry budget is exhausted.
Mutant mutate(const std::string& source, uint64_t rng_seed);

// Same, with `count` mutations applied at disjoint sites in one pass.
Mutant mutate_multi(const std::string& source, uint64_t rng_seed, int count);

// Longest common subsequence over token texts; buggy tokens outside the LCS
// get label 1. Ties prefer earlier buggy-side matches.
LabelVector diff_labels(const std::string& buggy, const std::string& fixed);

struct BuildStats {
    int programs = 0;
    int train = 0, test = 0;
    double mean_tokens = 0;
    int diff_checked = 0;    // pairs where the LCS cross-check applied
    int diff_agreed = 0;     // ...and recovered every introduced token
    std::vector<std::string> diff_disagreements;  // ids, for the log
};

std::vector<ProgramPair> build_corpus(const CorpusManifest& manifest,
                                      BuildStats* stats = nullptr, int jobs = 1);

void save_jsonl(const std::vector<ProgramPair>& pairs, const std::string& path);
std::vector<ProgramPair> load_jsonl(const std::string& path);

std::string manifest_to_json(const CorpusManifest& m, const BuildStats& stats);
CorpusManifest manifest_from_json(const std::string& text);

}  // namespace blamelab::corpus
