#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace neus {

struct SourceDoc {
    std::string title;
    std::string article;
};

/// One AllSides-style issue: left/center/right reporting plus the
/// expert-written neutral title and article summary.
struct NewsTriplet {
    std::string issue_id;
    SourceDoc left;
    SourceDoc center;
    SourceDoc right;
    std::string neutral_title;
    std::string neutral_article;
    std::optional<std::string> date;  // ISO-8601 (YYYY-MM-DD)
    std::vector<std::string> topics;
    std::optional<std::array<std::string, 3>> media_names;  // L, C, R
};

enum class Leaning { Left, Center, Right };

using SourceOrder = std::array<Leaning, 3>;

struct DatasetSplit {
    std::vector<NewsTriplet> train;
    std::vector<NewsTriplet> val;
    std::vector<NewsTriplet> test;
    // Triplets left out when reproducing the published corpus counts, which
    // do not sum to the corpus size. Empty for the fraction-based split.
    std::vector<NewsTriplet> unassigned;
};

/// Loads a JSONL corpus (one triplet object per line) and validates every
/// line; problems are aggregated into a single error. Malformed JSON raises
/// ParseError with the line number; missing/empty/invalid fields raise
/// ValidationError naming the line and field.
std::vector<NewsTriplet> load_corpus(const std::string& path);

/// Writes triplets back as JSONL, one per line, stable field order.
void save_corpus(const std::vector<NewsTriplet>& triplets, const std::string& path);

std::string triplet_to_json_line(const NewsTriplet& t);
NewsTriplet triplet_from_json_line(const std::string& line, std::size_t lineno);

/// Deterministic shuffle by seed, then contiguous split:
/// floor(n*train_frac) train, floor(n*val_frac) val, remainder test.
/// The three parts always partition the input.
DatasetSplit split_dataset(const std::vector<NewsTriplet>& triplets, double train_frac,
                           double val_frac, std::uint64_t seed);

/// Reproduces the published AllSides protocol: one third of the corpus as
/// test, the published train+val fraction (2276/3564) split 80:20 with the
/// train size floored. The published counts do not cover the whole corpus;
/// the excess lands in `unassigned`.
DatasetSplit split_dataset_published(const std::vector<NewsTriplet>& triplets,
                                     std::uint64_t seed);

/// Serializes the three sources in the given order as
/// "TITLE=> {title}. ARTICLE=> {article}." blocks joined by " [SEP] ".
std::string format_mtl_input(const NewsTriplet& t, const SourceOrder& order);

/// "TITLE=> {neutral_title}. ARTICLE=> {neutral_article}"
std::string format_mtl_target(const NewsTriplet& t);

/// Deterministic pseudo-random permutation of {L,C,R} keyed on (seed,
/// issue_id); uniform over the six permutations across issue ids.
SourceOrder shuffle_order(std::uint64_t seed, const std::string& issue_id);

const SourceDoc& source_for(const NewsTriplet& t, Leaning leaning);
char leaning_letter(Leaning leaning);

}  // namespace neus
