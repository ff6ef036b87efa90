#pragma once

#include <chrono>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lexmsa/config.hpp"
#include "lexmsa/corpus.hpp"
#include "lexmsa/dictionary.hpp"
#include "lexmsa/thesaurus_induction.hpp"

namespace lexmsa {

/// Whole file as bytes. Throws Error if it cannot be read.
std::string read_file(const std::string& path);
/// Creates parent directories as needed. Throws Error on failure.
void write_file(const std::string& path, const std::string& contents);

struct LoadedCorpus {
    Corpus corpus;
    /// Step/sentence pairs found when the input was raw proofs.
    std::optional<std::size_t> segmented_pairs;
};

LoadedCorpus load_corpus(const std::string& path, bool raw_proofs);
/// Defaults when `path` is empty.
PipelineConfig load_config(const std::string& path);

struct PhaseTiming {
    std::string phase;
    double seconds = 0.0;
};

struct InduceResult {
    ThesaurusInduction thesaurus;
    DictionaryInduction dictionary;
    std::vector<PhaseTiming> timings;
};

InduceResult induce(const Corpus& c, const PipelineConfig& config, unsigned threads = 1);

/// Human-readable and JSON summaries. Neither contains timings, so both are
/// reproducible byte for byte.
std::string report_text(const LoadedCorpus& in, const PipelineConfig& config, const InduceResult& r);
std::string report_json(const LoadedCorpus& in, const PipelineConfig& config, const InduceResult& r);

struct InduceOptions {
    std::string corpus_path;
    std::string config_path;
    std::string out_dir = ".";
    bool raw_proofs = false;
    bool verbose = false;
    unsigned threads = 1;
};

/// Writes dictionary.jsonl, thesaurus.tsv, report.txt and report.json into
/// the output directory. Progress and timings go to `log`.
InduceResult run_induce(const InduceOptions& opt, std::ostream& log);

/// Realizes every expression in the file, one sentence each, as a single
/// paragraph. Throws LookupError listing every predicate the dictionary lacks.
std::string run_realize(const std::string& dictionary_path, const std::string& expressions_path);

/// Thesaurus file for a corpus; witness counts included when `verbose`.
std::string run_thesaurus(const InduceOptions& opt);

/// Alignment table and DOT lattice for two or more sequence files. With
/// `chars`, every non-space character is a symbol.
std::string run_debug_align(const std::vector<std::string>& paths, bool chars, const Thesaurus& t = {});

enum class DotStage { Lattice, Slotted, Unified };

/// DOT graphs of one stage for one predicate, or all predicates when empty.
/// Throws LookupError for an unknown predicate.
std::string run_export_dot(const InduceOptions& opt, DotStage stage, const std::string& predicate);

} // namespace lexmsa
