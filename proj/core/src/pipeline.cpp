#include "lexmsa/pipeline.hpp"

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lexmsa/error.hpp"
#include "lexmsa/segment.hpp"

namespace lexmsa {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fixed(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

std::string sentence(const TokenSeq& tokens)
{
    std::string s = detokenize(tokens);
    if (!s.empty() && s.back() != '.' && s.back() != '!' && s.back() != '?')
        s += '.';
    return s;
}

} // namespace

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents)
{
    std::filesystem::path p(path);
    std::error_code ec;
    if (p.has_parent_path())
        std::filesystem::create_directories(p.parent_path(), ec);
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out || !(out << contents) || !out.flush())
        throw Error("cannot write '" + path + "'");
}

LoadedCorpus load_corpus(const std::string& path, bool raw_proofs)
{
    std::string text = read_file(path);
    if (!raw_proofs)
        return {parse_corpus(text), std::nullopt};
    auto seg = corpus_from_raw_proofs(parse_raw_proofs(text));
    return {std::move(seg.corpus), seg.pairs};
}

PipelineConfig load_config(const std::string& path)
{
    if (path.empty())
        return {};
    return parse_config(read_file(path));
}

InduceResult induce(const Corpus& c, const PipelineConfig& config, unsigned threads)
{
    config.validate();
    InduceResult r;
    auto t0 = Clock::now();
    r.thesaurus = induce_thesaurus(c, config.thesaurus(threads));
    r.timings.push_back({"thesaurus", seconds_since(t0)});
    t0 = Clock::now();
    r.dictionary = induce_dictionary(c, r.thesaurus.thesaurus, config.induction(threads));
    r.timings.push_back({"templates", seconds_since(t0)});
    return r;
}

std::string report_text(const LoadedCorpus& in, const PipelineConfig& config, const InduceResult& r)
{
    const auto& dict = r.dictionary.dictionary;
    std::ostringstream out;
    out << "records: " << in.corpus.size() << "\n";
    out << "verbalizations: " << in.corpus.verbalization_count() << "\n";
    if (in.segmented_pairs)
        out << "step/sentence pairs: " << *in.segmented_pairs << "\n";
    out << "paraphrase pairs: " << r.thesaurus.thesaurus.size() << "\n";
    out << "thesaurus passes: " << r.thesaurus.iterations << "\n";
    out << "pairwise alignments per pass: " << r.thesaurus.alignments << "\n";
    out << "predicates: " << r.dictionary.predicates.size() << "\n";
    out << "templates: " << dict.templates.size() << "\n";
    out << "term entries: " << dict.terms.size() << "\n";
    std::size_t zero = 0;
    for (const auto& p : r.dictionary.predicates)
        zero += p.zero_slot_instances;
    out << "instances without slots: " << zero << "\n";
    if (in.corpus.empty())
        out << "warning: the corpus is empty\n";

    out << "\ntemplates:\n";
    for (const auto& p : r.dictionary.predicates) {
        out << "  " << p.predicate << " (" << p.instances << " instances, " << p.verbalizations
            << " verbalizations): ";
        if (const Template* t = dict.find(p.predicate))
            out << t->to_string() << "  [mean weight " << fixed(*p.weight) << "]\n";
        else
            out << "none\n";
    }
    out << "\nuncovered:";
    for (const auto& u : dict.uncovered)
        out << " " << u;
    out << "\nterm ties:";
    for (const auto& t : dict.ties)
        out << " [" << t << "]";
    out << "\n\nparaphrases:\n";
    for (const auto& p : r.thesaurus.promoted)
        out << "  " << display_token(p.first) << " <-> " << display_token(p.second) << "  (pass " << p.iteration
            << ", " << p.witnesses.size() << " witnesses)\n";
    out << "\nconfig:\n" << config_to_json(config);
    return out.str();
}

std::string report_json(const LoadedCorpus& in, const PipelineConfig& config, const InduceResult& r)
{
    const auto& dict = r.dictionary.dictionary;
    ordered_json j;
    j["records"] = in.corpus.size();
    j["verbalizations"] = in.corpus.verbalization_count();
    if (in.segmented_pairs)
        j["step_sentence_pairs"] = *in.segmented_pairs;
    j["paraphrase_pairs"] = r.thesaurus.thesaurus.size();
    j["thesaurus_passes"] = r.thesaurus.iterations;
    j["templates_emitted"] = dict.templates.size();
    j["term_entries"] = dict.terms.size();

    ordered_json preds = ordered_json::array();
    for (const auto& p : r.dictionary.predicates) {
        ordered_json e;
        e["predicate"] = p.predicate;
        e["instances"] = p.instances;
        e["verbalizations"] = p.verbalizations;
        e["zero_slot_instances"] = p.zero_slot_instances;
        if (const Template* t = dict.find(p.predicate)) {
            e["template"] = t->to_string();
            e["mean_weight"] = fixed(*p.weight);
        } else {
            e["template"] = nullptr;
        }
        preds.push_back(std::move(e));
    }
    j["predicates"] = std::move(preds);
    j["uncovered"] = dict.uncovered;
    j["term_ties"] = dict.ties;

    ordered_json para = ordered_json::array();
    for (const auto& p : r.thesaurus.promoted) {
        ordered_json e;
        e["first"] = display_token(p.first);
        e["second"] = display_token(p.second);
        e["pass"] = p.iteration;
        ordered_json w = ordered_json::array();
        for (const auto& a : p.witnesses)
            w.push_back({a.record, a.first, a.second});
        e["witnesses"] = std::move(w);
        para.push_back(std::move(e));
    }
    j["paraphrases"] = std::move(para);
    j["config"] = ordered_json::parse(config_to_json(config));
    return j.dump(2) + "\n";
}

InduceResult run_induce(const InduceOptions& opt, std::ostream& log)
{
    auto t0 = Clock::now();
    PipelineConfig config = load_config(opt.config_path);
    LoadedCorpus in = load_corpus(opt.corpus_path, opt.raw_proofs);
    double load = seconds_since(t0);
    if (in.corpus.empty())
        log << "warning: the corpus is empty\n";

    InduceResult r = induce(in.corpus, config, opt.threads);
    r.timings.insert(r.timings.begin(), {"load", load});

    t0 = Clock::now();
    std::filesystem::path dir(opt.out_dir);
    write_file((dir / "dictionary.jsonl").string(), dictionary_to_jsonl(r.dictionary.dictionary));
    write_file((dir / "thesaurus.tsv").string(), r.thesaurus.thesaurus.to_tsv());
    write_file((dir / "report.txt").string(), report_text(in, config, r));
    write_file((dir / "report.json").string(), report_json(in, config, r));
    r.timings.push_back({"write", seconds_since(t0)});

    log << "records " << in.corpus.size() << ", paraphrase pairs " << r.thesaurus.thesaurus.size() << ", templates "
        << r.dictionary.dictionary.templates.size() << " of " << r.dictionary.predicates.size() << " predicates\n";
    if (opt.verbose)
        for (const auto& t : r.timings)
            log << "  " << t.phase << ": " << fixed(t.seconds) << " s\n";
    return r;
}

std::string run_realize(const std::string& dictionary_path, const std::string& expressions_path)
{
    MappingDictionary dict = parse_dictionary(read_file(dictionary_path));
    auto exprs = parse_expressions(read_file(expressions_path));

    std::set<std::string> missing;
    for (const auto& e : exprs)
        if (e.is_predicate() && !dict.find(e.name()))
            missing.insert(e.name());
    if (!missing.empty()) {
        std::string msg = "no template for predicate";
        msg += missing.size() > 1 ? "s:" : ":";
        for (const auto& m : missing)
            msg += " " + m;
        throw LookupError(msg);
    }

    std::string out;
    for (const auto& e : exprs) {
        if (!out.empty())
            out += ' ';
        out += sentence(realize(e, dict));
    }
    if (!out.empty())
        out += '\n';
    return out;
}

std::string run_thesaurus(const InduceOptions& opt)
{
    PipelineConfig config = load_config(opt.config_path);
    LoadedCorpus in = load_corpus(opt.corpus_path, opt.raw_proofs);
    auto r = induce_thesaurus(in.corpus, config.thesaurus(opt.threads));
    return r.thesaurus.to_tsv(opt.verbose);
}

std::string run_debug_align(const std::vector<std::string>& paths, bool chars, const Thesaurus& t)
{
    if (paths.size() < 2)
        throw ContractError("align needs at least two sequence files");
    std::vector<Msa> items;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        std::string text = read_file(paths[i]);
        TokenSeq tokens;
        if (chars) {
            for (char ch : text)
                if (!std::isspace(static_cast<unsigned char>(ch)))
                    tokens.emplace_back(1, ch);
        } else {
            tokens = tokenize(text);
        }
        if (tokens.empty())
            throw Error("'" + paths[i] + "' holds no tokens");
        items.push_back(Msa::from_tokens(tokens, i));
    }
    Msa m = iterative_msa(items, Similarity(t));
    return format_msa(m) + "\n" + to_dot(Lattice(m), "alignment");
}

std::string run_export_dot(const InduceOptions& opt, DotStage stage, const std::string& predicate)
{
    PipelineConfig config = load_config(opt.config_path);
    LoadedCorpus in = load_corpus(opt.corpus_path, opt.raw_proofs);
    Thesaurus t = induce_thesaurus(in.corpus, config.thesaurus(opt.threads)).thesaurus;
    auto groups = group_by_predicate(fuse_corpus(in.corpus, t));
    if (!predicate.empty() && !groups.count(predicate))
        throw LookupError("no instances of predicate '" + predicate + "'");

    std::string out;
    for (const auto& [name, instances] : groups) {
        if (!predicate.empty() && name != predicate)
            continue;
        PredicateStages s = induce_predicate(instances, t, config.induction(opt.threads));
        switch (stage) {
        case DotStage::Lattice:
            for (std::size_t i = 0; i < s.lattices.size(); ++i)
                out += to_dot(s.lattices[i], name + " instance " + std::to_string(i));
            break;
        case DotStage::Slotted:
            for (std::size_t i = 0; i < s.slotted.size(); ++i)
                out += to_dot(s.slotted[i].lattice, name + " slotted " + std::to_string(i));
            break;
        case DotStage::Unified:
            out += to_dot(s.unified.lattice, name + " unified", s.unified.weights);
            break;
        }
    }
    return out;
}

} // namespace lexmsa
