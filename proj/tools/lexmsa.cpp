// Command-line front end. Argument parsing only; the work happens in lexmsa::run_*.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lexmsa/error.hpp"
#include "lexmsa/pipeline.hpp"

namespace {

enum Exit { kOk = 0, kInputError = 1, kInvariant = 2 };

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty())
        std::cout << text;
    else
        lexmsa::write_file(out_path, text);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Learns word-and-slot templates from multi-parallel corpora and realizes expressions with them."};
    app.require_subcommand(1);
    app.fallthrough();

    lexmsa::InduceOptions opt;
    opt.out_dir.clear();
    app.add_option("--config", opt.config_path, "JSON file overriding pipeline constants");
    app.add_option("--out", opt.out_dir, "Output directory (induce) or file (other subcommands)");
    app.add_flag("--raw-proofs", opt.raw_proofs, "Input holds proofs with free-text narratives to segment");
    app.add_flag("--verbose", opt.verbose, "Timings for induce, witness counts for thesaurus");
    app.add_option("--threads", opt.threads, "Worker threads")->check(CLI::Range(1u, 256u));

    auto* induce = app.add_subcommand("induce", "Induce a thesaurus and a mapping dictionary");
    induce->add_option("corpus", opt.corpus_path, "Corpus file")->required();

    std::string dict_path, expr_path;
    auto* realize = app.add_subcommand("realize", "Realize semantic expressions as a paragraph");
    realize->add_option("dictionary", dict_path, "dictionary.jsonl from induce")->required();
    realize->add_option("expressions", expr_path, "One semantic expression per line")->required();

    auto* thesaurus = app.add_subcommand("thesaurus", "Induce and print the paraphrase thesaurus");
    thesaurus->add_option("corpus", opt.corpus_path, "Corpus file")->required();

    std::vector<std::string> align_files;
    bool chars = false;
    std::string align_thesaurus;
    auto* align = app.add_subcommand("align", "Print the alignment of two or more sequence files");
    align->add_option("files", align_files, "Sequence files")->required()->expected(2, -1);
    align->add_flag("--chars", chars, "Treat every character as a symbol");
    align->add_option("--thesaurus", align_thesaurus, "Thesaurus file used for scoring");

    std::string stage_name = "unified";
    std::string predicate;
    const std::map<std::string, lexmsa::DotStage> stages{{"lattice", lexmsa::DotStage::Lattice},
                                                         {"slotted", lexmsa::DotStage::Slotted},
                                                         {"unified", lexmsa::DotStage::Unified}};
    auto* dot = app.add_subcommand("export-dot", "Write lattices of one pipeline stage as Graphviz DOT");
    dot->add_option("corpus", opt.corpus_path, "Corpus file")->required();
    dot->add_option("--stage", stage_name, "lattice, slotted or unified")
        ->check(CLI::IsMember({"lattice", "slotted", "unified"}));
    dot->add_option("--predicate", predicate, "Only this predicate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kInputError;
    }

    try {
        if (induce->parsed()) {
            if (opt.out_dir.empty())
                opt.out_dir = ".";
            lexmsa::run_induce(opt, std::cerr);
        } else if (realize->parsed()) {
            emit(lexmsa::run_realize(dict_path, expr_path), opt.out_dir);
        } else if (thesaurus->parsed()) {
            emit(lexmsa::run_thesaurus(opt), opt.out_dir);
        } else if (align->parsed()) {
            lexmsa::Thesaurus t;
            if (!align_thesaurus.empty())
                t = lexmsa::Thesaurus::from_tsv(lexmsa::read_file(align_thesaurus));
            emit(lexmsa::run_debug_align(align_files, chars, t), opt.out_dir);
        } else if (dot->parsed()) {
            emit(lexmsa::run_export_dot(opt, stages.at(stage_name), predicate), opt.out_dir);
        }
    } catch (const lexmsa::InvariantError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kOk;
}
