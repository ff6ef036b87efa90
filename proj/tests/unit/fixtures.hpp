#pragma once

#include <string>

#include "lexmsa/corpus.hpp"
#include "lexmsa/pipeline.hpp"
#include "lexmsa/thesaurus.hpp"

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(LEXMSA_TEST_DATA) + "/" + name; }

inline lexmsa::Corpus corpus(const std::string& name) { return lexmsa::parse_corpus(lexmsa::read_file(path(name))); }

inline lexmsa::Thesaurus thesaurus(const std::string& name)
{
    return lexmsa::Thesaurus::from_tsv(lexmsa::read_file(path(name)));
}

} // namespace fixtures
