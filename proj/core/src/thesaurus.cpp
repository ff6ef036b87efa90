#include "lexmsa/thesaurus.hpp"

#include <algorithm>

#include "lexmsa/error.hpp"

namespace lexmsa {

bool Thesaurus::add(const Token& a, const Token& b, std::size_t witnesses)
{
    if (a == b || a.empty() || b.empty())
        return false;
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    if (!pairs_.emplace(key, witnesses).second)
        return false;
    merge_classes(a, b);
    for (const Token* t : {&a, &b}) {
        if (!is_fused(*t))
            continue;
        TokenSeq words = unfuse_phrase(*t);
        if (std::find(phrases_.begin(), phrases_.end(), words) == phrases_.end()) {
            phrases_.push_back(std::move(words));
            std::stable_sort(phrases_.begin(), phrases_.end(), [](const TokenSeq& x, const TokenSeq& y) {
                return x.size() != y.size() ? x.size() > y.size() : x < y;
            });
        }
    }
    return true;
}

bool Thesaurus::add(const TokenSeq& a, const TokenSeq& b, std::size_t witnesses)
{
    if (a.empty() || b.empty())
        throw ContractError("thesaurus phrases must be non-empty");
    return add(fuse_phrase(a), fuse_phrase(b), witnesses);
}

bool Thesaurus::contains(const Token& a, const Token& b) const
{
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    return pairs_.count(key) > 0;
}

bool Thesaurus::paraphrases(const Token& a, const Token& b) const
{
    if (a == b)
        return false;
    long ca = class_of(a);
    return ca >= 0 && ca == class_of(b);
}

long Thesaurus::class_of(const Token& t) const
{
    auto it = class_.find(t);
    return it == class_.end() ? -1 : it->second;
}

void Thesaurus::merge_classes(const Token& a, const Token& b)
{
    long ca = class_of(a);
    long cb = class_of(b);
    if (ca < 0 && cb < 0) {
        class_[a] = class_[b] = next_class_++;
    } else if (ca < 0) {
        class_[a] = cb;
    } else if (cb < 0) {
        class_[b] = ca;
    } else if (ca != cb) {
        for (auto& [tok, cls] : class_)
            if (cls == cb)
                cls = ca;
    }
}

std::vector<ThesaurusEntry> Thesaurus::entries() const
{
    std::vector<ThesaurusEntry> out;
    out.reserve(pairs_.size());
    for (const auto& [key, w] : pairs_)
        out.push_back({key.first, key.second, w});
    return out;
}

TokenSeq Thesaurus::fuse(const TokenSeq& tokens) const
{
    if (phrases_.empty())
        return tokens;
    TokenSeq out;
    out.reserve(tokens.size());
    std::size_t i = 0;
    while (i < tokens.size()) {
        const TokenSeq* hit = nullptr;
        for (const auto& p : phrases_) {
            if (p.size() <= tokens.size() - i && std::equal(p.begin(), p.end(), tokens.begin() + i)) {
                hit = &p;
                break;
            }
        }
        if (hit) {
            out.push_back(fuse_phrase(*hit));
            i += hit->size();
        } else {
            out.push_back(tokens[i++]);
        }
    }
    return out;
}

std::string Thesaurus::to_tsv(bool with_witnesses) const
{
    std::string out;
    for (const auto& [key, w] : pairs_) {
        out += display_token(key.first);
        out += '\t';
        out += display_token(key.second);
        if (with_witnesses) {
            out += '\t';
            out += std::to_string(w);
        }
        out += '\n';
    }
    return out;
}

Thesaurus Thesaurus::from_tsv(std::string_view text)
{
    Thesaurus t;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.find_first_not_of(" \t") == std::string_view::npos)
            continue;
        std::vector<std::string_view> cols;
        std::size_t c = 0;
        for (;;) {
            std::size_t tab = line.find('\t', c);
            cols.push_back(line.substr(c, tab == std::string_view::npos ? std::string_view::npos : tab - c));
            if (tab == std::string_view::npos)
                break;
            c = tab + 1;
        }
        if (cols.size() < 2 || cols.size() > 3)
            throw ParseError(line_no, "<pair>", "expected two tab-separated phrases");
        TokenSeq a = tokenize(cols[0]);
        TokenSeq b = tokenize(cols[1]);
        if (a.empty() || b.empty())
            throw ParseError(line_no, "<pair>", "empty phrase");
        std::size_t w = 0;
        if (cols.size() == 3) {
            try {
                w = std::stoul(std::string(cols[2]));
            } catch (const std::exception&) {
                throw ParseError(line_no, "witnesses", "expected a count");
            }
        }
        t.add(a, b, w);
    }
    return t;
}

} // namespace lexmsa
