#include "lexmsa/corpus.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "lexmsa/error.hpp"
#include "lines.hpp"

namespace lexmsa {

using nlohmann::json;

SemanticExpression SemanticExpression::term(TokenSeq value)
{
    if (value.empty())
        throw ContractError("term value must be non-empty");
    SemanticExpression e;
    e.kind_ = Kind::Term;
    e.term_value_ = std::move(value);
    return e;
}

SemanticExpression SemanticExpression::predicate(std::string name, std::vector<Argument> args)
{
    if (name.empty())
        throw ContractError("predicate name must be non-empty");
    if (args.empty())
        throw ContractError("predicate '" + name + "' needs at least one argument");
    std::set<std::string> seen;
    for (const auto& a : args) {
        if (a.role.empty())
            throw ContractError("predicate '" + name + "' has an argument without a role");
        if (!seen.insert(a.role).second)
            throw ContractError("predicate '" + name + "' repeats role '" + a.role + "'");
    }
    SemanticExpression e;
    e.kind_ = Kind::Predicate;
    e.name_ = std::move(name);
    e.args_ = std::move(args);
    return e;
}

const Argument* SemanticExpression::find(std::string_view role) const
{
    for (const auto& a : args_)
        if (a.role == role)
            return &a;
    return nullptr;
}

std::vector<std::string> SemanticExpression::roles() const
{
    std::vector<std::string> out;
    out.reserve(args_.size());
    for (const auto& a : args_)
        out.push_back(a.role);
    return out;
}

Corpus::Corpus(std::vector<InstanceRecord> records) : records_(std::move(records))
{
    for (std::size_t i = 0; i < records_.size(); ++i) {
        const auto& rec = records_[i];
        if (rec.verbalizations.empty())
            throw ContractError("record " + std::to_string(i) + " has no verbalizations");
        for (const auto& v : rec.verbalizations) {
            if (v.empty())
                throw ContractError("record " + std::to_string(i) + " has an empty verbalization");
            vocabulary_.insert(v.begin(), v.end());
        }
        for (const auto& a : rec.semantics.args())
            vocabulary_.insert(a.value.begin(), a.value.end());
        vocabulary_.insert(rec.semantics.term_value().begin(), rec.semantics.term_value().end());
    }
}

std::size_t Corpus::verbalization_count() const
{
    std::size_t n = 0;
    for (const auto& r : records_)
        n += r.verbalizations.size();
    return n;
}

namespace {

const json& require(const json& obj, const char* field, std::size_t line)
{
    auto it = obj.find(field);
    if (it == obj.end())
        throw ParseError(line, field, "missing");
    return *it;
}

std::string require_string(const json& v, const char* field, std::size_t line)
{
    if (!v.is_string())
        throw ParseError(line, field, "expected a string");
    return v.get<std::string>();
}

SemanticExpression expression_from(const json& obj, std::size_t line)
{
    std::string name;
    if (auto it = obj.find("predicate"); it != obj.end())
        name = require_string(*it, "predicate", line);

    if (name.empty()) {
        TokenSeq value = tokenize(require_string(require(obj, "term", line), "term", line));
        if (value.empty())
            throw ParseError(line, "term", "empty term value");
        if (auto it = obj.find("args"); it != obj.end() && !it->empty())
            throw ParseError(line, "args", "terms take no arguments");
        return SemanticExpression::term(std::move(value));
    }

    const json& args = require(obj, "args", line);
    if (!args.is_array())
        throw ParseError(line, "args", "expected an array");
    if (args.empty())
        throw ParseError(line, "args", "predicate needs at least one argument");
    std::vector<Argument> parsed;
    std::set<std::string> roles;
    for (const auto& a : args) {
        if (!a.is_object())
            throw ParseError(line, "args", "expected {role, value} objects");
        Argument arg;
        arg.role = require_string(require(a, "role", line), "role", line);
        if (arg.role.empty())
            throw ParseError(line, "role", "empty role");
        if (!roles.insert(arg.role).second)
            throw ParseError(line, "role", "duplicate role '" + arg.role + "'");
        arg.value = tokenize(require_string(require(a, "value", line), "value", line));
        if (arg.value.empty())
            throw ParseError(line, "value", "empty value for role '" + arg.role + "'");
        parsed.push_back(std::move(arg));
    }
    return SemanticExpression::predicate(std::move(name), std::move(parsed));
}

json parse_object(std::string_view line, std::size_t line_no)
{
    json obj;
    try {
        obj = json::parse(line);
    } catch (const json::parse_error& e) {
        throw ParseError(line_no, "<record>", std::string("invalid JSON: ") + e.what());
    }
    if (!obj.is_object())
        throw ParseError(line_no, "<record>", "expected a JSON object");
    return obj;
}

json expression_json(const SemanticExpression& expr)
{
    json obj;
    if (expr.is_term()) {
        obj["predicate"] = "";
        obj["term"] = join_tokens(expr.term_value());
        return obj;
    }
    obj["predicate"] = expr.name();
    json args = json::array();
    for (const auto& a : expr.args())
        args.push_back({{"role", a.role}, {"value", join_tokens(a.value)}});
    obj["args"] = std::move(args);
    return obj;
}

} // namespace

SemanticExpression parse_expression_json(std::string_view line, std::size_t line_no)
{
    return expression_from(parse_object(line, line_no), line_no);
}

std::string expression_to_json(const SemanticExpression& expr)
{
    return expression_json(expr).dump();
}

Corpus parse_corpus(std::string_view document)
{
    std::vector<InstanceRecord> records;
    detail::for_each_line(document, [&](std::string_view line, std::size_t line_no) {
        json obj = parse_object(line, line_no);
        InstanceRecord rec{expression_from(obj, line_no), {}};
        const json& verbs = require(obj, "verbalizations", line_no);
        if (!verbs.is_array())
            throw ParseError(line_no, "verbalizations", "expected an array");
        if (verbs.empty())
            throw ParseError(line_no, "verbalizations", "at least one verbalization is required");
        for (const auto& v : verbs) {
            TokenSeq toks = tokenize(require_string(v, "verbalizations", line_no));
            if (toks.empty())
                throw ParseError(line_no, "verbalizations", "empty verbalization");
            rec.verbalizations.push_back(std::move(toks));
        }
        records.push_back(std::move(rec));
    });
    return Corpus(std::move(records));
}

std::string serialize_corpus(const Corpus& corpus)
{
    std::string out;
    for (const auto& rec : corpus.records()) {
        json obj = expression_json(rec.semantics);
        json verbs = json::array();
        for (const auto& v : rec.verbalizations)
            verbs.push_back(join_tokens(v));
        obj["verbalizations"] = std::move(verbs);
        out += obj.dump();
        out += '\n';
    }
    return out;
}

std::vector<SemanticExpression> parse_expressions(std::string_view document)
{
    std::vector<SemanticExpression> out;
    detail::for_each_line(document, [&](std::string_view line, std::size_t line_no) {
        out.push_back(parse_expression_json(line, line_no));
    });
    return out;
}

} // namespace lexmsa
