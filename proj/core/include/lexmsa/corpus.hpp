#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexmsa/tokens.hpp"

namespace lexmsa {

struct Argument {
    std::string role;
    TokenSeq value;

    bool operator==(const Argument&) const = default;
};

/// A term such as "0", or a predicate instance such as univcd(prem1, prem2, goal).
class SemanticExpression {
public:
    enum class Kind { Term, Predicate };

    /// Throws ContractError if the value is empty.
    static SemanticExpression term(TokenSeq value);
    /// Throws ContractError on an empty name, no arguments or a repeated role.
    static SemanticExpression predicate(std::string name, std::vector<Argument> args);

    Kind kind() const { return kind_; }
    bool is_term() const { return kind_ == Kind::Term; }
    bool is_predicate() const { return kind_ == Kind::Predicate; }
    const std::string& name() const { return name_; }
    const std::vector<Argument>& args() const { return args_; }
    const TokenSeq& term_value() const { return term_value_; }

    /// nullptr if the role is not an argument of this predicate.
    const Argument* find(std::string_view role) const;
    std::vector<std::string> roles() const;

    bool operator==(const SemanticExpression&) const = default;

private:
    SemanticExpression() = default;

    Kind kind_ = Kind::Term;
    std::string name_;
    std::vector<Argument> args_;
    TokenSeq term_value_;
};

struct InstanceRecord {
    SemanticExpression semantics;
    std::vector<TokenSeq> verbalizations;

    bool operator==(const InstanceRecord&) const = default;
};

/// Validated multi-parallel corpus. Immutable once built.
class Corpus {
public:
    Corpus() = default;
    /// Throws ContractError if a record has no verbalizations or an empty one.
    explicit Corpus(std::vector<InstanceRecord> records);

    const std::vector<InstanceRecord>& records() const { return records_; }
    const std::set<Token>& vocabulary() const { return vocabulary_; }
    std::size_t size() const { return records_.size(); }
    bool empty() const { return records_.empty(); }
    std::size_t verbalization_count() const;

    bool operator==(const Corpus&) const = default;

private:
    std::vector<InstanceRecord> records_;
    std::set<Token> vocabulary_;
};

/// Line-oriented JSON: one record per line with `predicate`, `args`
/// ({role, value}), `term` and `verbalizations`. Blank lines are ignored.
/// Throws ParseError naming the line and field.
Corpus parse_corpus(std::string_view document);
std::string serialize_corpus(const Corpus& corpus);

/// Shared by the corpus and expression-list formats.
SemanticExpression parse_expression_json(std::string_view line, std::size_t line_no);
std::string expression_to_json(const SemanticExpression& expr);

/// Expression list for `realize`: one semantic expression per line.
std::vector<SemanticExpression> parse_expressions(std::string_view document);

} // namespace lexmsa
