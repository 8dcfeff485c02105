#include "ssb/requirements.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "ssb/error.hpp"

namespace ssb {

namespace {

enum class TokenKind { Word, Integer, QuotedKey, LParen, RParen, Comma, End };

struct Token {
    TokenKind kind;
    std::string text;   // lowercased for Word
    long long number = 0;
    int pos = 0;
};

const char* token_kind_name(TokenKind k) {
    switch (k) {
        case TokenKind::Word: return "word";
        case TokenKind::Integer: return "integer";
        case TokenKind::QuotedKey: return "quoted key";
        case TokenKind::LParen: return "'('";
        case TokenKind::RParen: return "')'";
        case TokenKind::Comma: return "','";
        case TokenKind::End: return "end of input";
    }
    return "?";
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        int start = static_cast<int>(pos_);
        if (pos_ >= text_.size()) return {TokenKind::End, "", 0, start};

        char c = text_[pos_];
        if (c == '(') { ++pos_; return {TokenKind::LParen, "(", 0, start}; }
        if (c == ')') { ++pos_; return {TokenKind::RParen, ")", 0, start}; }
        if (c == ',') { ++pos_; return {TokenKind::Comma, ",", 0, start}; }

        if (c == '"') {
            ++pos_;
            std::size_t close = text_.find('"', pos_);
            if (close == std::string_view::npos) {
                throw Error(ErrorCode::SyntaxError,
                            syntax_message(start, "closing '\"'"), start);
            }
            std::string body(text_.substr(pos_, close - pos_));
            pos_ = close + 1;
            return {TokenKind::QuotedKey, std::move(body), 0, start};
        }

        bool negative = false;
        if (c == '-' && pos_ + 1 < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            negative = true;
            ++pos_;
        }
        if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            long long value = 0;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                value = value * 10 + (text_[pos_] - '0');
                if (value > 1'000'000'000) value = 1'000'000'001;  // clamp, reject later
                ++pos_;
            }
            if (negative) value = -value;
            return {TokenKind::Integer, "", value, start};
        }

        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos_;
            while (end < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
                ++end;
            }
            std::string word(text_.substr(pos_, end - pos_));
            std::transform(word.begin(), word.end(), word.begin(), [](unsigned char ch) {
                return static_cast<char>(std::tolower(ch));
            });
            pos_ = end;
            return {TokenKind::Word, std::move(word), 0, start};
        }

        throw Error(ErrorCode::SyntaxError,
                    syntax_message(start, "a constraint, RANK BY, or end of input"), start);
    }

    static std::string syntax_message(int pos, const std::string& expected) {
        return "syntax error at position " + std::to_string(pos) + ": expected " + expected;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { advance(); }

    SocialRequirement parse() {
        SocialRequirement req;
        if (current_.kind == TokenKind::End) {
            return SocialRequirement::defaulted();
        }
        if (!at_word("rank")) {
            req.constraints.push_back(parse_constraint());
            while (at_word("and")) {
                advance();
                req.constraints.push_back(parse_constraint());
            }
        }
        if (at_word("rank")) {
            advance();
            expect_word("by");
            req.ranking.push_back(parse_criterion());
            while (current_.kind == TokenKind::Comma) {
                advance();
                req.ranking.push_back(parse_criterion());
            }
        } else {
            req.ranking = SocialRequirement::defaulted().ranking;
        }
        if (current_.kind != TokenKind::End) {
            fail("'AND', 'RANK BY', or end of input");
        }
        return req;
    }

private:
    void advance() { current_ = lexer_.next(); }

    bool at_word(std::string_view w) const {
        return current_.kind == TokenKind::Word && current_.text == w;
    }

    [[noreturn]] void fail(const std::string& expected) const {
        throw Error(ErrorCode::SyntaxError, Lexer::syntax_message(current_.pos, expected),
                    current_.pos);
    }

    void expect(TokenKind kind) {
        if (current_.kind != kind) fail(token_kind_name(kind));
        advance();
    }

    void expect_word(std::string_view w) {
        if (!at_word(w)) fail("'" + std::string(w) + "'");
        advance();
    }

    int parse_nonnegative_int() {
        if (current_.kind != TokenKind::Integer) fail("a non-negative integer");
        long long value = current_.number;
        int pos = current_.pos;
        if (value < 0) {
            throw Error(ErrorCode::RangeError,
                        "negative integer at position " + std::to_string(pos), pos);
        }
        if (value > 1'000'000'000) {
            throw Error(ErrorCode::RangeError,
                        "integer out of range at position " + std::to_string(pos), pos);
        }
        advance();
        return static_cast<int>(value);
    }

    ActorRef parse_actor() {
        if (at_word("consumer")) {
            advance();
            return ActorRef::consumer();
        }
        if (current_.kind == TokenKind::QuotedKey) {
            int pos = current_.pos;
            std::string body = current_.text;
            if (!Key::valid(body)) {
                throw Error(ErrorCode::SyntaxError,
                            Lexer::syntax_message(pos, "a UUID key inside the quotes"), pos);
            }
            advance();
            return ActorRef::actor(Key::parse(body));
        }
        fail("a quoted key or 'consumer'");
    }

    SocialConstraint parse_constraint() {
        if (current_.kind != TokenKind::Word) fail("a constraint name");
        std::string name = current_.text;
        if (name == "within_hops") {
            advance();
            expect(TokenKind::LParen);
            ActorRef anchor = parse_actor();
            expect(TokenKind::Comma);
            int k = parse_nonnegative_int();
            expect(TokenKind::RParen);
            return SocialConstraint::within_hops(std::move(anchor), k);
        }
        if (name == "collaborated_with") {
            advance();
            expect(TokenKind::LParen);
            ActorRef anchor = parse_actor();
            expect(TokenKind::RParen);
            return SocialConstraint::collaborated_with(std::move(anchor));
        }
        if (name == "min_degree") {
            advance();
            expect(TokenKind::LParen);
            int n = parse_nonnegative_int();
            expect(TokenKind::RParen);
            return SocialConstraint::min_degree(n);
        }
        if (name == "connected_to") {
            advance();
            expect(TokenKind::LParen);
            ActorRef anchor = parse_actor();
            expect(TokenKind::RParen);
            return SocialConstraint::connected_to(std::move(anchor));
        }
        fail("within_hops, collaborated_with, min_degree, or connected_to");
    }

    RankingCriterion parse_criterion() {
        if (current_.kind != TokenKind::Word) fail("a ranking metric");
        std::string name = current_.text;
        RankingCriterion crit{};
        if (name == "hops") {
            advance();
            expect(TokenKind::LParen);
            ActorRef anchor = parse_actor();
            expect(TokenKind::RParen);
            crit = RankingCriterion::hops_to(std::move(anchor));
        } else if (name == "degree") {
            advance();
            crit = RankingCriterion::degree();
        } else if (name == "closeness") {
            advance();
            crit = RankingCriterion::closeness();
        } else if (name == "betweenness") {
            advance();
            crit = RankingCriterion::betweenness();
        } else {
            fail("hops, degree, closeness, or betweenness");
        }
        if (at_word("asc")) {
            crit.ascending = true;
            advance();
        } else if (at_word("desc")) {
            crit.ascending = false;
            advance();
        }
        return crit;
    }

    Lexer lexer_;
    Token current_;
};

std::string serialize_actor(const ActorRef& a) {
    return a.is_consumer ? "consumer" : "\"" + a.key.str() + "\"";
}

}  // namespace

SocialRequirement parse_social_requirement(std::string_view text) {
    return Parser(text).parse();
}

std::string serialize_constraint(const SocialConstraint& c) {
    switch (c.kind) {
        case SocialConstraint::Kind::WithinHops:
            return "within_hops(" + serialize_actor(c.anchor) + ", " +
                   std::to_string(c.bound) + ")";
        case SocialConstraint::Kind::CollaboratedWith:
            return "collaborated_with(" + serialize_actor(c.anchor) + ")";
        case SocialConstraint::Kind::MinDegree:
            return "min_degree(" + std::to_string(c.bound) + ")";
        case SocialConstraint::Kind::ConnectedTo:
            return "connected_to(" + serialize_actor(c.anchor) + ")";
    }
    return "";
}

std::string serialize_criterion(const RankingCriterion& c) {
    std::string out;
    switch (c.metric) {
        case RankingCriterion::Metric::HopsTo:
            out = "hops(" + serialize_actor(c.anchor) + ")";
            break;
        case RankingCriterion::Metric::Degree: out = "degree"; break;
        case RankingCriterion::Metric::Closeness: out = "closeness"; break;
        case RankingCriterion::Metric::Betweenness: out = "betweenness"; break;
    }
    out += c.ascending ? " asc" : " desc";
    return out;
}

std::string serialize_social_requirement(const SocialRequirement& req) {
    std::string out;
    for (std::size_t i = 0; i < req.constraints.size(); ++i) {
        if (i > 0) out += " AND ";
        out += serialize_constraint(req.constraints[i]);
    }
    if (!out.empty()) out += " ";
    out += "RANK BY ";
    for (std::size_t i = 0; i < req.ranking.size(); ++i) {
        if (i > 0) out += ", ";
        out += serialize_criterion(req.ranking[i]);
    }
    return out;
}

}  // namespace ssb
