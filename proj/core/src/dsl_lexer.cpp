/*
 * dsl_lexer.cpp
 * -------------
 * Tokenizer for the `.lsca` format.
 */
#include "lca/dsl.hpp"

#include <array>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace lca {

ParseError::ParseError(SourceSpan span, const std::string& message,
                       std::vector<std::string> expected)
    : Error(render(span, message, expected)),
      span_(span),
      message_(message),
      expected_(std::move(expected)) {}

std::string ParseError::render(const SourceSpan& span,
                               const std::string& message,
                               const std::vector<std::string>& expected) {
    std::ostringstream out;
    out << span.line << ":" << span.column << ": " << message;
    if (!expected.empty()) {
        out << " (expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i != 0) out << (i + 1 == expected.size() ? " or " : ", ");
            out << expected[i];
        }
        out << ")";
    }
    return out.str();
}

std::string token_kind_name(TokenKind kind) {
    switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Integer: return "integer";
    case TokenKind::RationalLit: return "rational";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Caret: return "'^'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::Comma: return "','";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::Colon: return "':'";
    case TokenKind::Equals: return "'='";
    case TokenKind::Underscore: return "'_'";
    case TokenKind::EndOfInput: return "end of input";
    }
    return "token";
}

namespace {

const std::unordered_map<std::string, bool>& keyword_table() {
    static const std::unordered_map<std::string, bool> table = {
        {"algebra", true}, {"lie", true},        {"lsc", true},
        {"raw", true},     {"params", true},     {"nonzero", true},
        {"generators", true}, {"bracket", true}, {"default", true},
        {"zero", true},
    };
    return table;
}

bool is_ident_start(unsigned char c) { return std::isalpha(c) != 0; }
// Identifiers start with a letter and may contain '_' in the tail; a
// standalone '_' (the lambda-slot marker) therefore still lexes as
// punctuation.
bool is_ident_char(unsigned char c) {
    return std::isalnum(c) != 0 || c == '_';
}

/// Length in bytes of the UTF-8 code point starting at s[i], for quoting
/// an illegal character verbatim.
std::size_t code_point_length(const std::string& s, std::size_t i) {
    const auto first = static_cast<unsigned char>(s[i]);
    std::size_t len = 1;
    if ((first & 0xE0) == 0xC0) len = 2;
    else if ((first & 0xF0) == 0xE0) len = 3;
    else if ((first & 0xF8) == 0xF0) len = 4;
    while (len > 1 && i + len > s.size()) --len;
    for (std::size_t k = 1; k < len; ++k) {
        if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) {
            len = k;
            break;
        }
    }
    return len;
}

} // namespace

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    int line = 1;
    int column = 1;

    const auto advance = [&](std::size_t count) {
        for (std::size_t k = 0; k < count; ++k) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
            ++i;
        }
    };

    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n' || c == '\r' || c == '\t' || c == ' ') {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }

        Token tok;
        tok.span = SourceSpan{line, column, 1};

        if (is_ident_start(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() &&
                   is_ident_char(static_cast<unsigned char>(text[j]))) {
                ++j;
            }
            tok.text = text.substr(i, j - i);
            tok.span.length = static_cast<int>(j - i);
            tok.kind = keyword_table().count(tok.text) != 0
                           ? TokenKind::Keyword
                           : TokenKind::Identifier;
            advance(j - i);
            tokens.push_back(std::move(tok));
            continue;
        }

        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            std::size_t j = i;
            while (j < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[j])) != 0) {
                ++j;
            }
            // "p/q" forms one rational literal when digits follow the '/'.
            if (j < text.size() && text[j] == '/' && j + 1 < text.size() &&
                std::isdigit(static_cast<unsigned char>(text[j + 1])) != 0) {
                std::size_t k = j + 1;
                while (k < text.size() &&
                       std::isdigit(static_cast<unsigned char>(text[k])) != 0) {
                    ++k;
                }
                const std::string num = text.substr(i, j - i);
                const std::string den = text.substr(j + 1, k - j - 1);
                tok.text = text.substr(i, k - i);
                tok.span.length = static_cast<int>(k - i);
                const BigInt d(den);
                if (d == 0) {
                    throw ParseError(tok.span, "rational literal '" +
                                                   tok.text +
                                                   "' has a zero denominator");
                }
                tok.kind = TokenKind::RationalLit;
                tok.value = Rational(BigInt(num), d);
                advance(k - i);
            } else {
                tok.text = text.substr(i, j - i);
                tok.span.length = static_cast<int>(j - i);
                tok.kind = TokenKind::Integer;
                tok.value = Rational(BigInt(tok.text));
                advance(j - i);
            }
            tokens.push_back(std::move(tok));
            continue;
        }

        TokenKind kind;
        switch (c) {
        case '+': kind = TokenKind::Plus; break;
        case '-': kind = TokenKind::Minus; break;
        case '*': kind = TokenKind::Star; break;
        case '^': kind = TokenKind::Caret; break;
        case '(': kind = TokenKind::LParen; break;
        case ')': kind = TokenKind::RParen; break;
        case '[': kind = TokenKind::LBracket; break;
        case ']': kind = TokenKind::RBracket; break;
        case '{': kind = TokenKind::LBrace; break;
        case '}': kind = TokenKind::RBrace; break;
        case ',': kind = TokenKind::Comma; break;
        case ';': kind = TokenKind::Semicolon; break;
        case ':': kind = TokenKind::Colon; break;
        case '=': kind = TokenKind::Equals; break;
        case '_': kind = TokenKind::Underscore; break;
        default: {
            const std::size_t len = code_point_length(text, i);
            tok.span.length = static_cast<int>(len);
            throw ParseError(tok.span, "unexpected character '" +
                                           text.substr(i, len) + "'");
        }
        }
        tok.kind = kind;
        tok.text = std::string(1, c);
        advance(1);
        tokens.push_back(std::move(tok));
    }

    Token eof;
    eof.kind = TokenKind::EndOfInput;
    eof.span = SourceSpan{line, column, 0};
    tokens.push_back(std::move(eof));
    return tokens;
}

} // namespace lca
