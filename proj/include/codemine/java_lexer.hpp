#ifndef CODEMINE_JAVA_LEXER_HPP
#define CODEMINE_JAVA_LEXER_HPP

#include <string>
#include <string_view>
#include <vector>

namespace codemine::java {

enum class TokenKind { Identifier, Number, String, Char, Punct, End };

struct Token {
    TokenKind kind = TokenKind::End;
    std::string_view text;
    int line = 0;
    int column = 0;

    bool is(char c) const {
        return kind == TokenKind::Punct && text.size() == 1 && text[0] == c;
    }
    bool is_word(std::string_view w) const {
        return kind == TokenKind::Identifier && text == w;
    }
};

// Thrown by the lexer and parser; converted to a ParseOutcome error.
struct SyntaxError {
    std::string message;
    int line = 0;
    int column = 0;
};

// Tokenizes Java source. Keywords are ordinary Identifier tokens; the only
// multi-character punctuators are `->` and `::`. A trailing End token is
// always appended.
std::vector<Token> lex(std::string_view source);

bool is_java_keyword(std::string_view word);

} // namespace codemine::java

#endif
