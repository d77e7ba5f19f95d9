#include "codemine/java_lexer.hpp"

#include <set>

namespace codemine::java {

namespace {

bool ident_start(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' || c >= 0x80;
}

bool ident_part(unsigned char c) {
    return ident_start(c) || (c >= '0' && c <= '9');
}

bool digit(unsigned char c) { return c >= '0' && c <= '9'; }

bool hex_digit(unsigned char c) {
    return digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

const std::set<std::string_view>& keyword_set() {
    static const std::set<std::string_view> keywords = {
        "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char", "class",
        "const", "continue", "default", "do", "double", "else", "enum", "extends", "final",
        "finally", "float", "for", "goto", "if", "implements", "import", "instanceof", "int",
        "interface", "long", "native", "new", "package", "private", "protected", "public",
        "return", "short", "static", "strictfp", "super", "switch", "synchronized", "this",
        "throw", "throws", "transient", "try", "void", "volatile", "while",
    };
    return keywords;
}

class Lexer {
public:
    explicit Lexer(std::string_view source) : src_(source) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        while (true) {
            skip_trivia();
            if (eof()) break;
            tokens.push_back(next_token());
        }
        tokens.push_back({TokenKind::End, std::string_view(), line_, col_});
        return tokens;
    }

private:
    bool eof() const { return pos_ >= src_.size(); }
    unsigned char cur() const { return static_cast<unsigned char>(src_[pos_]); }
    unsigned char peek(std::size_t k = 1) const {
        return pos_ + k < src_.size() ? static_cast<unsigned char>(src_[pos_ + k]) : 0;
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw SyntaxError{message, line_, col_};
    }

    void skip_trivia() {
        while (!eof()) {
            unsigned char c = cur();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f') {
                advance();
            } else if (c == '/' && peek() == '/') {
                while (!eof() && cur() != '\n') advance();
            } else if (c == '/' && peek() == '*') {
                int start_line = line_;
                advance();
                advance();
                while (!eof() && !(cur() == '*' && peek() == '/')) advance();
                if (eof())
                    throw SyntaxError{"unterminated block comment", start_line, 1};
                advance();
                advance();
            } else {
                break;
            }
        }
    }

    Token next_token() {
        int line = line_, col = col_;
        std::size_t start = pos_;
        unsigned char c = cur();

        if (ident_start(c)) {
            while (!eof() && ident_part(cur())) advance();
            return {TokenKind::Identifier, src_.substr(start, pos_ - start), line, col};
        }
        if (digit(c) || (c == '.' && digit(peek()))) {
            lex_number();
            return {TokenKind::Number, src_.substr(start, pos_ - start), line, col};
        }
        if (c == '"') {
            lex_string();
            return {TokenKind::String, src_.substr(start, pos_ - start), line, col};
        }
        if (c == '\'') {
            lex_char();
            return {TokenKind::Char, src_.substr(start, pos_ - start), line, col};
        }
        if (c == '-' && peek() == '>') {
            advance();
            advance();
            return {TokenKind::Punct, src_.substr(start, 2), line, col};
        }
        if (c == ':' && peek() == ':') {
            advance();
            advance();
            return {TokenKind::Punct, src_.substr(start, 2), line, col};
        }
        advance();
        return {TokenKind::Punct, src_.substr(start, 1), line, col};
    }

    void lex_number() {
        if (cur() == '0' && (peek() == 'x' || peek() == 'X')) {
            advance();
            advance();
            while (!eof() && (hex_digit(cur()) || cur() == '_')) advance();
            if (!eof() && cur() == '.' && hex_digit(peek())) {
                advance();
                while (!eof() && (hex_digit(cur()) || cur() == '_')) advance();
            }
            if (!eof() && (cur() == 'p' || cur() == 'P')) {
                advance();
                if (!eof() && (cur() == '+' || cur() == '-')) advance();
                while (!eof() && digit(cur())) advance();
            }
        } else if (cur() == '0' && (peek() == 'b' || peek() == 'B')) {
            advance();
            advance();
            while (!eof() && (cur() == '0' || cur() == '1' || cur() == '_')) advance();
        } else {
            while (!eof() && (digit(cur()) || cur() == '_')) advance();
            if (!eof() && cur() == '.' && digit(peek())) {
                advance();
                while (!eof() && (digit(cur()) || cur() == '_')) advance();
            }
            if (!eof() && (cur() == 'e' || cur() == 'E') &&
                (digit(peek()) || ((peek() == '+' || peek() == '-') && digit(peek(2))))) {
                advance();
                if (cur() == '+' || cur() == '-') advance();
                while (!eof() && digit(cur())) advance();
            }
        }
        if (!eof() && (cur() == 'l' || cur() == 'L' || cur() == 'f' || cur() == 'F' ||
                       cur() == 'd' || cur() == 'D'))
            advance();
    }

    void lex_string() {
        int start_line = line_, start_col = col_;
        // Text block?
        if (peek() == '"' && peek(2) == '"') {
            advance();
            advance();
            advance();
            while (!eof()) {
                if (cur() == '\\') {
                    advance();
                    if (!eof()) advance();
                    continue;
                }
                if (cur() == '"' && peek() == '"' && peek(2) == '"') {
                    advance();
                    advance();
                    advance();
                    return;
                }
                advance();
            }
            throw SyntaxError{"unterminated text block", start_line, start_col};
        }
        advance(); // opening quote
        while (!eof()) {
            if (cur() == '\\') {
                advance();
                if (!eof()) advance();
                continue;
            }
            if (cur() == '"') {
                advance();
                return;
            }
            if (cur() == '\n')
                throw SyntaxError{"unterminated string literal", start_line, start_col};
            advance();
        }
        throw SyntaxError{"unterminated string literal", start_line, start_col};
    }

    void lex_char() {
        int start_line = line_, start_col = col_;
        advance(); // opening quote
        while (!eof()) {
            if (cur() == '\\') {
                advance();
                if (!eof()) advance();
                continue;
            }
            if (cur() == '\'') {
                advance();
                return;
            }
            if (cur() == '\n') break;
            advance();
        }
        throw SyntaxError{"unterminated character literal", start_line, start_col};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

} // namespace

bool is_java_keyword(std::string_view word) {
    return keyword_set().count(word) > 0;
}

std::vector<Token> lex(std::string_view source) {
    return Lexer(source).run();
}

} // namespace codemine::java
