#include <set>
#include <string>
#include <utility>

#include "codemine/java_ast.hpp"
#include "codemine/java_lexer.hpp"

namespace codemine::java {

namespace {

const std::set<std::string_view>& modifier_words() {
    static const std::set<std::string_view> words = {
        "public", "private",   "protected", "static",   "final",  "abstract", "native",
        "synchronized", "transient", "volatile", "strictfp", "default", "sealed",
    };
    return words;
}

enum class RegionEnd { Semicolon, CloseParen, CommaOrSemicolon, ColonOrArrow };

// Structural recursive-descent parser. It resolves everything the metrics
// need (declarations, members, statement trees, invocations, anonymous and
// local classes) and tracks the rest only for balance.
class Parser {
public:
    explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

    CompilationUnit parse_unit(std::string file_path) {
        CompilationUnit unit;
        unit.file_path = std::move(file_path);

        skip_modifiers_and_annotations(); // package-info style annotations
        if (cur().is_word("package")) {
            advance();
            unit.package_name = parse_dotted_name();
            expect(';');
        }
        while (cur().is_word("import")) {
            while (!at_end() && !cur().is(';')) advance();
            expect(';');
        }
        while (!at_end()) {
            if (cur().is(';')) {
                advance();
                continue;
            }
            skip_modifiers_and_annotations();
            if (at_end()) break;
            if (!at_type_declaration_keyword())
                fail("expected a type declaration");
            unit.declarations.push_back(parse_type_declaration(false));
        }
        return unit;
    }

private:
    // ---- token plumbing -------------------------------------------------

    const Token& cur() const { return tokens_[pos_]; }
    const Token& peek(std::size_t k = 1) const {
        std::size_t i = pos_ + k;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    bool at_end() const { return cur().kind == TokenKind::End; }
    void advance() {
        if (pos_ + 1 < tokens_.size()) ++pos_;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw SyntaxError{message, cur().line, cur().column};
    }

    void expect(char c) {
        if (!cur().is(c))
            fail(std::string("expected '") + c + "'");
        advance();
    }

    bool at_identifier() const { return cur().kind == TokenKind::Identifier; }

    bool at_plain_identifier() const {
        return at_identifier() && !is_java_keyword(cur().text);
    }

    std::string expect_identifier() {
        if (!at_identifier())
            fail("expected identifier");
        std::string name(cur().text);
        advance();
        return name;
    }

    struct DepthGuard {
        explicit DepthGuard(Parser& p) : parser(p) {
            if (++parser.depth_ > 2000)
                throw SyntaxError{"nesting too deep", parser.cur().line, parser.cur().column};
        }
        ~DepthGuard() { --parser.depth_; }
        Parser& parser;
    };

    // ---- small scanners -------------------------------------------------

    std::string parse_dotted_name() {
        std::string name = expect_identifier();
        while (cur().is('.') && peek().kind == TokenKind::Identifier) {
            advance();
            name += '.';
            name += expect_identifier();
        }
        return name;
    }

    // Balanced `<...>` holding only type-argument tokens. Leaves the position
    // untouched when the angle bracket turns out to be an operator.
    bool try_skip_type_args() {
        if (!cur().is('<')) return false;
        std::size_t save = pos_;
        int depth = 0;
        int steps = 0;
        while (!at_end() && steps++ < 400) {
            const Token& t = cur();
            if (t.is('<')) {
                ++depth;
            } else if (t.is('>')) {
                --depth;
                advance();
                if (depth == 0) return true;
                continue;
            } else if (t.kind == TokenKind::Identifier || t.is(',') || t.is('.') || t.is('?') ||
                       t.is('&') || t.is('@') || t.is('[') || t.is(']')) {
                // fine
            } else {
                break;
            }
            advance();
        }
        pos_ = save;
        return false;
    }

    void skip_balanced(char open, char close) {
        if (!cur().is(open))
            fail(std::string("expected '") + open + "'");
        int depth = 0;
        while (!at_end()) {
            if (cur().is(open)) ++depth;
            else if (cur().is(close)) {
                --depth;
                if (depth == 0) {
                    advance();
                    return;
                }
            }
            advance();
        }
        fail(std::string("unbalanced '") + open + "'");
    }

    // Annotations and modifier keywords before a member or statement.
    // Stops short of `@interface`, which is a declaration, not a use.
    void skip_modifiers_and_annotations() {
        while (true) {
            if (cur().is('@')) {
                if (peek().is_word("interface")) return;
                advance();
                parse_dotted_name();
                if (cur().is('(')) skip_balanced('(', ')');
                continue;
            }
            if (at_identifier() && modifier_words().count(cur().text)) {
                // `non-sealed` arrives as three tokens; eat the tail.
                advance();
                continue;
            }
            break;
        }
    }

    struct TypeScan {
        bool ok = false;
        bool lone_identifier = false; // a single plain name: constructor candidate
        std::string last_name;
    };

    TypeScan scan_type_opt() {
        TypeScan scan;
        std::size_t save = pos_;
        while (cur().is('@') && !peek().is_word("interface")) {
            advance();
            if (!at_identifier()) {
                pos_ = save;
                return scan;
            }
            parse_dotted_name();
            if (cur().is('(')) skip_balanced('(', ')');
        }
        if (!at_identifier()) {
            pos_ = save;
            return scan;
        }
        int parts = 0;
        bool generic = false;
        while (true) {
            scan.last_name = std::string(cur().text);
            advance();
            ++parts;
            if (try_skip_type_args()) generic = true;
            if (cur().is('.') && peek().kind == TokenKind::Identifier) {
                advance();
                continue;
            }
            break;
        }
        int dims = 0;
        while (cur().is('[') && peek().is(']')) {
            advance();
            advance();
            ++dims;
        }
        while (cur().is('.') && peek().is('.') && peek(2).is('.')) { // varargs
            advance();
            advance();
            advance();
            ++dims;
        }
        scan.ok = true;
        scan.lone_identifier = parts == 1 && !generic && dims == 0;
        return scan;
    }

    // ---- declarations ---------------------------------------------------

    Declaration start_anonymous() {
        Declaration decl;
        decl.kind = DeclKind::Anonymous;
        decl.seq = next_anonymous_seq();
        decl.name = std::to_string(decl.seq);
        return decl;
    }

    int next_anonymous_seq() {
        return anon_counters_.empty() ? 0 : ++anon_counters_.back();
    }

    int next_local_seq() {
        return local_counters_.empty() ? 0 : ++local_counters_.back();
    }

    bool at_type_declaration_keyword() const {
        if (cur().is_word("class") || cur().is_word("interface") || cur().is_word("enum"))
            return true;
        if (cur().is('@') && peek().is_word("interface"))
            return true;
        if (cur().is_word("record") && peek().kind == TokenKind::Identifier &&
            !is_java_keyword(peek().text) && (peek(2).is('(') || peek(2).is('<')))
            return true;
        return false;
    }

    // Assumes at_type_declaration_keyword(); modifiers already consumed.
    Declaration parse_type_declaration(bool is_local) {
        DepthGuard guard(*this);
        Declaration decl;
        decl.is_local = is_local;
        if (is_local)
            decl.seq = next_local_seq();

        bool is_record = false;
        if (cur().is('@')) {
            advance();
            advance(); // interface
            decl.kind = DeclKind::Annotation;
        } else if (cur().is_word("class")) {
            advance();
            decl.kind = DeclKind::Class;
        } else if (cur().is_word("interface")) {
            advance();
            decl.kind = DeclKind::Interface;
        } else if (cur().is_word("enum")) {
            advance();
            decl.kind = DeclKind::Enum;
        } else if (cur().is_word("record")) {
            advance();
            decl.kind = DeclKind::Class;
            is_record = true;
        } else {
            fail("expected a type declaration");
        }

        decl.name = expect_identifier();
        try_skip_type_args(); // type parameters
        if (is_record && cur().is('('))
            skip_balanced('(', ')'); // record components

        while (cur().is_word("extends") || cur().is_word("implements") || cur().is_word("permits")) {
            bool keep = !cur().is_word("permits");
            advance();
            while (true) {
                TypeScan t = scan_type_opt();
                if (!t.ok) fail("expected supertype name");
                if (keep) decl.parent_names.push_back(t.last_name);
                if (cur().is(',')) {
                    advance();
                    continue;
                }
                break;
            }
        }

        if (decl.kind == DeclKind::Enum)
            parse_enum_body(decl);
        else
            parse_class_body(decl);
        return decl;
    }

    void push_decl_context() {
        anon_counters_.push_back(0);
        local_counters_.push_back(0);
    }
    void pop_decl_context() {
        anon_counters_.pop_back();
        local_counters_.pop_back();
    }

    void parse_class_body(Declaration& decl) {
        DepthGuard guard(*this);
        push_decl_context();
        expect('{');
        while (!cur().is('}')) {
            if (at_end()) fail("unexpected end of file in class body");
            parse_member(decl);
        }
        expect('}');
        pop_decl_context();
    }

    void parse_enum_body(Declaration& decl) {
        DepthGuard guard(*this);
        push_decl_context();
        expect('{');

        bool in_constants = true;
        while (in_constants) {
            if (at_end()) fail("unexpected end of file in enum body");
            if (cur().is('}')) {
                advance();
                pop_decl_context();
                return;
            }
            if (cur().is(';')) {
                advance();
                break;
            }
            skip_modifiers_and_annotations();
            Field constant;
            constant.name = expect_identifier();
            if (cur().is('(')) {
                advance();
                scan_expression_region(RegionEnd::CloseParen, constant.initializer_expressions,
                                       nullptr);
            }
            if (cur().is('{')) {
                // A constant body is an anonymous subclass of the enum.
                Declaration anon = start_anonymous();
                anon.parent_names.push_back(decl.name);
                parse_class_body(anon);
                Expression expr;
                expr.kind = "new";
                expr.anonymous_declaration = std::make_unique<Declaration>(std::move(anon));
                constant.initializer_expressions.push_back(std::move(expr));
            }
            decl.fields.push_back(std::move(constant));
            if (cur().is(',')) {
                advance();
                continue;
            }
        }

        while (!cur().is('}')) {
            if (at_end()) fail("unexpected end of file in enum body");
            parse_member(decl);
        }
        expect('}');
        pop_decl_context();
    }

    void parse_member(Declaration& decl) {
        if (cur().is(';')) {
            advance();
            return;
        }
        skip_modifiers_and_annotations();

        if (cur().is('{')) { // static or instance initializer
            decl.initializer_blocks.push_back(parse_block());
            return;
        }
        if (at_type_declaration_keyword()) {
            decl.nested_declarations.push_back(parse_type_declaration(false));
            return;
        }
        if (cur().is('<') && !try_skip_type_args())
            fail("unbalanced type parameters");

        TypeScan type = scan_type_opt();
        if (!type.ok)
            fail("unexpected token in class body");

        if (at_plain_identifier()) {
            std::string name = expect_identifier();
            if (cur().is('('))
                parse_method_rest(decl, std::move(name));
            else
                parse_field_rest(decl, std::move(name));
            return;
        }
        if (type.lone_identifier && cur().is('(')) { // constructor
            parse_method_rest(decl, type.last_name);
            return;
        }
        if (type.lone_identifier && cur().is('{')) { // compact record constructor
            Method m;
            m.name = type.last_name;
            m.has_body = true;
            m.body = parse_block();
            decl.methods.push_back(std::move(m));
            return;
        }
        fail("unexpected token in class body");
    }

    void parse_method_rest(Declaration& decl, std::string name) {
        Method method;
        method.name = std::move(name);
        skip_balanced('(', ')');

        while (cur().is('[') && peek().is(']')) { // old-style array return
            advance();
            advance();
        }
        if (cur().is_word("throws")) {
            advance();
            while (!at_end() && !cur().is('{') && !cur().is(';') && !cur().is_word("default"))
                advance();
        }
        if (cur().is_word("default")) { // annotation member default value
            advance();
            std::vector<Expression> ignored;
            scan_expression_region(RegionEnd::Semicolon, ignored, nullptr);
        } else if (cur().is('{')) {
            method.body = parse_block();
            method.has_body = true;
        } else {
            expect(';');
        }
        decl.methods.push_back(std::move(method));
    }

    void parse_field_rest(Declaration& decl, std::string first_name) {
        std::string name = std::move(first_name);
        while (true) {
            Field field;
            field.name = std::move(name);
            while (cur().is('[') && peek().is(']')) { // C-style array suffix
                advance();
                advance();
            }
            if (cur().is('=')) {
                advance();
                scan_expression_region(RegionEnd::CommaOrSemicolon, field.initializer_expressions,
                                       nullptr);
            }
            decl.fields.push_back(std::move(field));
            if (cur().is(',')) {
                advance();
                name = expect_identifier();
                continue;
            }
            expect(';');
            return;
        }
    }

    // ---- statements -----------------------------------------------------

    Statement parse_block() {
        DepthGuard guard(*this);
        Statement block;
        block.kind = StmtKind::Block;
        expect('{');
        while (!cur().is('}')) {
            if (at_end()) fail("unexpected end of file in block");
            block.children.push_back(parse_statement());
        }
        expect('}');
        return block;
    }

    Statement parse_statement() {
        DepthGuard guard(*this);
        Statement st;

        if (cur().is('{'))
            return parse_block();

        if (cur().is(';')) {
            advance();
            st.kind = StmtKind::Other;
            return st;
        }

        if (cur().is_word("if")) {
            advance();
            st.kind = StmtKind::Control;
            expect('(');
            scan_expression_region(RegionEnd::CloseParen, st.expressions, &st.children);
            st.children.push_back(parse_statement());
            if (cur().is_word("else")) {
                advance();
                st.children.push_back(parse_statement());
            }
            return st;
        }
        if (cur().is_word("while")) {
            advance();
            st.kind = StmtKind::Control;
            expect('(');
            scan_expression_region(RegionEnd::CloseParen, st.expressions, &st.children);
            if (cur().is(';'))
                advance();
            else
                st.children.push_back(parse_statement());
            return st;
        }
        if (cur().is_word("do")) {
            advance();
            st.kind = StmtKind::Control;
            st.children.push_back(parse_statement());
            if (!cur().is_word("while")) fail("expected 'while' after do body");
            advance();
            expect('(');
            scan_expression_region(RegionEnd::CloseParen, st.expressions, &st.children);
            expect(';');
            return st;
        }
        if (cur().is_word("for")) {
            advance();
            st.kind = StmtKind::Control;
            expect('(');
            scan_expression_region(RegionEnd::CloseParen, st.expressions, &st.children);
            st.children.push_back(parse_statement());
            return st;
        }
        if (cur().is_word("switch")) {
            advance();
            st.kind = StmtKind::Control;
            expect('(');
            scan_expression_region(RegionEnd::CloseParen, st.expressions, &st.children);
            st.children.push_back(parse_switch_body());
            return st;
        }
        if (cur().is_word("try")) {
            advance();
            st.kind = StmtKind::Control;
            if (cur().is('(')) {
                advance();
                scan_expression_region(RegionEnd::CloseParen, st.expressions, &st.children);
            }
            st.children.push_back(parse_block());
            while (cur().is_word("catch")) {
                advance();
                skip_balanced('(', ')');
                st.children.push_back(parse_block());
            }
            if (cur().is_word("finally")) {
                advance();
                st.children.push_back(parse_block());
            }
            return st;
        }
        if (cur().is_word("synchronized") && peek().is('(')) {
            advance();
            st.kind = StmtKind::Control;
            expect('(');
            scan_expression_region(RegionEnd::CloseParen, st.expressions, &st.children);
            st.children.push_back(parse_block());
            return st;
        }
        if (cur().is_word("return") || cur().is_word("throw") ||
            (cur().is_word("yield") && !peek().is('('))) {
            advance();
            st.kind = StmtKind::Control;
            scan_expression_region(RegionEnd::Semicolon, st.expressions, &st.children);
            return st;
        }
        if (cur().is_word("break") || cur().is_word("continue")) {
            advance();
            st.kind = StmtKind::Control;
            if (at_plain_identifier()) advance(); // label
            expect(';');
            return st;
        }
        if (cur().is_word("assert")) {
            advance();
            st.kind = StmtKind::Control;
            scan_expression_region(RegionEnd::Semicolon, st.expressions, &st.children);
            return st;
        }

        // Local type declaration, possibly behind modifiers or annotations.
        {
            std::size_t save = pos_;
            skip_modifiers_and_annotations();
            if (at_type_declaration_keyword()) {
                st.kind = StmtKind::LocalDeclaration;
                st.local_declaration =
                    std::make_unique<Declaration>(parse_type_declaration(true));
                return st;
            }
            pos_ = save;
        }

        // Label: transparent, the labeled statement is the node.
        if (at_plain_identifier() && peek().is(':')) {
            advance();
            advance();
            return parse_statement();
        }

        // Local variable declaration or expression statement; the
        // distinction only affects the recorded kind.
        bool var_decl = false;
        {
            std::size_t save = pos_;
            skip_modifiers_and_annotations();
            TypeScan type = scan_type_opt();
            var_decl = type.ok && at_plain_identifier();
            pos_ = save;
        }
        st.kind = var_decl ? StmtKind::Other : StmtKind::Expression;
        scan_expression_region(RegionEnd::Semicolon, st.expressions, &st.children);
        return st;
    }

    Statement parse_switch_body() {
        DepthGuard guard(*this);
        Statement block;
        block.kind = StmtKind::Block;
        expect('{');
        while (!cur().is('}')) {
            if (at_end()) fail("unexpected end of file in switch");
            if (cur().is_word("case")) {
                advance();
                char end = scan_expression_region(RegionEnd::ColonOrArrow, block.expressions,
                                                  nullptr);
                if (end == '>') // arrow form: one statement per label
                    block.children.push_back(parse_statement());
                continue;
            }
            if (cur().is_word("default") && (peek().is(':') || peek().text == "->")) {
                advance();
                bool arrow = cur().text == "->";
                advance();
                if (arrow)
                    block.children.push_back(parse_statement());
                continue;
            }
            block.children.push_back(parse_statement());
        }
        expect('}');
        return block;
    }

    // ---- expression regions ----------------------------------------------

    // Linear scan with bracket-depth tracking. Emits an Expression per
    // method invocation and per anonymous-class creation; lambda bodies in
    // statement contexts become Block statements in `stmt_sink`.
    // Returns the final token for ColonOrArrow (':' or '>').
    char scan_expression_region(RegionEnd end, std::vector<Expression>& exprs,
                                std::vector<Statement>* stmt_sink) {
        DepthGuard guard(*this);
        int depth = 0;
        while (true) {
            if (at_end()) fail("unexpected end of file in expression");
            const Token& t = cur();

            if (depth == 0) {
                switch (end) {
                case RegionEnd::Semicolon:
                    if (t.is(';')) {
                        advance();
                        return ';';
                    }
                    break;
                case RegionEnd::CloseParen:
                    if (t.is(')')) {
                        advance();
                        return ')';
                    }
                    break;
                case RegionEnd::CommaOrSemicolon:
                    if (t.is(',') || t.is(';')) return t.text[0];
                    break;
                case RegionEnd::ColonOrArrow:
                    if (t.is(':')) {
                        advance();
                        return ':';
                    }
                    if (t.text == "->") {
                        advance();
                        return '>';
                    }
                    break;
                }
            }

            if (t.is_word("new")) {
                parse_creation(exprs, stmt_sink);
                continue;
            }
            if (t.kind == TokenKind::Identifier && !is_java_keyword(t.text) && peek().is('(')) {
                Expression call;
                call.kind = "call";
                call.method_call_name = std::string(t.text);
                exprs.push_back(std::move(call));
                advance();
                continue;
            }
            if (t.text == "->") {
                advance();
                if (cur().is('{')) {
                    if (stmt_sink) {
                        stmt_sink->push_back(parse_block());
                    } else {
                        // No statement context (field or constant initializer):
                        // walk the block as a plain region to keep finding
                        // calls and anonymous classes.
                        ++depth;
                        advance();
                    }
                }
                continue;
            }
            if (t.is('.') && peek().is('<')) { // explicit type args: x.<T>m()
                advance();
                try_skip_type_args();
                continue;
            }
            if (t.is('(') || t.is('[') || t.is('{')) {
                ++depth;
                advance();
                continue;
            }
            if (t.is(')') || t.is(']') || t.is('}')) {
                if (depth == 0)
                    fail("unbalanced expression");
                --depth;
                advance();
                continue;
            }
            advance();
        }
    }

    // `new` creations: plain instantiations pass through silently, class
    // bodies become anonymous declarations, array forms fall back to the
    // caller's depth tracking.
    void parse_creation(std::vector<Expression>& exprs, std::vector<Statement>* stmt_sink) {
        advance(); // new
        try_skip_type_args();
        if (!at_identifier())
            return;

        std::string last_name;
        while (true) {
            last_name = std::string(cur().text);
            advance();
            try_skip_type_args();
            if (cur().is('.') && peek().kind == TokenKind::Identifier) {
                advance();
                continue;
            }
            break;
        }
        if (!cur().is('('))
            return; // array creation or malformed; caller keeps scanning

        advance();
        scan_expression_region(RegionEnd::CloseParen, exprs, stmt_sink);
        if (cur().is('{')) {
            Declaration anon = start_anonymous();
            anon.parent_names.push_back(last_name);
            parse_class_body(anon);
            Expression expr;
            expr.kind = "new";
            expr.anonymous_declaration = std::make_unique<Declaration>(std::move(anon));
            exprs.push_back(std::move(expr));
        }
    }

    const std::vector<Token>& tokens_;
    std::size_t pos_ = 0;
    int depth_ = 0;
    std::vector<int> anon_counters_;
    std::vector<int> local_counters_;
};

void assign_ids(Declaration& decl, const std::string& parent_qualified_id);

template <typename StatementT, typename Fn>
void walk_statement_decls(StatementT& st, Fn&& fn);

template <typename ExpressionT, typename Fn>
void walk_expression_decls(ExpressionT& expr, Fn&& fn) {
    if (expr.anonymous_declaration) fn(*expr.anonymous_declaration);
    for (auto& child : expr.children) walk_expression_decls(child, fn);
}

template <typename StatementT, typename Fn>
void walk_statement_decls(StatementT& st, Fn&& fn) {
    if (st.local_declaration) fn(*st.local_declaration);
    for (auto& expr : st.expressions) walk_expression_decls(expr, fn);
    for (auto& child : st.children) walk_statement_decls(child, fn);
}

// Direct inner declarations: body-level nested types first, then locals and
// anonymous classes in tree order (fields, initializer blocks, methods).
template <typename DeclarationT, typename Fn>
void walk_direct_inner(DeclarationT& decl, Fn&& fn) {
    for (auto& nested : decl.nested_declarations) fn(nested);
    for (auto& field : decl.fields)
        for (auto& expr : field.initializer_expressions) walk_expression_decls(expr, fn);
    for (auto& block : decl.initializer_blocks) walk_statement_decls(block, fn);
    for (auto& method : decl.methods)
        if (method.has_body) walk_statement_decls(method.body, fn);
}

void assign_ids(Declaration& decl, const std::string& parent_qualified_id) {
    std::string component;
    switch (decl.kind) {
    case DeclKind::Anonymous:
        component = std::to_string(decl.seq);
        break;
    default:
        component = decl.is_local ? std::to_string(decl.seq) + decl.name : decl.name;
        break;
    }
    decl.qualified_id =
        parent_qualified_id.empty() ? component : parent_qualified_id + "$" + component;
    walk_direct_inner(decl, [&](Declaration& inner) { assign_ids(inner, decl.qualified_id); });
}

void collect_preorder(const Declaration& decl, std::vector<const Declaration*>& out) {
    out.push_back(&decl);
    walk_direct_inner(decl, [&](const Declaration& inner) { collect_preorder(inner, out); });
}

} // namespace

const char* decl_kind_name(DeclKind kind) {
    switch (kind) {
    case DeclKind::Class: return "class";
    case DeclKind::Interface: return "interface";
    case DeclKind::Enum: return "enum";
    case DeclKind::Annotation: return "annotation";
    case DeclKind::Anonymous: return "anonymous";
    }
    return "unknown";
}

ParseOutcome parse_compilation_unit(std::string_view source, std::string file_path) {
    ParseOutcome outcome;
    if (source.size() >= 3 && source.substr(0, 3) == "\xEF\xBB\xBF")
        source.remove_prefix(3); // UTF-8 BOM
    try {
        std::vector<Token> tokens = lex(source);
        Parser parser(tokens);
        CompilationUnit unit = parser.parse_unit(std::move(file_path));
        for (Declaration& decl : unit.declarations) {
            std::string top = unit.package_name.empty() ? decl.name
                                                        : unit.package_name + "." + decl.name;
            decl.qualified_id = top;
            walk_direct_inner(decl, [&](Declaration& inner) { assign_ids(inner, top); });
        }
        outcome.unit = std::move(unit);
    } catch (const SyntaxError& e) {
        outcome.error = ParseDiagnostic{e.message, e.line, e.column};
    }
    return outcome;
}

void for_each_direct_inner(const Declaration& decl,
                           const std::function<void(const Declaration&)>& fn) {
    walk_direct_inner(decl, fn);
}

std::vector<const Declaration*> enumerate_class_declarations(const CompilationUnit& unit) {
    std::vector<const Declaration*> out;
    for (const Declaration& decl : unit.declarations) collect_preorder(decl, out);
    return out;
}

} // namespace codemine::java
