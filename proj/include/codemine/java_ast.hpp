#ifndef CODEMINE_JAVA_AST_HPP
#define CODEMINE_JAVA_AST_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace codemine::java {

enum class DeclKind { Class, Interface, Enum, Annotation, Anonymous };

const char* decl_kind_name(DeclKind kind);

// Statement taxonomy: Block for `{}` groupings, Control for branching and
// jumps, LocalDeclaration for local classes, Expression for expression
// statements, Other for local variable declarations and empty statements.
enum class StmtKind { Block, Expression, LocalDeclaration, Control, Other };

struct Declaration;

struct Expression {
    std::string kind;                 // "call" or "new"
    std::string method_call_name;     // set when the expression is an invocation
    std::unique_ptr<Declaration> anonymous_declaration; // set for `new T(...){...}`
    std::vector<Expression> children;
};

struct Statement {
    StmtKind kind = StmtKind::Other;
    std::vector<Statement> children;
    std::vector<Expression> expressions;
    std::unique_ptr<Declaration> local_declaration; // set when kind == LocalDeclaration
};

struct Method {
    std::string name;
    bool has_body = false;
    Statement body; // kind Block when has_body
};

struct Field {
    std::string name;
    std::vector<Expression> initializer_expressions;
};

struct Declaration {
    std::string name; // synthetic "$<n>" for anonymous
    DeclKind kind = DeclKind::Class;
    std::vector<Method> methods;            // declared methods and constructors
    std::vector<Field> fields;              // one per declarator; enum constants included
    std::vector<Declaration> nested_declarations; // body-level type declarations only
    std::vector<Statement> initializer_blocks;    // static and instance initializers
    std::vector<std::string> parent_names;  // name-only supertype references (unused by metrics)
    std::string qualified_id;               // `<package>.<Outer>[$<Inner>]*`
    bool is_local = false;                  // declared inside a method body
    int seq = 0;                            // per-enclosing counter for local/anonymous naming
};

struct CompilationUnit {
    std::string file_path;
    std::string package_name; // dotted, may be empty
    std::vector<Declaration> declarations;
};

struct ParseDiagnostic {
    std::string message;
    int line = 0;
    int column = 0;
};

// Exactly one of unit/error is populated.
struct ParseOutcome {
    std::optional<CompilationUnit> unit;
    std::optional<ParseDiagnostic> error;
    bool ok() const { return unit.has_value(); }
};

ParseOutcome parse_compilation_unit(std::string_view source, std::string file_path);

// Visits the direct inner declarations of `decl`: body-level nested types,
// then declarations hanging off its own statement/expression trees (local
// classes and anonymous classes, in tree order).
void for_each_direct_inner(const Declaration& decl,
                           const std::function<void(const Declaration&)>& fn);

// Every declaration at every nesting/local/anonymous level, preorder, each
// carrying its qualified_id.
std::vector<const Declaration*> enumerate_class_declarations(const CompilationUnit& unit);

} // namespace codemine::java

#endif
