// Copyright 2026 The qcvine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cctype>
#include <set>
#include <sstream>

#include "qcvine/dsl.hpp"

namespace qcvine::dsl {

namespace {

enum class Tok : std::uint8_t {
    Ident,
    Integer,
    Float,
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Semi,
    Comma,
    DotDot,
    Plus,
    Minus,
    Star,
    Slash,
    End,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::int64_t value = 0;
    SourceLocation location;
};

std::string describe(Tok kind) {
    switch (kind) {
        case Tok::Ident:
            return "identifier";
        case Tok::Integer:
            return "integer";
        case Tok::Float:
            return "number";
        case Tok::LBrace:
            return "'{'";
        case Tok::RBrace:
            return "'}'";
        case Tok::LParen:
            return "'('";
        case Tok::RParen:
            return "')'";
        case Tok::LBracket:
            return "'['";
        case Tok::RBracket:
            return "']'";
        case Tok::Semi:
            return "';'";
        case Tok::Comma:
            return "','";
        case Tok::DotDot:
            return "'..'";
        case Tok::Plus:
            return "'+'";
        case Tok::Minus:
            return "'-'";
        case Tok::Star:
            return "'*'";
        case Tok::Slash:
            return "'/'";
        case Tok::End:
            break;
    }
    return "end of input";
}

std::vector<Token> tokenize(const std::string &text) {
    std::vector<Token> tokens;
    int line = 1;
    int column = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
    };
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '#' || (c == '/' && i + 1 < text.size() && text[i + 1] == '/')) {
            while (i < text.size() && text[i] != '\n') {
                advance(1);
            }
            continue;
        }
        Token tok;
        tok.location = {line, column};
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
                ++j;
            }
            tok.kind = Tok::Ident;
            tok.text = text.substr(i, j - i);
            advance(j - i);
            tokens.push_back(std::move(tok));
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                ++j;
            }
            // `1.5` is a float; `0..n` is an integer followed by a range.
            bool isFloat = false;
            if (j + 1 < text.size() && text[j] == '.' && std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
                isFloat = true;
                ++j;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                    ++j;
                }
            }
            tok.text = text.substr(i, j - i);
            if (isFloat) {
                tok.kind = Tok::Float;
            } else {
                tok.kind = Tok::Integer;
                try {
                    tok.value = std::stoll(tok.text);
                } catch (const std::out_of_range &) {
                    throw SourceError(tok.location, "integer literal too large");
                }
            }
            advance(j - i);
            tokens.push_back(std::move(tok));
            continue;
        }
        std::size_t width = 1;
        switch (c) {
            case '{':
                tok.kind = Tok::LBrace;
                break;
            case '}':
                tok.kind = Tok::RBrace;
                break;
            case '(':
                tok.kind = Tok::LParen;
                break;
            case ')':
                tok.kind = Tok::RParen;
                break;
            case '[':
                tok.kind = Tok::LBracket;
                break;
            case ']':
                tok.kind = Tok::RBracket;
                break;
            case ';':
                tok.kind = Tok::Semi;
                break;
            case ',':
                tok.kind = Tok::Comma;
                break;
            case '+':
                tok.kind = Tok::Plus;
                break;
            case '-':
                tok.kind = Tok::Minus;
                break;
            case '*':
                tok.kind = Tok::Star;
                break;
            case '/':
                tok.kind = Tok::Slash;
                break;
            case '.':
                if (i + 1 < text.size() && text[i + 1] == '.') {
                    tok.kind = Tok::DotDot;
                    width = 2;
                    break;
                }
                [[fallthrough]];
            default:
                throw SourceError(tok.location, std::string("unexpected character '") + c + "'");
        }
        tok.text = text.substr(i, width);
        advance(width);
        tokens.push_back(std::move(tok));
    }
    Token end;
    end.kind = Tok::End;
    end.location = {line, column};
    tokens.push_back(std::move(end));
    return tokens;
}

bool isKeyword(const std::string &word) {
    return word == "circuit" || word == "def" || word == "for" || word == "in";
}

class Parser {
   public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
    }

    AstNode program() {
        AstNode root = make(AstKind::ProgramRoot, peek().location);
        std::set<std::string> names;
        while (peekIdent("def")) {
            AstNode def = funcDef();
            if (!names.insert(def.funcDef().name).second) {
                throw SourceError(def.span.begin, "function '" + def.funcDef().name + "' defined twice");
            }
            root.children.push_back(std::move(def));
        }
        if (!peekIdent("circuit")) {
            fail({"'def'", "'circuit'"});
        }
        root.children.push_back(circuit());
        expect(Tok::End);
        root.span.end = peek().location;
        return root;
    }

   private:
    const Token &peek(std::size_t ahead = 0) const {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }
    bool peekIs(Tok kind) const { return peek().kind == kind; }
    bool peekIdent(std::string_view word) const { return peek().kind == Tok::Ident && peek().text == word; }

    const Token &take() {
        const Token &tok = tokens_[pos_];
        if (pos_ + 1 < tokens_.size()) {
            ++pos_;
        }
        return tok;
    }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        const Token &tok = peek();
        std::string found = tok.kind == Tok::End ? "end of input" : "'" + tok.text + "'";
        throw SourceError(tok.location, "syntax error: unexpected " + found, std::move(expected));
    }

    const Token &expect(Tok kind) {
        if (!peekIs(kind)) {
            fail({describe(kind)});
        }
        return take();
    }

    void expectKeyword(std::string_view word) {
        if (!peekIdent(word)) {
            fail({"'" + std::string(word) + "'"});
        }
        take();
    }

    std::string identifier(const char *what) {
        if (!peekIs(Tok::Ident) || isKeyword(peek().text)) {
            fail({what});
        }
        return take().text;
    }

    AstNode make(AstKind kind, SourceLocation begin) {
        AstNode node;
        node.id = nextId_++;
        node.kind = kind;
        node.span.begin = begin;
        return node;
    }

    void checkCallableName(const Token &tok, const std::string &name) {
        if (parseGateName(name) || name == "q") {
            throw SourceError(tok.location, "'" + name + "' is reserved and cannot name a function");
        }
    }

    AstNode funcDef() {
        const SourceLocation begin = peek().location;
        expectKeyword("def");
        AstNode node = make(AstKind::FuncDef, begin);
        const Token &nameTok = peek();
        FuncDefMeta meta;
        meta.name = identifier("function name");
        checkCallableName(nameTok, meta.name);
        expect(Tok::LParen);
        if (!peekIs(Tok::RParen)) {
            while (true) {
                const Token &paramTok = peek();
                std::string param = identifier("parameter name");
                for (const auto &existing : meta.params) {
                    if (existing == param) {
                        throw SourceError(paramTok.location, "duplicate parameter '" + param + "'");
                    }
                }
                meta.params.push_back(std::move(param));
                if (!peekIs(Tok::Comma)) {
                    break;
                }
                take();
            }
        }
        expect(Tok::RParen);
        node.meta = std::move(meta);
        node.children = block();
        node.span.end = tokens_[pos_ - 1].location;
        return node;
    }

    AstNode circuit() {
        const SourceLocation begin = peek().location;
        expectKeyword("circuit");
        AstNode node = make(AstKind::FuncDef, begin);
        FuncDefMeta meta;
        meta.isCircuit = true;
        meta.name = identifier("circuit name");
        expect(Tok::LParen);
        meta.qubitCount = expr();
        expect(Tok::RParen);
        node.meta = std::move(meta);
        node.children = block();
        node.span.end = tokens_[pos_ - 1].location;
        return node;
    }

    std::vector<AstNode> block() {
        expect(Tok::LBrace);
        std::vector<AstNode> stmts;
        while (!peekIs(Tok::RBrace)) {
            stmts.push_back(statement());
        }
        take();
        return stmts;
    }

    AstNode statement() {
        if (peekIdent("for")) {
            return forLoop();
        }
        if (!peekIs(Tok::Ident) || isKeyword(peek().text)) {
            fail({"gate", "function call", "'for'", "'}'"});
        }
        if (auto gate = parseGateName(peek().text)) {
            return gateCall(*gate);
        }
        return funcCall();
    }

    AstNode forLoop() {
        const SourceLocation begin = peek().location;
        expectKeyword("for");
        AstNode node = make(AstKind::ForLoop, begin);
        ForLoopMeta meta;
        meta.var = identifier("loop variable");
        expectKeyword("in");
        meta.lo = expr();
        expect(Tok::DotDot);
        meta.hi = expr();
        node.meta = std::move(meta);
        node.children = block();
        node.span.end = tokens_[pos_ - 1].location;
        return node;
    }

    AstNode gateCall(GateName gate) {
        const Token &nameTok = take();
        AstNode node = make(AstKind::GateCall, nameTok.location);
        const GateKind &kind = gateKind(gate);
        GateCallMeta meta;
        meta.gate = gate;
        if (peekIs(Tok::LParen)) {
            take();
            if (!peekIs(Tok::RParen)) {
                while (true) {
                    meta.angles.push_back(angle());
                    if (!peekIs(Tok::Comma)) {
                        break;
                    }
                    take();
                }
            }
            expect(Tok::RParen);
        }
        if (static_cast<int>(meta.angles.size()) != kind.params) {
            throw SourceError(nameTok.location, "gate " + nameTok.text + " takes " + std::to_string(kind.params) +
                                                    " angle parameter(s), got " + std::to_string(meta.angles.size()));
        }
        while (true) {
            if (!peekIdent("q")) {
                fail({"operand 'q[...]'"});
            }
            take();
            expect(Tok::LBracket);
            meta.operands.push_back(expr());
            expect(Tok::RBracket);
            if (!peekIs(Tok::Comma)) {
                break;
            }
            take();
        }
        if (!peekIs(Tok::Semi)) {
            fail({"';'", "','"});
        }
        take();
        if (static_cast<int>(meta.operands.size()) != kind.arity) {
            throw SourceError(nameTok.location, "gate " + nameTok.text + " takes " + std::to_string(kind.arity) +
                                                    " operand(s), got " + std::to_string(meta.operands.size()));
        }
        node.meta = std::move(meta);
        node.span.end = tokens_[pos_ - 1].location;
        return node;
    }

    /// Angle arguments are display text: a balanced token run up to ',' or ')'.
    std::string angle() {
        std::string label;
        int depth = 0;
        const SourceLocation begin = peek().location;
        while (true) {
            const Token &tok = peek();
            if (tok.kind == Tok::End || tok.kind == Tok::Semi || tok.kind == Tok::LBrace || tok.kind == Tok::RBrace) {
                fail({"')'"});
            }
            if (depth == 0 && (tok.kind == Tok::Comma || tok.kind == Tok::RParen)) {
                break;
            }
            if (tok.kind == Tok::LParen || tok.kind == Tok::LBracket) {
                ++depth;
            } else if (tok.kind == Tok::RParen || tok.kind == Tok::RBracket) {
                --depth;
            }
            label += tok.text;
            take();
        }
        if (label.empty()) {
            throw SourceError(begin, "empty angle parameter");
        }
        return label;
    }

    AstNode funcCall() {
        const Token &nameTok = take();
        AstNode node = make(AstKind::FuncCall, nameTok.location);
        FuncCallMeta meta;
        meta.callee = nameTok.text;
        if (!peekIs(Tok::LParen)) {
            fail({"'('"});
        }
        take();
        if (!peekIs(Tok::RParen)) {
            while (true) {
                meta.args.push_back(expr());
                if (!peekIs(Tok::Comma)) {
                    break;
                }
                take();
            }
        }
        expect(Tok::RParen);
        expect(Tok::Semi);
        node.meta = std::move(meta);
        node.span.end = tokens_[pos_ - 1].location;
        return node;
    }

    Expr expr() {
        Expr lhs = term();
        while (peekIs(Tok::Plus) || peekIs(Tok::Minus)) {
            const Token &op = take();
            Expr node;
            node.op = op.kind == Tok::Plus ? Expr::Op::Add : Expr::Op::Sub;
            node.location = op.location;
            node.args.push_back(std::move(lhs));
            node.args.push_back(term());
            lhs = std::move(node);
        }
        return lhs;
    }

    Expr term() {
        Expr lhs = unary();
        while (peekIs(Tok::Star) || peekIs(Tok::Slash)) {
            const Token &op = take();
            Expr node;
            node.op = op.kind == Tok::Star ? Expr::Op::Mul : Expr::Op::Div;
            node.location = op.location;
            node.args.push_back(std::move(lhs));
            node.args.push_back(unary());
            lhs = std::move(node);
        }
        return lhs;
    }

    Expr unary() {
        if (peekIs(Tok::Minus)) {
            const Token &op = take();
            Expr node;
            node.op = Expr::Op::Neg;
            node.location = op.location;
            node.args.push_back(unary());
            return node;
        }
        return primary();
    }

    Expr primary() {
        const Token &tok = peek();
        Expr node;
        node.location = tok.location;
        if (tok.kind == Tok::Integer) {
            node.op = Expr::Op::Literal;
            node.value = tok.value;
            take();
            return node;
        }
        if (tok.kind == Tok::Ident && !isKeyword(tok.text)) {
            node.op = Expr::Op::Variable;
            node.name = tok.text;
            take();
            return node;
        }
        if (tok.kind == Tok::LParen) {
            take();
            node = expr();
            expect(Tok::RParen);
            return node;
        }
        fail({"integer", "identifier", "'('"});
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    int nextId_ = 0;
};

void print(std::ostream &out, const Expr &e, int parentPrec) {
    auto prec = [](Expr::Op op) {
        switch (op) {
            case Expr::Op::Add:
            case Expr::Op::Sub:
                return 1;
            case Expr::Op::Mul:
            case Expr::Op::Div:
                return 2;
            case Expr::Op::Neg:
                return 3;
            default:
                return 4;
        }
    };
    const int mine = prec(e.op);
    const bool parens = mine < parentPrec;
    if (parens) {
        out << '(';
    }
    switch (e.op) {
        case Expr::Op::Literal:
            out << e.value;
            break;
        case Expr::Op::Variable:
            out << e.name;
            break;
        case Expr::Op::Neg:
            out << '-';
            print(out, e.args[0], mine);
            break;
        default: {
            const char *sym = e.op == Expr::Op::Add ? "+" : e.op == Expr::Op::Sub ? "-" : e.op == Expr::Op::Mul ? "*" : "/";
            print(out, e.args[0], mine);
            out << sym;
            // Right operand binds tighter for non-associative operators.
            print(out, e.args[1], mine + 1);
            break;
        }
    }
    if (parens) {
        out << ')';
    }
}

}  // namespace

std::string Expr::toString() const {
    std::ostringstream out;
    print(out, *this, 0);
    return out.str();
}

AstNode parse(const std::string &text) {
    Parser parser(tokenize(text));
    return parser.program();
}

}  // namespace qcvine::dsl
