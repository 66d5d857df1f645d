// Copyright 2026 The qcpso Authors
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

#include "qcpso/qasm.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <set>

#include "qcpso/errors.hpp"
#include "qcpso/text.hpp"

namespace qcpso {

std::string emit_qasm(const Circuit& circuit)
{
    std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    out += "qreg q[" + std::to_string(circuit.num_qubits()) + "];\n";
    for (std::uint32_t q = 0; q < circuit.num_qubits(); ++q) {
        out += "h q[" + std::to_string(q) + "];\n";
    }
    for (const auto& instr : circuit.body()) {
        out += gate_name(instr.kind);
        if (instr.angle) {
            out += "(" + format_real(*instr.angle) + ")";
        }
        out += " q[" + std::to_string(instr.qubits[0]) + "]";
        if (is_two_qubit(instr.kind)) {
            out += ",q[" + std::to_string(instr.qubits[1]) + "]";
        }
        out += ";\n";
    }
    return out;
}

namespace {

enum class TokenKind { Identifier, Number, String, Symbol, End };

struct Token {
    TokenKind kind = TokenKind::End;
    std::string_view text;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next()
    {
        skip_blank();
        Token tok;
        tok.line = line_;
        tok.column = column_;
        if (pos_ >= text_.size()) {
            return tok;
        }
        const std::size_t start = pos_;
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                advance();
            }
            tok.kind = TokenKind::Identifier;
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
                advance();
            }
            if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
                advance();
                if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
                    advance();
                }
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    advance();
                }
            }
            tok.kind = TokenKind::Number;
        } else if (c == '"') {
            advance();
            while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n') {
                advance();
            }
            if (pos_ >= text_.size() || text_[pos_] != '"') {
                throw QasmError(tok.line, tok.column, "unterminated string");
            }
            advance();
            tok.kind = TokenKind::String;
        } else {
            advance();
            tok.kind = TokenKind::Symbol;
        }
        tok.text = text_.substr(start, pos_ - start);
        return tok;
    }

private:
    void advance()
    {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_blank()
    {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    advance();
                }
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { tok_ = lexer_.next(); }

    Circuit parse()
    {
        expect_identifier("OPENQASM");
        const Token version = take(TokenKind::Number, "version number");
        if (version.text.empty() || version.text.front() != '2') {
            fail(version, "unsupported OpenQASM version '" + std::string(version.text) + "'");
        }
        expect_symbol(';');

        if (tok_.kind == TokenKind::Identifier && tok_.text == "include") {
            advance();
            take(TokenKind::String, "include file name");
            expect_symbol(';');
        }

        std::vector<Instruction> body;
        while (tok_.kind != TokenKind::End) {
            const Token head = take(TokenKind::Identifier, "statement");
            if (head.text == "qreg") {
                parse_qreg(head);
            } else {
                body.push_back(parse_gate(head));
            }
        }
        if (!num_qubits_) {
            fail(tok_, "missing qreg declaration");
        }
        drop_prefix(body);
        return Circuit(*num_qubits_, std::move(body));
    }

private:
    [[noreturn]] void fail(const Token& at, const std::string& message)
    {
        throw QasmError(at.line, at.column, message);
    }

    void advance() { tok_ = lexer_.next(); }

    static std::string describe(const Token& tok)
    {
        return tok.kind == TokenKind::End ? "end of input" : "'" + std::string(tok.text) + "'";
    }

    Token take(TokenKind kind, const std::string& what)
    {
        if (tok_.kind != kind) {
            fail(tok_, "expected " + what + ", found " + describe(tok_));
        }
        Token t = tok_;
        advance();
        return t;
    }

    void expect_identifier(std::string_view word)
    {
        if (tok_.kind != TokenKind::Identifier || tok_.text != word) {
            fail(tok_, "expected '" + std::string(word) + "', found " + describe(tok_));
        }
        advance();
    }

    void expect_symbol(char c)
    {
        if (!accept_symbol(c)) {
            fail(tok_, std::string("expected '") + c + "', found " + describe(tok_));
        }
    }

    bool accept_symbol(char c)
    {
        if (tok_.kind == TokenKind::Symbol && tok_.text.size() == 1 && tok_.text[0] == c) {
            advance();
            return true;
        }
        return false;
    }

    std::uint32_t parse_index()
    {
        const Token t = take(TokenKind::Number, "integer");
        std::uint32_t value = 0;
        const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
            fail(t, "invalid integer '" + std::string(t.text) + "'");
        }
        return value;
    }

    void parse_qreg(const Token& head)
    {
        if (num_qubits_) {
            fail(head, "only one qreg declaration is supported");
        }
        const Token name = take(TokenKind::Identifier, "register name");
        expect_symbol('[');
        const Token size_tok = tok_;
        const std::uint32_t size = parse_index();
        expect_symbol(']');
        expect_symbol(';');
        if (size == 0 || size > max_qubits) {
            fail(size_tok, "register size must be in [1, " + std::to_string(max_qubits) + "]");
        }
        register_name_ = std::string(name.text);
        num_qubits_ = size;
    }

    double parse_atom()
    {
        if (tok_.kind == TokenKind::Identifier && tok_.text == "pi") {
            advance();
            return std::numbers::pi;
        }
        const Token t = take(TokenKind::Number, "number or 'pi'");
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
            fail(t, "invalid number '" + std::string(t.text) + "'");
        }
        return value;
    }

    double parse_angle()
    {
        const Token start = tok_;
        const bool negate = accept_symbol('-');
        double value = parse_atom();
        if (accept_symbol('*')) {
            value *= parse_atom();
        } else if (accept_symbol('/')) {
            value /= parse_atom();
        }
        if (negate) {
            value = -value;
        }
        if (!std::isfinite(value)) {
            fail(start, "angle is not finite");
        }
        constexpr double two_pi = 2.0 * std::numbers::pi;
        if (value < 0.0 || value >= two_pi) {
            value = std::fmod(value, two_pi);
            if (value < 0.0) {
                value += two_pi;
            }
            if (value >= two_pi) {
                value = 0.0;
            }
        }
        return value;
    }

    std::uint32_t parse_operand()
    {
        const Token name = take(TokenKind::Identifier, "qubit operand");
        if (name.text != register_name_) {
            fail(name, "unknown register '" + std::string(name.text) + "'");
        }
        expect_symbol('[');
        const Token index_tok = tok_;
        const std::uint32_t index = parse_index();
        expect_symbol(']');
        if (index >= *num_qubits_) {
            fail(index_tok, "qubit index " + std::to_string(index) + " out of range for qreg of size " +
                                std::to_string(*num_qubits_));
        }
        return index;
    }

    Instruction parse_gate(const Token& head)
    {
        const auto kind = gate_from_name(head.text);
        if (!kind) {
            fail(head, "unsupported gate '" + std::string(head.text) + "'");
        }
        if (!num_qubits_) {
            fail(head, "missing qreg declaration before first gate");
        }

        Instruction instr;
        instr.kind = *kind;
        if (is_parameterized(*kind)) {
            expect_symbol('(');
            instr.angle = parse_angle();
            expect_symbol(')');
        } else if (tok_.kind == TokenKind::Symbol && tok_.text == "(") {
            fail(tok_, std::string(head.text) + " takes no parameters");
        }

        instr.qubits[0] = parse_operand();
        if (is_two_qubit(*kind)) {
            expect_symbol(',');
            const Token target_tok = tok_;
            instr.qubits[1] = parse_operand();
            if (instr.qubits[0] == instr.qubits[1]) {
                fail(target_tok, "cx control and target must differ");
            }
        }
        expect_symbol(';');
        return instr;
    }

    void drop_prefix(std::vector<Instruction>& body) const
    {
        const std::uint32_t n = *num_qubits_;
        if (body.size() < n) {
            return;
        }
        std::set<std::uint32_t> seen;
        for (std::uint32_t i = 0; i < n; ++i) {
            if (body[i].kind != GateKind::H || !seen.insert(body[i].qubits[0]).second) {
                return;
            }
        }
        body.erase(body.begin(), body.begin() + n);
    }

    Lexer lexer_;
    Token tok_;
    std::optional<std::uint32_t> num_qubits_;
    std::string register_name_;
};

} // namespace

Circuit parse_qasm(std::string_view text)
{
    return Parser(text).parse();
}

} // namespace qcpso
