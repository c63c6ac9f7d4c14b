// Copyright 2026 The hoareopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cctype>
#include <charconv>
#include <map>

#include "hoareopt/condition.hpp"

namespace hoareopt {
namespace {

enum class Tok { LParen, RParen, Comma, Ident, Number, CmpOp, End };

struct Token {
    Tok kind;
    std::string_view text;
    std::size_t pos;
};

const std::map<std::string_view, Op>& head_table() {
    static const std::map<std::string_view, Op> t = {
        {"and", Op::And},         {"or", Op::Or},         {"not", Op::Not},
        {"implies", Op::Implies}, {"iff", Op::Iff},       {"eq", Op::Eq},
        {"ne", Op::Ne},           {"lt", Op::Lt},         {"le", Op::Le},
        {"gt", Op::Gt},           {"ge", Op::Ge},         {"reg_msb", Op::RegMsb},
        {"reg_lsb", Op::RegLsb},  {"shl", Op::Shl},       {"shr", Op::Shr},
        {"add", Op::Add},         {"sub", Op::Sub},       {"pow2", Op::Pow2},
    };
    return t;
}

class Parser {
  public:
    Parser(std::string_view text, const NameResolver& resolve) : text_(text), resolve_(resolve) {
        tokenize();
    }

    Condition parse_top() {
        Condition lhs = parse_expr();
        if (peek().kind == Tok::CmpOp) {
            Token op = next();
            Condition rhs = parse_expr();
            lhs = build(infix_op(op), {lhs, rhs}, op.pos);
        }
        if (peek().kind != Tok::End) fail("unexpected trailing input", peek().pos);
        return lhs;
    }

  private:
    [[noreturn]] void fail(const std::string& msg, std::size_t pos) const {
        throw ParseError("condition: " + msg + " at column " + std::to_string(pos + 1), 1, pos + 1);
    }

    void tokenize() {
        std::size_t i = 0;
        while (i < text_.size()) {
            char ch = text_[i];
            if (std::isspace(static_cast<unsigned char>(ch))) {
                ++i;
            } else if (ch == '(') {
                toks_.push_back({Tok::LParen, text_.substr(i, 1), i});
                ++i;
            } else if (ch == ')') {
                toks_.push_back({Tok::RParen, text_.substr(i, 1), i});
                ++i;
            } else if (ch == ',') {
                toks_.push_back({Tok::Comma, text_.substr(i, 1), i});
                ++i;
            } else if (ch == '=' || ch == '!' || ch == '<' || ch == '>') {
                std::size_t len = (i + 1 < text_.size() && text_[i + 1] == '=') ? 2 : 1;
                std::string_view op = text_.substr(i, len);
                if (op == "=" || op == "!") fail("unknown operator '" + std::string(op) + "'", i);
                toks_.push_back({Tok::CmpOp, op, i});
                i += len;
            } else if (std::isdigit(static_cast<unsigned char>(ch))) {
                std::size_t j = i;
                while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
                toks_.push_back({Tok::Number, text_.substr(i, j - i), i});
                i = j;
            } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
                std::size_t j = i;
                while (j < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_')) {
                    ++j;
                }
                toks_.push_back({Tok::Ident, text_.substr(i, j - i), i});
                i = j;
            } else {
                fail(std::string("unexpected character '") + ch + "'", i);
            }
        }
        toks_.push_back({Tok::End, {}, text_.size()});
    }

    const Token& peek() const { return toks_[at_]; }
    Token next() { return toks_[at_++]; }

    void expect(Tok kind, const char* what) {
        if (peek().kind != kind) fail(std::string("expected ") + what, peek().pos);
        ++at_;
    }

    Op infix_op(const Token& t) const {
        if (t.text == "==") return Op::Eq;
        if (t.text == "!=") return Op::Ne;
        if (t.text == "<") return Op::Lt;
        if (t.text == "<=") return Op::Le;
        if (t.text == ">") return Op::Gt;
        return Op::Ge;
    }

    Condition build(Op op, std::vector<Condition> args, std::size_t pos) const {
        try {
            return Condition::make(op, std::move(args));
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            fail(e.what(), pos);
        }
    }

    Op head_op(const Token& t) const {
        auto it = head_table().find(t.text);
        if (it == head_table().end()) fail("unknown form '" + std::string(t.text) + "'", t.pos);
        return it->second;
    }

    Condition leaf(const Token& t) const {
        if (t.kind == Tok::Number) {
            std::uint64_t v = 0;
            auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
            if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
                fail("integer out of range", t.pos);
            }
            return Condition::num(v);
        }
        if (t.text == "true") return Condition::constant(true);
        if (t.text == "false") return Condition::constant(false);
        auto v = resolve_(t.text);
        if (!v) fail("unknown qubit '" + std::string(t.text) + "'", t.pos);
        return Condition::atom(*v);
    }

    Condition parse_expr() {
        Token t = next();
        if (t.kind == Tok::LParen) {
            Token head = next();
            if (head.kind != Tok::Ident) fail("expected form name", head.pos);
            Op op = head_op(head);
            std::vector<Condition> args;
            while (peek().kind != Tok::RParen) {
                if (peek().kind == Tok::End) fail("unterminated form", peek().pos);
                args.push_back(parse_expr());
            }
            ++at_;
            return build(op, std::move(args), head.pos);
        }
        // Call form needs the parenthesis glued to the name; `q1 (not q3)`
        // inside an s-expression is two arguments.
        if (t.kind == Tok::Ident && peek().kind == Tok::LParen && peek().pos == t.pos + t.text.size()) {
            Op op = head_op(t);
            ++at_;
            std::vector<Condition> args;
            if (peek().kind != Tok::RParen) {
                args.push_back(parse_expr());
                while (peek().kind == Tok::Comma) {
                    ++at_;
                    args.push_back(parse_expr());
                }
            }
            expect(Tok::RParen, "')'");
            return build(op, std::move(args), t.pos);
        }
        if (t.kind == Tok::Ident || t.kind == Tok::Number) return leaf(t);
        fail("expected expression", t.pos);
    }

    std::string_view text_;
    const NameResolver& resolve_;
    std::vector<Token> toks_;
    std::size_t at_ = 0;
};

}  // namespace

Condition parse_condition(std::string_view text, const NameResolver& resolve) {
    Parser p(text, resolve);
    return p.parse_top();
}

}  // namespace hoareopt
