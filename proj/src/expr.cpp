// Copyright 2026 The nmwitness Authors
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

#include "nmw/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "nmw/errors.hpp"

namespace nmw {

enum class Func { Sin, Cos, Exp, Sinh, Cosh, Tanh, Sqrt, Abs };

struct RateExpression::Node {
    enum class Kind { Number, Var, Neg, Add, Sub, Mul, Div, Pow, Call } kind;
    double value = 0.0;
    Func func = Func::Sin;
    std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using Node = RateExpression::Node;
using NodePtr = std::shared_ptr<const Node>;

struct FuncName {
    std::string_view name;
    Func func;
};

constexpr std::array<FuncName, 8> kFuncs{{{"sin", Func::Sin},
                                          {"cos", Func::Cos},
                                          {"exp", Func::Exp},
                                          {"sinh", Func::Sinh},
                                          {"cosh", Func::Cosh},
                                          {"tanh", Func::Tanh},
                                          {"sqrt", Func::Sqrt},
                                          {"abs", Func::Abs}}};

NodePtr make(Node::Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

NodePtr make_number(double v) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Number;
    n->value = v;
    return n;
}

class Parser {
  public:
    explicit Parser(std::string_view src) : src_(src) {}

    NodePtr parse() {
        skip_ws();
        if (pos_ == src_.size()) throw ParseError("empty expression", pos_);
        NodePtr root = expr();
        skip_ws();
        if (pos_ != src_.size()) {
            if (src_[pos_] == ')') throw ParseError("unbalanced ')'", pos_);
            throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
        }
        return root;
    }

  private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr expr() {
        NodePtr lhs = term();
        for (;;) {
            if (accept('+')) lhs = make(Node::Kind::Add, lhs, term());
            else if (accept('-')) lhs = make(Node::Kind::Sub, lhs, term());
            else return lhs;
        }
    }

    NodePtr term() {
        NodePtr lhs = unary();
        for (;;) {
            if (accept('*')) lhs = make(Node::Kind::Mul, lhs, unary());
            else if (accept('/')) lhs = make(Node::Kind::Div, lhs, unary());
            else return lhs;
        }
    }

    NodePtr unary() {
        if (accept('-')) return make(Node::Kind::Neg, unary());
        if (accept('+')) return unary();
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (accept('^')) return make(Node::Kind::Pow, base, unary());
        return base;
    }

    NodePtr primary() {
        skip_ws();
        if (pos_ == src_.size()) throw ParseError("unexpected end of expression", pos_);
        const char c = src_[pos_];
        if (c == '(') {
            const std::size_t open = pos_++;
            NodePtr inner = expr();
            if (!accept(')')) throw ParseError("unbalanced '(' opened", open);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    NodePtr number() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
            ++pos_;
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            // Only an exponent if digits follow; otherwise 'e' is left for the caller.
            std::size_t look = pos_ + 1;
            if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
            if (look < src_.size() && std::isdigit(static_cast<unsigned char>(src_[look]))) {
                pos_ = look;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            }
        }
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, value);
        if (ec != std::errc() || ptr != src_.data() + pos_) throw ParseError("malformed number", start);
        return make_number(value);
    }

    NodePtr identifier() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        const std::string_view name = src_.substr(start, pos_ - start);
        if (name == "t") return make(Node::Kind::Var);
        if (name == "pi") return make_number(std::numbers::pi);
        if (name == "e") return make_number(std::numbers::e);
        for (const auto& f : kFuncs) {
            if (f.name != name) continue;
            skip_ws();
            if (pos_ >= src_.size() || src_[pos_] != '(')
                throw ParseError("expected '(' after function '" + std::string(name) + "'", pos_);
            const std::size_t open = pos_++;
            NodePtr arg = expr();
            if (!accept(')')) throw ParseError("unbalanced '(' opened", open);
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::Call;
            n->func = f.func;
            n->lhs = std::move(arg);
            return n;
        }
        throw ParseError("unknown identifier '" + std::string(name) + "'", start);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

double apply(Func f, double x) {
    switch (f) {
        case Func::Sin: return std::sin(x);
        case Func::Cos: return std::cos(x);
        case Func::Exp: return std::exp(x);
        case Func::Sinh: return std::sinh(x);
        case Func::Cosh: return std::cosh(x);
        case Func::Tanh: return std::tanh(x);
        case Func::Sqrt: return std::sqrt(x);
        case Func::Abs: return std::abs(x);
    }
    return 0.0;
}

double eval(const Node& n, double t) {
    switch (n.kind) {
        case Node::Kind::Number: return n.value;
        case Node::Kind::Var: return t;
        case Node::Kind::Neg: return -eval(*n.lhs, t);
        case Node::Kind::Add: return eval(*n.lhs, t) + eval(*n.rhs, t);
        case Node::Kind::Sub: return eval(*n.lhs, t) - eval(*n.rhs, t);
        case Node::Kind::Mul: return eval(*n.lhs, t) * eval(*n.rhs, t);
        case Node::Kind::Div: return eval(*n.lhs, t) / eval(*n.rhs, t);
        case Node::Kind::Pow: return std::pow(eval(*n.lhs, t), eval(*n.rhs, t));
        case Node::Kind::Call: return apply(n.func, eval(*n.lhs, t));
    }
    return 0.0;
}

void render(const Node& n, std::string& out) {
    auto binary = [&](const char* op) {
        out += '(';
        render(*n.lhs, out);
        out += op;
        render(*n.rhs, out);
        out += ')';
    };
    switch (n.kind) {
        case Node::Kind::Number: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", n.value);
            out += '(';
            out += buf;
            out += ')';
            return;
        }
        case Node::Kind::Var: out += 't'; return;
        case Node::Kind::Neg:
            out += "(-";
            render(*n.lhs, out);
            out += ')';
            return;
        case Node::Kind::Add: binary("+"); return;
        case Node::Kind::Sub: binary("-"); return;
        case Node::Kind::Mul: binary("*"); return;
        case Node::Kind::Div: binary("/"); return;
        case Node::Kind::Pow: binary("^"); return;
        case Node::Kind::Call:
            for (const auto& f : kFuncs)
                if (f.func == n.func) out += f.name;
            out += '(';
            render(*n.lhs, out);
            out += ')';
            return;
    }
}

}  // namespace

RateExpression RateExpression::parse(std::string_view source) {
    return RateExpression(std::string(source), Parser(source).parse());
}

double RateExpression::evaluate(double t) const { return eval(*root_, t); }

std::string RateExpression::to_string() const {
    std::string out;
    render(*root_, out);
    return out;
}

}  // namespace nmw
