#include "dsbvp/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>

#include "dsbvp/errors.hpp"

namespace dsbvp {

class ExprParser {
public:
    explicit ExprParser(const std::string& src) : src_(src) {}

    Expr run() {
        Expr e;
        e.source_ = src_;
        out_ = &e;
        pos_ = 0;
        parse_sum();
        skip_ws();
        if (pos_ != src_.size()) {
            fail("unexpected trailing input");
        }
        // eval() runs on a fixed 64-slot stack; reject programs that
        // could outgrow it.
        int depth = 0;
        int max_depth = 0;
        for (const Expr::Instr& in : e.prog_) {
            switch (in.op) {
                case Op::push_const:
                case Op::push_x:
                case Op::push_y:
                    max_depth = std::max(max_depth, ++depth);
                    break;
                case Op::add:
                case Op::sub:
                case Op::mul:
                case Op::div:
                case Op::pow:
                    --depth;
                    break;
                default:
                    break;
            }
        }
        if (max_depth > 64) {
            pos_ = 0;
            fail("expression nests too deeply");
        }
        return e;
    }

private:
    using Op = Expr::Op;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ExpressionError(msg + " at offset " + std::to_string(pos_) + " in '" +
                                  src_ + "'",
                              pos_);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    void emit(Op op, double value = 0.0) { out_->prog_.push_back({op, value}); }

    void parse_sum() {
        parse_product();
        while (true) {
            if (eat('+')) {
                parse_product();
                emit(Op::add);
            } else if (eat('-')) {
                parse_product();
                emit(Op::sub);
            } else {
                return;
            }
        }
    }

    void parse_product() {
        parse_signed();
        while (true) {
            if (eat('*')) {
                parse_signed();
                emit(Op::mul);
            } else if (eat('/')) {
                parse_signed();
                emit(Op::div);
            } else {
                return;
            }
        }
    }

    // Unary sign binds looser than ^, so -x^2 means -(x^2).
    void parse_signed() {
        if (eat('-')) {
            parse_signed();
            emit(Op::neg);
            return;
        }
        if (eat('+')) {
            parse_signed();
            return;
        }
        parse_power();
    }

    void parse_power() {
        parse_atom();
        if (eat('^')) {
            parse_signed();  // allow 2^-3
            emit(Op::pow);
        }
    }

    void parse_atom() {
        skip_ws();
        if (pos_ >= src_.size()) {
            fail("expected a value");
        }
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = src_.c_str() + pos_;
            char* end = nullptr;
            const double v = std::strtod(begin, &end);
            if (end == begin) {
                fail("malformed number");
            }
            pos_ += static_cast<size_t>(end - begin);
            emit(Op::push_const, v);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t end = pos_;
            while (end < src_.size() &&
                   std::isalpha(static_cast<unsigned char>(src_[end]))) {
                ++end;
            }
            const std::string word = src_.substr(pos_, end - pos_);
            if (word == "x") {
                pos_ = end;
                out_->uses_x_ = true;
                emit(Op::push_x);
                return;
            }
            if (word == "y") {
                pos_ = end;
                out_->uses_y_ = true;
                emit(Op::push_y);
                return;
            }
            if (word == "exp" || word == "ln" || word == "sqrt") {
                pos_ = end;
                if (!eat('(')) {
                    fail("'" + word + "' needs parentheses");
                }
                parse_sum();
                if (!eat(')')) {
                    fail("missing ')'");
                }
                emit(word == "exp" ? Op::exp : word == "ln" ? Op::ln : Op::sqrt);
                return;
            }
            fail("unknown identifier '" + word + "'");
        }
        if (eat('(')) {
            parse_sum();
            if (!eat(')')) {
                fail("missing ')'");
            }
            return;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    const std::string& src_;
    size_t pos_ = 0;
    Expr* out_ = nullptr;
};

Expr Expr::parse(const std::string& source) {
    return ExprParser(source).run();
}

double Expr::eval(double x, double y) const {
    double stack[64];
    size_t top = 0;
    for (const Instr& in : prog_) {
        switch (in.op) {
            case Op::push_const:
                stack[top++] = in.value;
                break;
            case Op::push_x:
                stack[top++] = x;
                break;
            case Op::push_y:
                stack[top++] = y;
                break;
            case Op::add:
                stack[top - 2] += stack[top - 1];
                --top;
                break;
            case Op::sub:
                stack[top - 2] -= stack[top - 1];
                --top;
                break;
            case Op::mul:
                stack[top - 2] *= stack[top - 1];
                --top;
                break;
            case Op::div:
                stack[top - 2] /= stack[top - 1];
                --top;
                break;
            case Op::pow:
                stack[top - 2] = std::pow(stack[top - 2], stack[top - 1]);
                --top;
                break;
            case Op::neg:
                stack[top - 1] = -stack[top - 1];
                break;
            case Op::exp:
                stack[top - 1] = std::exp(stack[top - 1]);
                break;
            case Op::ln:
                stack[top - 1] = std::log(stack[top - 1]);
                break;
            case Op::sqrt:
                stack[top - 1] = std::sqrt(stack[top - 1]);
                break;
        }
    }
    return top == 1 ? stack[0] : 0.0;
}

}  // namespace dsbvp
