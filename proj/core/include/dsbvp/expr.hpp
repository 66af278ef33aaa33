#pragma once

#include <string>
#include <vector>

namespace dsbvp {

// Arithmetic over x and y: numbers, + - * / ^ (right-associative),
// unary minus, parentheses, exp(), ln(), sqrt(). Parsed once into a
// postfix program; evaluation never allocates after the first call.
// Parse failures throw ExpressionError with the byte offset; evaluation
// itself never throws, NaN/Inf just propagate.
class Expr {
public:
    static Expr parse(const std::string& source);

    double eval(double x, double y) const;

    bool uses_x() const noexcept { return uses_x_; }
    bool uses_y() const noexcept { return uses_y_; }
    const std::string& source() const noexcept { return source_; }

private:
    enum class Op {
        push_const,
        push_x,
        push_y,
        add,
        sub,
        mul,
        div,
        pow,
        neg,
        exp,
        ln,
        sqrt,
    };

    struct Instr {
        Op op;
        double value;
    };

    friend class ExprParser;

    std::string source_;
    std::vector<Instr> prog_;
    bool uses_x_ = false;
    bool uses_y_ = false;
};

}  // namespace dsbvp
